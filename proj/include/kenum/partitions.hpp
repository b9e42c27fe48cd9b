#pragma once

// 2D partitions and plane partitions: enumeration, diagram geometry and
// fixed-point characters.

#include "kenum/core.hpp"

#include <map>
#include <vector>

namespace kenum::parts {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive entries

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  int part(int i) const {  // 0-based, 0 beyond the length
    return i < length() ? parts[i] : 0;
  }
  bool empty() const { return parts.empty(); }
  bool contains_box(int i, int j) const { return j >= 0 && j < part(i); }

  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }
  std::string to_string() const;
};

struct Box {
  int i = 0, j = 0, k = 0;
};

// all partitions of n, lexicographically ordered; 0 <= n <= 30
std::vector<Partition> enumerate_partitions(int n);

// arm / leg lengths of a box (0-based coordinates, i = row)
int arm(const Partition& lam, int i, int j);
int leg(const Partition& lam, int i, int j);

// diagram character V = sum t1^-i t2^-j over boxes; variable indices give
// the embedding into an ambient variable set
LaurentPolynomial char_diagram(const Partition& lam, const VariableSet& vars,
                               int t1_index = 0, int t2_index = 1);

// mu interlaces lambda: mu1 >= lam1 >= mu2 >= lam2 >= ...
bool interlaces(const Partition& mu, const Partition& lam);

struct PlanePartition {
  // heights[i][j] > 0, weakly decreasing along rows and columns; rows
  // weakly decreasing in length
  std::vector<std::vector<int>> heights;

  int size() const;
  bool empty() const { return heights.empty(); }
  bool valid() const;
  std::vector<Box> boxes() const;  // (i1,i2,i3), i3 < heights[i1][i2]
  // diagonal slice a: partition (heights along i2-i1 = a read as columns)
  Partition diagonal_slice(int a) const;
  PlanePartition permute_axes(int p0, int p1, int p2) const;

  bool operator==(const PlanePartition& o) const {
    return heights == o.heights;
  }
  bool operator<(const PlanePartition& o) const {  // row-major order
    return heights < o.heights;
  }
  std::string to_string() const;
};

// all plane partitions of n in row-major height-matrix order; 0 <= n <= 12
std::vector<PlanePartition> enumerate_plane_partitions(int n);

// 3D diagram character: sum t1^-i1 t2^-i2 t3^-i3
LaurentPolynomial char_diagram3(const PlanePartition& pp,
                                const VariableSet& vars);

// product over boxes of q_{i2-i1}; weights maps the diagonal index to a
// monomial over its variable set
Monomial diagonal_weight(const PlanePartition& pp,
                         const std::map<int, Monomial>& weights);

// independent counting oracles (simple recursions, no enumeration)
long partition_count(int n);
long plane_partition_count(int n);

}  // namespace kenum::parts
