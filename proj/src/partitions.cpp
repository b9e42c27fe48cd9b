#include "kenum/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace kenum::parts {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) fail(ErrorKind::OutOfDomain, "nonpositive part");
    if (i && parts[i] > parts[i - 1])
      fail(ErrorKind::OutOfDomain, "parts must be weakly decreasing");
  }
}

int Partition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts.size(); ++i)
    os << (i ? "," : "") << parts[i];
  os << ")";
  return os.str();
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0 || n > 30)
    fail(ErrorKind::BoundExceeded, "partition enumeration bound is 30");
  std::vector<Partition> out;
  std::vector<int> cur;  // built weakly decreasing
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(Partition(cur));
      return;
    }
    for (int k = 1; k <= std::min(rest, maxpart); ++k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

int arm(const Partition& lam, int i, int j) {
  if (!lam.contains_box(i, j))
    fail(ErrorKind::OutOfDomain, "box outside diagram");
  return lam.part(i) - j - 1;
}

int leg(const Partition& lam, int i, int j) {
  if (!lam.contains_box(i, j))
    fail(ErrorKind::OutOfDomain, "box outside diagram");
  int l = 0;
  for (int r = i + 1; r < lam.length() && lam.part(r) > j; ++r) ++l;
  return l;
}

LaurentPolynomial char_diagram(const Partition& lam, const VariableSet& vars,
                               int t1_index, int t2_index) {
  LaurentPolynomial v(vars);
  for (int i = 0; i < lam.length(); ++i)
    for (int j = 0; j < lam.part(i); ++j) {
      Monomial m(vars.size());
      m.e[t1_index] = -2 * i;
      m.e[t2_index] = -2 * j;
      v.add_term(m, 1);
    }
  return v;
}

bool interlaces(const Partition& mu, const Partition& lam) {
  int n = std::max(mu.length(), lam.length());
  for (int i = 0; i < n; ++i) {
    if (mu.part(i) < lam.part(i)) return false;
    if (lam.part(i) < mu.part(i + 1)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Plane partitions

int PlanePartition::size() const {
  int s = 0;
  for (const auto& row : heights)
    for (int h : row) s += h;
  return s;
}

bool PlanePartition::valid() const {
  for (size_t i = 0; i < heights.size(); ++i) {
    const auto& row = heights[i];
    if (row.empty()) return false;
    for (size_t j = 0; j < row.size(); ++j) {
      if (row[j] <= 0) return false;
      if (j && row[j] > row[j - 1]) return false;
      if (i) {
        if (j >= heights[i - 1].size()) return false;  // rows shrink
        if (row[j] > heights[i - 1][j]) return false;
      }
    }
  }
  return true;
}

std::vector<Box> PlanePartition::boxes() const {
  std::vector<Box> out;
  for (size_t i = 0; i < heights.size(); ++i)
    for (size_t j = 0; j < heights[i].size(); ++j)
      for (int k = 0; k < heights[i][j]; ++k)
        out.push_back({static_cast<int>(i), static_cast<int>(j), k});
  return out;
}

Partition PlanePartition::diagonal_slice(int a) const {
  // boxes with i2 - i1 = a, grouped by i1: heights h(i, i+a) for i >= max(0,-a)
  std::vector<int> column;
  int i = a >= 0 ? 0 : -a;
  for (;; ++i) {
    int j = i + a;
    if (i >= static_cast<int>(heights.size())) break;
    if (j < 0 || j >= static_cast<int>(heights[i].size())) break;
    column.push_back(heights[i][j]);
  }
  // h weakly decreasing along the diagonal toward larger i (both axes
  // decrease), so `column` is already a partition
  while (!column.empty() && column.back() == 0) column.pop_back();
  return Partition(column);
}

PlanePartition PlanePartition::permute_axes(int p0, int p1, int p2) const {
  // permutation sends old axis r to new axis p_r
  std::map<std::pair<int, int>, int> h;
  for (const Box& b : boxes()) {
    int c[3] = {b.i, b.j, b.k};
    int n[3];
    n[p0] = c[0];
    n[p1] = c[1];
    n[p2] = c[2];
    auto key = std::make_pair(n[0], n[1]);
    auto it = h.find(key);
    int top = n[2] + 1;
    if (it == h.end()) h[key] = top;
    else it->second = std::max(it->second, top);
  }
  // a permuted order ideal is again an order ideal, so heights are dense
  PlanePartition out;
  for (const auto& [key, v] : h) {
    auto [i, j] = key;
    if (i >= static_cast<int>(out.heights.size()))
      out.heights.resize(i + 1);
    if (j >= static_cast<int>(out.heights[i].size()))
      out.heights[i].resize(j + 1, 0);
    out.heights[i][j] = v;
  }
  if (!out.empty() && !out.valid())
    fail(ErrorKind::Internal, "axis permutation broke monotonicity");
  return out;
}

std::string PlanePartition::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < heights.size(); ++i) {
    if (i) os << ";";
    for (size_t j = 0; j < heights[i].size(); ++j)
      os << (j ? "," : "") << heights[i][j];
  }
  os << "]";
  return os.str();
}

namespace {

// rows of total `rest`, each a partition entrywise below `bound`
void gen_rows(const std::vector<int>& bound, int rest,
              std::vector<std::vector<int>>& acc,
              std::vector<PlanePartition>& out) {
  if (rest == 0) {
    PlanePartition pp{acc};
    out.push_back(pp);
    return;
  }
  if (bound.empty()) return;
  // enumerate the next row: weakly decreasing, entry j <= bound[j], sum>=1
  std::vector<int> row;
  std::function<void(int, int, int)> rec = [&](int j, int prev, int used) {
    if (used > 0) {
      acc.push_back(row);
      gen_rows(row, rest - used, acc, out);
      acc.pop_back();
    }
    if (j >= static_cast<int>(bound.size())) return;
    int cap = std::min({prev, bound[j], rest - used});
    for (int h = cap; h >= 1; --h) {
      row.push_back(h);
      rec(j + 1, h, used + h);
      row.pop_back();
    }
  };
  rec(0, rest, 0);
}

}  // namespace

std::vector<PlanePartition> enumerate_plane_partitions(int n) {
  if (n < 0 || n > 12)
    fail(ErrorKind::BoundExceeded, "plane partition enumeration bound is 12");
  std::vector<PlanePartition> out;
  if (n == 0) {
    out.push_back(PlanePartition{});
    return out;
  }
  std::vector<std::vector<int>> acc;
  std::vector<int> top(n, n);  // first row bounded only by the size
  gen_rows(top, n, acc, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LaurentPolynomial char_diagram3(const PlanePartition& pp,
                                const VariableSet& vars) {
  LaurentPolynomial v(vars);
  for (const Box& b : pp.boxes()) {
    Monomial m(vars.size());
    m.e[0] = -2 * b.i;
    m.e[1] = -2 * b.j;
    m.e[2] = -2 * b.k;
    v.add_term(m, 1);
  }
  return v;
}

Monomial diagonal_weight(const PlanePartition& pp,
                         const std::map<int, Monomial>& weights) {
  if (weights.empty()) fail(ErrorKind::MissingDiagonalVariable, "no weights");
  Monomial prod(static_cast<int>(weights.begin()->second.e.size()));
  for (const Box& b : pp.boxes()) {
    int d = b.j - b.i;  // i2 - i1
    auto it = weights.find(d);
    if (it == weights.end())
      fail(ErrorKind::MissingDiagonalVariable,
           "no weight for diagonal " + std::to_string(d));
    prod = prod + it->second;
  }
  return prod;
}

long partition_count(int n) {
  // Euler recurrence with pentagonal numbers
  static std::vector<long> memo{1};
  for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
    long s = 0;
    for (int k = 1;; ++k) {
      long g1 = static_cast<long>(k) * (3 * k - 1) / 2;
      long g2 = static_cast<long>(k) * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      long sign = (k % 2) ? 1 : -1;
      if (g1 <= m) s += sign * memo[m - g1];
      if (g2 <= m) s += sign * memo[m - g2];
    }
    memo.push_back(s);
  }
  return memo[n];
}

long plane_partition_count(int n) {
  // MacMahon: prod (1 - z^k)^(-k); expand with exact integer arithmetic
  std::vector<long> c(n + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int rep = 0; rep < k; ++rep)  // (1-z^k)^(-k) one geometric at a time
      for (int m = k; m <= n; ++m) c[m] += c[m - k];
  return c[n];
}

}  // namespace kenum::parts
