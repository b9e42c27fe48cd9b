// kenum: exact verification pipelines for equivariant enumerative
// computations. Every subcommand prints one line per verdict and returns a
// distinct exit code per error class; --emit-json writes the full report.

#include "kenum/config.hpp"
#include "kenum/core.hpp"
#include "kenum/factored.hpp"
#include "kenum/fock.hpp"
#include "kenum/hilbert.hpp"
#include "kenum/identities.hpp"
#include "kenum/json_io.hpp"
#include "kenum/partitions.hpp"
#include "kenum/pleth.hpp"
#include "kenum/series.hpp"
#include "kenum/stable_envelope.hpp"

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>

using namespace kenum;
using nlohmann::json;

namespace {

enum ExitCode {
  kOk = 0,
  kInvalidCommand = 2,
  kBoundExceeded = 3,
  kVerdictFalse = 4,
  kDomainError = 5,
  kGoldenMismatch = 6,
  kIoError = 7,
};

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidCommand: return kInvalidCommand;
    case ErrorKind::BoundExceeded: return kBoundExceeded;
    case ErrorKind::GoldenMismatch: return kGoldenMismatch;
    case ErrorKind::Io: return kIoError;
    default: return kDomainError;
  }
}

struct Report {
  json records = json::array();
  bool all_true = true;

  void add(const std::string& name, const json& params, bool verdict,
           double ms, const std::string& lhs_canonical,
           const std::string& rhs_canonical) {
    json r;
    r["name"] = name;
    r["params"] = params;
    r["verdict"] = verdict;
    r["ms"] = ms;
    r["lhs_digest"] = io::digest_hex(lhs_canonical);
    r["rhs_digest"] = io::digest_hex(rhs_canonical);
    records.push_back(std::move(r));
    all_true = all_true && verdict;
    std::cout << (verdict ? "[ok]   " : "[FAIL] ") << name << "\n";
  }

  json payload = json::object();  // command-specific extras
};

double run_ms(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

std::string sum_canonical(const RationalSum& s) {
  std::string out;
  for (const auto& p : s.parts()) {
    out += p.to_string();
    out += " ; ";
  }
  return out;
}

std::string series_canonical_fr(const FactoredSeries& s) {
  std::string out;
  for (int k = 0; k <= s.order(); ++k)
    out += "[" + std::to_string(k) + "] " + s[k].to_string() + "\n";
  return out;
}

std::string series_canonical_lp(const LaurentSeries& s) {
  std::string out;
  for (int k = 0; k <= s.order(); ++k)
    out += "[" + std::to_string(k) + "] " + s[k].to_string() + "\n";
  return out;
}

// --------------------------------------------------------------------------
// golden registry

struct GoldenEntry {
  std::string name;
  std::function<std::string()> produce;
};

std::vector<GoldenEntry> golden_registry() {
  return {
      {"pleth_exp_geometric", [] {
         VariableSet v({"t"});
         LaurentSeries g("z", 6, LaurentPolynomial::zero(v));
         g.set(1, LaurentPolynomial::variable(v, "t"));
         auto gc = pleth::GradedCharacter::from_series(g);
         return series_canonical_fr(pleth::pleth_exp(gc, 6));
       }},
      {"nekrasov_lhs_order2",
       [] { return sum_canonical(hilb::z_series_c3(2)[2]); }},
      {"nekrasov_rhs_order2",
       [] { return hilb::nekrasov_rhs(2)[2].to_string(); }},
      {"hilb2_closed_order2",
       [] { return series_canonical_fr(hilb::z_series_hilb_c2_closed(2)); }},
      {"macmahon_generic_cutoff3", [] {
         auto spec = fock::DiagonalSpec::generic(2);
         return series_canonical_lp(fock::or_formula_lhs(spec, 3));
       }},
      {"refined_closed_cutoff6",
       [] { return series_canonical_lp(fock::refined_closed_series(6)); }},
      {"rmatrix_entries", [] {
         auto r = stab::r_matrix();
         std::string out;
         for (const auto& row : r)
           for (const auto& e : row) out += e.to_string() + "\n";
         return out;
       }},
      {"qbinomial_sum_order6",
       [] { return series_canonical_fr(ids::qbinomial_sum_form(6)); }},
      {"star_expected_order4", [] {
         std::string out;
         for (int n = 1; n <= 4; ++n)
           out += hilb::star_expected_coeff(n).to_string() + "\n";
         return out;
       }},
      {"spinor_characters", [] {
         auto [sp, sm] = ids::spinor_characters();
         return sp.to_string() + "\n" + sm.to_string() + "\n";
       }},
      {"chi_p3_twist2",
       [] { return hilb::chi_projective_space(3, 2).to_string(); }},
  };
}

int cmd_golden(const std::string& suite, bool write, Report& rep) {
  int bad = 0;
  for (const auto& entry : golden_registry()) {
    std::string path = suite + "/" + entry.name + ".txt";
    std::string fresh = entry.produce();
    if (write) {
      std::ofstream os(path, std::ios::binary);
      if (!os) fail(ErrorKind::Io, "cannot write " + path);
      os << fresh;
      std::cout << "[wrote] " << entry.name << "\n";
      continue;
    }
    std::ifstream is(path, std::ios::binary);
    if (!is) {
      std::cout << "[FAIL] " << entry.name << ": golden file missing ("
                << path << ")\n";
      ++bad;
      continue;
    }
    std::string stored((std::istreambuf_iterator<char>(is)),
                       std::istreambuf_iterator<char>());
    bool ok = stored == fresh;
    rep.add("golden/" + entry.name, {{"path", path}}, ok, 0.0, fresh, stored);
    if (!ok) {
      // first differing byte for the report
      size_t i = 0;
      while (i < stored.size() && i < fresh.size() && stored[i] == fresh[i])
        ++i;
      std::cout << "        first difference at byte " << i << "\n";
      ++bad;
    }
  }
  if (bad) fail(ErrorKind::GoldenMismatch, std::to_string(bad) + " mismatches");
  return kOk;
}

// --------------------------------------------------------------------------

LaurentSeries split_series(const VariableSet& full, const std::string& svar,
                           int order, const std::string& text) {
  int zi = full.index_of(svar);
  if (zi < 0) fail(ErrorKind::InvalidCommand, "series variable not in --vars");
  std::vector<std::string> rest;
  for (const auto& n : full.names())
    if (n != svar) rest.push_back(n);
  VariableSet coeff_vars(rest);
  LaurentPolynomial p = parse_polynomial(full, text);
  LaurentSeries out(svar, order, LaurentPolynomial::zero(coeff_vars));
  for (const auto& [m, c] : p.terms()) {
    if (m.e[zi] < 0 || m.e[zi] % 2 != 0)
      fail(ErrorKind::InvalidCommand,
           "series variable needs nonnegative integer powers");
    int k = m.e[zi] / 2;
    if (k > order) continue;
    Monomial mm(coeff_vars.size());
    int j = 0;
    for (int i = 0; i < full.size(); ++i) {
      if (i == zi) continue;
      mm.e[j++] = m.e[i];
    }
    LaurentPolynomial coeff = out[k];
    coeff.add_term(mm, c);
    out.set(k, std::move(coeff));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact equivariant enumeration toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string emit_json;
  app.add_option("--seed", cfg.seed, "random seed for evaluation points");
  app.add_option("--threads", cfg.threads, "OpenMP thread count (0 = default)");
  app.add_option("--emit-json", emit_json, "write the JSON report here");
  app.add_option("--clear-budget", cfg.clear_budget,
                 "term budget for denominator clearing");

  // pleth
  auto* pleth_cmd = app.add_subcommand("pleth", "plethystic exp/log");
  std::string pleth_mode = "exp", pleth_vars = "z,t", pleth_svar = "z";
  std::string pleth_input;
  int pleth_order = 6;
  pleth_cmd->add_option("mode", pleth_mode, "exp or log")
      ->check(CLI::IsMember({"exp", "log"}));
  pleth_cmd->add_option("input", pleth_input, "canonical polynomial string")
      ->required();
  pleth_cmd->add_option("--vars", pleth_vars, "comma-separated variables");
  pleth_cmd->add_option("--series-var", pleth_svar, "counting variable");
  pleth_cmd->add_option("--order", pleth_order, "truncation order");

  auto* nek = app.add_subcommand("nekrasov-check",
                                 "boxcounting series vs closed form on C^3");
  int nek_order = 4;
  nek->add_option("--order", nek_order, "z order (<= 4 for the full check)");

  auto* h2 = app.add_subcommand("hilb2-series",
                                "Hilb(C^2) series vs closed form");
  int h2_order = 4;
  h2->add_option("--order", h2_order);

  auto* st = app.add_subcommand("star-extract",
                                "kappa-only reduction of the C^3 series");
  int st_order = 4;
  st->add_option("--order", st_order);

  auto* rig = app.add_subcommand("rigidity",
                                 "vanishing of weights on t1 t2 = 1");
  int rig_max = 4, rig_trials = 20;
  rig->add_option("--max-size", rig_max);
  rig->add_option("--trials", rig_trials);

  auto* coh = app.add_subcommand("coh-limit",
                                 "cohomological limit power structure");
  int coh_order = 3;
  coh->add_option("--order", coh_order);

  auto* mac = app.add_subcommand("macmahon", "transfer-matrix identity");
  int mac_cutoff = 6;
  std::string mac_spec = "macmahon";
  mac->add_option("--cutoff", mac_cutoff);
  mac->add_option("--spec", mac_spec, "macmahon | refined | generic")
      ->check(CLI::IsMember({"macmahon", "refined", "generic"}));

  auto* rmx = app.add_subcommand("rmatrix", "T*P^1 stable envelope suite");
  std::string rmx_check = "all";
  rmx->add_option("--check", rmx_check,
                  "entries | unitarity | yb | degree | diag | all")
      ->check(CLI::IsMember(
          {"entries", "unitarity", "yb", "degree", "diag", "all"}));

  auto* idc = app.add_subcommand("identities", "closed-form identities");
  std::string id_which = "qbinomial";
  int id_order = 8;
  idc->add_option("which", id_which,
                  "qbinomial | qbinomial-diff | spinor | mtheory")
      ->check(CLI::IsMember(
          {"qbinomial", "qbinomial-diff", "spinor", "mtheory"}));
  idc->add_option("--order", id_order);

  auto* gld = app.add_subcommand("golden", "golden-file regression");
  std::string gld_suite = "data/golden";
  bool gld_write = false;
  gld->add_option("--suite", gld_suite, "golden directory");
  gld->add_flag("--write", gld_write, "regenerate the golden files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalidCommand;
  }

#ifdef _OPENMP
  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
#endif
  cfg.emit_json = emit_json;
  Rng rng(cfg.seed);
  Report rep;
  int rc = kOk;

  try {
    if (*pleth_cmd) {
      std::vector<std::string> names;
      std::string cur;
      for (char c : pleth_vars + ",") {
        if (c == ',') {
          if (!cur.empty()) names.push_back(cur);
          cur.clear();
        } else {
          cur += c;
        }
      }
      VariableSet full(names);
      LaurentSeries in =
          split_series(full, pleth_svar, pleth_order, pleth_input);
      if (pleth_mode == "exp") {
        auto gc = pleth::GradedCharacter::from_series(in);
        FactoredSeries out = pleth::pleth_exp(gc, pleth_order);
        rep.payload["series"] = io::series_to_json(out);
        std::cout << series_canonical_fr(out);
      } else {
        auto gc = pleth::pleth_log(in);
        rep.payload["series"] = io::series_to_json(gc.series);
        rep.payload["zero_weight_flag"] = gc.zero_weight_flag;
        std::cout << series_canonical_lp(gc.series);
      }
    } else if (*nek) {
      SumSeries lhs("z", 0, RationalSum::zero(hilb::c3_vars()));
      FactoredSeries rhs("z", 0, FactoredRational::zero(hilb::c3_vars()));
      double ms = run_ms([&] {
        lhs = hilb::z_series_c3(nek_order, cfg.threads == 1
                                               ? hilb::KernelMode::Serial
                                               : hilb::KernelMode::Parallel);
        rhs = hilb::nekrasov_rhs(nek_order);
      });
      json sides = json::array();
      for (int n = 0; n <= nek_order; ++n) {
        EqReport eq = decide_equal(lhs[n], RationalSum(rhs[n]), cfg, rng);
        json prm{{"order", n},
                 {"method", eq.cleared ? "cleared" : "multipoint"},
                 {"points", eq.points_used}};
        rep.add("nekrasov/z^" + std::to_string(n), prm, eq.equal, ms,
                sum_canonical(lhs[n]), rhs[n].to_string());
        sides.push_back({{"n", n},
                         {"lhs", io::to_json(lhs[n])},
                         {"rhs", io::to_json(rhs[n])}});
      }
      rep.payload["sides"] = std::move(sides);
    } else if (*h2) {
      auto lhs = hilb::z_series_hilb_c2_localization(h2_order);
      auto rhs = hilb::z_series_hilb_c2_closed(h2_order);
      for (int n = 0; n <= h2_order; ++n) {
        EqReport eq = decide_equal(lhs[n], RationalSum(rhs[n]), cfg, rng);
        rep.add("hilb2/z^" + std::to_string(n),
                {{"order", n},
                 {"method", eq.cleared ? "cleared" : "multipoint"}},
                eq.equal, 0.0, sum_canonical(lhs[n]), rhs[n].to_string());
      }
    } else if (*st) {
      auto star = hilb::star_extract(st_order, cfg, rng);
      json coeffs = json::array();
      for (int n = 1; n <= st_order; ++n) {
        const auto& got = star.coeffs[n - 1];
        auto want = hilb::star_expected_coeff(n);
        rep.add("star/z^" + std::to_string(n), {{"order", n}}, got == want,
                0.0, got.to_string(), want.to_string());
        coeffs.push_back(io::to_json(got));
      }
      rep.payload["coeffs"] = std::move(coeffs);
    } else if (*rig) {
      for (int n = 1; n <= rig_max; ++n) {
        bool ok = true;
        double ms = run_ms([&] {
          for (const auto& pp : parts::enumerate_plane_partitions(n))
            ok = ok && hilb::rigidity_vanish_check(pp, rig_trials, rng);
        });
        rep.add("rigidity/size" + std::to_string(n),
                {{"trials", rig_trials}}, ok, ms, "", "");
      }
    } else if (*coh) {
      auto r = hilb::cohomological_limit_check(coh_order, cfg, rng);
      rep.add("coh-limit/power-structure", {{"order", coh_order}}, r.ok, 0.0,
              "", "");
      rep.add("coh-limit/eps-oracle", {{"order", coh_order}}, r.oracle_ok,
              0.0, "", "");
    } else if (*mac) {
      fock::DiagonalSpec spec =
          mac_spec == "generic"
              ? fock::DiagonalSpec::generic(std::max(0, mac_cutoff - 1))
              : mac_spec == "refined"
                    ? fock::DiagonalSpec::refined(std::max(0, mac_cutoff - 1))
                    : fock::DiagonalSpec::macmahon(std::max(0, mac_cutoff - 1));
      auto lhs = fock::or_formula_lhs(spec, mac_cutoff);
      auto rhs = fock::or_formula_rhs(spec, mac_cutoff);
      auto bf = fock::brute_force_sum(spec, mac_cutoff);
      bool l_eq_r = true, l_eq_bf = true;
      for (int k = 0; k <= mac_cutoff; ++k) {
        l_eq_r = l_eq_r && lhs[k] == rhs[k];
        l_eq_bf = l_eq_bf && lhs[k] == bf[k];
      }
      rep.add("macmahon/transfer=pleth", {{"cutoff", mac_cutoff},
                                          {"spec", mac_spec}},
              l_eq_r, 0.0, series_canonical_lp(lhs), series_canonical_lp(rhs));
      rep.add("macmahon/transfer=bruteforce",
              {{"cutoff", mac_cutoff}, {"spec", mac_spec}}, l_eq_bf, 0.0,
              series_canonical_lp(lhs), series_canonical_lp(bf));
      if (mac_spec == "refined") {
        bool rv = fock::refined_vertex_check(mac_cutoff);
        rep.add("macmahon/refined-closed-form", {{"cutoff", mac_cutoff}}, rv,
                0.0, series_canonical_lp(lhs),
                series_canonical_lp(fock::refined_closed_series(mac_cutoff)));
      }
      rep.payload["lhs"] = io::series_to_json(lhs);
      rep.payload["rhs"] = io::series_to_json(rhs);
    } else if (*rmx) {
      auto want = [&](const std::string& w) {
        return rmx_check == "all" || rmx_check == w;
      };
      if (want("entries")) {
        bool ok = stab::entries_check(cfg, rng);
        auto r = stab::r_matrix();
        std::string repr;
        for (const auto& row : r)
          for (const auto& e : row) repr += e.to_string() + "\n";
        rep.add("rmatrix/entries", {}, ok, 0.0, repr, repr);
        rep.payload["r_matrix"] = repr;
      }
      if (want("unitarity"))
        rep.add("rmatrix/unitarity", {}, stab::unitarity_check(cfg, rng), 0.0,
                "", "");
      if (want("yb"))
        rep.add("rmatrix/yang-baxter", {}, stab::yang_baxter_check(cfg, rng),
                0.0, "", "");
      if (want("degree")) {
        bool ok = true;
        for (int num : {1, 2, 3})
          ok = ok && stab::degree_axiom_check(Rational(num, 4));
        bool boundary_fails = !stab::degree_axiom_check(Rational(0)) &&
                              !stab::degree_axiom_check(Rational(1));
        rep.add("rmatrix/degree-axiom", {{"eps", "1/4,1/2,3/4"}},
                ok && boundary_fails, 0.0, "", "");
      }
      if (want("diag")) {
        bool ok = stab::diagonal_decomposition_check(false, cfg, rng);
        bool neg = !stab::diagonal_decomposition_check(true, cfg, rng);
        rep.add("rmatrix/diagonal-decomposition", {}, ok && neg, 0.0, "", "");
      }
    } else if (*idc) {
      if (id_which == "qbinomial") {
        auto r = ids::qbinomial_check(id_order, cfg, rng);
        rep.add("identities/qbinomial", {{"order", id_order}}, r.verdict, 0.0,
                r.first_mismatch, "");
      } else if (id_which == "qbinomial-diff") {
        auto r = ids::qbinomial_difference_equation(id_order, cfg, rng);
        rep.add("identities/qbinomial-diff", {{"order", id_order}}, r.verdict,
                0.0, r.first_mismatch, "");
      } else if (id_which == "spinor") {
        auto [sp, sm] = ids::spinor_characters();
        bool dims = sp.rank() == 16 && sm.rank() == 16;
        bool dual = sp.bar() == sm;
        rep.add("identities/spinor-dims", {}, dims, 0.0, sp.to_string(),
                sm.to_string());
        rep.add("identities/spinor-duality", {}, dual, 0.0, "", "");
      } else {
        auto r = ids::mtheory_identity_check(+1);
        auto rneg = ids::mtheory_identity_check(-1);
        rep.add("identities/mtheory", {{"branch", 1}}, r.verdict, 0.0,
                r.first_mismatch, "");
        rep.add("identities/mtheory-branch-control", {{"branch", -1}},
                !rneg.verdict, 0.0, "", "");
      }
    } else if (*gld) {
      cmd_golden(gld_suite, gld_write, rep);
    }
  } catch (const CalcError& e) {
    std::cerr << "error: " << e.what() << "\n";
    rc = exit_code_for(e.kind);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    rc = kDomainError;
  }

  if (rc == kOk && !rep.all_true) rc = kVerdictFalse;
  if (!emit_json.empty()) {
    json out;
    out["schema"] = 1;
    out["seed"] = cfg.seed;
    out["records"] = rep.records;
    out["payload"] = rep.payload;
    out["exit_code"] = rc;
    std::ofstream os(emit_json);
    if (!os) {
      std::cerr << "error: cannot write " << emit_json << "\n";
      return kIoError;
    }
    os << out.dump(2) << "\n";
  }
  return rc;
}
