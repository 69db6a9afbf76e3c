#pragma once

#include <chrono>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "bch/charsum.hpp"
#include "bch/moments.hpp"
#include "bch/tables.hpp"

namespace bch {

using ojson = nlohmann::ordered_json;

enum class CheckStatus { pass, fail, skipped };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

struct CheckResult {
  std::string id;
  ojson params;
  ojson expected;
  ojson measured;
  CheckStatus status = CheckStatus::pass;
  double seconds = 0.0;
  std::string note;
  bool extended_tier = false;
};

struct VerifyOptions {
  uint64_t budget = kDefaultBudget;
  uint64_t extended_budget = uint64_t(1) << 35;
  bool extended = false;  // raise the budget so the heavy tier runs
  unsigned workers = 1;
  std::string cache_dir;  // empty: caching disabled

  uint64_t effective_budget() const { return extended ? std::max(budget, extended_budget) : budget; }
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (auto& c : checks)
      if (c.status == CheckStatus::fail) return false;
    return true;
  }

  size_t count(CheckStatus s) const {
    size_t n = 0;
    for (auto& c : checks) n += (c.status == s);
    return n;
  }

  ojson to_json(bool with_timing = true) const {
    ojson out = ojson::array();
    for (auto& c : checks) {
      ojson j;
      j["check_id"] = c.id;
      j["params"] = c.params;
      j["expected"] = c.expected;
      j["measured"] = c.measured;
      j["status"] = status_name(c.status);
      if (c.extended_tier) j["tier"] = "extended";
      if (!c.note.empty()) j["note"] = c.note;
      if (with_timing) j["seconds"] = c.seconds;
      out.push_back(std::move(j));
    }
    return out;
  }

  std::string to_markdown() const {
    std::ostringstream os;
    os << "| check | status | expected | measured |\n|---|---|---|---|\n";
    for (auto& c : checks)
      os << "| " << c.id << " | " << status_name(c.status) << " | " << c.expected.dump() << " | "
         << c.measured.dump() << " |\n";
    return os.str();
  }
};

enum class Scope { lemmas, weight_tables, param_tables, examples, charsums, duals, all };

inline Scope parse_scope(const std::string& s) {
  if (s == "lemmas") return Scope::lemmas;
  if (s == "weight-tables") return Scope::weight_tables;
  if (s == "param-tables") return Scope::param_tables;
  if (s == "examples") return Scope::examples;
  if (s == "charsums") return Scope::charsums;
  if (s == "duals") return Scope::duals;
  if (s == "all") return Scope::all;
  fail(Errc::OutOfRange, "unknown verify scope: " + s);
}

inline ojson dist_json(const WeightDistribution& d) {
  ojson j = ojson::object();
  for (auto& [w, c] : d.counts) j[std::to_string(w)] = c;
  return j;
}

// ---------------------------------------------------------------------------
// weight-distribution cache: one file per (q, m, delta, variant, modulus)

inline std::string cache_file_name(uint64_t q, uint32_t m, uint64_t delta, Variant v,
                                   uint64_t modulus) {
  std::ostringstream os;
  os << "wd-q" << q << "-m" << m << "-d" << delta << "-" << (v == Variant::C ? "c" : "ct")
     << "-mod" << modulus << ".json";
  return os.str();
}

inline WeightDistribution cached_weight_distribution(const BchCode& code, uint64_t budget,
                                                     unsigned workers,
                                                     const std::string& cache_dir) {
  if (cache_dir.empty())
    return weight_distribution(code, budget, workers);
  namespace fs = std::filesystem;
  fs::path file = fs::path(cache_dir) /
                  cache_file_name(code.q(), code.m, code.delta, code.variant, code.F->modulus());
  if (fs::exists(file)) {
    std::ifstream in(file);
    ojson j = ojson::parse(in);
    if (j.value("q", uint64_t(0)) == code.q() && j.value("m", uint32_t(0)) == code.m &&
        j.value("delta", uint64_t(0)) == code.delta &&
        j.value("variant", std::string()) == variant_name(code.variant) &&
        j.value("modulus", uint64_t(0)) == code.F->modulus()) {
      WeightDistribution d;
      d.source = WeightDistribution::Source::enumerated;
      for (auto& [k, v] : j.at("counts").items())
        d.counts[std::stoull(k)] = v.get<uint64_t>();
      return d;
    }
  }
  WeightDistribution d = weight_distribution(code, budget, workers);
  fs::create_directories(fs::path(cache_dir));
  ojson j;
  j["q"] = code.q();
  j["m"] = code.m;
  j["delta"] = code.delta;
  j["variant"] = variant_name(code.variant);
  j["modulus"] = code.F->modulus();
  j["counts"] = dist_json(d);
  std::ofstream out(file);
  out << j.dump(2) << "\n";
  return d;
}

// ---------------------------------------------------------------------------

namespace detail {

class Harness {
public:
  Harness(VerificationReport& rep, const VerifyOptions& opt) : rep_(rep), opt_(opt) {}

  template <class Fn>
  void run(const std::string& id, ojson params, bool extended_tier, Fn&& body) {
    CheckResult c;
    c.id = id;
    c.params = std::move(params);
    c.extended_tier = extended_tier;
    auto t0 = std::chrono::steady_clock::now();
    try {
      body(c);  // sets expected/measured and may flip status to fail
    } catch (const Error& e) {
      if (e.code() == Errc::BudgetExceeded) {
        c.status = CheckStatus::skipped;
        c.note = std::string("budget: ") + e.what();
      } else {
        c.status = CheckStatus::fail;
        c.note = std::string("error: ") + e.what();
      }
    } catch (const std::exception& e) {
      c.status = CheckStatus::fail;
      c.note = std::string("error: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep_.checks.push_back(std::move(c));
  }

  static void expect_eq(CheckResult& c, const ojson& expected, const ojson& measured) {
    c.expected = expected;
    c.measured = measured;
    if (expected != measured) c.status = CheckStatus::fail;
  }

  uint64_t budget() const { return opt_.effective_budget(); }
  const VerifyOptions& opt() const { return opt_; }

  WeightDistribution dist_of(const BchCode& code) const {
    return cached_weight_distribution(code, budget(), opt_.workers, opt_.cache_dir);
  }

private:
  VerificationReport& rep_;
  const VerifyOptions& opt_;
};

inline std::string qm_id(const char* prefix, uint64_t q, uint32_t m) {
  return std::string(prefix) + "/q" + std::to_string(q) + "/m" + std::to_string(m);
}

inline ojson qm_params(uint64_t q, uint32_t m) { return ojson{{"q", q}, {"m", m}}; }

struct GridPoint {
  uint64_t q;
  uint32_t m;
  bool extended;
};

inline const std::vector<GridPoint>& delta2_grid() {
  static const std::vector<GridPoint> g = {{2, 4, false}, {2, 5, false}, {2, 6, false},
                                           {2, 7, false}, {3, 3, false}, {3, 4, false},
                                           {3, 5, false}};
  return g;
}

inline const std::vector<GridPoint>& delta3_grid() {
  static const std::vector<GridPoint> g = {
      {2, 4, false}, {2, 5, false}, {2, 6, false}, {3, 4, false}, {3, 5, true}};
  return g;
}

inline uint64_t generic_delta(int family, uint64_t q, uint32_t m) {
  // design distances of the two families; the third-leader form is used as
  // printed even at m = 3, where it is a coset leader but not the third largest
  uint64_t d1 = (q - 1) * ipow(q, m - 1) - 1;
  return family == 2 ? d1 - ipow(q, (m - 1) / 2) : d1 - ipow(q, (m + 1) / 2);
}

// --- lemmas -----------------------------------------------------------------

inline void run_lemmas(Harness& H) {
  for (uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    for (uint32_t m = 2;; ++m) {
      u128 n = upow128(q, m) - 1;
      if (n > 10'000'000) break;
      H.run(qm_id("lemma", q, m), qm_params(q, m), false, [&](CheckResult& c) {
        ojson exp = ojson::object(), got = ojson::object();
        for (int k = 1; k <= 3; ++k) {
          std::string key = "k" + std::to_string(k);
          if (k == 3 && m == 2) {
            exp[key] = "unsupported";
            try {
              closed_form_leader(3, q, m);
              got[key] = "closed form unexpectedly defined";
            } catch (const Error& e) {
              got[key] = e.code() == Errc::UnsupportedM ? "unsupported" : "wrong error";
            }
            continue;
          }
          auto cf = closed_form_leader(k, q, m);
          auto ex = kth_largest_leader_exhaustive(uint32_t(k), q, m);
          exp[key] = ojson{{"leader", cf.leader}, {"size", cf.size}};
          got[key] = ojson{{"leader", ex.leader}, {"size", ex.size}};
        }
        Harness::expect_eq(c, exp, got);
      });
    }
  }
}

// --- weight tables ----------------------------------------------------------

inline void run_weight_tables(Harness& H) {
  for (int family : {2, 3}) {
    const auto& grid = family == 2 ? delta2_grid() : delta3_grid();
    for (auto& gp : grid) {
      uint64_t delta = generic_delta(family, gp.q, gp.m);
      std::string fam = "d" + std::to_string(family);

      H.run(qm_id(("wd/" + fam).c_str(), gp.q, gp.m),
            ojson{{"q", gp.q}, {"m", gp.m}, {"delta", delta}, {"variant", "ctilde"}}, gp.extended,
            [&](CheckResult& c) {
              auto code = build_code(gp.q, gp.m, delta, Variant::CTilde);
              auto measured = H.dist_of(code);
              auto expected = expected_distribution(family, gp.q, gp.m);
              Harness::expect_eq(c, dist_json(expected), dist_json(measured));
            });

      H.run(qm_id(("equiv/" + fam).c_str(), gp.q, gp.m),
            ojson{{"q", gp.q}, {"m", gp.m}, {"family", fam}}, gp.extended, [&](CheckResult& c) {
              auto code = build_code(gp.q, gp.m, delta, Variant::CTilde);
              auto poly_side = H.dist_of(code);
              auto tc = make_trace_code(gp.q, gp.m,
                                        family == 2 ? TraceFamily::Delta2 : TraceFamily::Delta3);
              auto trace_side = trace_weight_distribution(tc, H.budget(), H.opt().workers);
              Harness::expect_eq(c, dist_json(poly_side), dist_json(trace_side));
            });

      if (family == 2) {
        H.run(qm_id("pless/d2", gp.q, gp.m), qm_params(gp.q, gp.m), false, [&](CheckResult& c) {
          auto expected = expected_ctilde_delta2(gp.q, gp.m);
          std::array<uint64_t, 3> w{}, a{};
          size_t t = 0;
          for (auto& [wt, cnt] : expected.counts)
            if (wt) {
              w[t] = wt;
              a[t] = cnt;
              ++t;
            }
          check(t == 3, Errc::Internal, "expected a three-weight distribution");
          uint64_t k = dimension_formula(gp.q, gp.m, 2, Variant::CTilde);
          auto solved = pless_solve(coset_modulus(gp.q, gp.m), gp.q, k, w);
          Harness::expect_eq(c, ojson{{"counts", {a[0], a[1], a[2]}}},
                             ojson{{"counts", {solved[0], solved[1], solved[2]}}});
        });
      }
    }
  }
}

// --- parameter tables, Griesmer family, m = 3 experiment ---------------------

inline void run_param_tables(Harness& H) {
  struct TableRef {
    int family;
    Variant variant;
    const std::vector<ParamRow>* rows;
  };
  const TableRef tables[] = {
      {2, Variant::CTilde, &param_rows_ctilde_delta2()},
      {2, Variant::C, &param_rows_c_delta2()},
      {3, Variant::CTilde, &param_rows_ctilde_delta3()},
      {3, Variant::C, &param_rows_c_delta3()},
  };
  for (auto& tab : tables) {
    std::string fam = "d" + std::to_string(tab.family);
    std::string var = tab.variant == Variant::C ? "c" : "ct";
    for (auto& row : *tab.rows) {
      uint64_t delta = generic_delta(tab.family, row.q, row.m);
      uint64_t n = coset_modulus(row.q, row.m);
      std::string base = fam + "/" + var;

      H.run(qm_id(("param/" + base).c_str(), row.q, row.m),
            ojson{{"q", row.q}, {"m", row.m}, {"delta", delta}, {"variant", var}}, row.extended,
            [&](CheckResult& c) {
              auto cp = code_params(row.q, row.m, delta, tab.variant);
              ojson expected{{"n", n}, {"k", row.k}, {"d", row.d}};
              ojson measured{{"n", cp.n}, {"k", cp.k}};
              bool over_budget = false;
              try {
                auto code = build_code(row.q, row.m, delta, tab.variant);
                measured["d"] = min_distance(H.dist_of(code));
              } catch (const Error& e) {
                if (e.code() != Errc::BudgetExceeded) throw;
                over_budget = true;
                measured["d"] = "skipped(budget)";
              }
              Harness::expect_eq(c, expected, measured);
              if (over_budget && measured["n"] == expected["n"] &&
                  measured["k"] == expected["k"]) {
                c.status = CheckStatus::skipped;
                c.note = "n and k verified; the distance enumeration exceeds the default budget";
              }
            });

      H.run(qm_id(("bounds/" + base).c_str(), row.q, row.m),
            ojson{{"q", row.q}, {"m", row.m}, {"delta", delta}, {"variant", var}}, row.extended,
            [&](CheckResult& c) {
              auto code = build_code(row.q, row.m, delta, tab.variant);
              auto dist = H.dist_of(code);
              uint64_t d = min_distance(dist);
              uint64_t floor = tab.variant == Variant::CTilde ? code.bose + 1 : code.bose;
              ojson exp{{"bch_bound", true}, {"charpin", true}};
              ojson got{{"bch_bound", d >= floor && floor >= (tab.variant == Variant::CTilde
                                                                  ? delta + 1
                                                                  : delta)},
                        {"charpin", d <= floor + 4}};
              if (tab.variant == Variant::CTilde && row.m >= 5) {
                exp["secret_sharing_ratio"] = true;
                bool ratio = secret_sharing_ratio_ok(dist, row.q);
                got["secret_sharing_ratio"] = ratio;
                auto [lo, hi] = wmin_wmax(dist);
                if (!ratio)
                  c.note = "w_min/w_max = " + std::to_string(lo) + "/" + std::to_string(hi) +
                           " <= (q-1)/q; counterexample to the blanket m >= 5 ratio claim";
              }
              Harness::expect_eq(c, exp, got);
            });
    }
  }

  // the two families at the largest coset leader meet the Griesmer bound
  for (uint64_t q : {2, 3, 4}) {
    for (uint32_t m = 2; m <= 6; ++m) {
      uint64_t n = coset_modulus(q, m);
      uint64_t d1 = (q - 1) * ipow(q, m - 1) - 1;
      H.run(qm_id("griesmer/d1/ct", q, m), qm_params(q, m), false, [&](CheckResult& c) {
        auto g = griesmer_check(n, m, d1 + 1, q);
        Harness::expect_eq(c, ojson{{"meets", true}}, ojson{{"meets", g.meets}});
      });
      H.run(qm_id("griesmer/d1/c", q, m), qm_params(q, m), false, [&](CheckResult& c) {
        auto g = griesmer_check(n, m + 1, d1, q);
        Harness::expect_eq(c, ojson{{"meets", true}}, ojson{{"meets", g.meets}});
      });
    }
  }

  // m = 3: the true third-largest leader is delta2 - 1 with a singleton coset;
  // the resulting codes fall outside the generic tables, so their measured
  // minimum distances are recorded as experiment output (pass = report
  // produced), alongside the published conjecture values.
  for (uint64_t q : {3, 4}) {
    H.run("experiment/m3/q" + std::to_string(q), qm_params(q, 3), false, [&](CheckResult& c) {
      uint64_t delta = q * q * q - q * q - q - 2;
      auto sub = build_code(q, 3, delta, Variant::CTilde);
      auto full = build_code(q, 3, delta, Variant::C);
      uint64_t d_sub = min_distance(H.dist_of(sub));
      uint64_t d_full = min_distance(H.dist_of(full));
      ojson exp{{"k_subcode", 7}, {"k", 8}, {"report", "produced"}};
      ojson got{{"k_subcode", sub.k}, {"k", full.k}, {"report", "produced"}};
      Harness::expect_eq(c, exp, got);
      c.measured["d_subcode"] = d_sub;
      c.measured["d"] = d_full;
      c.note = "conjectured d_subcode=" + std::to_string(delta + 1) +
               ", d=" + std::to_string(delta) + "; measured values are informational";
    });
  }
}

// --- worked examples ----------------------------------------------------------

inline void run_examples(Harness& H) {
  for (auto& ex : worked_examples()) {
    H.run(qm_id("example", ex.q, ex.m), qm_params(ex.q, ex.m), ex.extended, [&](CheckResult& c) {
      uint64_t delta = generic_delta(3, ex.q, ex.m);
      auto code = build_code(ex.q, ex.m, delta, Variant::CTilde);
      check(code.n == ex.n && code.k == ex.k, Errc::Internal, "worked example parameters");
      auto measured = H.dist_of(code);
      WeightDistribution lit;
      lit.source = WeightDistribution::Source::expected;
      lit.counts = ex.enumerator;
      Harness::expect_eq(c, dist_json(lit), dist_json(measured));
    });
  }
}

// --- character sums -----------------------------------------------------------

inline void run_charsums(Harness& H) {
  for (uint64_t q : {3, 5, 7, 11, 13}) {
    H.run("gauss/q" + std::to_string(q), ojson{{"q", q}}, false, [&](CheckResult& c) {
      auto g = gauss_sum(q);
      auto cl = gauss_sum_closed(q);
      double rel = std::abs(g - cl) / std::abs(cl);
      double mag = std::abs(std::abs(g) - std::sqrt(double(q))) / std::sqrt(double(q));
      Harness::expect_eq(c, ojson{{"within_1e-9", true}},
                         ojson{{"within_1e-9", rel <= 1e-9 && mag <= 1e-9}});
      c.measured["sum"] = {g.real(), g.imag()};
      c.measured["rel_err"] = rel;
    });
    H.run("gauss-scaled/q" + std::to_string(q), ojson{{"q", q}}, false, [&](CheckResult& c) {
      auto g = gauss_sum(q);
      bool ok = true;
      for (uint64_t a = 1; a < q; ++a) {
        auto lhs = scaled_gauss(q, a);
        auto rhs = double(legendre(a, q)) * g;
        if (std::abs(lhs - rhs) > 1e-9 * std::abs(g)) ok = false;
      }
      Harness::expect_eq(c, ojson{{"identity", true}}, ojson{{"identity", ok}});
    });
  }

  // closed-form case analysis == direct character sum == enumerated weight
  const std::pair<uint64_t, uint32_t> pred_grid[] = {{3, 3}, {3, 4}, {3, 5}, {5, 3}};
  for (auto [q, m] : pred_grid) {
    H.run(qm_id("charpred", q, m), qm_params(q, m), false, [&](CheckResult& c) {
      auto tc = make_trace_code(q, m, TraceFamily::Delta2);
      auto cx = make_char_context(tc);
      uint64_t pairs = 0, mismatches = 0;
      for_each_delta2_pair(tc, [&](int64_t sa, int64_t sb, uint64_t wt) {
        uint64_t a = sa < 0 ? 0 : tc.F->alpha_pow(uint64_t(sa));
        uint64_t b = sb < 0 ? 0 : tc.F->alpha_pow(uint64_t(sb));
        uint64_t direct = predicted_weight_direct(tc, cx, a, b).weight;
        uint64_t cases = predicted_weight_cases(tc, cx, a, b);
        ++pairs;
        if (direct != wt || cases != wt) ++mismatches;
      });
      Harness::expect_eq(c, ojson{{"mismatches", 0}}, ojson{{"mismatches", mismatches}});
      c.measured["pairs"] = pairs;
    });
  }

  // minimum-weight membership census vs the first table count
  const std::tuple<uint64_t, uint32_t, uint64_t> census_grid[] = {{3, 4, 480}, {3, 5, 21780}};
  for (auto [q, m, a_w1] : census_grid) {
    H.run(qm_id("minwt", q, m), qm_params(q, m), false, [&](CheckResult& c) {
      auto tc = make_trace_code(q, m, TraceFamily::Delta2);
      auto cx = make_char_context(tc);
      uint64_t dmin = generic_delta(2, q, m) + 1;
      uint64_t by_condition = 0, by_weight = 0, disagreements = 0;
      for_each_delta2_pair(tc, [&](int64_t sa, int64_t sb, uint64_t wt) {
        uint64_t a = sa < 0 ? 0 : tc.F->alpha_pow(uint64_t(sa));
        uint64_t b = sb < 0 ? 0 : tc.F->alpha_pow(uint64_t(sb));
        bool cond = characterize_min_weight(tc, cx, a, b);
        by_condition += cond;
        by_weight += (wt == dmin);
        disagreements += (cond != (wt == dmin));
      });
      // (a, b) tuples cover each codeword q^(m/2) times for even m, once for odd
      uint64_t mult = m % 2 ? 1 : ipow(q, m / 2);
      check(by_condition % mult == 0, Errc::Internal, "census not divisible by multiplicity");
      Harness::expect_eq(
          c, ojson{{"disagreements", 0}, {"codewords", a_w1}},
          ojson{{"disagreements", disagreements}, {"codewords", by_condition / mult}});
      c.measured["pairs_true"] = by_condition;
      c.measured["pairs_at_min_weight"] = by_weight;
    });
  }

  const std::pair<uint64_t, uint32_t> facts_grid[] = {{3, 3}, {3, 4}, {3, 5}};
  for (auto [q, m] : facts_grid) {
    H.run(qm_id("facts", q, m), qm_params(q, m), false, [&](CheckResult& c) {
      auto f = structure_facts(q, m);
      Harness::expect_eq(c, ojson{{"all_expected", true}}, ojson{{"all_expected", f.all_expected}});
      c.measured["permutations"] = f.permutation_count;
      c.measured["non_permutations"] = f.non_permutation_count;
      if (!f.odd_m) c.measured["kernel_solutions"] = f.kernel_solutions;
    });
  }

  const std::pair<uint64_t, uint32_t> cong_grid[] = {{2, 5}, {3, 5}, {5, 5}};
  for (auto [q, m] : cong_grid) {
    H.run(qm_id("congruence", q, m), qm_params(q, m), false, [&](CheckResult& c) {
      Harness::expect_eq(c, ojson{{"holds", true}},
                         ojson{{"holds", exponent_congruence_check(q, m)}});
    });
  }
}

// --- dual distances -----------------------------------------------------------

inline void run_duals(Harness& H) {
  struct DualCase {
    int family;
    Variant variant;
    uint64_t q;
    uint32_t m;
    uint64_t expected;
  };
  const DualCase cases[] = {
      {2, Variant::CTilde, 2, 5, 5}, {2, Variant::CTilde, 2, 6, 3},
      {3, Variant::CTilde, 2, 5, 7}, {3, Variant::CTilde, 2, 6, 5},
      {3, Variant::C, 2, 5, 8},      {3, Variant::C, 2, 6, 6},
  };
  for (auto& dc : cases) {
    std::string id = "dual/d" + std::to_string(dc.family) + "/" +
                     (dc.variant == Variant::C ? "c" : "ct") + "/q" + std::to_string(dc.q) + "/m" +
                     std::to_string(dc.m);
    H.run(id, qm_params(dc.q, dc.m), false, [&](CheckResult& c) {
      uint64_t delta = generic_delta(dc.family, dc.q, dc.m);
      auto code = build_code(dc.q, dc.m, delta, dc.variant);
      uint64_t d1 = dual_min_distance(code, H.budget(), H.opt().workers);
      auto d2 = dual_low_weight_search(code, dc.expected + 1);
      Harness::expect_eq(c, ojson{{"dual_d", dc.expected}, {"low_weight_search", dc.expected}},
                         ojson{{"dual_d", d1}, {"low_weight_search", d2 ? ojson(*d2) : ojson()}});
    });
  }
}

}  // namespace detail

inline VerificationReport run_verify(Scope scope, const VerifyOptions& opt = {}) {
  VerificationReport rep;
  detail::Harness H(rep, opt);
  if (scope == Scope::lemmas || scope == Scope::all) detail::run_lemmas(H);
  if (scope == Scope::weight_tables || scope == Scope::all) detail::run_weight_tables(H);
  if (scope == Scope::param_tables || scope == Scope::all) detail::run_param_tables(H);
  if (scope == Scope::examples || scope == Scope::all) detail::run_examples(H);
  if (scope == Scope::charsums || scope == Scope::all) detail::run_charsums(H);
  if (scope == Scope::duals || scope == Scope::all) detail::run_duals(H);
  return rep;
}

// ---------------------------------------------------------------------------
// reference comparison: annotate parameter rows against a user-supplied CSV of
// best-known codes (rows "n,k,q,best_d" with an optional fifth column: 1 when
// best_d is known optimal, 0 when it is merely best known)

struct ReferenceEntry {
  uint64_t best_d = 0;
  bool exact = true;
};

inline std::map<std::tuple<uint64_t, uint64_t, uint64_t>, ReferenceEntry> load_reference_csv(
    const std::string& path) {
  std::ifstream in(path);
  check(in.good(), Errc::MalformedReference, "cannot open reference file: " + path);
  std::map<std::tuple<uint64_t, uint64_t, uint64_t>, ReferenceEntry> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    uint64_t n, k, q, d;
    if (!(ls >> n)) continue;  // header or blank
    if (!(ls >> k >> q >> d))
      fail(Errc::MalformedReference,
           "reference line " + std::to_string(lineno) + " needs n,k,q,best_d");
    ReferenceEntry e;
    e.best_d = d;
    int exact = 1;
    if (ls >> exact) e.exact = exact != 0;
    out[{n, k, q}] = e;
  }
  return out;
}

inline VerificationReport reference_compare(VerificationReport rep, const std::string& path) {
  auto ref = load_reference_csv(path);
  for (auto& c : rep.checks) {
    if (c.id.rfind("param/", 0) != 0) continue;
    if (!c.measured.contains("n") || !c.measured.contains("k") || !c.measured.contains("d") ||
        !c.measured["d"].is_number())
      continue;
    uint64_t n = c.measured["n"], k = c.measured["k"], d = c.measured["d"];
    uint64_t q = c.params["q"];
    auto it = ref.find({n, k, q});
    if (it == ref.end()) {
      c.measured["optimality"] = "unknown";
    } else if (d == it->second.best_d) {
      c.measured["optimality"] = it->second.exact ? "optimal" : "best-known";
    } else if (d < it->second.best_d) {
      c.measured["optimality"] = "suboptimal by " + std::to_string(it->second.best_d - d);
    } else {
      c.measured["optimality"] = "exceeds-reference";
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// acceptance aggregation: group harness checks into the workbench's criteria

struct CriterionLine {
  int number;
  std::string title;
  CheckStatus status;
  std::string detail;
};

inline std::vector<CriterionLine> acceptance_criteria(const VerificationReport& rep,
                                                      bool extended) {
  struct Rule {
    int number;
    const char* title;
    std::vector<std::string> prefixes;
  };
  const std::vector<Rule> rules = {
      {1, "coset-leader closed forms vs exhaustive scan", {"lemma/"}},
      {2, "second-leader weight tables (subcode family)", {"wd/d2/"}},
      {3, "third-leader weight tables (subcode family)", {"wd/d3/"}},
      {4, "worked weight enumerators", {"example/"}},
      {5, "parameter-table rows (n, k, d)", {"param/"}},
      {6, "Gauss sums, direct vs closed form", {"gauss/", "gauss-scaled/"}},
      {7, "character-sum weight prediction, all pairs", {"charpred/"}},
      {8, "minimum-weight codeword characterization", {"minwt/"}},
      {9, "power-moment solver reproduces table counts", {"pless/"}},
      {10, "dual minimum distances", {"dual/"}},
      {11, "Griesmer bound at the largest leader", {"griesmer/"}},
      {12, "BCH bound, Bose-distance gap, weight-ratio condition", {"bounds/"}},
      {13, "trace-form vs polynomial-form equivalence", {"equiv/"}},
      {14, "m = 3 third-leader experiment report", {"experiment/"}},
  };
  std::vector<CriterionLine> out;
  for (auto& rule : rules) {
    size_t npass = 0, nfail = 0, nskip_ext = 0, nskip_other = 0;
    for (auto& c : rep.checks) {
      bool match = false;
      for (auto& p : rule.prefixes) match |= c.id.rfind(p, 0) == 0;
      if (!match) continue;
      if (c.status == CheckStatus::pass) ++npass;
      else if (c.status == CheckStatus::fail) ++nfail;
      else if (c.extended_tier) ++nskip_ext;
      else ++nskip_other;
    }
    CriterionLine line;
    line.number = rule.number;
    line.title = rule.title;
    bool ok = nfail == 0 && nskip_other == 0 && (npass > 0) && (!extended || nskip_ext == 0);
    line.status = ok ? CheckStatus::pass : CheckStatus::fail;
    std::ostringstream d;
    d << npass << " pass";
    if (nfail) d << ", " << nfail << " fail";
    if (nskip_ext) d << ", " << nskip_ext << " extended-tier skipped (opt-in via --extended)";
    if (nskip_other) d << ", " << nskip_other << " skipped";
    line.detail = d.str();
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace bch
