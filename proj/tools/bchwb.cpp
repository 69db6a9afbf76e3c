// bchwb: workbench CLI for primitive BCH codes at the largest cyclotomic
// coset leaders: construction, weight enumeration, trace-form cross-checks,
// character sums and the table-verification harness.

#include <iostream>

#include <CLI11.hpp>

#include "bch/verify.hpp"

namespace {

using namespace bch;

ojson field_to_json(const Field& F) {
  ojson j;
  j["p"] = F.characteristic();
  j["deg"] = F.degree();
  j["card"] = F.card();
  j["modulus_packed"] = F.modulus();
  j["modulus"] = F.poly_str(F.modulus(), F.degree() + 1);
  j["alpha_packed"] = F.alpha();
  j["alpha_order"] = F.order();
  return j;
}

Variant parse_variant(const std::string& s) {
  if (s == "c") return Variant::C;
  if (s == "ctilde") return Variant::CTilde;
  fail(Errc::OutOfRange, "variant must be c or ctilde");
}

TraceFamily parse_family(const std::string& s) {
  if (s == "delta2") return TraceFamily::Delta2;
  if (s == "delta2-full") return TraceFamily::Delta2Full;
  if (s == "delta3") return TraceFamily::Delta3;
  if (s == "delta3-full") return TraceFamily::Delta3Full;
  fail(Errc::OutOfRange, "family must be delta2, delta2-full, delta3 or delta3-full");
}

uint64_t resolve_delta(const std::string& spec, uint64_t q, uint32_t m) {
  if (spec == "auto2") return closed_form_leader(2, q, m).leader;
  if (spec == "auto3") return closed_form_leader(3, q, m).leader;
  return std::stoull(spec);
}

void print_weights(const WeightDistribution& d, const std::string& format, ojson meta) {
  if (format == "csv") {
    std::cout << "weight,count\n";
    for (auto& [w, c] : d.counts) std::cout << w << "," << c << "\n";
  } else if (format == "md") {
    std::cout << "| weight | count |\n|---|---|\n";
    for (auto& [w, c] : d.counts) std::cout << "| " << w << " | " << c << " |\n";
  } else {
    meta["counts"] = dist_json(d);
    std::cout << meta.dump(2) << "\n";
  }
}

// per-case pair tallies of the two-exponent family's weight analysis
ojson case_tallies(const TraceCode& tc) {
  const Field& F = *tc.F;
  uint64_t qh = powmod_u64(tc.q, tc.h, tc.n);
  ojson t;
  uint64_t zero = 0, a0 = 0, b0 = 0, ab = 0, ab_d0 = 0, b0_d0 = 0;
  for (int64_t sa = -1; sa < int64_t(tc.n); ++sa) {
    uint64_t a = sa < 0 ? 0 : F.alpha_pow(uint64_t(sa));
    uint64_t d = a ? F.add(F.pow(a, qh), a) : 0;
    for (int64_t sb = -1; sb < int64_t(tc.n); ++sb) {
      bool bz = sb < 0;
      if (!a && bz) ++zero;
      else if (!a) ++a0;
      else if (bz) (d == 0 ? ++b0_d0 : ++b0);
      else (d == 0 ? ++ab_d0 : ++ab);
    }
  }
  if (tc.m % 2) {
    t["case-1.1 (a,b nonzero)"] = ab + ab_d0;
    t["case-1.2 (b = 0)"] = b0 + b0_d0;
    t["case-1.3 (a = 0)"] = a0;
  } else {
    t["case-2.1 (a,b nonzero, map invertible)"] = ab;
    t["case-2.2 (a,b nonzero, map degenerate)"] = ab_d0;
    t["case-2.3 (b = 0)"] = b0 + b0_d0;
    t["case-2.4 (a = 0)"] = a0;
  }
  t["zero pair"] = zero;
  return t;
}

int run(int argc, char** argv) {
  CLI::App app{"primitive BCH code workbench"};
  app.require_subcommand(1);

  // field
  auto* fld = app.add_subcommand("field", "construct GF(p^deg) and print its data");
  uint64_t fp = 2;
  uint32_t fdeg = 1;
  uint64_t ftable_cap = uint64_t(1) << 24;
  bool fno_tables = false;
  fld->add_option("--p", fp, "characteristic (prime)")->required();
  fld->add_option("--deg", fdeg, "extension degree")->required();
  fld->add_option("--table-cap", ftable_cap, "log/antilog table cap");
  fld->add_flag("--no-tables", fno_tables, "skip log tables (slow arithmetic)");

  // cosets
  auto* cos = app.add_subcommand("cosets", "q-cyclotomic cosets modulo q^m - 1");
  uint64_t cq = 2;
  uint32_t cm = 4;
  uint32_t ctop = 0;
  int64_t cof = -1;
  cos->add_option("--q", cq, "alphabet size (prime power)")->required();
  cos->add_option("--m", cm, "extension degree")->required();
  cos->add_option("--top", ctop, "list the K largest coset leaders");
  cos->add_option("--of", cof, "print the coset containing this residue");

  // code
  auto* cod = app.add_subcommand("code", "build a BCH code and query it");
  uint64_t kq = 2;
  uint32_t km = 4;
  std::string kdelta = "auto2", kvariant = "ctilde", kaction, kformat = "json", kcache;
  uint64_t kbudget = kDefaultBudget;
  unsigned kworkers = 1;
  cod->add_option("--q", kq, "alphabet size (prime power)")->required();
  cod->add_option("--m", km, "extension degree")->required();
  cod->add_option("--delta", kdelta, "design distance (number, auto2 or auto3)");
  cod->add_option("--variant", kvariant, "c (narrow-sense) or ctilde (with x-1)");
  cod->add_option("action", kaction, "params | generator | weights")->required();
  cod->add_option("--budget", kbudget, "enumeration budget in symbol-ops");
  cod->add_option("--workers", kworkers, "worker threads for enumeration");
  cod->add_option("--format", kformat, "json | csv | md (weights only)");
  cod->add_option("--cache-dir", kcache, "weight-distribution cache directory");

  // trace
  auto* trc = app.add_subcommand("trace", "trace-form realization and character sums");
  uint64_t tq = 3;
  uint32_t tm = 3;
  std::string tfamily = "delta2", taction;
  uint64_t tbudget = kDefaultBudget;
  unsigned tworkers = 1;
  trc->add_option("--q", tq, "alphabet size")->required();
  trc->add_option("--m", tm, "extension degree")->required();
  trc->add_option("--family", tfamily, "delta2 | delta2-full | delta3 | delta3-full");
  trc->add_option("action", taction, "weights | charsum-check | min-weight-census | facts")
      ->required();
  trc->add_option("--budget", tbudget, "enumeration budget in symbol-ops");
  trc->add_option("--workers", tworkers, "worker threads");

  // verify
  auto* ver = app.add_subcommand("verify", "run the table-verification harness");
  std::string vscope = "all", vformat = "json", vcache, vreference;
  VerifyOptions vopt;
  bool vextended = false;
  ver->add_option("scope", vscope,
                  "lemmas | weight-tables | param-tables | examples | charsums | duals | all");
  ver->add_option("--budget", vopt.budget, "enumeration budget in symbol-ops");
  ver->add_option("--cache-dir", vcache, "weight-distribution cache directory");
  ver->add_option("--reference", vreference, "CSV of best-known codes (n,k,q,best_d[,exact])");
  ver->add_option("--format", vformat, "json | md");
  ver->add_flag("--extended", vextended, "run the heavy opt-in tier as well");
  ver->add_option("--workers", vopt.workers, "worker threads");

  CLI11_PARSE(app, argc, argv);

  if (*fld) {
    FieldOptions o;
    o.table_cap = ftable_cap;
    o.build_tables = !fno_tables;
    auto F = make_field(fp, fdeg, o);
    std::cout << field_to_json(*F).dump(2) << "\n";
    return 0;
  }

  if (*cos) {
    if (cof >= 0) {
      Coset c = coset_of(uint64_t(cof), cq, cm);
      ojson j{{"leader", c.leader}, {"size", c.size}, {"elements", c.elements}};
      std::cout << j.dump(2) << "\n";
    } else if (ctop > 0) {
      uint64_t n = coset_modulus(cq, cm);
      ojson arr = ojson::array();
      uint32_t found = 0;
      for (uint64_t i = n; i-- > 0 && found < ctop;) {
        uint32_t sz = 0;
        if (is_coset_leader(i, cq, n, &sz)) {
          arr.push_back(ojson{{"leader", i}, {"size", sz}});
          ++found;
        }
      }
      std::cout << arr.dump(2) << "\n";
    } else {
      auto t = full_coset_table(cq, cm);
      ojson arr = ojson::array();
      for (auto& L : t.leaders) arr.push_back(ojson{{"leader", L.leader}, {"size", L.size}});
      std::cout << ojson{{"n", t.n}, {"cosets", arr}}.dump(2) << "\n";
    }
    return 0;
  }

  if (*cod) {
    uint64_t delta = resolve_delta(kdelta, kq, km);
    Variant variant = parse_variant(kvariant);
    if (kaction == "params") {
      auto cp = code_params(kq, km, delta, variant);
      ojson j{{"q", kq},         {"m", km},   {"n", cp.n},          {"k", cp.k},
              {"delta", delta},  {"bose", cp.bose}, {"variant", kvariant}};
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    auto code = build_code(kq, km, delta, variant);
    if (kaction == "generator") {
      ojson coeffs = ojson::array();
      for (uint8_t s : code.gen.coeffs()) coeffs.push_back(code.K->elem(s));
      ojson j{{"q", kq},          {"m", km},        {"n", code.n},
              {"k", code.k},      {"delta", delta}, {"bose", code.bose},
              {"variant", kvariant}, {"generator_coeffs", coeffs},
              {"generator", code.gen.to_string()}};
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (kaction == "weights") {
      auto d = cached_weight_distribution(code, kbudget, kworkers, kcache);
      print_weights(d, kformat,
                    ojson{{"q", kq},
                          {"m", km},
                          {"n", code.n},
                          {"k", code.k},
                          {"delta", delta},
                          {"variant", kvariant}});
      return 0;
    }
    fail(Errc::OutOfRange, "code action must be params, generator or weights");
  }

  if (*trc) {
    TraceFamily family = parse_family(tfamily);
    auto tc = make_trace_code(tq, tm, family);
    if (taction == "weights") {
      auto d = trace_weight_distribution(tc, tbudget, tworkers);
      print_weights(d, "json",
                    ojson{{"q", tq}, {"m", tm}, {"family", tfamily}, {"n", tc.n}});
      return 0;
    }
    if (taction == "charsum-check") {
      check(family == TraceFamily::Delta2, Errc::OutOfRange,
            "charsum-check applies to the delta2 family");
      auto cx = make_char_context(tc);
      uint64_t pairs = 0, mismatches = 0;
      for_each_delta2_pair(tc, [&](int64_t sa, int64_t sb, uint64_t wt) {
        uint64_t a = sa < 0 ? 0 : tc.F->alpha_pow(uint64_t(sa));
        uint64_t b = sb < 0 ? 0 : tc.F->alpha_pow(uint64_t(sb));
        ++pairs;
        if (predicted_weight_direct(tc, cx, a, b).weight != wt ||
            predicted_weight_cases(tc, cx, a, b) != wt)
          ++mismatches;
      });
      ojson j{{"q", tq},         {"m", tm},           {"pairs", pairs},
              {"mismatches", mismatches}, {"tallies", case_tallies(tc)}};
      std::cout << j.dump(2) << "\n";
      return mismatches ? 1 : 0;
    }
    if (taction == "min-weight-census") {
      check(family == TraceFamily::Delta2, Errc::OutOfRange,
            "min-weight-census applies to the delta2 family");
      auto cx = make_char_context(tc);
      uint64_t dmin = closed_form_leader(2, tq, tm).leader + 1;
      uint64_t cond = 0, at_min = 0, disagree = 0;
      for_each_delta2_pair(tc, [&](int64_t sa, int64_t sb, uint64_t wt) {
        uint64_t a = sa < 0 ? 0 : tc.F->alpha_pow(uint64_t(sa));
        uint64_t b = sb < 0 ? 0 : tc.F->alpha_pow(uint64_t(sb));
        bool byc = characterize_min_weight(tc, cx, a, b);
        cond += byc;
        at_min += (wt == dmin);
        disagree += (byc != (wt == dmin));
      });
      uint64_t mult = tm % 2 ? 1 : ipow(tq, tm / 2);
      ojson j{{"q", tq},
              {"m", tm},
              {"min_weight", dmin},
              {"pairs_passing_condition", cond},
              {"pairs_at_min_weight", at_min},
              {"disagreements", disagree},
              {"codewords_at_min_weight", cond / mult},
              {"tallies", case_tallies(tc)}};
      std::cout << j.dump(2) << "\n";
      return disagree ? 1 : 0;
    }
    if (taction == "facts") {
      auto f = structure_facts(tq, tm);
      ojson j{{"q", tq},
              {"m", tm},
              {"odd_m", f.odd_m},
              {"permutations", f.permutation_count},
              {"non_permutations", f.non_permutation_count},
              {"eta_restriction_ok", f.eta_restriction_ok},
              {"all_expected", f.all_expected}};
      if (!f.odd_m) j["kernel_solutions"] = f.kernel_solutions;
      std::cout << j.dump(2) << "\n";
      return f.all_expected ? 0 : 1;
    }
    fail(Errc::OutOfRange, "trace action must be weights, charsum-check, min-weight-census or facts");
  }

  if (*ver) {
    vopt.extended = vextended;
    vopt.cache_dir = vcache;
    auto rep = run_verify(parse_scope(vscope), vopt);
    if (!vreference.empty()) rep = reference_compare(std::move(rep), vreference);
    if (vformat == "md")
      std::cout << rep.to_markdown();
    else
      std::cout << rep.to_json().dump(2) << "\n";
    return rep.all_pass() ? 0 : 1;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const bch::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
