#pragma once

#include <atomic>
#include <thread>

#include "bch/weights.hpp"

namespace bch {

/// Families of trace-form codes over GF(q), evaluated at x = alpha^0..alpha^(n-1):
///   Delta2:      Tr(a x^(1+q^h) + b x)
///   Delta2Full:  Tr(a x^(1+q^h) + b x) + e
///   Delta3:      Tr(a x^(1+q^h) + b x + c x^(1+q^(h+1)))
///   Delta3Full:  the same plus a constant e in GF(q)
/// with h = floor((m-1)/2) + 1 and exponents reduced mod n.  These realize the
/// duals-of-check-polynomial descriptions of the BCH codes at the second and
/// third largest coset leaders, so their weight distributions must match the
/// polynomial construction (Delta3 families need m >= 4 for that identification).
enum class TraceFamily { Delta2, Delta2Full, Delta3, Delta3Full };

inline const char* trace_family_name(TraceFamily f) {
  switch (f) {
    case TraceFamily::Delta2: return "delta2";
    case TraceFamily::Delta2Full: return "delta2-full";
    case TraceFamily::Delta3: return "delta3";
    case TraceFamily::Delta3Full: return "delta3-full";
  }
  return "?";
}

struct TraceCode {
  std::shared_ptr<const Field> F;
  std::shared_ptr<const Subfield> K;
  TraceFamily family = TraceFamily::Delta2;
  uint64_t q = 0;
  uint32_t m = 0, h = 0;
  uint64_t n = 0;
  uint64_t e2 = 0, e3 = 0;          // (1+q^h) mod n, (1+q^(h+1)) mod n
  std::vector<uint8_t> T2;          // Tr(alpha^j) symbols, doubled for rotation reads
  std::vector<uint32_t> idx2, idx3; // j*e2 mod n, j*e3 mod n

  bool uses_c() const { return family == TraceFamily::Delta3 || family == TraceFamily::Delta3Full; }
  bool has_const() const {
    return family == TraceFamily::Delta2Full || family == TraceFamily::Delta3Full;
  }
};

inline TraceCode make_trace_code(uint64_t q, uint32_t m, TraceFamily family,
                                 FieldOptions fopt = {}) {
  TraceCode tc;
  tc.family = family;
  tc.q = q;
  tc.m = m;
  check(m >= 2, Errc::UnsupportedM, "need m >= 2");
  if (family == TraceFamily::Delta3 || family == TraceFamily::Delta3Full)
    check(m >= 4, Errc::UnsupportedM,
          "the three-exponent family matches a BCH code only for m >= 4");
  uint64_t p = 0;
  uint32_t e = 0;
  split_prime_power(q, p, e);
  tc.F = make_field(p, e * m, fopt);
  tc.K = make_subfield(tc.F, e);
  tc.n = tc.F->order();
  tc.h = (m - 1) / 2 + 1;
  tc.e2 = (1 + powmod_u64(q, tc.h, tc.n)) % tc.n;
  tc.e3 = (1 + powmod_u64(q, tc.h + 1, tc.n)) % tc.n;

  tc.T2.resize(size_t(2 * tc.n));
  for (uint64_t j = 0; j < tc.n; ++j) {
    uint8_t s = tc.K->index_of(tc.F->trace_to(tc.F->alpha_pow(j), tc.K->e()));
    tc.T2[size_t(j)] = s;
    tc.T2[size_t(j + tc.n)] = s;
  }
  tc.idx2.resize(size_t(tc.n));
  tc.idx3.resize(size_t(tc.n));
  for (uint64_t j = 0; j < tc.n; ++j) {
    tc.idx2[size_t(j)] = uint32_t(mulmod_u64(j, tc.e2, tc.n));
    tc.idx3[size_t(j)] = uint32_t(mulmod_u64(j, tc.e3, tc.n));
  }
  return tc;
}

/// One trace codeword from packed field elements (unused parameters must be 0;
/// e_packed is a GF(q) element for the -Full families).
inline Codeword trace_codeword(const TraceCode& tc, uint64_t a, uint64_t b, uint64_t c = 0,
                               uint64_t e_packed = 0) {
  const Field& F = *tc.F;
  check(a < F.card() && b < F.card() && c < F.card(), Errc::FieldMismatch,
        "parameters must be packed elements of GF(q^m)");
  check(tc.uses_c() || c == 0, Errc::FieldMismatch, "this family has no third coefficient");
  check(tc.has_const() || e_packed == 0, Errc::FieldMismatch, "this family has no constant term");
  uint8_t e_sym = tc.K->index_of(e_packed);
  int64_t la = a ? int64_t(F.log(a)) : -1;
  int64_t lb = b ? int64_t(F.log(b)) : -1;
  int64_t lc = c ? int64_t(F.log(c)) : -1;
  Codeword w(size_t(tc.n), 0);
  for (uint64_t i = 0; i < tc.n; ++i) {
    uint8_t s = e_sym;
    if (la >= 0) s = tc.K->add(s, tc.T2[size_t((uint64_t(la) + tc.idx2[size_t(i)]) % tc.n)]);
    if (lb >= 0) s = tc.K->add(s, tc.T2[size_t((uint64_t(lb) + i) % tc.n)]);
    if (lc >= 0) s = tc.K->add(s, tc.T2[size_t((uint64_t(lc) + tc.idx3[size_t(i)]) % tc.n)]);
    w[size_t(i)] = s;
  }
  return w;
}

namespace detail {

// gather row[i] = T2[(s + idx[i]) % n] for a fixed coefficient log s (-1 -> zeros)
inline void gather_term(const TraceCode& tc, int64_t s, const std::vector<uint32_t>& idx,
                        uint8_t* row) {
  const size_t n = size_t(tc.n);
  if (s < 0) {
    std::memset(row, 0, n);
    return;
  }
  for (size_t i = 0; i < n; ++i) {
    uint64_t t = uint64_t(s) + idx[i];
    row[i] = tc.T2[size_t(t >= tc.n ? t - tc.n : t)];
  }
}

inline void add_terms(const Subfield& K, bool prime, uint64_t p, const uint8_t* x,
                      const uint8_t* y, uint8_t* out, size_t n) {
  if (prime) {
    for (size_t i = 0; i < n; ++i) {
      uint32_t s = uint32_t(x[i]) + y[i];
      if (s >= p) s -= p;
      out[i] = uint8_t(s);
    }
  } else {
    for (size_t i = 0; i < n; ++i) out[i] = K.add(x[i], y[i]);
  }
}

// weight of base + rotation of T by sb (sb = -1: base alone)
inline uint64_t weight_with_linear(const TraceCode& tc, bool prime, uint64_t p,
                                   const uint8_t* base, int64_t sb) {
  const size_t n = size_t(tc.n);
  uint64_t zeros = 0;
  if (sb < 0) {
    zeros = count_zeros(base, n);
  } else {
    const uint8_t* rot = &tc.T2[size_t(sb)];
    if (prime) {
      for (size_t i = 0; i < n; ++i) {
        uint32_t s = uint32_t(base[i]) + rot[i];
        if (s >= p) s -= p;
        zeros += (s == 0);
      }
    } else {
      const Subfield& K = *tc.K;
      for (size_t i = 0; i < n; ++i) zeros += (K.add(base[i], rot[i]) == 0);
    }
  }
  return tc.n - zeros;
}

// per-symbol value histogram of base + rotation (for the constant-term families)
inline void value_hist_with_linear(const TraceCode& tc, bool prime, uint64_t p,
                                   const uint8_t* base, int64_t sb, uint64_t* hv) {
  const size_t n = size_t(tc.n);
  std::fill(hv, hv + tc.q, uint64_t(0));
  if (sb < 0) {
    for (size_t i = 0; i < n; ++i) hv[base[i]]++;
    return;
  }
  const uint8_t* rot = &tc.T2[size_t(sb)];
  if (prime) {
    for (size_t i = 0; i < n; ++i) {
      uint32_t s = uint32_t(base[i]) + rot[i];
      if (s >= p) s -= p;
      hv[s]++;
    }
  } else {
    const Subfield& K = *tc.K;
    for (size_t i = 0; i < n; ++i) hv[K.add(base[i], rot[i])]++;
  }
}

}  // namespace detail

/// Weight distribution of the trace family over all parameter tuples,
/// normalized by the parameterization multiplicity q^(dim of tuple space - k)
/// so it counts distinct codewords.  Every raw count must divide exactly.
inline WeightDistribution trace_weight_distribution(const TraceCode& tc,
                                                    uint64_t budget = kDefaultBudget,
                                                    unsigned workers = 1) {
  const uint64_t n = tc.n, q = tc.q;
  const bool full = tc.has_const(), with_c = tc.uses_c();
  uint32_t nf = with_c ? 3 : 2;
  u128 tuples = upow128(n + 1, nf) * (full ? q : 1);
  check(tuples * n <= budget, Errc::BudgetExceeded,
        "trace enumeration needs " + u128_str(tuples * n) + " symbol-ops, budget is " +
            std::to_string(budget) + "; raise --budget to run it");
  const bool prime = tc.K->e() == 1;
  const uint64_t p = tc.F->characteristic();

  uint64_t outer_count = with_c ? (n + 1) * (n + 1) : (n + 1);
  std::vector<uint64_t> hist(size_t(n) + 1, 0);

  auto run_outer = [&](uint64_t oid, std::vector<uint64_t>& h, std::vector<uint8_t>& base,
                       std::vector<uint8_t>& quad, std::vector<uint64_t>& hv) {
    int64_t sa, sc = -1;
    if (with_c) {
      sa = int64_t(oid / (n + 1)) - 1;
      sc = int64_t(oid % (n + 1)) - 1;
    } else {
      sa = int64_t(oid) - 1;
    }
    detail::gather_term(tc, sa, tc.idx2, quad.data());
    if (with_c) {
      std::vector<uint8_t> third(size_t(n), 0);
      detail::gather_term(tc, sc, tc.idx3, third.data());
      detail::add_terms(*tc.K, prime, p, quad.data(), third.data(), base.data(), size_t(n));
    } else {
      base = quad;
    }
    for (int64_t sb = -1; sb < int64_t(n); ++sb) {
      if (!full) {
        h[size_t(detail::weight_with_linear(tc, prime, p, base.data(), sb))]++;
      } else {
        detail::value_hist_with_linear(tc, prime, p, base.data(), sb, hv.data());
        for (uint64_t t = 0; t < q; ++t) h[size_t(n - hv[size_t(t)])]++;
      }
    }
  };

  auto make_scratch = [&] {
    return std::tuple<std::vector<uint8_t>, std::vector<uint8_t>, std::vector<uint64_t>>(
        std::vector<uint8_t>(size_t(n)), std::vector<uint8_t>(size_t(n)),
        std::vector<uint64_t>(size_t(q)));
  };

  if (workers <= 1) {
    auto [base, quad, hv] = make_scratch();
    for (uint64_t oid = 0; oid < outer_count; ++oid) run_outer(oid, hist, base, quad, hv);
  } else {
    unsigned nt = unsigned(std::min<uint64_t>(workers, outer_count));
    std::atomic<uint64_t> next{0};
    std::vector<std::vector<uint64_t>> parts(nt, std::vector<uint64_t>(hist.size(), 0));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t)
      pool.emplace_back([&, t] {
        auto [base, quad, hv] = make_scratch();
        for (uint64_t oid; (oid = next.fetch_add(1)) < outer_count;)
          run_outer(oid, parts[t], base, quad, hv);
      });
    for (auto& th : pool) th.join();
    for (auto& part : parts) detail::merge_hist(hist, part);
  }

  int k_index = with_c ? 3 : 2;
  uint64_t k = dimension_formula(q, tc.m, k_index, full ? Variant::C : Variant::CTilde);
  u128 mult = div_exact(i128(tuples), i128(upow128(q, uint32_t(k))), Errc::Internal);
  WeightDistribution d;
  d.source = WeightDistribution::Source::enumerated;
  for (uint64_t w = 0; w <= n; ++w) {
    if (!hist[size_t(w)]) continue;
    check(hist[size_t(w)] % uint64_t(mult) == 0, Errc::Internal,
          "tuple count not divisible by the parameterization multiplicity");
    d.counts[w] = hist[size_t(w)] / uint64_t(mult);
  }
  check(d.counts.at(0) == 1, Errc::Internal, "zero codeword multiplicity mismatch");
  check(d.total() == upow128(q, uint32_t(k)), Errc::Internal, "trace distribution total != q^k");
  return d;
}

/// Visit every (a, b) pair of the two-exponent family with its enumerated
/// weight; sa/sb are discrete logs, -1 meaning the zero coefficient.
template <class Fn>
inline void for_each_delta2_pair(const TraceCode& tc, Fn&& fn) {
  check(!tc.uses_c(), Errc::OutOfRange, "pair iteration applies to the two-exponent family");
  const bool prime = tc.K->e() == 1;
  const uint64_t p = tc.F->characteristic();
  std::vector<uint8_t> quad(size_t(tc.n));
  for (int64_t sa = -1; sa < int64_t(tc.n); ++sa) {
    detail::gather_term(tc, sa, tc.idx2, quad.data());
    for (int64_t sb = -1; sb < int64_t(tc.n); ++sb)
      fn(sa, sb, detail::weight_with_linear(tc, prime, p, quad.data(), sb));
  }
}

/// For odd m, the third exponent can also be written 1 + q^(3h); verifies the
/// congruence mod n and that codewords built either way agree componentwise.
inline bool exponent_congruence_check(uint64_t q, uint32_t m, FieldOptions fopt = {}) {
  check(m % 2 == 1, Errc::EvenM, "the rewrite applies to odd m only");
  check(m >= 5, Errc::UnsupportedM, "need m >= 5");
  TraceCode tc = make_trace_code(q, m, TraceFamily::Delta3, fopt);
  uint64_t alt = (1 + powmod_u64(q, 3 * tc.h, tc.n)) % tc.n;
  if (alt != tc.e3) return false;
  std::vector<uint32_t> idx_alt(size_t(tc.n));
  for (uint64_t j = 0; j < tc.n; ++j) idx_alt[size_t(j)] = uint32_t(mulmod_u64(j, alt, tc.n));
  // componentwise equality of both builds on a spread of parameter tuples
  for (uint64_t s = 0; s < std::min<uint64_t>(tc.n, 16); ++s) {
    uint64_t a = tc.F->alpha_pow(s * 7 + 1), b = tc.F->alpha_pow(s * 5 + 2),
             c = tc.F->alpha_pow(s * 3);
    Codeword w1 = trace_codeword(tc, a, b, c);
    TraceCode alt_tc = tc;
    alt_tc.idx3 = idx_alt;
    Codeword w2 = trace_codeword(alt_tc, a, b, c);
    if (w1 != w2) return false;
  }
  return true;
}

}  // namespace bch
