#pragma once

#include <cmath>
#include <complex>

#include "bch/trace_code.hpp"

namespace bch {

/// Canonical additive/quadratic character machinery for GF(q^m) over a prime q.
/// chi1 on GF(q) maps y to exp(2*pi*i*y/q); chi1' on GF(q^m) uses the absolute
/// trace, so chi1'(x) = chi1(Tr(x)) holds by trace transitivity (verified in
/// tests by exhaustion).  eta/eta' are the quadratic characters.
struct CharContext {
  std::shared_ptr<const Field> F;
  std::shared_ptr<const Subfield> K;
  uint64_t q = 0;
  uint32_t m = 0;
  uint64_t n = 0;
  std::vector<uint8_t> abstr;                // absolute trace of each packed element, in [0, p)
  std::vector<std::complex<double>> root;    // p-th roots of unity

  std::complex<double> chi_prime(uint64_t packed) const { return root[abstr[size_t(packed)]]; }
  /// eta' on GF(q^m)^*: squares are exactly the even powers of alpha.
  int eta_prime_log(uint64_t log_exp) const { return (log_exp & 1) ? -1 : 1; }
  /// eta on GF(q)^* for prime q: the Legendre symbol of the residue.
  int eta_sub(uint64_t packed_residue) const { return legendre(packed_residue, q); }
};

inline CharContext make_char_context(const TraceCode& tc) {
  CharContext cx;
  cx.F = tc.F;
  cx.K = tc.K;
  cx.q = tc.q;
  cx.m = tc.m;
  cx.n = tc.n;
  uint64_t p = tc.F->characteristic();
  cx.root.resize(size_t(p));
  for (uint64_t r = 0; r < p; ++r) {
    double ang = 2.0 * M_PI * double(r) / double(p);
    cx.root[size_t(r)] = {std::cos(ang), std::sin(ang)};
  }
  cx.abstr.resize(size_t(tc.F->card()));
  for (uint64_t v = 0; v < tc.F->card(); ++v)
    cx.abstr[size_t(v)] = uint8_t(tc.F->trace_to(v, 1));
  return cx;
}

/// Gauss sum G(eta, chi1) over GF(q)^* by direct summation (q an odd prime).
inline std::complex<double> gauss_sum(uint64_t q) {
  check(q >= 3 && q % 2 == 1, Errc::EvenQ, "Gauss sum needs an odd prime q");
  check(is_prime(q), Errc::NotPrime, "q must be prime");
  std::complex<double> s = 0;
  for (uint64_t y = 1; y < q; ++y) {
    double ang = 2.0 * M_PI * double(y) / double(q);
    s += double(legendre(y, q)) * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

/// Closed form: sqrt(q) when q = 1 mod 4, i*sqrt(q) when q = 3 mod 4.
inline std::complex<double> gauss_sum_closed(uint64_t q) {
  check(q >= 3 && q % 2 == 1 && is_prime(q), Errc::EvenQ, "need an odd prime q");
  double r = std::sqrt(double(q));
  return q % 4 == 1 ? std::complex<double>(r, 0) : std::complex<double>(0, r);
}

/// G(eta, chi_a) by direct summation; equals eta(a) * G(eta, chi1).
inline std::complex<double> scaled_gauss(uint64_t q, uint64_t a) {
  check(q >= 3 && q % 2 == 1 && is_prime(q), Errc::EvenQ, "need an odd prime q");
  check(a % q != 0, Errc::OutOfRange, "a must be nonzero mod q");
  std::complex<double> s = 0;
  for (uint64_t y = 1; y < q; ++y) {
    double ang = 2.0 * M_PI * double(a * y % q) / double(q);
    s += double(legendre(y, q)) * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

struct WeightPrediction {
  uint64_t weight = 0;
  std::complex<double> char_sum;  // the double character sum before scaling
};

/// Weight of the (a, b) trace codeword via the double character sum
///   (q-1) q^(m-1) - (1/q) sum_{z in GF(q)*} sum_x chi1'(z(a x^(1+q^h) + b x)).
/// Works for any prime q (q = 2 uses the +-1 character).  The imaginary part
/// must vanish up to rounding noise and the real part must sit next to an
/// integer; both are enforced.
inline WeightPrediction predicted_weight_direct(const TraceCode& tc, const CharContext& cx,
                                                uint64_t a, uint64_t b) {
  const Field& F = *tc.F;
  check(cx.K->e() == 1, Errc::EvenQ, "character prediction needs prime q");
  const uint64_t n = tc.n;
  int64_t la = a ? int64_t(F.log(a)) : -1;
  int64_t lb = b ? int64_t(F.log(b)) : -1;
  std::complex<double> S = 0;
  for (uint32_t z = 1; z < cx.q; ++z) {
    // x = 0 contributes chi'(0) = 1
    S += 1.0;
    for (uint64_t i = 0; i < n; ++i) {
      uint64_t f = 0;
      if (la >= 0) f = F.alpha_pow(uint64_t(la) + uint64_t(tc.idx2[size_t(i)]));
      if (lb >= 0) f = F.add(f, F.alpha_pow(uint64_t(lb) + i));
      // z in the prime field scales the absolute trace directly
      S += cx.root[size_t(uint64_t(z) * cx.abstr[size_t(f)] % cx.q)];
    }
  }
  double scale = std::pow(double(cx.q), double(tc.m) / 2.0);
  check(std::abs(S.imag()) <= 1e-6 * std::max(1.0, scale), Errc::Internal,
        "character sum has a non-vanishing imaginary part");
  double w = double((cx.q - 1) * upow128(cx.q, tc.m - 1)) - S.real() / double(cx.q);
  double r = std::round(w);
  check(std::abs(w - r) <= 1e-6 * std::max(1.0, scale), Errc::Internal,
        "character-sum weight is not near an integer");
  return {uint64_t(r), S};
}

namespace detail {

// unique solution of a^(q^h) x^q + a x = rhs for a != 0 (odd m: permutation;
// even m: linear map (a^(q^h)+a) x, caller guarantees invertibility)
inline uint64_t solve_fa(const TraceCode& tc, uint64_t a, uint64_t rhs) {
  const Field& F = *tc.F;
  uint64_t qh = powmod_u64(tc.q, tc.h, tc.n);
  uint64_t aph = F.pow(a, qh);
  if (2 * tc.h == tc.m) {
    uint64_t d = F.add(aph, a);
    check(d != 0, Errc::Internal, "linear map not invertible");
    return F.mul(F.inv(d), rhs);
  }
  for (uint64_t x = 0; x < F.card(); ++x) {
    if (F.add(F.mul(aph, F.pow(x, tc.q)), F.mul(a, x)) == rhs) return x;
  }
  fail(Errc::Internal, "no solution found for the linearized equation");
}

inline int iota_power_sign(uint32_t e) {
  // i^e for even e
  check(e % 2 == 0, Errc::Internal, "imaginary unit power must be even here");
  return e % 4 == 0 ? 1 : -1;
}

}  // namespace detail

/// Closed-form case analysis of the (a, b) codeword weight for odd prime q.
/// Odd m: values (q-1)q^(m-1) and (q-1)q^(m-1) +- q^((m-1)/2).
/// Even m: values 0, (q-1)q^(m-1) - q^((m-2)/2), (q-1)q^(m-1), and
/// (q-1)(q^(m-1) + q^((m-2)/2)).
inline uint64_t predicted_weight_cases(const TraceCode& tc, const CharContext& cx, uint64_t a,
                                       uint64_t b) {
  check(cx.q % 2 == 1 && cx.q >= 3 && is_prime(cx.q), Errc::EvenQ,
        "case analysis needs an odd prime q");
  const Field& F = *tc.F;
  const uint64_t q = cx.q;
  const uint32_t m = tc.m;
  uint64_t w2 = (q - 1) * ipow(q, m - 1);
  if (a == 0 && b == 0) return 0;
  uint64_t qh = powmod_u64(q, tc.h, tc.n);
  if (m % 2 == 1) {
    if (a == 0 || b == 0) return w2;
    uint64_t x0 = detail::solve_fa(tc, a, F.neg(F.pow(b, qh)));
    uint64_t u = F.trace_to(F.mul(a, F.pow(x0, 1 + qh)), cx.K->e());
    if (u == 0) return w2;
    int sgn = cx.eta_prime_log(F.log(F.neg(a))) * cx.eta_sub(u);
    // q = 3 mod 4: conjugating G(eta, chi_u) contributes eta(-1) = -1 on top
    // of the i^(3m+1) factor
    if (q % 4 == 3) sgn *= -detail::iota_power_sign(3 * m + 1);
    return sgn > 0 ? w2 - ipow(q, (m - 1) / 2) : w2 + ipow(q, (m - 1) / 2);
  }
  uint64_t half = ipow(q, (m - 2) / 2);
  if (a == 0) return w2;  // b != 0 here
  uint64_t d = F.add(F.pow(a, qh), a);
  if (d == 0) return b == 0 ? 0 : w2;
  if (b == 0) return (q - 1) * (ipow(q, m - 1) + half);
  uint64_t u = F.trace_to(F.mul(a, F.mul(F.pow(b, 1 + qh), F.inv(F.mul(d, d)))), cx.K->e());
  return u == 0 ? (q - 1) * (ipow(q, m - 1) + half) : w2 - half;
}

/// Minimum-weight membership test for the two-exponent family (odd prime q,
/// m >= 4): true iff the (a, b) codeword has weight exactly delta2 + 1.
inline bool characterize_min_weight(const TraceCode& tc, const CharContext& cx, uint64_t a,
                                    uint64_t b) {
  check(cx.q % 2 == 1 && cx.q >= 3 && is_prime(cx.q), Errc::EvenQ,
        "characterization needs an odd prime q");
  check(tc.m >= 4, Errc::UnsupportedM, "characterization stated for m >= 4");
  const Field& F = *tc.F;
  const uint32_t m = tc.m;
  uint64_t qh = powmod_u64(cx.q, tc.h, tc.n);
  if (m % 2 == 1) {
    if (a == 0 || b == 0) return false;
    uint64_t x0 = detail::solve_fa(tc, a, F.neg(F.pow(b, qh)));
    uint64_t u = F.trace_to(F.mul(a, F.pow(x0, 1 + qh)), cx.K->e());
    if (u == 0) return false;
    int sgn = cx.eta_prime_log(F.log(F.neg(a))) * cx.eta_sub(u);
    if (cx.q % 4 == 3) sgn *= -detail::iota_power_sign(3 * m + 1);
    return sgn == 1;
  }
  if (a == 0 || b == 0) return false;
  uint64_t d = F.add(F.pow(a, qh), a);
  if (d == 0) return false;
  uint64_t u = F.trace_to(F.mul(a, F.mul(F.pow(b, 1 + qh), F.inv(F.mul(d, d)))), cx.K->e());
  return u != 0;
}

/// Structural facts behind the case analysis, checked by exhaustion:
/// odd m:  x -> a^(q^h) x^q + a x permutes GF(q^m) for every a != 0, and the
///         quadratic character of the big field restricts to eta on GF(q)^*.
/// even m: y^(q^h) + y = 0 has exactly q^h solutions, the map fails to be a
///         permutation for exactly q^(m/2) - 1 nonzero a, and the restricted
///         quadratic character is identically 1.
struct StructureFacts {
  bool odd_m = false;
  uint64_t permutation_count = 0;     // nonzero a giving a permutation
  uint64_t non_permutation_count = 0; // nonzero a failing
  uint64_t kernel_solutions = 0;      // solutions of y^(q^h) + y = 0 (even m)
  bool eta_restriction_ok = false;
  bool all_expected = false;
};

inline StructureFacts structure_facts(uint64_t q, uint32_t m, FieldOptions fopt = {}) {
  check(q % 2 == 1 && q >= 3 && is_prime(q), Errc::EvenQ, "facts apply to odd prime q");
  TraceCode tc = make_trace_code(q, m, TraceFamily::Delta2, fopt);
  CharContext cx = make_char_context(tc);
  const Field& F = *tc.F;
  uint64_t qh = powmod_u64(q, tc.h, tc.n);
  StructureFacts out;
  out.odd_m = m % 2 == 1;

  // the map is x -> a^(q^h) x^(q^(2h)) + a x; the inner exponent reduces to q
  // for odd m (2h = m+1) and to 1 for even m (2h = m)
  uint64_t e2h = powmod_u64(q, 2 * tc.h, tc.n);
  std::vector<bool> seen(size_t(F.card()));
  for (uint64_t la = 0; la < tc.n; ++la) {
    uint64_t a = F.alpha_pow(la);
    uint64_t aph = F.pow(a, qh);
    std::fill(seen.begin(), seen.end(), false);
    bool perm = true;
    for (uint64_t x = 0; x < F.card() && perm; ++x) {
      uint64_t y = F.add(F.mul(aph, F.pow(x, e2h)), F.mul(a, x));
      if (seen[size_t(y)]) perm = false;
      seen[size_t(y)] = true;
    }
    perm ? ++out.permutation_count : ++out.non_permutation_count;
  }

  if (!out.odd_m) {
    for (uint64_t y = 0; y < F.card(); ++y)
      if (F.add(F.pow(y, qh), y) == 0) ++out.kernel_solutions;
  }

  out.eta_restriction_ok = true;
  for (uint32_t z = 1; z < q; ++z) {
    int big = cx.eta_prime_log(F.log(z));
    int want = out.odd_m ? cx.eta_sub(z) : 1;
    if (big != want) out.eta_restriction_ok = false;
  }

  if (out.odd_m) {
    out.all_expected = out.non_permutation_count == 0 && out.eta_restriction_ok;
  } else {
    uint64_t half = ipow(q, m / 2);
    out.all_expected = out.kernel_solutions == half &&
                       out.non_permutation_count == half - 1 &&
                       out.permutation_count == F.card() - half &&
                       out.eta_restriction_ok;
  }
  return out;
}

}  // namespace bch
