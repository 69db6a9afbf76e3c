#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bch/poly.hpp"

namespace bch {

enum class Variant { C, CTilde };

inline const char* variant_name(Variant v) { return v == Variant::C ? "c" : "ctilde"; }

using Codeword = std::vector<uint8_t>;  // n subfield symbols

/// A cyclic code of length n = q^m - 1 given by its generator polynomial.
struct CyclicCode {
  std::shared_ptr<const Field> F;
  std::shared_ptr<const Subfield> K;
  uint64_t n = 0;
  uint64_t k = 0;
  Poly gen;
  Poly check_poly;

  uint64_t q() const { return K->q(); }
};

/// Primitive BCH code with design distance delta: the generator is the least
/// common multiple of the minimal polynomials of alpha^1..alpha^(delta-1)
/// (times x-1 for the non-narrow-sense variant).
struct BchCode : CyclicCode {
  uint32_t m = 0;
  uint64_t delta = 0;
  Variant variant = Variant::C;
  uint64_t bose = 0;  // largest design distance giving the same code
};

/// Dimension and Bose distance without constructing the generator polynomial;
/// cheap even when n is large.
struct CodeParams {
  uint64_t n = 0, k = 0, bose = 0;
};

inline CodeParams code_params(uint64_t q, uint32_t m, uint64_t delta, Variant variant) {
  uint64_t n = coset_modulus(q, m);
  check(delta >= 2 && delta < n, Errc::DeltaOutOfRange, "need 2 <= delta < n");
  std::vector<bool> covered;
  auto leaders = covered_coset_leaders(q, m, delta, &covered);
  uint64_t deg = variant == Variant::CTilde ? 1 : 0;
  for (uint64_t L : leaders) {
    uint32_t sz = 0;
    is_coset_leader(L, q, n, &sz);
    deg += sz;
  }
  uint64_t bose = delta;
  while (bose < n && covered[size_t(bose)]) ++bose;
  return {n, n - deg, bose};
}

inline BchCode build_code(uint64_t q, uint32_t m, uint64_t delta, Variant variant,
                          FieldOptions fopt = {}) {
  uint64_t p = 0;
  uint32_t e = 0;
  split_prime_power(q, p, e);
  BchCode code;
  code.F = make_field(p, e * m, fopt);
  code.K = make_subfield(code.F, e);
  code.m = m;
  code.delta = delta;
  code.variant = variant;
  code.n = code.F->order();
  check(delta >= 2 && delta < code.n, Errc::DeltaOutOfRange, "need 2 <= delta < n");

  std::vector<bool> covered;
  auto leaders = covered_coset_leaders(q, m, delta, &covered);
  const Subfield* K = code.K.get();
  Poly g = Poly::one(K);
  for (uint64_t L : leaders) g = g * minimal_polynomial(*K, L);
  if (variant == Variant::CTilde) g = g * minimal_polynomial(*K, 0);
  code.gen = g;
  code.k = code.n - uint64_t(g.degree());

  auto [h, rem] = Poly::divmod(xn_minus_1(K, code.n), g);
  check(rem.is_zero(), Errc::Internal, "generator does not divide x^n - 1");
  code.check_poly = h;

  uint64_t bose = delta;
  while (bose < code.n && covered[size_t(bose)]) ++bose;
  code.bose = bose;
  return code;
}

/// Closed-form dimensions for the codes at the second (k_index = 2) and third
/// (k_index = 3) largest coset leaders.  The narrow-sense variant is one
/// larger than the subcode with the extra x-1 factor.
inline uint64_t dimension_formula(uint64_t q, uint32_t m, int k_index, Variant variant) {
  uint64_t base = 0;
  if (k_index == 2) {
    check(m >= 2, Errc::UnsupportedM, "need m >= 2");
    base = m % 2 ? 2 * uint64_t(m) : 3 * uint64_t(m) / 2;
  } else if (k_index == 3) {
    if (m == 3) {
      check(q > 2, Errc::UnsupportedM, "third-leader code at m = 3 needs q > 2");
      base = 7;
    } else {
      check(m >= 4, Errc::UnsupportedM, "need m >= 4 (or the m = 3 special case)");
      base = m % 2 ? 3 * uint64_t(m) : 5 * uint64_t(m) / 2;
    }
  } else {
    fail(Errc::OutOfRange, "k_index must be 2 or 3");
  }
  return variant == Variant::C ? base + 1 : base;
}

inline uint64_t bose_distance(const BchCode& code) { return code.bose; }

inline Codeword encode(const CyclicCode& code, const std::vector<uint8_t>& message) {
  check(message.size() == code.k, Errc::LengthMismatch, "message length must equal k");
  Poly msg(code.K.get(), message);
  Poly cw = msg * code.gen;
  Codeword w(size_t(code.n), 0);
  for (size_t i = 0; i < cw.coeffs().size(); ++i) w[i] = cw.coeffs()[i];
  return w;
}

inline bool is_codeword(const CyclicCode& code, const Codeword& w) {
  check(w.size() == code.n, Errc::LengthMismatch, "word length must equal n");
  Poly pw(code.K.get(), w);
  return Poly::divmod(pw, code.gen).second.is_zero();
}

/// Dual code: generator is the monic reciprocal of the check polynomial.
inline CyclicCode dual_of(const CyclicCode& code) {
  CyclicCode d;
  d.F = code.F;
  d.K = code.K;
  d.n = code.n;
  d.gen = code.check_poly.reciprocal().monic();
  check(uint64_t(d.gen.degree()) == code.k, Errc::Internal, "dual generator degree mismatch");
  d.k = code.n - code.k;
  auto [h, rem] = Poly::divmod(xn_minus_1(code.K.get(), code.n), d.gen);
  check(rem.is_zero(), Errc::Internal, "dual generator does not divide x^n - 1");
  d.check_poly = h;
  return d;
}

}  // namespace bch
