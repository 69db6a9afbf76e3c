#pragma once

#include <array>

#include "bch/common.hpp"

namespace bch {

/// Solve the first three power-moment identities for a three-weight code of
/// length n over GF(q) with dimension k and dual distance >= 3:
///   sum A            = q^k - 1
///   sum w   A        = q^(k-1) n (q-1)
///   sum w^2 A        = q^(k-2) n (q-1) (n(q-1) + 1)
/// Exact 3x3 solve by Cramer's rule in 128-bit integers; the solution must be
/// a vector of nonnegative integers.
inline std::array<uint64_t, 3> pless_solve(uint64_t n, uint64_t q, uint64_t k,
                                           std::array<uint64_t, 3> w) {
  check(k >= 2, Errc::OutOfRange, "need k >= 2");
  check(w[0] != w[1] && w[0] != w[2] && w[1] != w[2], Errc::SingularSystem,
        "weights must be distinct");
  i128 qk2 = 1;
  for (uint64_t t = 0; t + 2 < k; ++t) qk2 = mul_checked(qk2, i128(q));
  i128 nq1 = mul_checked(i128(n), i128(q - 1));
  i128 rhs0 = add_checked(mul_checked(qk2, i128(q) * i128(q)), -1);
  i128 rhs1 = mul_checked(mul_checked(qk2, i128(q)), nq1);
  i128 rhs2 = mul_checked(qk2, mul_checked(nq1, add_checked(nq1, 1)));

  // rows: [1 1 1; w0 w1 w2; w0^2 w1^2 w2^2], Vandermonde in the weights
  i128 W[3] = {i128(w[0]), i128(w[1]), i128(w[2])};
  i128 det = mul_checked(mul_checked(W[1] - W[0], W[2] - W[0]), W[2] - W[1]);
  check(det != 0, Errc::SingularSystem, "singular moment system");

  std::array<uint64_t, 3> out{};
  for (int col = 0; col < 3; ++col) {
    i128 M[3][3];
    for (int r = 0; r < 3; ++r) {
      M[r][0] = r == 0 ? 1 : r == 1 ? W[0] : mul_checked(W[0], W[0]);
      M[r][1] = r == 0 ? 1 : r == 1 ? W[1] : mul_checked(W[1], W[1]);
      M[r][2] = r == 0 ? 1 : r == 1 ? W[2] : mul_checked(W[2], W[2]);
    }
    M[0][col] = rhs0;
    M[1][col] = rhs1;
    M[2][col] = rhs2;
    i128 num = 0;
    num = add_checked(num, mul_checked(M[0][0], add_checked(mul_checked(M[1][1], M[2][2]),
                                                            -mul_checked(M[1][2], M[2][1]))));
    num = add_checked(num, -mul_checked(M[0][1], add_checked(mul_checked(M[1][0], M[2][2]),
                                                             -mul_checked(M[1][2], M[2][0]))));
    num = add_checked(num, mul_checked(M[0][2], add_checked(mul_checked(M[1][0], M[2][1]),
                                                            -mul_checked(M[1][1], M[2][0]))));
    check(num % det == 0, Errc::NonIntegerSolution,
          "moment system has no integer solution (wrong inputs or dual distance < 3)");
    i128 v = num / det;
    check(v >= 0, Errc::NonIntegerSolution, "moment system gives a negative count");
    out[size_t(col)] = narrow_u64(v);
  }
  return out;
}

/// Griesmer bound check: compares n with sum_{i<k} ceil(d / q^i).
struct GriesmerResult {
  u128 sum = 0;
  bool meets = false;        // sum == n
  bool impossible = false;   // sum > n: parameters violate the bound
  int64_t slack = 0;         // n - sum when admissible
};

inline GriesmerResult griesmer_check(uint64_t n, uint64_t k, uint64_t d, uint64_t q) {
  check(k >= 1, Errc::OutOfRange, "need k >= 1");
  GriesmerResult r;
  u128 qi = 1;
  for (uint64_t i = 0; i < k; ++i) {
    r.sum += (u128(d) + qi - 1) / qi;
    if (qi <= (u128(UINT64_MAX) / q)) qi *= q;  // once q^i >= d every term is 1
  }
  r.meets = r.sum == n;
  r.impossible = r.sum > n;
  r.slack = r.impossible ? -int64_t(uint64_t(r.sum - n)) : int64_t(n - uint64_t(r.sum));
  return r;
}

}  // namespace bch
