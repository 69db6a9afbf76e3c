#pragma once

#include <map>
#include <vector>

#include "bch/weights.hpp"

namespace bch {

/// Published closed-form weight distributions for the two code families, kept
/// as evaluable expressions so any (q, m) grid point can be checked, plus the
/// literal example parameter rows.  Counts are evaluated in 128-bit integers
/// with every division checked exact.

namespace detail {

inline i128 P(uint64_t q, uint32_t e) { return i128(upow128(q, e)); }

inline void put(WeightDistribution& d, i128 w, i128 cnt) {
  check(w >= 0 && cnt >= 0, Errc::Internal, "negative table entry");
  if (cnt == 0) return;
  uint64_t wu = narrow_u64(w);
  d.counts[wu] += narrow_u64(cnt);
}

}  // namespace detail

/// Distribution of the delta2-family subcode (the variant with the extra x-1
/// factor).  Three nonzero weights; binary and odd-prime forms.
inline WeightDistribution expected_ctilde_delta2(uint64_t q, uint32_t m) {
  using detail::P;
  WeightDistribution d;
  d.source = WeightDistribution::Source::expected;
  d.counts[0] = 1;
  check(m >= 2, Errc::UnsupportedM, "need m >= 2");
  if (q == 2) {
    if (m % 2) {
      check(m >= 3, Errc::UnsupportedM, "need m >= 3");
      i128 nn = P(2, m) - 1;
      detail::put(d, P(2, m - 1) - P(2, (m - 1) / 2),
                  mul_checked(nn, mul_checked(P(2, (m - 1) / 2) + 1, P(2, (m - 3) / 2))));
      detail::put(d, P(2, m - 1), mul_checked(nn, P(2, m - 1) + 1));
      detail::put(d, P(2, m - 1) + P(2, (m - 1) / 2),
                  mul_checked(nn, mul_checked(P(2, (m - 1) / 2) - 1, P(2, (m - 3) / 2))));
    } else {
      i128 f = P(2, m / 2) - 1;
      detail::put(d, P(2, m - 1) - P(2, (m - 2) / 2),
                  mul_checked(f, P(2, m - 1) + P(2, (m - 2) / 2)));
      detail::put(d, P(2, m - 1), P(2, m) - 1);
      detail::put(d, P(2, m - 1) + P(2, (m - 2) / 2),
                  mul_checked(f, P(2, m - 1) - P(2, (m - 2) / 2)));
    }
    return d;
  }
  check(q % 2 == 1 && is_prime(q), Errc::UnsupportedM,
        "closed-form distribution covers q = 2 and odd prime q");
  i128 qm1 = i128(q - 1), nn = P(q, m) - 1;
  if (m % 2) {
    check(m >= 3, Errc::UnsupportedM, "need m >= 3");
    i128 half = P(q, (m - 1) / 2);
    detail::put(d, mul_checked(qm1, P(q, m - 1)) - half,
                div_exact(mul_checked(qm1, mul_checked(nn, P(q, m - 1) + half)), 2));
    detail::put(d, mul_checked(qm1, P(q, m - 1)), mul_checked(nn, P(q, m - 1) + 1));
    detail::put(d, mul_checked(qm1, P(q, m - 1)) + half,
                div_exact(mul_checked(qm1, mul_checked(nn, P(q, m - 1) - half)), 2));
  } else {
    i128 half = P(q, (m - 2) / 2);
    detail::put(d, mul_checked(qm1, P(q, m - 1)) - half,
                mul_checked(qm1, P(q, (3 * m - 2) / 2) - half));
    detail::put(d, mul_checked(qm1, P(q, m - 1)), nn);
    detail::put(d, mul_checked(qm1, P(q, m - 1) + half),
                mul_checked(half, P(q, m) - P(q, (m + 2) / 2) + i128(q) - 1));
  }
  return d;
}

/// Distribution of the delta3-family subcode; five weights for q = 2, eight
/// (even m) or seven (odd m) for odd prime q.
inline WeightDistribution expected_ctilde_delta3(uint64_t q, uint32_t m) {
  using detail::P;
  WeightDistribution d;
  d.source = WeightDistribution::Source::expected;
  d.counts[0] = 1;
  check(m >= 4, Errc::UnsupportedM, "closed forms cover m >= 4");
  if (q == 2) {
    i128 nn = P(2, m) - 1;
    if (m % 2) {
      check(m >= 5, Errc::UnsupportedM, "need m >= 5");
      i128 a = mul_checked(P(2, (m - 5) / 2), P(2, m - 1) - 1);
      i128 b = mul_checked(P(2, (m - 3) / 2), 5 * P(2, m - 1) + 4);
      detail::put(d, P(2, m - 1) - P(2, (m + 1) / 2),
                  div_exact(mul_checked(nn, mul_checked(P(2, (m - 3) / 2) + 1, a)), 3));
      detail::put(d, P(2, m - 1) - P(2, (m - 1) / 2),
                  div_exact(mul_checked(nn, mul_checked(P(2, (m - 1) / 2) + 1, b)), 3));
      detail::put(d, P(2, m - 1),
                  mul_checked(nn, 9 * P(2, 2 * m - 4) + 3 * P(2, m - 3) + 1));
      detail::put(d, P(2, m - 1) + P(2, (m - 1) / 2),
                  div_exact(mul_checked(nn, mul_checked(P(2, (m - 1) / 2) - 1, b)), 3));
      detail::put(d, P(2, m - 1) + P(2, (m + 1) / 2),
                  div_exact(mul_checked(nn, mul_checked(P(2, (m - 3) / 2) - 1, a)), 3));
    } else {
      i128 f = P(2, m / 2) - 1;
      i128 a = P(2, m + 1) + P(2, m / 2) - 1;
      i128 b = P(2, m) + P(2, (m + 2) / 2) + 4;
      detail::put(d, P(2, m - 1) - P(2, m / 2),
                  div_exact(mul_checked(f, mul_checked(P(2, m - 3) + P(2, (m - 4) / 2), a)), 3));
      detail::put(d, P(2, m - 1) - P(2, (m - 2) / 2),
                  div_exact(mul_checked(f, mul_checked(P(2, m - 1) + P(2, (m - 2) / 2), b)), 3));
      detail::put(d, P(2, m - 1),
                  mul_checked(f, P(2, 2 * m - 1) + P(2, (3 * m - 4) / 2) - P(2, m - 2) +
                                     P(2, m / 2) + 1));
      detail::put(d, P(2, m - 1) + P(2, (m - 2) / 2),
                  div_exact(mul_checked(f, mul_checked(P(2, m - 1) - P(2, (m - 2) / 2), b)), 3));
      detail::put(d, P(2, m - 1) + P(2, m / 2),
                  div_exact(mul_checked(f, mul_checked(P(2, m - 3) - P(2, (m - 4) / 2), a)), 3));
    }
    return d;
  }
  check(q % 2 == 1 && is_prime(q), Errc::UnsupportedM,
        "closed-form distribution covers q = 2 and odd prime q");
  i128 qm1 = i128(q - 1), nn = P(q, m) - 1;
  if (m % 2 == 0) {
    i128 wbase = mul_checked(qm1, P(q, m - 1));
    detail::put(d, wbase - P(q, m / 2),
                div_exact(mul_checked(nn, mul_checked(i128(q) * i128(q) - 1,
                                                      P(q, (3 * m - 6) / 2) + P(q, m - 2)) +
                                              mul_checked(2 * (P(q, (m - 2) / 2) - 1),
                                                          P(q, m - 3) + P(q, (m - 4) / 2))),
                          2 * i128(q + 1)));
    detail::put(d, mul_checked(qm1, P(q, m - 1) - P(q, (m - 2) / 2)),
                div_exact(mul_checked(mul_checked(i128(q), P(q, m / 2) + 1),
                                      mul_checked(nn, P(q, m - 1) +
                                                          mul_checked(qm1, P(q, (m - 2) / 2)))),
                          2 * i128(q + 1)));
    i128 qq = P(q, m + 1) - 2 * P(q, m) + i128(q);
    detail::put(d, wbase - P(q, (m - 2) / 2),
                div_exact(mul_checked(qq, mul_checked(P(q, m / 2) - 1,
                                                      P(q, m - 1) + P(q, (m - 2) / 2))),
                          2));
    detail::put(d, wbase,
                mul_checked(nn, 1 + P(q, (3 * m - 2) / 2) - P(q, (3 * m - 4) / 2) +
                                    2 * P(q, (3 * m - 6) / 2) - P(q, m - 2)));
    detail::put(d, wbase + P(q, (m - 2) / 2),
                div_exact(mul_checked(mul_checked(i128(q), P(q, m / 2) + 1),
                                      mul_checked(mul_checked(nn, qm1),
                                                  P(q, m - 1) - P(q, (m - 2) / 2))),
                          2 * i128(q + 1)));
    detail::put(d, mul_checked(qm1, P(q, m - 1) + P(q, (m - 2) / 2)),
                div_exact(mul_checked(qq, mul_checked(P(q, m / 2) - 1,
                                                      P(q, m - 1) -
                                                          mul_checked(qm1, P(q, (m - 2) / 2)))),
                          2 * qm1));
    detail::put(d, wbase + P(q, m / 2),
                div_exact(mul_checked(P(q, (m - 2) / 2),
                                      mul_checked(mul_checked(nn, qm1),
                                                  P(q, m - 2) - P(q, (m - 2) / 2))),
                          2));
    detail::put(d, mul_checked(qm1, P(q, m - 1) + P(q, m / 2)),
                div_exact(mul_checked(P(q, (m - 2) / 2) - 1,
                                      mul_checked(nn, P(q, m - 3) -
                                                          mul_checked(qm1, P(q, (m - 4) / 2)))),
                          i128(q) * i128(q) - 1));
  } else {
    check(m >= 5, Errc::UnsupportedM, "need m >= 5");
    i128 wbase = mul_checked(qm1, P(q, m - 1));
    detail::put(d, wbase - P(q, (m + 1) / 2),
                div_exact(mul_checked(nn, mul_checked(P(q, m - 3) + P(q, (m - 3) / 2),
                                                      P(q, m - 1) - 1)),
                          2 * i128(q + 1)));
    detail::put(d, mul_checked(qm1, P(q, m - 1) - P(q, (m - 1) / 2)),
                div_exact(mul_checked(nn, mul_checked(P(q, m - 1) + P(q, (m - 1) / 2),
                                                      P(q, m - 2) +
                                                          mul_checked(qm1, P(q, (m - 3) / 2)))),
                          2));
    detail::put(d, wbase - P(q, (m - 1) / 2),
                div_exact(mul_checked(nn, mul_checked(P(q, m - 2) + P(q, (m - 3) / 2),
                                                      P(q, m + 3) - P(q, m + 2) - P(q, m - 1) -
                                                          P(q, (m + 3) / 2) + P(q, (m - 1) / 2) +
                                                          P(q, 3))),
                          2 * i128(q + 1)));
    detail::put(d, wbase,
                mul_checked(nn, 1 + mul_checked(i128(q) * i128(q) - i128(q) + 1, P(q, m - 3)) +
                                    mul_checked(qm1, P(q, 2 * m - 4)) +
                                    mul_checked(i128(q) - 2, P(q, 2 * m - 2)) + P(q, 2 * m - 1)));
    detail::put(d, wbase + P(q, (m - 1) / 2),
                div_exact(mul_checked(nn, mul_checked(P(q, m - 2) - P(q, (m - 3) / 2),
                                                      P(q, m + 3) - P(q, m + 2) - P(q, m - 1) +
                                                          P(q, (m + 3) / 2) - P(q, (m - 1) / 2) +
                                                          P(q, 3))),
                          2 * i128(q + 1)));
    detail::put(d, mul_checked(qm1, P(q, m - 1) + P(q, (m - 1) / 2)),
                div_exact(mul_checked(nn, mul_checked(P(q, m - 1) - P(q, (m - 1) / 2),
                                                      P(q, m - 2) -
                                                          mul_checked(qm1, P(q, (m - 3) / 2)))),
                          2));
    detail::put(d, wbase + P(q, (m + 1) / 2),
                div_exact(mul_checked(nn, mul_checked(P(q, m - 3) - P(q, (m - 3) / 2),
                                                      P(q, m - 1) - 1)),
                          2 * i128(q + 1)));
  }
  return d;
}

inline WeightDistribution expected_distribution(int family, uint64_t q, uint32_t m) {
  check(family == 2 || family == 3, Errc::OutOfRange, "family must be 2 or 3");
  return family == 2 ? expected_ctilde_delta2(q, m) : expected_ctilde_delta3(q, m);
}

/// Literal (q, m, k, d) rows of the published example tables; n is always
/// q^m - 1 (three printed rows carry obvious n/q typos that this forces).
struct ParamRow {
  uint64_t q;
  uint32_t m;
  uint64_t k;
  uint64_t d;
  bool extended;  // enumeration beyond the default budget tier
};

inline const std::vector<ParamRow>& param_rows_ctilde_delta2() {
  static const std::vector<ParamRow> rows = {
      {2, 4, 6, 6, false},   {2, 5, 10, 12, false}, {2, 6, 9, 28, false},
      {2, 7, 14, 56, false}, {2, 8, 12, 120, false}, {3, 3, 6, 15, false},
      {3, 4, 6, 51, false},  {3, 5, 10, 153, false},
  };
  return rows;
}

inline const std::vector<ParamRow>& param_rows_c_delta2() {
  static const std::vector<ParamRow> rows = {
      {2, 4, 7, 5, false},   {2, 5, 11, 11, false},  {2, 6, 10, 27, false},
      {2, 7, 15, 55, false}, {2, 8, 13, 119, false}, {3, 3, 7, 14, false},
      {3, 4, 7, 50, false},  {3, 5, 11, 152, false},
  };
  return rows;
}

inline const std::vector<ParamRow>& param_rows_ctilde_delta3() {
  static const std::vector<ParamRow> rows = {
      {2, 4, 10, 4, false},  {2, 5, 15, 8, false},   {2, 6, 15, 24, false},
      {2, 7, 21, 48, false}, {2, 8, 20, 112, false}, {3, 3, 10, 9, false},
      {3, 4, 10, 45, false}, {3, 5, 15, 135, true},
  };
  return rows;
}

inline const std::vector<ParamRow>& param_rows_c_delta3() {
  static const std::vector<ParamRow> rows = {
      {2, 4, 11, 3, false},  {2, 5, 16, 7, false},   {2, 6, 16, 23, false},
      {2, 7, 22, 47, false}, {2, 8, 21, 111, false}, {3, 3, 11, 8, false},
      {3, 4, 11, 44, false}, {3, 5, 16, 134, true},
  };
  return rows;
}

/// The four fully worked weight enumerators.
struct WorkedExample {
  uint64_t q;
  uint32_t m;
  uint64_t n, k;
  std::map<uint64_t, uint64_t> enumerator;  // includes the zero word
  bool extended;
};

inline const std::vector<WorkedExample>& worked_examples() {
  static const std::vector<WorkedExample> ex = {
      {2, 4, 15, 10, {{0, 1}, {4, 105}, {6, 280}, {8, 435}, {10, 168}, {12, 35}}, false},
      {2, 5, 31, 15, {{0, 1}, {8, 465}, {12, 8680}, {16, 18259}, {20, 5208}, {24, 155}}, false},
      {3, 4, 80, 10,
       {{0, 1}, {45, 3040}, {48, 9900}, {51, 10080}, {54, 16640}, {57, 14400}, {60, 3528},
        {63, 1440}, {72, 20}},
       false},
      {3, 5, 242, 15,
       {{0, 1}, {135, 29040}, {144, 359370}, {153, 3855060}, {162, 6719372}, {171, 3188592},
        {180, 182952}, {189, 14520}},
       true},
  };
  return ex;
}

}  // namespace bch
