#pragma once

#include <algorithm>
#include <vector>

#include "bch/common.hpp"

namespace bch {

/// One q-cyclotomic coset modulo n = q^m - 1.
struct Coset {
  uint64_t leader = 0;
  uint32_t size = 0;
  std::vector<uint64_t> elements;  // sorted ascending
};

struct LeaderInfo {
  uint64_t leader = 0;
  uint32_t size = 0;
};

inline uint64_t coset_modulus(uint64_t q, uint32_t m) {
  check(m >= 1, Errc::OutOfRange, "m must be positive");
  return ipow(q, m) - 1;
}

inline Coset coset_of(uint64_t i, uint64_t q, uint32_t m) {
  uint64_t n = coset_modulus(q, m);
  check(i < n, Errc::OutOfRange, "element out of range [0, n)");
  Coset c;
  uint64_t j = i;
  do {
    c.elements.push_back(j);
    j = mulmod_u64(j, q, n);
  } while (j != i);
  c.size = uint32_t(c.elements.size());
  std::sort(c.elements.begin(), c.elements.end());
  c.leader = c.elements.front();
  return c;
}

/// True iff i is the smallest member of its coset; walks the orbit with early exit.
inline bool is_coset_leader(uint64_t i, uint64_t q, uint64_t n, uint32_t* size_out = nullptr) {
  uint64_t j = mulmod_u64(i, q, n);
  uint32_t sz = 1;
  while (j != i) {
    if (j < i) return false;
    j = mulmod_u64(j, q, n);
    ++sz;
  }
  if (size_out) *size_out = sz;
  return true;
}

/// Closed forms for the largest (k=1), second largest (k=2) and third largest
/// (k=3) coset leaders.  The second-leader form also covers m = 2, where the
/// second leader sits directly below the largest one.  The third leader needs
/// m >= 4 for the generic form; m = 3 drops to the second leader minus one
/// (a singleton coset), and m = 2 has no closed form.
inline LeaderInfo closed_form_leader(int k, uint64_t q, uint32_t m) {
  check(q >= 2, Errc::OutOfRange, "q must be at least 2");
  check(m >= 2, Errc::UnsupportedM, "closed forms need m >= 2");
  uint64_t d1 = (q - 1) * ipow(q, m - 1) - 1;
  switch (k) {
    case 1:
      return {d1, m};
    case 2:
      return {d1 - ipow(q, (m - 1) / 2), m % 2 ? m : m / 2};
    case 3:
      if (m == 2) fail(Errc::UnsupportedM, "no closed form for the third leader when m = 2");
      if (m == 3) return {d1 - ipow(q, 1) - 1, 1};  // delta2 - 1, singleton coset
      return {d1 - ipow(q, (m + 1) / 2), m};
    default:
      fail(Errc::OutOfRange, "k must be 1, 2 or 3");
  }
}

/// Ground-truth oracle: scan all residues from n-1 downward and return the
/// k-th largest coset leader together with its coset size.
inline LeaderInfo kth_largest_leader_exhaustive(uint32_t k, uint64_t q, uint32_t m,
                                                uint64_t scan_cap = 10'000'000) {
  check(k >= 1, Errc::OutOfRange, "k must be positive");
  uint64_t n = coset_modulus(q, m);
  check(n <= scan_cap, Errc::CapExceeded, "n exceeds the exhaustive scan cap");
  uint32_t found = 0;
  for (uint64_t i = n; i-- > 0;) {
    uint32_t sz = 0;
    if (is_coset_leader(i, q, n, &sz)) {
      if (++found == k) return {i, sz};
    }
  }
  fail(Errc::KTooLarge, "fewer than k coset leaders exist");
}

/// All coset leaders with sizes, ascending by leader.
struct CosetTable {
  uint64_t q = 0;
  uint32_t m = 0;
  uint64_t n = 0;
  std::vector<LeaderInfo> leaders;
};

inline CosetTable full_coset_table(uint64_t q, uint32_t m, uint64_t cap = 10'000'000) {
  CosetTable t;
  t.q = q;
  t.m = m;
  t.n = coset_modulus(q, m);
  check(t.n <= cap, Errc::CapExceeded, "n exceeds the table cap");
  std::vector<bool> seen(size_t(t.n), false);
  for (uint64_t i = 0; i < t.n; ++i) {
    if (seen[size_t(i)]) continue;
    uint64_t j = i;
    uint32_t sz = 0;
    do {
      seen[size_t(j)] = true;
      j = mulmod_u64(j, q, t.n);
      ++sz;
    } while (j != i);
    t.leaders.push_back({i, sz});
  }
  return t;
}

/// Mark the union of the cosets of 1..delta-1 and collect their leaders.
/// Returns the leaders; `covered`, when given, receives the membership bitmap.
inline std::vector<uint64_t> covered_coset_leaders(uint64_t q, uint32_t m, uint64_t delta,
                                                   std::vector<bool>* covered_out = nullptr) {
  uint64_t n = coset_modulus(q, m);
  check(delta >= 1 && delta <= n, Errc::DeltaOutOfRange, "delta out of range");
  std::vector<bool> covered(size_t(n), false);
  std::vector<uint64_t> leaders;
  for (uint64_t i = 1; i < delta; ++i) {
    if (covered[size_t(i)]) continue;
    leaders.push_back(i);  // first unseen member of an orbit is its leader
    uint64_t j = i;
    do {
      covered[size_t(j)] = true;
      j = mulmod_u64(j, q, n);
    } while (j != i);
  }
  if (covered_out) *covered_out = std::move(covered);
  return leaders;
}

}  // namespace bch
