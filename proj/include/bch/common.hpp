#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bch {

using i128 = __int128;
using u128 = unsigned __int128;

enum class Errc {
  NotPrime,
  CapExceeded,
  DivisionByZero,
  FieldMismatch,
  NotASubfield,
  OutOfRange,
  KTooLarge,
  UnsupportedM,
  DeltaOutOfRange,
  LengthMismatch,
  BudgetExceeded,
  SingularSystem,
  NonIntegerSolution,
  MalformedReference,
  EvenQ,
  EvenM,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(Errc c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

inline void check(bool ok, Errc c, const std::string& msg) {
  if (!ok) fail(c, msg);
}

inline std::string u128_str(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.push_back(char('0' + int(v % 10)));
    v /= 10;
  }
  return std::string(s.rbegin(), s.rend());
}

inline std::string i128_str(i128 v) {
  if (v < 0) return "-" + u128_str(u128(-v));
  return u128_str(u128(v));
}

inline bool is_prime(uint64_t v) {
  if (v < 2) return false;
  for (uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

// Distinct prime factors by trial division.
inline std::vector<uint64_t> prime_factors(uint64_t v) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

// b^e with overflow detection.
inline uint64_t ipow(uint64_t b, uint32_t e) {
  u128 r = 1;
  for (uint32_t i = 0; i < e; ++i) {
    r *= b;
    check(r <= UINT64_MAX, Errc::CapExceeded, "integer power exceeds 64 bits");
  }
  return uint64_t(r);
}

inline u128 upow128(uint64_t b, uint32_t e) {
  u128 r = 1;
  for (uint32_t i = 0; i < e; ++i) {
    check(b == 0 || r <= ~u128(0) / b, Errc::CapExceeded, "integer power exceeds 128 bits");
    r *= b;
  }
  return r;
}

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) { return uint64_t(u128(a) * b % m); }

inline uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, b, m);
    b = mulmod_u64(b, b, m);
    e >>= 1;
  }
  return r;
}

// Legendre symbol (a|p) for odd prime p; 0 for a == 0 mod p.
inline int legendre(uint64_t a, uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  uint64_t r = powmod_u64(a, (p - 1) / 2, p);
  return r == 1 ? 1 : -1;
}

inline i128 mul_checked(i128 a, i128 b) {
  i128 r;
  check(!__builtin_mul_overflow(a, b, &r), Errc::CapExceeded, "128-bit multiply overflow");
  return r;
}

inline i128 add_checked(i128 a, i128 b) {
  i128 r;
  check(!__builtin_add_overflow(a, b, &r), Errc::CapExceeded, "128-bit add overflow");
  return r;
}

// Exact division; refuses to round.
inline i128 div_exact(i128 num, i128 den, Errc c = Errc::Internal) {
  check(den != 0 && num % den == 0, c, "expected exact division");
  return num / den;
}

inline uint64_t narrow_u64(i128 v, Errc c = Errc::CapExceeded) {
  check(v >= 0 && v <= i128(UINT64_MAX), c, "value does not fit in 64 bits");
  return uint64_t(v);
}

}  // namespace bch
