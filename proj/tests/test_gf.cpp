#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "bch/gf.hpp"

using namespace bch;

// Test-side polynomial arithmetic over GF(p), independent of the library:
// digit vectors, schoolbook products, long division.  Used as the oracle for
// modulus selection and multiplicative orders.
namespace oracle {

using Digits = std::vector<uint32_t>;

Digits unpack(uint64_t v, uint64_t p) {
  Digits d;
  while (v) {
    d.push_back(uint32_t(v % p));
    v /= p;
  }
  return d;
}

uint64_t pack(const Digits& d, uint64_t p) {
  uint64_t v = 0;
  for (size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

Digits trim(Digits d) {
  while (!d.empty() && !d.back()) d.pop_back();
  return d;
}

Digits mul(const Digits& a, const Digits& b, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Digits r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = uint32_t((r[i + j] + uint64_t(a[i]) * b[j]) % p);
  return trim(r);
}

Digits mod(Digits a, const Digits& f, uint64_t p) {
  a = trim(a);
  // scale by the inverse of f's lead digit via Fermat
  auto invmod = [&](uint64_t x) {
    uint64_t r = 1;
    for (uint64_t e = p - 2; e; e >>= 1, x = x * x % p)
      if (e & 1) r = r * x % p;
    return r;
  };
  uint64_t linv = invmod(f.back());
  while (a.size() >= f.size()) {
    uint64_t c = a.back() * linv % p;
    size_t shift = a.size() - f.size();
    for (size_t i = 0; i < f.size(); ++i)
      a[shift + i] = uint32_t((a[shift + i] + (p - c * f[i] % p)) % p);
    a = trim(a);
  }
  return a;
}

uint64_t order_of_x(uint64_t f_packed, uint64_t p) {
  Digits f = unpack(f_packed, p);
  Digits x{0, 1}, y = mod(x, f, p);
  Digits acc = y;
  uint64_t ord = 1;
  while (!(acc.size() == 1 && acc[0] == 1)) {
    acc = mod(mul(acc, y, p), f, p);
    ++ord;
    REQUIRE(ord < (uint64_t(1) << 30));
  }
  return ord;
}

bool is_irreducible(uint64_t f_packed, uint64_t p, uint32_t d) {
  Digits f = unpack(f_packed, p);
  for (uint32_t dg = 1; dg <= d / 2; ++dg) {
    uint64_t lo = ipow(p, dg), hi = 2 * lo;
    for (uint64_t g = lo; g < hi; ++g) {
      Digits gd = unpack(g, p);
      if (mod(f, gd, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace oracle

TEST_CASE("prime field GF(2) has the trivial generator") {
  auto F = make_field(2, 1);
  CHECK(F->alpha() == 1);
  CHECK(F->order() == 1);
  CHECK(F->pow(F->alpha(), 1) == 1);
}

TEST_CASE("GF(16) uses the smallest-lex primitive quartic") {
  auto F = make_field(2, 4);
  CHECK(F->modulus() == 19);  // x^4 + x + 1
  // oracle: 19 is irreducible, x has full order, and no smaller quartic is primitive
  CHECK(oracle::is_irreducible(19, 2, 4));
  CHECK(oracle::order_of_x(19, 2) == 15);
  for (uint64_t f = 16; f < 19; ++f) {
    bool primitive = f % 2 == 1 && oracle::is_irreducible(f, 2, 4) && oracle::order_of_x(f, 2) == 15;
    CHECK_FALSE(primitive);
  }
  // brute-force the order of alpha with library multiplication
  uint64_t v = F->alpha();
  uint32_t ord = 1;
  while (v != 1) {
    v = F->mul(v, F->alpha());
    ++ord;
  }
  CHECK(ord == 15);
}

TEST_CASE("GF(27) alpha has order 26") {
  auto F = make_field(3, 3);
  CHECK(oracle::is_irreducible(F->modulus(), 3, 3));
  CHECK(oracle::order_of_x(F->modulus(), 3) == 26);
  // the library picked the smallest primitive cubic
  for (uint64_t f = 27; f < F->modulus(); ++f) {
    bool primitive =
        f % 3 != 0 && oracle::is_irreducible(f, 3, 3) && oracle::order_of_x(f, 3) == 26;
    CHECK_FALSE(primitive);
  }
  uint64_t v = F->alpha();
  uint32_t ord = 1;
  while (v != 1) {
    v = F->mul(v, F->alpha());
    ++ord;
  }
  CHECK(ord == 26);
}

TEST_CASE("arithmetic identities in GF(16)") {
  auto F = make_field(2, 4);
  for (uint64_t a = 1; a < F->card(); ++a) CHECK(F->mul(F->inv(a), a) == 1);
  CHECK(F->pow(F->alpha(), 4) == F->add(F->alpha(), 1));  // x^4 = x + 1 mod the modulus
  CHECK(F->pow(F->alpha(), 15) == 1);
  CHECK_THROWS_MATCHES(F->inv(0), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == Errc::DivisionByZero;
                       }));
}

TEST_CASE("antilog/log tables invert each other") {
  auto F = make_field(3, 3);
  for (uint64_t x = 1; x < F->card(); ++x) CHECK(F->alpha_pow(F->log(x)) == x);
}

TEST_CASE("field axioms, exhaustive on small fields") {
  for (auto [p, d] : {std::pair<uint64_t, uint32_t>{2, 4}, {3, 3}, {2, 6}}) {
    auto F = make_field(p, d);
    uint64_t c = F->card();
    for (uint64_t a = 0; a < c; ++a)
      for (uint64_t b = 0; b < c; ++b) {
        CHECK(F->add(a, b) == F->add(b, a));
        CHECK(F->mul(a, b) == F->mul(b, a));
      }
    // associativity and distributivity on full triples
    for (uint64_t a = 0; a < c; ++a)
      for (uint64_t b = 0; b < c; ++b)
        for (uint64_t x = 0; x < c; ++x) {
          CHECK(F->mul(F->mul(a, b), x) == F->mul(a, F->mul(b, x)));
          CHECK(F->mul(a, F->add(b, x)) == F->add(F->mul(a, b), F->mul(a, x)));
        }
  }
}

TEST_CASE("field axioms, sampled on a larger field") {
  auto F = make_field(2, 12);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20000; ++t) {
    uint64_t a = rng() % F->card(), b = rng() % F->card(), c = rng() % F->card();
    CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
    CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
  }
}

TEST_CASE("Frobenius is additive") {
  for (auto [p, d] : {std::pair<uint64_t, uint32_t>{2, 10}, {3, 4}}) {
    auto F = make_field(p, d);
    for (uint64_t a = 0; a < F->card(); ++a)
      for (uint64_t b = 0; b < F->card(); ++b)
        CHECK(F->pow(F->add(a, b), p) == F->add(F->pow(a, p), F->pow(b, p)));
  }
}

TEST_CASE("trace to the prime subfield of GF(16)") {
  auto F = make_field(2, 4);
  CHECK(F->trace_to(0, 1) == 0);
  CHECK(F->trace_to(F->alpha(), 1) == 0);  // alpha + alpha^2 + alpha^4 + alpha^8
  CHECK(F->trace_to(1, 1) == 0);           // four ones in characteristic 2
}

TEST_CASE("trace image is Frobenius-fixed and balanced") {
  for (auto [p, d, e] : {std::tuple<uint64_t, uint32_t, uint32_t>{2, 4, 1},
                         {3, 3, 1},
                         {2, 4, 2},
                         {3, 4, 2}}) {
    auto F = make_field(p, d);
    uint64_t q = ipow(p, e);
    std::map<uint64_t, uint64_t> hits;
    for (uint64_t x = 0; x < F->card(); ++x) {
      uint64_t t = F->trace_to(x, e);
      CHECK(F->pow(t, q) == t);
      hits[t]++;
    }
    CHECK(hits.size() == q);  // surjective
    for (auto& [v, c] : hits) CHECK(c == F->card() / q);
  }
}

TEST_CASE("construction errors") {
  CHECK_THROWS_MATCHES(make_field(4, 2), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == Errc::NotPrime;
                       }));
  CHECK_THROWS_MATCHES(make_field(2, 30), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == Errc::CapExceeded; }));
}

TEST_CASE("tables disabled: slow arithmetic agrees with tables") {
  FieldOptions off;
  off.build_tables = false;
  auto slow = make_field(2, 5, off);
  auto fast = make_field(2, 5);
  REQUIRE(slow->modulus() == fast->modulus());
  for (uint64_t a = 0; a < 32; ++a)
    for (uint64_t b = 0; b < 32; ++b) CHECK(slow->mul(a, b) == fast->mul(a, b));
  for (uint64_t a = 1; a < 32; ++a) CHECK(slow->inv(a) == fast->inv(a));
}

TEST_CASE("subfield GF(4) inside GF(16)") {
  auto F = make_field(2, 4);
  auto K = make_subfield(F, 2);
  CHECK(K->q() == 4);
  CHECK(K->elem(0) == 0);
  // closure under the tables
  for (uint32_t i = 0; i < 4; ++i)
    for (uint32_t j = 0; j < 4; ++j) {
      CHECK(K->elem(K->add(uint8_t(i), uint8_t(j))) == F->add(K->elem(i), K->elem(j)));
      CHECK(K->elem(K->mul(uint8_t(i), uint8_t(j))) == F->mul(K->elem(i), K->elem(j)));
    }
  CHECK_THROWS_MATCHES(K->index_of(F->alpha()), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == Errc::NotASubfield; }));
}

TEST_CASE("prime subfield keeps natural residues") {
  auto F = make_field(5, 2);
  auto K = make_subfield(F, 1);
  for (uint32_t i = 0; i < 5; ++i) CHECK(K->elem(i) == i);
  CHECK(K->add(3, 4) == 2);
  CHECK(K->mul(2, 4) == 3);
}
