#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bch/cyclotomic.hpp"
#include "bch/gf.hpp"

namespace bch {

/// Dense univariate polynomial over GF(q).  Coefficients are subfield symbol
/// indices, low degree first, with no trailing zeros; the zero polynomial has
/// an empty coefficient vector.
class Poly {
public:
  Poly() = default;
  explicit Poly(const Subfield* K) : K_(K) {}
  Poly(const Subfield* K, std::vector<uint8_t> coeffs) : K_(K), c_(std::move(coeffs)) {
    normalize();
  }

  static Poly zero(const Subfield* K) { return Poly(K); }
  static Poly one(const Subfield* K) { return Poly(K, {K->one()}); }
  static Poly monomial(const Subfield* K, uint64_t deg, uint8_t coef) {
    std::vector<uint8_t> v(size_t(deg) + 1, 0);
    v.back() = coef;
    return Poly(K, std::move(v));
  }

  const Subfield& K() const { return *K_; }
  const std::vector<uint8_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int64_t degree() const { return int64_t(c_.size()) - 1; }
  uint8_t coeff(uint64_t i) const { return i < c_.size() ? c_[size_t(i)] : 0; }
  uint8_t leading() const { return c_.empty() ? 0 : c_.back(); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    a.match(b);
    std::vector<uint8_t> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.K_->add(a.coeff(i), b.coeff(i));
    return Poly(a.K_, std::move(v));
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    a.match(b);
    std::vector<uint8_t> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.K_->sub(a.coeff(i), b.coeff(i));
    return Poly(a.K_, std::move(v));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.match(b);
    if (a.is_zero() || b.is_zero()) return Poly(a.K_);
    std::vector<uint8_t> v(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (!a.c_[i]) continue;
      for (size_t j = 0; j < b.c_.size(); ++j)
        v[i + j] = a.K_->add(v[i + j], a.K_->mul(a.c_[i], b.c_[j]));
    }
    return Poly(a.K_, std::move(v));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.K_ == b.K_ && a.c_ == b.c_;
  }

  /// Quotient and remainder with deg(rem) < deg(b).
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    a.match(b);
    check(!b.is_zero(), Errc::DivisionByZero, "polynomial division by zero");
    const Subfield& K = *a.K_;
    std::vector<uint8_t> rem = a.c_;
    std::vector<uint8_t> quo(rem.size() > b.c_.size() ? rem.size() - b.c_.size() + 1 : 1, 0);
    uint8_t lead_inv = K.inv(b.leading());
    while (rem.size() >= b.c_.size() && !rem.empty()) {
      uint8_t f = K.mul(rem.back(), lead_inv);
      size_t shift = rem.size() - b.c_.size();
      if (f) {
        quo[shift] = f;
        for (size_t i = 0; i < b.c_.size(); ++i)
          rem[shift + i] = K.sub(rem[shift + i], K.mul(f, b.c_[i]));
      }
      rem.pop_back();
      while (!rem.empty() && !rem.back()) rem.pop_back();
    }
    return {Poly(a.K_, std::move(quo)), Poly(a.K_, std::move(rem))};
  }

  Poly monic() const {
    if (is_zero()) return *this;
    if (leading() == K_->one()) return *this;
    uint8_t s = K_->inv(leading());
    std::vector<uint8_t> v(c_);
    for (auto& x : v) x = K_->mul(x, s);
    return Poly(K_, std::move(v));
  }

  static Poly gcd(Poly a, Poly b) {
    a.match(b);
    while (!b.is_zero()) {
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  static Poly lcm(const Poly& a, const Poly& b) {
    a.match(b);
    if (a.is_zero() || b.is_zero()) return Poly(a.K_);
    Poly g = gcd(a, b);
    return (divmod(a, g).first * b).monic();
  }

  /// Evaluate with coefficients lifted into the ambient field, at a packed point.
  uint64_t eval_in_field(uint64_t x_packed) const {
    const Field& F = K_->field();
    uint64_t acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = F.add(F.mul(acc, x_packed), K_->elem(c_[i]));
    return acc;
  }

  Poly reciprocal() const {
    std::vector<uint8_t> v(c_.rbegin(), c_.rend());
    return Poly(K_, std::move(v));
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
      if (!c_[i]) continue;
      if (!s.empty()) s += " + ";
      uint64_t v = K_->elem(c_[i]);
      if (i == 0 || v != 1) s += std::to_string(v);
      if (i >= 1) s += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return s;
  }

private:
  void match(const Poly& o) const {
    check(K_ && K_ == o.K_, Errc::FieldMismatch, "polynomials over different fields");
  }
  void normalize() {
    while (!c_.empty() && !c_.back()) c_.pop_back();
  }

  const Subfield* K_ = nullptr;
  std::vector<uint8_t> c_;
};

inline Poly xn_minus_1(const Subfield* K, uint64_t n) {
  std::vector<uint8_t> v(size_t(n) + 1, 0);
  v[0] = K->neg(K->one());
  v[size_t(n)] = K->one();
  return Poly(K, std::move(v));
}

/// Minimal polynomial of alpha^i over GF(q): the product of (x - alpha^j) over
/// the q-cyclotomic coset of i.  The product is accumulated in the ambient
/// field and every coefficient is then asserted Frobenius-fixed before being
/// converted to a subfield symbol; a failure aborts, since it would indicate a
/// broken field construction.
inline Poly minimal_polynomial(const Subfield& K, uint64_t i) {
  const Field& F = K.field();
  uint64_t n = F.order();
  check(i < n, Errc::OutOfRange, "exponent out of range [0, n)");
  Coset cs = coset_of(i, K.q(), F.degree() / K.e());
  std::vector<uint64_t> acc{1};  // packed big-field coefficients, monic build-up
  for (uint64_t j : cs.elements) {
    uint64_t root = F.alpha_pow(j);
    std::vector<uint64_t> next(acc.size() + 1, 0);
    for (size_t t = 0; t < acc.size(); ++t) {
      next[t + 1] = F.add(next[t + 1], acc[t]);
      next[t] = F.sub(next[t], F.mul(root, acc[t]));
    }
    acc = std::move(next);
  }
  std::vector<uint8_t> syms(acc.size());
  for (size_t t = 0; t < acc.size(); ++t) {
    check(F.pow(acc[t], K.q()) == acc[t], Errc::Internal,
          "minimal polynomial coefficient escaped the subfield");
    syms[t] = K.index_of(acc[t]);
  }
  Poly m(&K, std::move(syms));
  check(uint64_t(m.degree()) == cs.size, Errc::Internal, "minimal polynomial degree mismatch");
  check(m.eval_in_field(F.alpha_pow(i)) == 0, Errc::Internal,
        "minimal polynomial does not vanish at alpha^i");
  return m;
}

}  // namespace bch
