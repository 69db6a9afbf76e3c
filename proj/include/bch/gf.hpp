#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <vector>

#include "bch/common.hpp"

namespace bch {

/// Finite field GF(p^d) in polynomial basis over the prime field.
///
/// Elements are packed into a uint64_t as base-p digit strings: the element
/// c_0 + c_1 x + ... + c_{d-1} x^{d-1} is stored as sum c_i p^i.  The modulus
/// is the lexicographically smallest primitive polynomial of degree d, so the
/// construction is deterministic and alpha (the residue class of x) always
/// generates the multiplicative group.
///
/// Log/antilog tables are built when p^d fits under the table cap; beyond the
/// cap multiplication falls back to digit-vector polynomial reduction.
struct FieldOptions {
  uint64_t table_cap = uint64_t(1) << 24;
  bool build_tables = true;
};

class Field {
public:
  Field(uint64_t p, uint32_t deg, FieldOptions opt = {}) : p_(p), deg_(deg) {
    check(is_prime(p_), Errc::NotPrime, "characteristic must be prime");
    check(deg_ >= 1 && deg_ <= 40, Errc::OutOfRange, "extension degree out of range");
    u128 c = upow128(p_, deg_);
    // packed values of intermediate degree-d polynomials need p^(d+1) in range
    check(c <= (u128(1) << 62) / p_, Errc::CapExceeded, "field too large for packed representation");
    card_ = uint64_t(c);
    order_ = card_ - 1;
    if (opt.build_tables && card_ > opt.table_cap)
      fail(Errc::CapExceeded,
           "p^d exceeds the log-table cap (" + std::to_string(opt.table_cap) +
               "); construct with build_tables=false to use slow arithmetic");
    has_tables_ = opt.build_tables;

    find_modulus();
    alpha_ = deg_ == 1 ? (p_ - modulus_ % p_) % p_ : p_;
    if (has_tables_) build_tables();
  }

  uint64_t characteristic() const { return p_; }
  uint32_t degree() const { return deg_; }
  uint64_t card() const { return card_; }
  uint64_t order() const { return order_; }
  uint64_t modulus() const { return modulus_; }  // packed, includes the monic lead digit
  uint64_t alpha() const { return alpha_; }
  bool has_tables() const { return has_tables_; }

  // --- element arithmetic on packed values ---

  uint64_t add(uint64_t a, uint64_t b) const {
    if (p_ == 2) return a ^ b;
    uint64_t r = 0, m = 1;
    while (a || b) {
      uint64_t s = a % p_ + b % p_;
      if (s >= p_) s -= p_;
      r += s * m;
      m *= p_;
      a /= p_;
      b /= p_;
    }
    return r;
  }

  uint64_t neg(uint64_t a) const {
    if (p_ == 2) return a;
    uint64_t r = 0, m = 1;
    while (a) {
      uint64_t dgt = a % p_;
      if (dgt) r += (p_ - dgt) * m;
      m *= p_;
      a /= p_;
    }
    return r;
  }

  uint64_t sub(uint64_t a, uint64_t b) const { return add(a, neg(b)); }

  uint64_t mul(uint64_t a, uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (has_tables_) return antilog_[size_t((uint64_t(logt_[a]) + logt_[b]) % order_)];
    return mul_slow(a, b);
  }

  uint64_t inv(uint64_t a) const {
    check(a != 0, Errc::DivisionByZero, "inverse of zero");
    if (has_tables_) return antilog_[size_t((order_ - logt_[a]) % order_)];
    return pow(a, order_ - 1);
  }

  /// a^e; exponents are reduced mod (p^d - 1) for nonzero a.
  uint64_t pow(uint64_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    uint64_t er = e % order_;
    if (has_tables_) return antilog_[size_t(mulmod_u64(logt_[a], er, order_))];
    uint64_t r = 1, b = a;
    while (er) {
      if (er & 1) r = mul_slow(r, b);
      b = mul_slow(b, b);
      er >>= 1;
    }
    return r;
  }

  uint64_t alpha_pow(uint64_t j) const {
    if (has_tables_) return antilog_[size_t(j % order_)];
    return pow(alpha_, j);
  }

  uint64_t log(uint64_t a) const {
    check(a != 0, Errc::DivisionByZero, "log of zero");
    check(has_tables_, Errc::CapExceeded, "log tables disabled for this field");
    return logt_[a];
  }

  /// Trace onto the subfield GF(p^e): sum of x^(q^i), q = p^e, i < d/e.
  uint64_t trace_to(uint64_t x, uint32_t sub_e) const {
    check(sub_e >= 1 && deg_ % sub_e == 0, Errc::NotASubfield,
          "subfield degree must divide the extension degree");
    if (x == 0) return 0;
    uint64_t q = ipow(p_, sub_e);
    uint32_t m = deg_ / sub_e;
    uint64_t acc = x, y = x;
    for (uint32_t i = 1; i < m; ++i) {
      y = pow(y, q);
      acc = add(acc, y);
    }
    check(pow(acc, q) == acc, Errc::Internal, "trace image not fixed by the subfield Frobenius");
    return acc;
  }

  std::vector<uint32_t> digits(uint64_t packed, uint32_t count) const {
    std::vector<uint32_t> d(count, 0);
    for (uint32_t i = 0; i < count && packed; ++i) {
      d[i] = uint32_t(packed % p_);
      packed /= p_;
    }
    return d;
  }

  std::string poly_str(uint64_t packed, uint32_t count) const {
    auto d = digits(packed, count);
    std::string s;
    for (int i = int(count) - 1; i >= 0; --i) {
      if (!d[size_t(i)]) continue;
      if (!s.empty()) s += " + ";
      if (i == 0 || d[size_t(i)] != 1) s += std::to_string(d[size_t(i)]);
      if (i >= 1) s += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }

private:
  // multiply a packed element of degree < d by x, reduce mod the modulus
  uint64_t mulx(uint64_t v) const {
    uint64_t w = v * p_;
    uint64_t lead = w / card_;
    if (lead) {
      w -= lead * card_;
      uint64_t red = modulus_ - card_;  // lower digits of the monic modulus
      if (p_ == 2) {
        w ^= red;
      } else {
        // w -= lead * red, digit-wise mod p
        uint64_t r = 0, m = 1, a = w, b = red;
        while (a || b) {
          uint64_t s = a % p_ + (p_ - b % p_ * lead % p_) % p_;
          if (s >= p_) s -= p_;
          r += s * m;
          m *= p_;
          a /= p_;
          b /= p_;
        }
        w = r;
      }
    }
    return w;
  }

  static std::vector<uint32_t> unpack(uint64_t v, uint64_t p) {
    std::vector<uint32_t> d;
    while (v) {
      d.push_back(uint32_t(v % p));
      v /= p;
    }
    return d;
  }

  uint64_t repack(const std::vector<uint32_t>& d) const {
    uint64_t v = 0;
    for (size_t i = d.size(); i-- > 0;) v = v * p_ + d[i];
    return v;
  }

  // schoolbook product with reduction; used when tables are disabled
  uint64_t mul_slow(uint64_t a, uint64_t b) const {
    auto da = unpack(a, p_), db = unpack(b, p_);
    std::vector<uint32_t> prod(da.size() + db.size(), 0);
    for (size_t i = 0; i < da.size(); ++i)
      for (size_t j = 0; j < db.size(); ++j)
        prod[i + j] = uint32_t((prod[i + j] + uint64_t(da[i]) * db[j]) % p_);
    reduce_by_modulus(prod);
    return repack(prod);
  }

  void reduce_by_modulus(std::vector<uint32_t>& v) const {
    auto md = unpack(modulus_, p_);  // degree deg_, monic
    for (size_t i = v.size(); i-- > deg_;) {
      uint32_t c = v[i];
      if (!c) continue;
      v[i] = 0;
      for (size_t j = 0; j < md.size() - 1; ++j) {
        uint64_t t = v[i - deg_ + j] + (p_ - uint64_t(md[j]) * c % p_) % p_;
        v[i - deg_ + j] = uint32_t(t % p_);
      }
    }
    while (v.size() > deg_) v.pop_back();
  }

  // order of x in GF(p)[x]/(f) equals p^d - 1  <=>  f is primitive (and irreducible)
  bool x_has_full_order(uint64_t f_packed) const {
    if (f_packed % p_ == 0) return false;  // x divides f
    auto md = unpack(f_packed, p_);
    auto mulmod_poly = [&](const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
      std::vector<uint32_t> prod(a.size() + b.size(), 0);
      for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
          prod[i + j] = uint32_t((prod[i + j] + uint64_t(a[i]) * b[j]) % p_);
      for (size_t i = prod.size(); i-- > deg_;) {
        uint32_t c = prod[i];
        if (!c) continue;
        prod[i] = 0;
        for (size_t j = 0; j + 1 < md.size(); ++j) {
          uint64_t t = prod[i - deg_ + j] + (p_ - uint64_t(md[j]) * c % p_) % p_;
          prod[i - deg_ + j] = uint32_t(t % p_);
        }
      }
      prod.resize(deg_, 0);
      return prod;
    };
    auto powmod_x = [&](uint64_t e) {
      std::vector<uint32_t> r(deg_, 0), b(deg_, 0);
      r[0] = 1;
      if (deg_ == 1) {
        b[0] = uint32_t((p_ - md[0] % p_) % p_);  // x reduces to -c0
      } else {
        b[1] = 1;
      }
      while (e) {
        if (e & 1) r = mulmod_poly(r, b);
        b = mulmod_poly(b, b);
        e >>= 1;
      }
      return r;
    };
    auto is_one = [&](const std::vector<uint32_t>& v) {
      if (v.empty() || v[0] != 1) return false;
      for (size_t i = 1; i < v.size(); ++i)
        if (v[i]) return false;
      return true;
    };
    if (!is_one(powmod_x(order_))) return false;
    for (uint64_t r : prime_factors(order_))
      if (is_one(powmod_x(order_ / r))) return false;
    return true;
  }

  void find_modulus() {
    for (uint64_t low = 0; low < card_; ++low) {
      uint64_t f = card_ + low;
      if (x_has_full_order(f)) {
        modulus_ = f;
        return;
      }
    }
    fail(Errc::Internal, "no primitive polynomial found");
  }

  void build_tables() {
    antilog_.resize(size_t(order_));
    logt_.assign(size_t(card_), UINT32_MAX);
    uint64_t v = 1;
    for (uint64_t i = 0; i < order_; ++i) {
      antilog_[size_t(i)] = uint32_t(v);
      check(logt_[size_t(v)] == UINT32_MAX, Errc::Internal, "alpha is not primitive");
      logt_[size_t(v)] = uint32_t(i);
      v = mulx(v);
    }
    check(v == 1, Errc::Internal, "multiplicative group order mismatch");
  }

  uint64_t p_ = 0;
  uint32_t deg_ = 0;
  uint64_t card_ = 0, order_ = 0, modulus_ = 0, alpha_ = 0;
  bool has_tables_ = false;
  std::vector<uint32_t> antilog_;
  std::vector<uint32_t> logt_;
};

inline std::shared_ptr<const Field> make_field(uint64_t p, uint32_t deg, FieldOptions opt = {}) {
  return std::make_shared<const Field>(p, deg, opt);
}

/// GF(q), q = p^e, realized as the Frobenius-fixed subfield of an ambient
/// GF(p^d).  Elements are addressed by a dense index 0..q-1 (ascending packed
/// value, so 0 comes first and prime-field residues keep their natural order);
/// arithmetic is table-driven so enumeration kernels stay branch-free.
class Subfield {
public:
  Subfield(std::shared_ptr<const Field> F, uint32_t e) : F_(std::move(F)), e_(e) {
    const Field& f = *F_;
    check(e_ >= 1 && f.degree() % e_ == 0, Errc::NotASubfield, "subfield degree must divide d");
    q_ = ipow(f.characteristic(), e_);
    check(q_ <= 256, Errc::CapExceeded, "symbol alphabet limited to q <= 256");
    elems_.reserve(size_t(q_));
    elems_.push_back(0);
    if (q_ > 1) {
      uint64_t step = f.order() / (q_ - 1);
      check(f.order() % (q_ - 1) == 0, Errc::Internal, "subfield order must divide");
      for (uint64_t j = 0; j < q_ - 1; ++j) elems_.push_back(f.alpha_pow(j * step));
    }
    std::sort(elems_.begin(), elems_.end());
    check(std::adjacent_find(elems_.begin(), elems_.end()) == elems_.end(), Errc::Internal,
          "duplicate subfield elements");
    for (uint64_t v : elems_)
      check(f.pow(v, q_) == v, Errc::Internal, "subfield element not Frobenius-fixed");

    add_.resize(size_t(q_ * q_));
    mul_.resize(size_t(q_ * q_));
    neg_.resize(size_t(q_));
    inv_.assign(size_t(q_), 0);
    for (uint32_t i = 0; i < q_; ++i) {
      neg_[i] = index_of(f.neg(elems_[i]));
      if (i) inv_[i] = index_of(f.inv(elems_[i]));
      for (uint32_t j = 0; j < q_; ++j) {
        add_[size_t(i) * q_ + j] = index_of(f.add(elems_[i], elems_[j]));
        mul_[size_t(i) * q_ + j] = index_of(f.mul(elems_[i], elems_[j]));
      }
    }
  }

  const Field& field() const { return *F_; }
  std::shared_ptr<const Field> field_ptr() const { return F_; }
  uint32_t e() const { return e_; }
  uint64_t q() const { return q_; }

  uint64_t elem(uint32_t idx) const { return elems_[idx]; }

  uint8_t index_of(uint64_t packed) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), packed);
    check(it != elems_.end() && *it == packed, Errc::NotASubfield,
          "element does not lie in the subfield");
    return uint8_t(it - elems_.begin());
  }

  uint8_t add(uint8_t a, uint8_t b) const { return add_[size_t(a) * q_ + b]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add_[size_t(a) * q_ + neg_[b]]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[size_t(a) * q_ + b]; }
  uint8_t neg(uint8_t a) const { return neg_[a]; }
  uint8_t inv(uint8_t a) const {
    check(a != 0, Errc::DivisionByZero, "inverse of zero");
    return inv_[a];
  }
  uint8_t one() const { return index_of(1); }

  const uint8_t* add_table() const { return add_.data(); }
  const uint8_t* neg_table() const { return neg_.data(); }

  bool same(const Subfield& o) const { return F_.get() == o.F_.get() && e_ == o.e_; }

private:
  std::shared_ptr<const Field> F_;
  uint32_t e_;
  uint64_t q_ = 0;
  std::vector<uint64_t> elems_;
  std::vector<uint8_t> add_, mul_, neg_, inv_;
};

inline std::shared_ptr<const Subfield> make_subfield(std::shared_ptr<const Field> F, uint32_t e) {
  return std::make_shared<const Subfield>(std::move(F), e);
}

/// Factor a prime power q = p^e; fails if q is not a prime power.
inline void split_prime_power(uint64_t q, uint64_t& p, uint32_t& e) {
  check(q >= 2, Errc::OutOfRange, "q must be at least 2");
  uint64_t base = q;
  for (uint64_t d = 2; d * d <= base; ++d) {
    if (base % d == 0) {
      base = d;
      break;
    }
  }
  p = base;
  e = 0;
  uint64_t v = q;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  check(v == 1, Errc::OutOfRange, "q must be a prime power");
}

}  // namespace bch
