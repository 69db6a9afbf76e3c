#pragma once

#include <atomic>
#include <bit>
#include <cstring>
#include <map>
#include <numeric>
#include <optional>
#include <thread>

#include "bch/code.hpp"

namespace bch {

constexpr uint64_t kDefaultBudget = uint64_t(1) << 31;  // symbol operations

/// Exact weight histogram with provenance.
struct WeightDistribution {
  enum class Source { enumerated, predicted, expected };
  std::map<uint64_t, uint64_t> counts;
  Source source = Source::enumerated;

  u128 total() const {
    u128 t = 0;
    for (auto& [w, c] : counts) t += c;
    return t;
  }
};

inline uint64_t min_distance(const WeightDistribution& d) {
  for (auto& [w, c] : d.counts)
    if (w > 0 && c > 0) return w;
  fail(Errc::Internal, "distribution has no nonzero weight");
}

inline std::pair<uint64_t, uint64_t> wmin_wmax(const WeightDistribution& d) {
  uint64_t lo = 0, hi = 0;
  for (auto& [w, c] : d.counts) {
    if (w == 0 || c == 0) continue;
    if (!lo) lo = w;
    hi = w;
  }
  check(lo != 0, Errc::Internal, "distribution has no nonzero weight");
  return {lo, hi};
}

/// Secret-sharing access-structure condition: w_min/w_max > (q-1)/q.
inline bool secret_sharing_ratio_ok(const WeightDistribution& d, uint64_t q) {
  auto [lo, hi] = wmin_wmax(d);
  return u128(q) * lo > u128(q - 1) * hi;
}

enum class Engine { Auto, Bitset, Bytes };

namespace detail {

/// Loopless reflected mixed-radix Gray walk: step(j, dir) is invoked once per
/// transition, changing digit j by dir (+1/-1); all radix^ndigits words are
/// visited when the initial word is visited by the caller first.
template <class Step>
inline void reflected_gray(uint32_t radix, uint32_t ndigits, Step&& step) {
  if (ndigits == 0) return;
  std::vector<uint32_t> a(ndigits, 0), f(ndigits + 1);
  std::vector<int8_t> o(ndigits, 1);
  std::iota(f.begin(), f.end(), 0u);
  for (;;) {
    uint32_t j = f[0];
    f[0] = 0;
    if (j == ndigits) break;
    int dir = o[j];
    step(j, dir);
    a[j] = uint32_t(int64_t(a[j]) + dir);
    if (a[j] == 0 || a[j] + 1 == radix) {
      o[j] = int8_t(-o[j]);
      f[j] = f[j + 1];
      f[j + 1] = j + 1;
    }
  }
}

struct RowBasis {
  uint32_t q = 0, k = 0;
  uint64_t n = 0;
  bool prime = false;  // symbols are residues mod q; arithmetic without tables
  uint64_t p = 0;
  const Subfield* K = nullptr;
  std::vector<std::vector<uint8_t>> rows, neg_rows;
};

inline RowBasis make_basis(const CyclicCode& code) {
  RowBasis b;
  b.q = uint32_t(code.q());
  b.k = uint32_t(code.k);
  b.n = code.n;
  b.K = code.K.get();
  b.prime = code.K->e() == 1;
  b.p = code.K->field().characteristic();
  b.rows.assign(b.k, std::vector<uint8_t>(size_t(b.n), 0));
  b.neg_rows.assign(b.k, std::vector<uint8_t>(size_t(b.n), 0));
  const auto& g = code.gen.coeffs();
  for (uint32_t j = 0; j < b.k; ++j)
    for (size_t t = 0; t < g.size(); ++t) {
      b.rows[j][j + t] = g[t];
      b.neg_rows[j][j + t] = b.K->neg(g[t]);
    }
  return b;
}

// cur += row (mod p), returning the zero count of the updated vector
inline uint64_t apply_count_prime(uint8_t* cur, const uint8_t* row, size_t n, uint32_t p) {
  uint64_t zeros = 0;
  for (size_t i = 0; i < n; ++i) {
    uint32_t s = uint32_t(cur[i]) + row[i];
    if (s >= p) s -= p;
    cur[i] = uint8_t(s);
    zeros += (s == 0);
  }
  return zeros;
}

inline uint64_t apply_count_table(uint8_t* cur, const uint8_t* row, size_t n, const uint8_t* add,
                                  uint32_t q) {
  uint64_t zeros = 0;
  for (size_t i = 0; i < n; ++i) {
    uint8_t s = add[size_t(cur[i]) * q + row[i]];
    cur[i] = s;
    zeros += (s == 0);
  }
  return zeros;
}

inline uint64_t count_zeros(const uint8_t* cur, size_t n) {
  uint64_t zeros = 0;
  for (size_t i = 0; i < n; ++i) zeros += (cur[i] == 0);
  return zeros;
}

// Byte-symbol enumeration of one chunk: the top digits are fixed by `chunk`,
// the low kl digits run through the full reflected Gray sequence.
inline void run_chunk_bytes(const RowBasis& b, uint32_t kl, uint64_t chunk,
                            std::vector<uint64_t>& hist, std::vector<uint8_t>& cur) {
  const size_t n = size_t(b.n);
  std::fill(cur.begin(), cur.end(), 0);
  uint64_t c = chunk;
  for (uint32_t j = kl; j < b.k; ++j) {
    uint32_t digit = uint32_t(c % b.q);
    c /= b.q;
    if (!digit) continue;
    const auto& row = b.rows[j];
    if (b.prime) {
      for (size_t i = 0; i < n; ++i)
        cur[i] = uint8_t((cur[i] + uint64_t(digit) * row[i]) % b.p);
    } else {
      for (size_t i = 0; i < n; ++i)
        cur[i] = b.K->add(cur[i], b.K->mul(uint8_t(digit), row[i]));
    }
  }
  hist[n - count_zeros(cur.data(), n)]++;
  const uint8_t* add_t = b.K->add_table();
  const uint32_t p = uint32_t(b.p), q = b.q;
  if (b.prime) {
    reflected_gray(q, kl, [&](uint32_t j, int dir) {
      const uint8_t* row = (dir > 0 ? b.rows[j] : b.neg_rows[j]).data();
      hist[n - apply_count_prime(cur.data(), row, n, p)]++;
    });
  } else {
    reflected_gray(q, kl, [&](uint32_t j, int dir) {
      const uint8_t* row = (dir > 0 ? b.rows[j] : b.neg_rows[j]).data();
      hist[n - apply_count_table(cur.data(), row, n, add_t, q)]++;
    });
  }
}

struct PackedBasis {
  uint32_t k = 0;
  uint64_t n = 0;
  size_t words = 0;
  std::vector<uint64_t> rows;  // k rows, `words` each
};

inline PackedBasis make_packed_basis(const CyclicCode& code) {
  PackedBasis b;
  b.k = uint32_t(code.k);
  b.n = code.n;
  b.words = size_t((code.n + 63) / 64);
  b.rows.assign(b.k * b.words, 0);
  const auto& g = code.gen.coeffs();
  for (uint32_t j = 0; j < b.k; ++j)
    for (size_t t = 0; t < g.size(); ++t)
      if (g[t]) b.rows[j * b.words + (j + t) / 64] |= uint64_t(1) << ((j + t) % 64);
  return b;
}

inline void run_chunk_bits(const PackedBasis& b, uint32_t kl, uint64_t chunk,
                           std::vector<uint64_t>& hist, std::vector<uint64_t>& cur) {
  std::fill(cur.begin(), cur.end(), 0);
  uint64_t c = chunk;
  for (uint32_t j = kl; j < b.k; ++j, c >>= 1)
    if (c & 1)
      for (size_t w = 0; w < b.words; ++w) cur[w] ^= b.rows[j * b.words + w];
  auto weight = [&] {
    uint64_t s = 0;
    for (size_t w = 0; w < b.words; ++w) s += uint64_t(std::popcount(cur[w]));
    return s;
  };
  hist[weight()]++;
  for (uint64_t t = 1; t < (uint64_t(1) << kl); ++t) {
    uint32_t j = uint32_t(std::countr_zero(t));
    const uint64_t* row = &b.rows[j * b.words];
    for (size_t w = 0; w < b.words; ++w) cur[w] ^= row[w];
    hist[weight()]++;
  }
}

inline void merge_hist(std::vector<uint64_t>& into, const std::vector<uint64_t>& from) {
  for (size_t i = 0; i < into.size(); ++i) into[i] += from[i];
}

}  // namespace detail

/// Exhaustive weight distribution over all q^k codewords.
///
/// The message space is split into fixed-prefix chunks; each chunk is walked
/// with a reflected Gray code so a step costs one row update.  Workers own
/// private histograms and the merge is an elementwise sum, so the result is
/// identical for any worker count.
inline WeightDistribution weight_distribution(const CyclicCode& code,
                                              uint64_t budget = kDefaultBudget,
                                              unsigned workers = 1, Engine engine = Engine::Auto) {
  const uint64_t q = code.q();
  u128 ops = upow128(q, uint32_t(code.k));
  check(ops * code.n <= budget, Errc::BudgetExceeded,
        "enumeration needs " + u128_str(ops * code.n) + " symbol-ops, budget is " +
            std::to_string(budget) + "; raise --budget to run it");

  uint32_t k = uint32_t(code.k);
  uint32_t lp = 0;  // prefix digits; chunk count q^lp (fixed per code, not per worker)
  while (lp < k && ipow(q, lp) < 64) ++lp;
  uint32_t kl = k - lp;
  uint64_t chunks = ipow(q, lp);

  std::vector<uint64_t> hist(size_t(code.n) + 1, 0);
  bool use_bits = engine == Engine::Bitset || (engine == Engine::Auto && q == 2);
  check(!(engine == Engine::Bitset && q != 2), Errc::OutOfRange,
        "bit-packed engine requires q = 2");

  auto run_all = [&](auto&& run_one) {
    if (workers <= 1 || chunks == 1) {
      for (uint64_t c = 0; c < chunks; ++c) run_one(c, hist);
      return;
    }
    unsigned nt = unsigned(std::min<uint64_t>(workers, chunks));
    std::atomic<uint64_t> next{0};
    std::vector<std::vector<uint64_t>> parts(nt, std::vector<uint64_t>(hist.size(), 0));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t)
      pool.emplace_back([&, t] {
        for (uint64_t c; (c = next.fetch_add(1)) < chunks;) run_one(c, parts[t]);
      });
    for (auto& th : pool) th.join();
    for (auto& part : parts) detail::merge_hist(hist, part);
  };

  if (use_bits) {
    auto basis = detail::make_packed_basis(code);
    run_all([&](uint64_t c, std::vector<uint64_t>& h) {
      thread_local std::vector<uint64_t> cur;
      cur.assign(basis.words, 0);
      detail::run_chunk_bits(basis, kl, c, h, cur);
    });
  } else {
    auto basis = detail::make_basis(code);
    run_all([&](uint64_t c, std::vector<uint64_t>& h) {
      thread_local std::vector<uint8_t> cur;
      cur.assign(size_t(code.n), 0);
      detail::run_chunk_bytes(basis, kl, c, h, cur);
    });
  }

  WeightDistribution d;
  d.source = WeightDistribution::Source::enumerated;
  for (uint64_t w = 0; w <= code.n; ++w)
    if (hist[size_t(w)]) d.counts[w] = hist[size_t(w)];
  check(d.total() == upow128(q, k), Errc::Internal, "histogram total != q^k");
  return d;
}

/// Single-threaded visit of every codeword as a byte vector (any q).
template <class Fn>
inline void for_each_codeword(const CyclicCode& code, uint64_t budget, Fn&& fn) {
  const uint64_t q = code.q();
  u128 ops = upow128(q, uint32_t(code.k));
  check(ops * code.n <= budget, Errc::BudgetExceeded, "enumeration exceeds budget");
  auto basis = detail::make_basis(code);
  std::vector<uint8_t> cur(size_t(code.n), 0);
  const size_t n = size_t(code.n);
  fn(cur, uint64_t(0));
  const uint8_t* add_t = basis.K->add_table();
  detail::reflected_gray(basis.q, basis.k, [&](uint32_t j, int dir) {
    const uint8_t* row = (dir > 0 ? basis.rows[j] : basis.neg_rows[j]).data();
    uint64_t zeros = basis.prime
                         ? detail::apply_count_prime(cur.data(), row, n, uint32_t(basis.p))
                         : detail::apply_count_table(cur.data(), row, n, add_t, basis.q);
    fn(cur, uint64_t(n) - zeros);
  });
}

inline std::vector<Codeword> codewords_of_weight(const CyclicCode& code, uint64_t w,
                                                 uint64_t budget = kDefaultBudget) {
  std::vector<Codeword> out;
  for_each_codeword(code, budget, [&](const std::vector<uint8_t>& cur, uint64_t wt) {
    if (wt == w) out.push_back(cur);
  });
  return out;
}

/// All codewords attaining the minimum weight.
inline std::vector<Codeword> min_weight_codewords(const CyclicCode& code,
                                                  uint64_t budget = kDefaultBudget) {
  auto dist = weight_distribution(code, budget);
  return codewords_of_weight(code, min_distance(dist), budget);
}

/// MacWilliams transform: exact dual distribution from the primal one.
/// Works in 128-bit integers; refuses (CapExceeded) when the Krawtchouk
/// values would overflow.
inline WeightDistribution macwilliams_dual(const WeightDistribution& primal, uint64_t n,
                                           uint64_t q, uint64_t k) {
  check(n <= 200, Errc::CapExceeded, "MacWilliams transform limited to n <= 200");
  std::vector<std::vector<i128>> C(size_t(n) + 1, std::vector<i128>(size_t(n) + 1, 0));
  for (size_t i = 0; i <= size_t(n); ++i) {
    C[i][0] = 1;
    for (size_t j = 1; j <= i; ++j)
      C[i][j] = add_checked(C[i - 1][j - 1], C[i - 1][j]);
  }
  std::vector<i128> qm1pow(size_t(n) + 1, 1);
  for (size_t t = 1; t <= size_t(n); ++t) qm1pow[t] = mul_checked(qm1pow[t - 1], i128(q - 1));
  i128 qk = 1;
  for (uint64_t t = 0; t < k; ++t) qk = mul_checked(qk, i128(q));

  WeightDistribution dual;
  dual.source = WeightDistribution::Source::predicted;
  for (uint64_t j = 0; j <= n; ++j) {
    i128 acc = 0;
    for (auto& [i, Ai] : primal.counts) {
      if (!Ai) continue;
      i128 kr = 0;
      for (uint64_t s = 0; s <= j; ++s) {
        if (s > i || j - s > n - i) continue;
        i128 term = mul_checked(mul_checked(C[size_t(i)][size_t(s)],
                                            C[size_t(n - i)][size_t(j - s)]),
                                qm1pow[size_t(j - s)]);
        kr = add_checked(kr, (s & 1) ? -term : term);
      }
      acc = add_checked(acc, mul_checked(i128(Ai), kr));
    }
    i128 Aj = div_exact(acc, qk, Errc::Internal);
    check(Aj >= 0, Errc::Internal, "negative dual count");
    if (Aj > 0) dual.counts[j] = narrow_u64(Aj);
  }
  return dual;
}

/// Minimum distance of the dual code.  Enumerates the dual directly when its
/// dimension fits the budget; otherwise transforms the exhaustively
/// enumerated primal distribution (both routes are exact).
inline uint64_t dual_min_distance(const CyclicCode& code, uint64_t budget = kDefaultBudget,
                                  unsigned workers = 1) {
  CyclicCode dual = dual_of(code);
  if (upow128(code.q(), uint32_t(dual.k)) * code.n <= budget)
    return min_distance(weight_distribution(dual, budget, workers));
  auto primal = weight_distribution(code, budget, workers);
  return min_distance(macwilliams_dual(primal, code.n, code.q(), code.k));
}

/// Exhaustive low-weight search for the dual of a binary code: the smallest
/// number of generator-matrix columns with zero XOR.  Independent of the
/// enumeration/transform route above.
inline std::optional<uint64_t> dual_low_weight_search(const CyclicCode& code, uint64_t wmax) {
  check(code.q() == 2, Errc::OutOfRange, "low-weight dual search implemented for q = 2");
  check(code.k <= 63, Errc::CapExceeded, "dimension too large to pack columns");
  const size_t n = size_t(code.n);
  std::vector<uint64_t> col(n, 0);
  const auto& g = code.gen.coeffs();
  for (uint32_t j = 0; j < code.k; ++j)
    for (size_t t = 0; t < g.size(); ++t)
      if (g[t]) col[j + t] ^= uint64_t(1) << j;

  for (uint64_t w = 1; w <= wmax; ++w) {
    bool found = false;
    auto rec = [&](auto&& self, size_t start, size_t depth, uint64_t acc) -> void {
      if (found) return;
      if (depth == w) {
        if (acc == 0) found = true;
        return;
      }
      for (size_t i = start; i + (w - depth) <= n; ++i) self(self, i + 1, depth + 1, acc ^ col[i]);
    };
    rec(rec, 0, 0, 0);
    if (found) return w;
  }
  return std::nullopt;
}

}  // namespace bch
