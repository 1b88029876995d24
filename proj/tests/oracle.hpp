#pragma once

// Reference computations for the test suite. These avoid the library's
// arithmetic paths: finite-field products are schoolbook polynomial products
// modulo the modulus, symmetric polynomials are subset sums, and set
// partitions come from restricted growth strings.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "esym/field.hpp"
#include "esym/poly.hpp"

namespace oracle {

/// GF(p^k) on digit codes, with explicit modulus (constant first, monic).
struct GF {
  std::uint32_t p = 2;
  std::uint32_t k = 1;
  std::vector<std::uint32_t> modulus;

  static GF of(const esym::Field& f) {
    GF g;
    g.p = f.characteristic();
    g.k = f.degree();
    if (f.kind() == esym::FieldKind::extension) g.modulus = f.modulus();
    return g;
  }

  std::uint64_t size() const {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) q *= p;
    return q;
  }

  std::vector<std::uint32_t> digits(std::uint32_t c) const {
    std::vector<std::uint32_t> d(k);
    for (auto& x : d) {
      x = c % p;
      c /= p;
    }
    return d;
  }

  std::uint32_t code(const std::vector<std::uint32_t>& d) const {
    std::uint32_t c = 0;
    for (std::size_t i = d.size(); i-- > 0;) c = c * p + d[i];
    return c;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto x = digits(a), y = digits(b);
    for (std::uint32_t i = 0; i < k; ++i) x[i] = (x[i] + y[i]) % p;
    return code(x);
  }

  std::uint32_t neg(std::uint32_t a) const {
    auto x = digits(a);
    for (auto& v : x) v = (p - v) % p;
    return code(x);
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    auto x = digits(a), y = digits(b);
    std::vector<std::uint64_t> r(2 * k, 0);
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t j = 0; j < k; ++j) r[i + j] = (r[i + j] + std::uint64_t{x[i]} * y[j]) % p;
    for (std::uint32_t deg = 2 * k - 1; deg >= k && k > 1; --deg) {
      const std::uint64_t c = r[deg];
      if (!c) continue;
      for (std::uint32_t j = 0; j <= k; ++j) r[deg - k + j] = (r[deg - k + j] + (p - c) * modulus[j]) % p;
    }
    std::vector<std::uint32_t> out(k);
    for (std::uint32_t i = 0; i < k; ++i) out[i] = static_cast<std::uint32_t>(r[i] % p);
    return code(out);
  }
};

/// e_d of the values, by explicit subset enumeration.
inline std::uint32_t esp_value(const GF& F, const std::vector<std::uint32_t>& xs, unsigned d) {
  const std::size_t n = xs.size();
  if (d > n) return 0;
  std::uint32_t total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<unsigned>(__builtin_popcountll(mask)) != d) continue;
    std::uint32_t prod = 1;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) prod = F.mul(prod, xs[i]);
    total = F.add(total, prod);
  }
  return total;
}

/// Whether e_d and all its first partials vanish at xs; the i-th partial
/// is e_{d-1} with coordinate i deleted.
inline bool esp_order2_zero(const GF& F, const std::vector<std::uint32_t>& xs, unsigned d) {
  if (d == 0) return false;
  if (esp_value(F, xs, d) != 0) return false;
  const std::size_t n = xs.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t> yi;
    for (std::size_t a = 0; a < n; ++a)
      if (a != i) yi.push_back(xs[a]);
    if (esp_value(F, yi, d - 1) != 0) return false;
  }
  return true;
}

/// Coefficient of y^d in prod (1 + y v_i), expanding the product mod y^(d+1).
inline esym::Polynomial esp_by_generating_function(const esym::Field& field, const std::vector<esym::Polynomial>& vs,
                                                   unsigned d, std::size_t nvars) {
  // coefficient list in y, lowest first
  std::vector<esym::Polynomial> acc{esym::Polynomial::constant(field, 1, nvars)};
  for (const auto& v : vs) {
    std::vector<esym::Polynomial> next(std::min<std::size_t>(acc.size() + 1, d + 1), esym::Polynomial(field, nvars));
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j] += acc[j];
      if (j + 1 <= d) next[j + 1] += acc[j] * v.widened(nvars);
    }
    acc = std::move(next);
  }
  return d < acc.size() ? acc[d] : esym::Polynomial(field, nvars);
}

/// e_d of polynomials by subset enumeration (generating function beyond 16).
inline esym::Polynomial esp_of_polys(const esym::Field& field, const std::vector<esym::Polynomial>& vs, unsigned d,
                                     std::size_t nvars) {
  esym::Polynomial total(field, nvars);
  const std::size_t m = vs.size();
  if (d > m) return total;
  if (m > 16) return esp_by_generating_function(field, vs, d, nvars);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (static_cast<unsigned>(__builtin_popcountll(mask)) != d) continue;
    esym::Polynomial prod = esym::Polynomial::constant(field, 1, nvars);
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) prod = prod * vs[i].widened(nvars);
    total += prod;
  }
  return total;
}

inline esym::Polynomial esp_of_linear(const esym::Field& field, const std::vector<esym::LinearForm>& forms, unsigned d,
                                      std::size_t nvars) {
  std::vector<esym::Polynomial> vs;
  for (const auto& l : forms) vs.push_back(l.to_polynomial().widened(nvars));
  return esp_of_polys(field, vs, d, nvars);
}

/// Set partitions of [n] into blocks of size b via restricted growth
/// strings; blocks are returned as sorted index sets.
inline void rgs_partitions(std::size_t n, std::size_t b,
                           const std::function<void(const std::vector<std::vector<std::size_t>>&)>& visit) {
  if (b == 0 || n % b != 0) return;
  std::vector<std::size_t> a(n, 0);
  std::vector<std::size_t> sizes;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      std::vector<std::vector<std::size_t>> blocks(sizes.size());
      for (std::size_t j = 0; j < n; ++j) blocks[a[j]].push_back(j);
      visit(blocks);
      return;
    }
    for (std::size_t c = 0; c < sizes.size(); ++c) {
      if (sizes[c] == b) continue;
      a[i] = c;
      ++sizes[c];
      rec(i + 1);
      --sizes[c];
    }
    if (sizes.size() < n / b) {
      a[i] = sizes.size();
      sizes.push_back(1);
      rec(i + 1);
      sizes.pop_back();
    }
  };
  rec(0);
}

/// Partition sum over multilinear coefficients, computed from a term scan.
struct PartitionSumResult {
  std::uint32_t value = 0;
  std::uint64_t count = 0;
};

inline PartitionSumResult partition_sum(const esym::Polynomial& f, std::uint32_t p) {
  std::map<std::vector<std::size_t>, std::uint32_t> coeff;
  for (const auto& [m, c] : f.terms()) {
    bool multilinear = true;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m.length(); ++i) {
      if (m.exponent(i) > 1) multilinear = false;
      if (m.exponent(i) == 1) idx.push_back(i);
    }
    if (multilinear && idx.size() == p + 1) coeff[idx] = f.field().code(c) % p;
  }
  PartitionSumResult r;
  rgs_partitions(f.nvars(), p + 1, [&](const std::vector<std::vector<std::size_t>>& blocks) {
    ++r.count;
    std::uint64_t prod = 1;
    for (const auto& blk : blocks) {
      auto it = coeff.find(blk);
      prod = it == coeff.end() ? 0 : prod * it->second % p;
    }
    r.value = static_cast<std::uint32_t>((r.value + prod) % p);
  });
  return r;
}

/// Multilinear monomial supports with coefficient 1 of e_d^n, as expected.
inline std::set<std::vector<std::size_t>> esp_supports(std::size_t n, unsigned d) {
  std::set<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<unsigned>(__builtin_popcountll(mask)) != d) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    out.insert(s);
  }
  return out;
}

/// Whether f is exactly e_d^n: every term multilinear of degree d with
/// coefficient 1, and every d-subset present.
inline bool is_esp(const esym::Polynomial& f, std::size_t n, unsigned d) {
  auto want = esp_supports(n, d);
  if (f.num_terms() != want.size()) return false;
  for (const auto& [m, c] : f.terms()) {
    if (!f.field().is_one(c) || m.degree() != d || !m.is_multilinear()) return false;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < m.length(); ++i)
      if (m.exponent(i)) s.push_back(i);
    if (!want.count(s)) return false;
  }
  return true;
}

}  // namespace oracle
