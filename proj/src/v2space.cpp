#include "esym/v2space.hpp"

#include <cmath>
#include <stdexcept>

#include "esym/random.hpp"

namespace esym {

namespace {

bool vanishes_with_partials(const Polynomial& f, const std::vector<Polynomial>& partials,
                            std::span<const FieldElement> point) {
  if (!evaluate(f, point).is_zero()) return false;
  for (const auto& g : partials)
    if (!evaluate(g, point).is_zero()) return false;
  return true;
}

std::vector<Polynomial> all_partials(const Polynomial& f) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < f.nvars(); ++i) out.push_back(partial_derivative(f, i));
  return out;
}

// Order-2 test for e_d on raw codes; e holds scratch space of size d+1.
bool esp_order2_codes(const Field& F, unsigned d, const std::uint32_t* a, std::size_t n,
                      std::vector<std::uint32_t>& e) {
  if (d == 0) return false;
  e.assign(d + 1, 0);
  e[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned top = static_cast<unsigned>(std::min<std::size_t>(d, i + 1));
    for (unsigned k = top; k >= 1; --k) e[k] = F.add_code(e[k], F.mul_code(a[i], e[k - 1]));
  }
  if (e[d] != 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t f = 1;
    for (unsigned j = 1; j < d; ++j) f = F.sub_code(e[j], F.mul_code(a[i], f));
    if (f != 0) return false;
  }
  return true;
}

}  // namespace

bool is_order2_zero(const Polynomial& f, std::span<const FieldElement> point) {
  if (point.size() != f.nvars())
    throw std::invalid_argument("is_order2_zero: point has " + std::to_string(point.size()) + " coordinates for " +
                                std::to_string(f.nvars()) + " variables");
  return vanishes_with_partials(f, all_partials(f), point);
}

bool is_order2_zero_esp(unsigned d, std::span<const FieldElement> point) {
  if (point.empty()) return d > 0;
  const Field& F = point.front().field();
  for (const auto& a : point)
    if (a.field() != F) throw FieldError("is_order2_zero_esp: mixed fields in point");
  if (F.is_finite()) {
    std::vector<std::uint32_t> codes, scratch;
    for (const auto& a : point) codes.push_back(a.code());
    return esp_order2_codes(F, d, codes.data(), codes.size(), scratch);
  }
  if (d == 0) return false;
  std::vector<Scalar> e(d + 1, F.zero());
  e[0] = F.one();
  for (std::size_t i = 0; i < point.size(); ++i) {
    const unsigned top = static_cast<unsigned>(std::min<std::size_t>(d, i + 1));
    for (unsigned k = top; k >= 1; --k) e[k] = F.add(e[k], F.mul(point[i].value(), e[k - 1]));
  }
  if (!F.is_zero(e[d])) return false;
  for (const auto& a : point) {
    Scalar f = F.one();
    for (unsigned j = 1; j < d; ++j) f = F.sub(e[j], F.mul(a.value(), f));
    if (!F.is_zero(f)) return false;
  }
  return true;
}

bool in_s_k(std::span<const FieldElement> point, std::size_t k) {
  std::vector<const FieldElement*> distinct;
  for (const auto& a : point) {
    bool seen = false;
    for (const auto* b : distinct)
      if (*b == a) {
        seen = true;
        break;
      }
    if (!seen) {
      distinct.push_back(&a);
      if (distinct.size() > k) return false;
    }
  }
  return true;
}

std::size_t support_size(std::span<const FieldElement> point) {
  std::size_t s = 0;
  for (const auto& a : point) s += a.is_zero() ? 0 : 1;
  return s;
}

V2PointSet enumerate_v2(unsigned n, unsigned d, const Field& field, std::uint64_t cap) {
  if (!field.is_finite()) throw std::invalid_argument("enumerate_v2 requires a finite field");
  if (d > n) throw std::invalid_argument("enumerate_v2: d exceeds n");
  const std::uint64_t q = field.size();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (total > cap / q) throw std::invalid_argument("enumerate_v2: |F|^n exceeds the cap of " + std::to_string(cap));
    total *= q;
  }
  V2PointSet out{field, n, d, {}, 0, total};
  std::vector<std::uint32_t> a(n, 0), scratch;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (esp_order2_codes(field, d, a.data(), n, scratch)) {
      Point pt;
      pt.reserve(n);
      for (auto c : a) pt.push_back(field.element_from_code(c));
      out.points.push_back(std::move(pt));
    }
    for (std::size_t i = n; i-- > 0;) {
      if (++a[i] < q) break;
      a[i] = 0;
    }
  }
  out.count = out.points.size();
  return out;
}

DimensionEstimate dimension_estimate(std::span<const std::pair<unsigned, std::uint64_t>> counts, std::uint32_t p) {
  DimensionEstimate est;
  std::vector<std::pair<unsigned, std::uint64_t>> used;
  for (const auto& c : counts)
    if (c.second > 0) used.push_back(c);
  if (used.empty()) {
    est.empty = true;
    return est;
  }
  if (used.size() < 2) throw std::invalid_argument("dimension_estimate needs at least two nonzero counts");

  bool integral = true;
  std::vector<long> logs;
  for (const auto& [k, c] : used) {
    long e = 0;
    std::uint64_t v = c;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    if (v != 1) integral = false;
    logs.push_back(e);
  }
  const auto m = static_cast<long>(used.size());
  if (integral) {
    Rational sk = 0, sy = 0;
    for (long i = 0; i < m; ++i) {
      sk += used[i].first;
      sy += logs[i];
    }
    const Rational mk = sk / m, my = sy / m;
    Rational num = 0, den = 0;
    for (long i = 0; i < m; ++i) {
      const Rational dk = Rational(used[i].first) - mk;
      num += dk * (Rational(logs[i]) - my);
      den += dk * dk;
    }
    if (den == 0) throw std::invalid_argument("dimension_estimate needs two distinct extension degrees");
    Rational slope = num / den;
    slope.canonicalize();
    est.exact = slope;
    est.slope = slope.get_d();
  } else {
    double sk = 0, sy = 0;
    std::vector<double> y;
    for (const auto& [k, c] : used) {
      y.push_back(std::log(static_cast<double>(c)) / std::log(static_cast<double>(p)));
      sk += k;
      sy += y.back();
    }
    const double mk = sk / m, my = sy / m;
    double num = 0, den = 0;
    for (long i = 0; i < m; ++i) {
      const double dk = used[i].first - mk;
      num += dk * (y[i] - my);
      den += dk * dk;
    }
    if (den == 0) throw std::invalid_argument("dimension_estimate needs two distinct extension degrees");
    est.slope = num / den;
  }
  est.rounded = std::lround(est.slope);
  return est;
}

bool WitnessFamily::checks_vanish() const {
  for (const auto& c : checks)
    if (c.residue != 0) return false;
  return true;
}

Point WitnessFamily::alpha(std::span<const FieldElement> beta) const {
  if (beta.size() != parameter_arity)
    throw std::invalid_argument("witness map expects " + std::to_string(parameter_arity) + " parameters");
  Point a;
  a.reserve(n);
  for (unsigned i = 0; i < n; ++i) a.push_back(i + 2 <= d ? beta[i] : beta[d - 2]);
  return a;
}

WitnessFamily witness_family(std::uint32_t p, unsigned d) {
  if (!is_prime(p)) throw std::invalid_argument("witness_family: p must be prime");
  if (d < 2) throw std::invalid_argument("witness_family: d >= 2 required (V_2(e_1^n) is empty)");
  for (std::uint64_t power = 1;; power *= p) {
    if (power + 1 < d) continue;
    WitnessFamily w{p, d, static_cast<unsigned>(power + d - 1), d - 1, {}};
    const std::uint64_t a2 = power + 1, a1 = power;
    for (std::uint64_t i = 2; i <= std::min<std::uint64_t>(d, a2); ++i)
      w.checks.push_back({a2, i, lucas_binomial(a2, i, p)});
    for (std::uint64_t i = 1; i <= std::min<std::uint64_t>(d - 1, a1); ++i)
      w.checks.push_back({a1, i, lucas_binomial(a1, i, p)});
    if (w.checks_vanish()) return w;
  }
}

ContainmentResult product_zero_containment(std::span<const std::pair<Polynomial, Polynomial>> factors,
                                           std::uint64_t trials, std::uint64_t seed) {
  if (factors.empty()) throw std::invalid_argument("product_zero_containment: no factors");
  const Field F = factors.front().first.field();
  std::size_t n = 0;
  for (const auto& [f, g] : factors) {
    if (!f.is_constant_free() || !g.is_constant_free())
      throw std::invalid_argument("product_zero_containment: factor " +
                                  (f.is_constant_free() ? g : f).to_string() + " has a constant term");
    n = std::max({n, f.nvars(), g.nvars()});
  }
  std::vector<Polynomial> parts;
  Polynomial h(F, n);
  for (const auto& [f, g] : factors) {
    parts.push_back(f.widened(n));
    parts.push_back(g.widened(n));
    h += f.widened(n) * g.widened(n);
  }
  h = h.widened(n);
  const auto partials = all_partials(h);

  ContainmentResult res;
  auto check = [&](const Point& pt) {
    ++res.points_checked;
    for (const auto& f : parts)
      if (!evaluate(f, pt).is_zero()) return;
    ++res.common_zeros;
    if (!vanishes_with_partials(h, partials, pt)) res.holds = false;
  };

  std::uint64_t total = 0;
  if (F.is_finite()) {
    total = 1;
    for (std::size_t i = 0; i < n && total <= (1ull << 20); ++i) total *= F.size();
  }
  if (F.is_finite() && total <= (1ull << 20)) {
    res.exhaustive = true;
    std::vector<std::uint32_t> a(n, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Point pt;
      for (auto c : a) pt.push_back(F.element_from_code(c));
      check(pt);
      for (std::size_t i = n; i-- > 0;) {
        if (++a[i] < F.size()) break;
        a[i] = 0;
      }
    }
  } else {
    SplitMix64 rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
      Point pt;
      for (std::size_t i = 0; i < n; ++i) pt.push_back(random_element(rng, F));
      check(pt);
    }
  }
  return res;
}

}  // namespace esym
