#include "esym/symfunc.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace esym {

Polynomial gen_esp(unsigned n, unsigned d, const Field& field) {
  if (d > n) throw std::invalid_argument("gen_esp: degree " + std::to_string(d) + " exceeds n = " + std::to_string(n));
  Polynomial result(field, n);
  std::vector<unsigned> idx(d);
  std::iota(idx.begin(), idx.end(), 0u);
  const Scalar one = field.one();
  while (true) {
    std::vector<std::uint32_t> exps(n, 0);
    for (auto i : idx) exps[i] = 1;
    result.add_term(Monomial(std::move(exps)), one);
    int pos = static_cast<int>(d) - 1;
    while (pos >= 0 && idx[pos] == n - d + static_cast<unsigned>(pos)) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (unsigned j = static_cast<unsigned>(pos) + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return result;
}

Polynomial gen_power_sum(unsigned n, unsigned d, const Field& field) {
  if (n == 0 || d == 0) throw std::invalid_argument("gen_power_sum: n and d must be positive");
  Polynomial result(field, n);
  for (unsigned i = 0; i < n; ++i) result.add_term(Monomial::variable(i, d), field.one());
  return result;
}

std::vector<Polynomial> esp_prefix(const Field& field, std::span<const Polynomial> values, unsigned d,
                                   std::size_t nvars) {
  for (const auto& v : values) nvars = std::max(nvars, v.nvars());
  std::vector<Polynomial> e(d + 1, Polynomial(field, nvars));
  e[0] = Polynomial::constant(field.element(field.one()), nvars);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const unsigned top = static_cast<unsigned>(std::min<std::size_t>(d, i + 1));
    for (unsigned k = top; k >= 1; --k) e[k] += values[i] * e[k - 1];
  }
  return e;
}

Polynomial esp_of(const Field& field, std::span<const Polynomial> values, unsigned d, std::size_t nvars) {
  return esp_prefix(field, values, d, nvars)[d];
}

namespace {

std::vector<Polynomial> as_polynomials(std::span<const LinearForm> forms) {
  std::vector<Polynomial> out;
  out.reserve(forms.size());
  for (const auto& l : forms) out.push_back(l.to_polynomial());
  return out;
}

}  // namespace

Polynomial esp_of_forms(const Field& field, std::span<const LinearForm> forms, unsigned d) {
  return esp_of(field, as_polynomials(forms), d);
}

std::vector<Polynomial> esp_prefix_forms(const Field& field, std::span<const LinearForm> forms, unsigned d) {
  return esp_prefix(field, as_polynomials(forms), d);
}

std::string_view identity_name(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::generating_function: return "generating_function";
    case IdentityKind::split: return "split";
    case IdentityKind::partial_derivative: return "partial_derivative";
    case IdentityKind::euler: return "euler";
    case IdentityKind::newton: return "newton";
  }
  return "unknown";
}

std::optional<IdentityKind> parse_identity_kind(std::string_view name) {
  for (auto k : all_identity_kinds)
    if (identity_name(k) == name) return k;
  return std::nullopt;
}

namespace {

Polynomial shifted(const Polynomial& f, std::size_t offset, std::size_t nvars) {
  Polynomial r(f.field(), nvars);
  for (const auto& [m, c] : f.terms()) {
    std::vector<std::uint32_t> e(offset, 0);
    e.insert(e.end(), m.exponents().begin(), m.exponents().end());
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

Polynomial generating_function(unsigned n, const Field& F) {
  const std::size_t nv = n + 1;
  const Polynomial y = Polynomial::variable(F, n, nv);
  Polynomial lhs = Polynomial::constant(F, 1, nv);
  for (unsigned i = 0; i < n; ++i) lhs *= Polynomial::variable(F, i, nv) + y;
  Polynomial rhs(F, nv);
  for (unsigned k = 0; k <= n; ++k) rhs += y.pow(n - k) * gen_esp(n, k, F);
  return lhs - rhs;
}

Polynomial split(unsigned n, unsigned m, unsigned d, const Field& F) {
  const std::size_t nv = n + m;
  Polynomial lhs = gen_esp(n + m, d, F);
  Polynomial rhs(F, nv);
  for (unsigned k = 0; k <= d; ++k) {
    if (k > n || d - k > m) continue;
    rhs += gen_esp(n, k, F).widened(nv) * shifted(gen_esp(m, d - k, F), n, nv);
  }
  return lhs - rhs;
}

Polynomial partial(unsigned n, unsigned d, const Field& F) {
  const Polynomial e = gen_esp(n, d, F);
  const Polynomial e_prev = d >= 1 ? gen_esp(n, d - 1, F) : Polynomial(F, n);
  for (unsigned i = 0; i < n; ++i) {
    const Polynomial lhs = partial_derivative(e, i);
    const Polynomial xi = Polynomial::variable(F, i, n);
    const Polynomial middle = e_prev - xi * partial_derivative(e_prev, i);
    Polynomial rhs(F, n);
    if (d >= 1 && d - 1 <= n - 1) {
      std::vector<Polynomial> others;
      for (unsigned j = 0; j < n; ++j)
        if (j != i) others.push_back(Polynomial::variable(F, j, n));
      rhs = substitute(gen_esp(n - 1, d - 1, F).widened(n - 1), others).widened(n);
    }
    if (Polynomial diff = lhs - middle; !diff.is_zero()) return diff;
    if (Polynomial diff = lhs - rhs; !diff.is_zero()) return diff;
  }
  return Polynomial(F, n);
}

Polynomial euler(unsigned n, unsigned d, const Field& F) {
  const Polynomial e = gen_esp(n, d, F);
  Polynomial lhs(F, n);
  for (unsigned i = 0; i < n; ++i) lhs += Polynomial::variable(F, i, n) * partial_derivative(e, i);
  return lhs - e * F.element_from_integer(d);
}

Polynomial newton(unsigned n, unsigned d, const Field& F) {
  Polynomial lhs = gen_esp(n, d, F) * F.element_from_integer(d);
  Polynomial rhs(F, n);
  for (unsigned k = 1; k <= d; ++k) {
    Polynomial term = gen_power_sum(n, k, F) * gen_esp(n, d - k, F);
    if (k % 2 == 0) term = -term;
    rhs += term;
  }
  return lhs - rhs;
}

}  // namespace

IdentityReport verify_identity(IdentityKind kind, const IdentityParams& params, const Field& field) {
  const unsigned n = params.n, m = params.m, d = params.d;
  const unsigned vars = n + (kind == IdentityKind::split ? m : kind == IdentityKind::generating_function ? 1 : 0);
  if (n == 0) throw std::invalid_argument("identity requires n >= 1");
  if (vars > identity_variable_cap)
    throw std::invalid_argument("identity parameters exceed the cap of " + std::to_string(identity_variable_cap) +
                                " variables");
  const unsigned dmax = kind == IdentityKind::split ? n + m : n;
  if (kind != IdentityKind::generating_function && d > dmax)
    throw std::invalid_argument("identity degree " + std::to_string(d) + " exceeds " + std::to_string(dmax));

  IdentityReport report{kind, params, false, Polynomial(field)};
  switch (kind) {
    case IdentityKind::generating_function: report.discrepancy = generating_function(n, field); break;
    case IdentityKind::split: report.discrepancy = split(n, m, d, field); break;
    case IdentityKind::partial_derivative: report.discrepancy = partial(n, d, field); break;
    case IdentityKind::euler: report.discrepancy = euler(n, d, field); break;
    case IdentityKind::newton: report.discrepancy = newton(n, d, field); break;
  }
  report.holds = report.discrepancy.is_zero();
  return report;
}

}  // namespace esym
