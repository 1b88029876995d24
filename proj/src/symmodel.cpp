#include "esym/symmodel.hpp"

#include <algorithm>
#include <stdexcept>

#include "esym/symfunc.hpp"

namespace esym {

namespace {

Field larger_of(const Field& a, const Field& b) {
  if (a == b || embeds(b, a)) return a;
  if (embeds(a, b)) return b;
  throw FieldError("no common field for " + a.spec() + " and " + b.spec());
}

LinearForm lifted(const LinearForm& l, const Field& to, std::size_t nvars) {
  return lift(l, to).widened(nvars);
}

void require_characteristic_two(const Field& f, const char* what) {
  if (f.characteristic() != 2)
    throw std::invalid_argument(std::string(what) + " requires characteristic 2, got " + f.spec());
}

}  // namespace

Polynomial SymRepresentation::realized() const { return esp_of_forms(field, forms, degree).widened(nvars); }

SymRepresentation make_representation(const Field& field, unsigned degree, std::vector<LinearForm> forms,
                                      std::size_t nvars) {
  for (const auto& l : forms) nvars = std::max(nvars, l.nvars());
  for (auto& l : forms) l = lifted(l, field, nvars);
  SymRepresentation rep{field, field, degree, nvars, std::move(forms), Polynomial(field, nvars)};
  rep.target = rep.realized();
  return rep;
}

SymRepresentation empty_representation(const Field& field, unsigned degree, std::size_t nvars) {
  return make_representation(field, degree, {}, nvars);
}

bool verify_representation(const SymRepresentation& rep, const Polynomial& target) {
  Polynomial t = target;
  if (t.field() != rep.field) {
    if (!embeds(t.field(), rep.field)) return false;
    t = lift(t, rep.field);
  }
  return rep.realized() == t;
}

SymRepresentation append_linear_power(const SymRepresentation& rep, const LinearForm& q) {
  if (rep.degree == 0) throw std::invalid_argument("append_linear_power: degree must be positive");
  if (!rep.field.is_finite())
    throw std::invalid_argument("append_linear_power: roots of z^d + 1 need positive characteristic");
  const RootsOfMinusOne roots = roots_of_z_pow_d_plus_one(rep.field, rep.degree);
  const Field host = larger_of(roots.host, q.field());

  SymRepresentation out;
  out.field = host;
  out.base_field = rep.base_field;
  out.degree = rep.degree;
  out.nvars = std::max(rep.nvars, q.nvars());
  for (const auto& l : rep.forms) out.forms.push_back(lifted(l, host, out.nvars));
  const LinearForm qh = lifted(q, host, out.nvars);
  const Embedding into_host(roots.host, host);
  for (const auto& w : roots.roots) out.forms.push_back(-into_host(w) * qh);
  out.target = lift(rep.target, host).widened(out.nvars) + qh.to_polynomial().pow(rep.degree);
  return out;
}

SymRepresentation quadratic_gadget(const LinearForm& u_in, const LinearForm& v_in) {
  const Field base = larger_of(u_in.field(), v_in.field());
  require_characteristic_two(base, "quadratic_gadget");
  const RootsOfMinusOne roots = roots_of_z_pow_d_plus_one(base, 3);
  const Field& host = roots.host;
  FieldElement w;
  bool found = false;
  for (const auto& r : roots.roots) {
    if (r.is_one()) continue;
    if (!found || r.code() < w.code()) w = r;
    found = true;
  }
  if (!found) throw std::logic_error("quadratic_gadget: no primitive cube root of unity");
  const std::size_t n = std::max(u_in.nvars(), v_in.nvars());
  const LinearForm u = lifted(u_in, host, n), v = lifted(v_in, host, n);
  const FieldElement w2 = w * w;

  SymRepresentation rep;
  rep.field = host;
  rep.base_field = base;
  rep.degree = 2;
  rep.nvars = n;
  rep.forms = {w * u + w2 * v, w2 * u + w * v, u + v};
  rep.target = u.to_polynomial().widened(n) * v.to_polynomial();
  return rep;
}

SymRepresentation quadratic_to_sym(const Polynomial& f) {
  require_characteristic_two(f.field(), "quadratic_to_sym");
  if (!f.is_homogeneous(2)) throw std::invalid_argument("quadratic_to_sym: input is not a homogeneous quadratic");
  const Field host = roots_of_z_pow_d_plus_one(f.field(), 3).host;
  const std::size_t n = f.nvars();

  SymRepresentation rep;
  rep.field = host;
  rep.base_field = f.field();
  rep.degree = 2;
  rep.nvars = n;
  rep.target = lift(f, host);
  for (const auto& [m, c] : f.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m.length(); ++i)
      for (std::uint32_t e = 0; e < m.exponent(i); ++e) idx.push_back(i);
    const LinearForm u = f.field().element(c) * LinearForm::variable(f.field(), idx[0], n);
    const LinearForm v = LinearForm::variable(f.field(), idx[1], n);
    auto gadget = quadratic_gadget(u, v);
    for (auto& l : gadget.forms) rep.forms.push_back(lifted(l, host, n));
  }
  return rep;
}

ReduciblePolynomial make_reducible(const Polynomial& a, const Polynomial& b) {
  if (b.degree() < a.degree()) return {b, a, a * b};
  return {a, b, a * b};
}

Polynomial NewtonDecomposition::assembled() const {
  const Field& F = frobenius_term.field();
  Polynomial sum(F, frobenius_term.nvars());
  for (const auto& g : reducibles) sum += g.product;
  sum += frobenius_term.to_polynomial().pow(characteristic + 1);
  Polynomial powers(F, frobenius_term.nvars());
  for (const auto& l : linear_power_terms) powers += l.to_polynomial().pow(characteristic + 1);
  return sum + powers * linear_power_sign;
}

NewtonDecomposition newton_decompose(const SymRepresentation& rep) {
  const Field& F = rep.field;
  const unsigned p = F.characteristic();
  if (p == 0) throw std::invalid_argument("newton_decompose requires positive characteristic");
  if (rep.degree != p + 1)
    throw std::invalid_argument("newton_decompose: degree " + std::to_string(rep.degree) + " is not p + 1 = " +
                                std::to_string(p + 1));
  const std::size_t n = rep.nvars;
  NewtonDecomposition out;
  out.characteristic = p;
  out.linear_power_sign = -F.element(F.one());

  std::vector<Polynomial> forms;
  for (const auto& l : rep.forms) forms.push_back(l.to_polynomial().widened(n));
  const auto e = esp_prefix(F, forms, p, n);

  std::vector<Polynomial> powers = forms;
  for (unsigned i = 1; i + 1 <= p; ++i) {
    Polynomial power_sum(F, n);
    for (const auto& q : powers) power_sum += q;
    Polynomial e_factor = (i % 2 == 1) ? e[p + 1 - i] : -e[p + 1 - i];
    out.reducibles.push_back(make_reducible(e_factor, power_sum));
    for (std::size_t j = 0; j < powers.size(); ++j) powers[j] = powers[j] * forms[j];
  }

  LinearForm e1(F, n);
  for (const auto& l : rep.forms) e1 = e1 + l.widened(n);
  out.frobenius_term = e1;
  for (const auto& l : rep.forms) out.linear_power_terms.push_back(l.widened(n));
  return out;
}

SymRepresentation reducible_to_sym(const ReduciblePolynomial& g) {
  require_characteristic_two(g.product.field(), "reducible_to_sym");
  const Field& base = g.product.field();
  const std::size_t n = std::max({g.product.nvars(), g.factor_low.nvars(), g.factor_high.nvars()});
  if (g.factor_low.is_zero() || g.factor_high.is_zero()) {
    if (!g.product.is_zero()) throw std::invalid_argument("reducible_to_sym: product does not match factors");
    auto rep = empty_representation(roots_of_z_pow_d_plus_one(base, 3).host, 3, n);
    rep.base_field = base;
    return rep;
  }
  const Polynomial* quad = &g.factor_high;
  const Polynomial* lin = &g.factor_low;
  if (quad->degree() == 1) std::swap(quad, lin);
  if (!quad->is_homogeneous(2) || !lin->is_homogeneous(1))
    throw std::invalid_argument("reducible_to_sym: factor degrees must be (2, 1)");
  if (*quad * *lin != g.product) throw std::invalid_argument("reducible_to_sym: product does not match factors");

  SymRepresentation gadget = quadratic_to_sym(quad->widened(n));
  std::vector<LinearForm> forms = gadget.forms;
  forms.push_back(lifted(LinearForm::from_polynomial(lin->widened(n)), gadget.field, n));
  SymRepresentation rep = make_representation(gadget.field, 3, forms, n);
  rep.base_field = base;

  std::vector<LinearForm> cancel;
  LinearForm e1(rep.field, n);
  for (const auto& l : rep.forms) e1 = e1 + l;
  cancel.push_back(e1);
  cancel.insert(cancel.end(), rep.forms.begin(), rep.forms.end());
  for (const auto& q : cancel)
    if (!q.is_zero()) rep = append_linear_power(rep, q);

  const Polynomial wanted = lift(g.product, rep.field).widened(n);
  if (rep.target != wanted) throw std::logic_error("reducible_to_sym: cancellation left a residue");
  return rep;
}

}  // namespace esym
