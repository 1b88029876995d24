#include "esym/random.hpp"

#include <algorithm>

namespace esym {

FieldElement random_element(SplitMix64& rng, const Field& field) {
  if (!field.is_finite()) return field.element_from_integer(rng.between(-3, 3));
  return field.element_from_code(static_cast<std::uint32_t>(rng.uniform(field.size())));
}

FieldElement random_nonzero_element(SplitMix64& rng, const Field& field) {
  if (!field.is_finite()) {
    auto v = rng.between(1, 6);
    return field.element_from_integer(v <= 3 ? v : 3 - v);
  }
  return field.element_from_code(static_cast<std::uint32_t>(1 + rng.uniform(field.size() - 1)));
}

LinearForm random_linear_form(SplitMix64& rng, const Field& field, std::size_t nvars) {
  std::vector<Scalar> coeffs;
  coeffs.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) coeffs.push_back(random_element(rng, field).value());
  return LinearForm(field, std::move(coeffs));
}

namespace {

void collect(std::vector<std::uint32_t>& exps, std::size_t index, unsigned remaining, std::vector<Monomial>& out) {
  if (index + 1 == exps.size()) {
    exps[index] = remaining;
    out.emplace_back(exps);
    exps[index] = 0;
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    exps[index] = e;
    collect(exps, index + 1, remaining - e, out);
  }
  exps[index] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::vector<std::uint32_t> exps(nvars, 0);
  collect(exps, 0, degree, out);
  return out;
}

Polynomial random_homogeneous(SplitMix64& rng, const Field& field, std::size_t nvars, unsigned degree) {
  Polynomial f(field, nvars);
  for (const auto& m : monomials_of_degree(nvars, degree)) f.add_term(m, random_element(rng, field).value());
  return f;
}

}  // namespace esym
