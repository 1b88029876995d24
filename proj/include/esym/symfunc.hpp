#pragma once

// Elementary symmetric polynomials e_d^n, power sums p_d^n, and exact
// verification of their classical identities.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "esym/field.hpp"
#include "esym/poly.hpp"

namespace esym {

/// e_d^n(x1..xn). Throws std::invalid_argument unless d <= n.
Polynomial gen_esp(unsigned n, unsigned d, const Field& field);

/// p_d^n(x1..xn) = x1^d + ... + xn^d.
Polynomial gen_power_sum(unsigned n, unsigned d, const Field& field);

/// [e_0, e_1, ..., e_d] evaluated at the given polynomials, by the
/// recurrence E_k <- E_k + v * E_{k-1}.
std::vector<Polynomial> esp_prefix(const Field& field, std::span<const Polynomial> values, unsigned d,
                                   std::size_t nvars = 0);

/// e_d(values).
Polynomial esp_of(const Field& field, std::span<const Polynomial> values, unsigned d, std::size_t nvars = 0);

/// e_d(L_1, ..., L_m) for linear forms.
Polynomial esp_of_forms(const Field& field, std::span<const LinearForm> forms, unsigned d);
std::vector<Polynomial> esp_prefix_forms(const Field& field, std::span<const LinearForm> forms, unsigned d);

enum class IdentityKind { generating_function, split, partial_derivative, euler, newton };

inline constexpr IdentityKind all_identity_kinds[] = {IdentityKind::generating_function, IdentityKind::split,
                                                      IdentityKind::partial_derivative, IdentityKind::euler,
                                                      IdentityKind::newton};

std::string_view identity_name(IdentityKind kind);
std::optional<IdentityKind> parse_identity_kind(std::string_view name);

struct IdentityParams {
  unsigned n = 1;
  unsigned m = 0;  // size of the b-block, split only
  unsigned d = 0;  // unused by generating_function
};

struct IdentityReport {
  IdentityKind kind;
  IdentityParams params;
  bool holds = false;
  Polynomial discrepancy;
};

inline constexpr unsigned identity_variable_cap = 16;

/// Builds both sides of the identity symbolically and returns their
/// difference. The generating function uses x_{n+1} for y; the split
/// identity uses x_{n+1}..x_{n+m} for the b-block.
IdentityReport verify_identity(IdentityKind kind, const IdentityParams& params, const Field& field);

}  // namespace esym
