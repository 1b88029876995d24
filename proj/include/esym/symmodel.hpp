#pragma once

// Representations f = e_d^m(L_1, ..., L_m) in the symmetric model, together
// with the constructions that build them over positive characteristic.

#include <vector>

#include "esym/field.hpp"
#include "esym/poly.hpp"

namespace esym {

struct SymRepresentation {
  /// Field of the form coefficients (possibly an extension of base_field).
  Field field;
  /// Field the construction started from.
  Field base_field;
  unsigned degree = 0;
  std::size_t nvars = 0;
  std::vector<LinearForm> forms;
  /// The polynomial the construction claims to realize, over `field`.
  Polynomial target;

  std::size_t size() const { return forms.size(); }
  /// e_degree(forms), expanded.
  Polynomial realized() const;
};

/// A representation whose target is its own realization.
SymRepresentation make_representation(const Field& field, unsigned degree, std::vector<LinearForm> forms,
                                      std::size_t nvars = 0);

/// The empty list of forms: realizes 1 when degree is 0, else 0.
SymRepresentation empty_representation(const Field& field, unsigned degree, std::size_t nvars);

/// True iff e_d^m(forms) equals target exactly (target is lifted into the
/// representation's field when it is a subfield).
bool verify_representation(const SymRepresentation& rep, const Polynomial& target);

/// Appends -w_1 q, ..., -w_d q for the roots w_i of z^d + 1, adding q^d to
/// the realized polynomial. Lifts to the root host when necessary.
SymRepresentation append_linear_power(const SymRepresentation& rep, const LinearForm& q);

/// The three forms (wu + w^2 v, w^2 u + wv, u + v) with e_2 = uv and e_1 = 0,
/// where w is a primitive cube root of unity. Characteristic 2 only.
SymRepresentation quadratic_gadget(const LinearForm& u, const LinearForm& v);

/// Writes a homogeneous quadratic as one gadget per monomial.
SymRepresentation quadratic_to_sym(const Polynomial& f);

struct ReduciblePolynomial {
  Polynomial factor_low;
  Polynomial factor_high;
  Polynomial product;
};

/// Builds a ReduciblePolynomial, ordering the factors by degree.
ReduciblePolynomial make_reducible(const Polynomial& a, const Polynomial& b);

struct NewtonDecomposition {
  unsigned characteristic = 0;
  /// g_i = (-1)^(i-1) e_(p+1-i)(L) p_i(L) for i = 1..p-1.
  std::vector<ReduciblePolynomial> reducibles;
  /// e_1(L); contributes e_1(L)^(p+1).
  LinearForm frobenius_term;
  /// L_1..L_m; contributes linear_power_sign * sum L_j^(p+1).
  std::vector<LinearForm> linear_power_terms;
  FieldElement linear_power_sign;

  Polynomial assembled() const;
};

/// Splits e_(p+1)(L) by Newton's identities. Requires degree = p + 1.
NewtonDecomposition newton_decompose(const SymRepresentation& rep);

/// Realizes a reducible cubic g_1 g_2 (deg g_1 = 2, deg g_2 = 1) in Sym over
/// characteristic 2.
SymRepresentation reducible_to_sym(const ReduciblePolynomial& g);

}  // namespace esym
