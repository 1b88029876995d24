#pragma once

// Sparse exact multivariate polynomials over a Field.
//
// Variables are x1..xn, stored 0-based. Terms are kept in graded
// lexicographic order (higher degree first, then larger x1 exponent first),
// which is also the printing order.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "esym/field.hpp"

namespace esym {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents);
  static Monomial variable(std::size_t index, std::uint32_t power = 1);

  std::uint32_t exponent(std::size_t i) const { return i < exps_.size() ? exps_[i] : 0; }
  /// Index one past the last variable with a nonzero exponent.
  std::size_t length() const { return exps_.size(); }
  std::uint32_t degree() const { return degree_; }
  bool is_constant() const { return exps_.empty(); }
  bool is_multilinear() const;
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  void trim();
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

/// Graded lexicographic order, largest first.
struct GradedLexOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar, GradedLexOrder>;

  explicit Polynomial(Field field = Field(), std::size_t nvars = 0) : field_(std::move(field)), nvars_(nvars) {}

  static Polynomial constant(const FieldElement& c, std::size_t nvars = 0);
  static Polynomial constant(const Field& field, long long c, std::size_t nvars = 0);
  static Polynomial variable(const Field& field, std::size_t index, std::size_t nvars = 0);
  static Polynomial monomial(const FieldElement& c, const Monomial& m, std::size_t nvars = 0);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  bool is_homogeneous(unsigned d) const;
  bool is_constant_free() const;
  FieldElement constant_term() const;
  FieldElement coefficient(const Monomial& m) const;

  /// Adds c * m in place.
  void add_term(const Monomial& m, const Scalar& c);

  /// Same polynomial with at least n variables.
  Polynomial widened(std::size_t n) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const FieldElement& c);
  friend Polynomial operator*(const FieldElement& c, const Polynomial& a) { return a * c; }

  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& o) const;

  Field field_;
  std::size_t nvars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Homogeneous linear form sum c_i x_i.
class LinearForm {
 public:
  explicit LinearForm(Field field = Field(), std::size_t nvars = 0);
  LinearForm(Field field, std::vector<Scalar> coeffs);
  static LinearForm variable(const Field& field, std::size_t index, std::size_t nvars);
  /// Throws if p is not homogeneous of degree 1 (or zero).
  static LinearForm from_polynomial(const Polynomial& p);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return coeffs_.size(); }
  FieldElement coefficient(std::size_t i) const;
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  bool is_zero() const;

  Polynomial to_polynomial() const;
  LinearForm widened(std::size_t n) const;

  friend LinearForm operator+(const LinearForm& a, const LinearForm& b);
  friend LinearForm operator*(const FieldElement& c, const LinearForm& l);
  friend bool operator==(const LinearForm& a, const LinearForm& b);

  std::string to_string() const { return to_polynomial().to_string(); }

 private:
  Field field_;
  std::vector<Scalar> coeffs_;
};

/// H_d[f]: the degree-d part of f.
Polynomial homogeneous_component(const Polynomial& f, unsigned d);

/// Formal partial derivative with respect to x_{index+1}.
Polynomial partial_derivative(const Polynomial& f, std::size_t index);

/// f(L_1, ..., L_m) for m = f.nvars(); the result lives in the forms'
/// variable set.
Polynomial substitute_linear(const Polynomial& f, std::span<const LinearForm> forms);

/// General substitution x_i -> values[i] with polynomial values.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> values);

/// Coefficient of every multilinear monomial, keyed by its sorted 0-based
/// variable set.
std::map<std::vector<std::size_t>, FieldElement> multilinear_coefficients(const Polynomial& f);

FieldElement evaluate(const Polynomial& f, std::span<const FieldElement> point);

/// Maps the coefficients of f into an extension field.
Polynomial lift(const Polynomial& f, const Field& to);
LinearForm lift(const LinearForm& l, const Field& to);

/// Parses `x1*x2 + (t+1)*x3^2`; nvars is widened to the largest index seen.
Polynomial parse_polynomial(std::string_view text, const Field& field, std::size_t nvars = 0);

}  // namespace esym
