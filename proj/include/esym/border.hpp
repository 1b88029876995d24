#pragma once

// Border computation with truncated power series in a formal variable eps.
//
// An EpsSeries stores polynomial coefficients of eps^0 .. eps^(T-1); all
// arithmetic is exact modulo eps^T. A series eps^N f + eps^(N+1) F(x, eps)
// approximates f.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "esym/field.hpp"
#include "esym/poly.hpp"

namespace esym {

class EpsSeries {
 public:
  EpsSeries(Field field, unsigned truncation, std::size_t nvars = 0);

  /// p * eps^power, truncated at T.
  static EpsSeries monomial(const Polynomial& p, unsigned power, unsigned truncation);
  static EpsSeries constant(const Polynomial& p, unsigned truncation) { return monomial(p, 0, truncation); }
  /// 1 + eps * L for a linear form.
  static EpsSeries one_plus_eps(const LinearForm& l, unsigned truncation);

  const Field& field() const { return field_; }
  unsigned truncation() const { return static_cast<unsigned>(coeffs_.size()); }
  std::size_t nvars() const { return nvars_; }
  const Polynomial& coefficient(unsigned j) const { return coeffs_.at(j); }
  const std::vector<Polynomial>& coefficients() const { return coeffs_; }
  void set_coefficient(unsigned j, const Polynomial& p);

  bool is_zero() const;
  /// Least index with a nonzero coefficient; T for the zero series.
  unsigned valuation() const;
  /// Every coefficient is a constant polynomial.
  bool is_scalar() const;
  /// Coefficientwise constant terms.
  EpsSeries constant_part() const;

  EpsSeries operator-() const;
  EpsSeries& operator+=(const EpsSeries& o);
  EpsSeries& operator-=(const EpsSeries& o);
  friend EpsSeries operator+(EpsSeries a, const EpsSeries& b) { return a += b; }
  friend EpsSeries operator-(EpsSeries a, const EpsSeries& b) { return a -= b; }
  friend EpsSeries operator*(const EpsSeries& a, const EpsSeries& b);
  friend EpsSeries operator*(const EpsSeries& a, const FieldElement& c);
  friend bool operator==(const EpsSeries& a, const EpsSeries& b);

  /// Multiplication by eps^j.
  EpsSeries shifted(unsigned j) const;
  /// Division by eps^j; the low coefficients must vanish.
  EpsSeries unshifted(unsigned j) const;
  /// Same coefficients with truncation T' (padding or cutting).
  EpsSeries retruncated(unsigned T) const;
  /// H_d applied to every coefficient.
  EpsSeries homogeneous_component(unsigned d) const;
  /// Inverse of a series whose eps^0 coefficient is a nonzero constant.
  EpsSeries inverse() const;

  std::string to_string() const;

 private:
  void check(const EpsSeries& o) const;
  Field field_;
  std::size_t nvars_;
  std::vector<Polynomial> coeffs_;
};

struct BorderWitness {
  unsigned order = 0;  // N; equals T for the zero series
  Polynomial principal;
  bool tail_present = false;
  bool zero = false;
};

BorderWitness approx_extract(const EpsSeries& s);

struct KumarResult {
  EpsSeries product_term;   // prod (1 + eps L_i)
  EpsSeries constant_term;  // -1
  EpsSeries combined;
  BorderWitness witness;
};

/// prod (1 + eps L_i) - 1 = eps^d e_d(L) + O(eps^(d+1)) when e_1..e_(d-1) of
/// the forms vanish. Throws naming the first k with e_k != 0. T defaults to
/// 2d + 2 and must be at least d + 2.
KumarResult kumar_fanin2(const std::vector<LinearForm>& forms, unsigned d, std::optional<unsigned> T = std::nullopt);

enum class ShiftMode { principal, homogeneous };

struct ShiftResult {
  unsigned M = 0;  // alpha = eps^M
  BorderWitness witness;
};

/// Given F * ell + G ~ target, finds the least M >= 1 such that
/// F * (ell + eps^M) + G ~ target with the same order, verified by
/// re-extraction (after H_d when mode is homogeneous). ell is a series of
/// linear forms.
ShiftResult constant_shift(const EpsSeries& F, const EpsSeries& G, const EpsSeries& ell, const Polynomial& target,
                           ShiftMode mode = ShiftMode::principal);
ShiftResult constant_shift(const EpsSeries& F, const EpsSeries& G, const LinearForm& ell, const Polynomial& target,
                           ShiftMode mode = ShiftMode::principal);

/// One summand c_i prod_j f_ij of a depth-3 circuit over eps; factors are
/// series with affine coefficients.
struct DepthThreeTerm {
  EpsSeries scalar;
  std::vector<EpsSeries> factors;
};

/// scale * eps^eps_shift * e_degree(forms), forms being series of linear forms.
struct EpsSymTerm {
  EpsSeries scale;
  int eps_shift = 0;
  std::vector<EpsSeries> forms;
  unsigned degree = 0;
};

struct FactorShift {
  std::size_t term = 0;
  std::size_t factor = 0;
  unsigned M = 0;
};

struct DepthThreeToSym {
  std::vector<EpsSymTerm> terms;
  std::vector<FactorShift> shifts;
  unsigned order = 0;   // N of the input after H_d
  unsigned offset = 0;  // K: the check multiplies everything by eps^K
  BorderWitness witness;  // of eps^K * sum of the Sym terms
  bool verified = false;  // series equal to eps^K H_d[input] and witness matches
};

/// Rewrites sum c_i prod f_ij ~ target (homogeneous of degree d) as
/// sum c_i' e_d(L^(i)) ~ target by normalizing every factor to constant
/// term 1, shifting factors with zero constant part first.
DepthThreeToSym depth3_to_sym(std::vector<DepthThreeTerm> terms, const Polynomial& target, unsigned T);

/// The two summands of kumar_fanin2 as depth-3 terms: (1, [1 + eps L_i]) and (-1, []).
std::vector<DepthThreeTerm> kumar_terms(const std::vector<LinearForm>& forms, unsigned T);

/// e_d of series-valued linear forms.
EpsSeries esp_of_series(const std::vector<EpsSeries>& forms, unsigned d, const Field& field, unsigned T,
                        std::size_t nvars);

}  // namespace esym
