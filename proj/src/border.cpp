#include "esym/border.hpp"

#include <algorithm>
#include <stdexcept>

#include "esym/symfunc.hpp"

namespace esym {

EpsSeries::EpsSeries(Field field, unsigned truncation, std::size_t nvars)
    : field_(std::move(field)), nvars_(nvars), coeffs_(truncation, Polynomial(field_, nvars)) {
  if (truncation == 0) throw std::invalid_argument("EpsSeries: truncation must be positive");
}

EpsSeries EpsSeries::monomial(const Polynomial& p, unsigned power, unsigned truncation) {
  EpsSeries s(p.field(), truncation, p.nvars());
  if (power < truncation) s.coeffs_[power] = p;
  return s;
}

EpsSeries EpsSeries::one_plus_eps(const LinearForm& l, unsigned truncation) {
  EpsSeries s(l.field(), truncation, l.nvars());
  s.coeffs_[0] = Polynomial::constant(l.field(), 1, l.nvars());
  if (truncation > 1) s.coeffs_[1] = l.to_polynomial();
  return s;
}

void EpsSeries::set_coefficient(unsigned j, const Polynomial& p) {
  if (p.field() != field_) throw FieldError("EpsSeries coefficient field mismatch");
  nvars_ = std::max(nvars_, p.nvars());
  coeffs_.at(j) = p;
}

bool EpsSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

unsigned EpsSeries::valuation() const {
  for (unsigned j = 0; j < coeffs_.size(); ++j)
    if (!coeffs_[j].is_zero()) return j;
  return truncation();
}

bool EpsSeries::is_scalar() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Polynomial& p) { return p.degree() <= 0; });
}

EpsSeries EpsSeries::constant_part() const {
  EpsSeries s(field_, truncation(), nvars_);
  for (unsigned j = 0; j < coeffs_.size(); ++j) s.coeffs_[j] = Polynomial::constant(coeffs_[j].constant_term(), nvars_);
  return s;
}

void EpsSeries::check(const EpsSeries& o) const {
  if (field_ != o.field_) throw FieldError("EpsSeries field mismatch");
  if (coeffs_.size() != o.coeffs_.size())
    throw std::invalid_argument("EpsSeries truncation mismatch: " + std::to_string(coeffs_.size()) + " vs " +
                                std::to_string(o.coeffs_.size()));
}

EpsSeries EpsSeries::operator-() const {
  EpsSeries s = *this;
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

EpsSeries& EpsSeries::operator+=(const EpsSeries& o) {
  check(o);
  nvars_ = std::max(nvars_, o.nvars_);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

EpsSeries& EpsSeries::operator-=(const EpsSeries& o) {
  check(o);
  nvars_ = std::max(nvars_, o.nvars_);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  return *this;
}

EpsSeries operator*(const EpsSeries& a, const EpsSeries& b) {
  a.check(b);
  const std::size_t T = a.coeffs_.size();
  EpsSeries r(a.field_, static_cast<unsigned>(T), std::max(a.nvars_, b.nvars_));
  for (std::size_t i = 0; i < T; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < T; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

EpsSeries operator*(const EpsSeries& a, const FieldElement& c) {
  EpsSeries r = a;
  for (auto& p : r.coeffs_) p = p * c;
  return r;
}

bool operator==(const EpsSeries& a, const EpsSeries& b) {
  if (a.field_ != b.field_ || a.coeffs_.size() != b.coeffs_.size()) return false;
  for (std::size_t j = 0; j < a.coeffs_.size(); ++j)
    if (a.coeffs_[j] != b.coeffs_[j]) return false;
  return true;
}

EpsSeries EpsSeries::shifted(unsigned j) const {
  EpsSeries s(field_, truncation(), nvars_);
  for (std::size_t i = 0; i + j < coeffs_.size(); ++i) s.coeffs_[i + j] = coeffs_[i];
  return s;
}

EpsSeries EpsSeries::unshifted(unsigned j) const {
  EpsSeries s(field_, truncation(), nvars_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i < j) {
      if (!coeffs_[i].is_zero()) throw std::invalid_argument("EpsSeries: division by eps^j with nonzero low terms");
      continue;
    }
    s.coeffs_[i - j] = coeffs_[i];
  }
  return s;
}

EpsSeries EpsSeries::retruncated(unsigned T) const {
  EpsSeries s(field_, T, nvars_);
  for (std::size_t i = 0; i < std::min<std::size_t>(T, coeffs_.size()); ++i) s.coeffs_[i] = coeffs_[i];
  return s;
}

EpsSeries EpsSeries::homogeneous_component(unsigned d) const {
  EpsSeries s(field_, truncation(), nvars_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) s.coeffs_[i] = esym::homogeneous_component(coeffs_[i], d);
  return s;
}

EpsSeries EpsSeries::inverse() const {
  const Polynomial& a0 = coeffs_[0];
  if (a0.degree() != 0) throw std::domain_error("EpsSeries::inverse: constant coefficient is not a unit");
  const FieldElement inv0 = a0.constant_term().inverse();
  EpsSeries b(field_, truncation(), nvars_);
  b.coeffs_[0] = Polynomial::constant(inv0, nvars_);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    Polynomial acc(field_, nvars_);
    for (std::size_t j = 1; j <= k; ++j)
      if (!coeffs_[j].is_zero() && !b.coeffs_[k - j].is_zero()) acc += coeffs_[j] * b.coeffs_[k - j];
    b.coeffs_[k] = -(acc * inv0);
  }
  return b;
}

std::string EpsSeries::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string c = "(" + coeffs_[j].to_string() + ")";
    if (j == 0) out += c;
    else out += (j == 1 ? std::string("eps") : "eps^" + std::to_string(j)) + "*" + c;
  }
  out += (out.empty() ? "O(eps^" : " + O(eps^") + std::to_string(coeffs_.size()) + ")";
  return out;
}

BorderWitness approx_extract(const EpsSeries& s) {
  BorderWitness w;
  w.order = s.valuation();
  if (w.order == s.truncation()) {
    w.zero = true;
    w.principal = Polynomial(s.field(), s.nvars());
    return w;
  }
  w.principal = s.coefficient(w.order);
  for (unsigned j = w.order + 1; j < s.truncation(); ++j)
    if (!s.coefficient(j).is_zero()) w.tail_present = true;
  return w;
}

KumarResult kumar_fanin2(const std::vector<LinearForm>& forms, unsigned d, std::optional<unsigned> T_opt) {
  if (forms.empty()) throw std::invalid_argument("kumar_fanin2: no forms");
  const unsigned T = T_opt.value_or(2 * d + 2);
  if (T < d + 2) throw std::invalid_argument("kumar_fanin2: truncation must be at least d + 2");
  const Field& F = forms.front().field();
  const auto e = esp_prefix_forms(F, forms, d);
  for (unsigned k = 1; k < d; ++k)
    if (!e[k].is_zero())
      throw std::invalid_argument("kumar_fanin2: e_" + std::to_string(k) + "(forms) = " + e[k].to_string() +
                                  " does not vanish");
  std::size_t n = 0;
  for (const auto& l : forms) n = std::max(n, l.nvars());
  EpsSeries prod = EpsSeries::constant(Polynomial::constant(F, 1, n), T);
  for (const auto& l : forms) prod = prod * EpsSeries::one_plus_eps(l.widened(n), T);
  EpsSeries minus_one = EpsSeries::constant(Polynomial::constant(F, -1, n), T);
  EpsSeries combined = prod + minus_one;
  BorderWitness w = approx_extract(combined);
  return {std::move(prod), std::move(minus_one), std::move(combined), std::move(w)};
}

namespace {

BorderWitness extract(const EpsSeries& s, ShiftMode mode, unsigned d) {
  return approx_extract(mode == ShiftMode::homogeneous ? s.homogeneous_component(d) : s);
}

bool approximates(const BorderWitness& w, const Polynomial& target) { return !w.zero && w.principal == target; }

}  // namespace

ShiftResult constant_shift(const EpsSeries& F, const EpsSeries& G, const EpsSeries& ell, const Polynomial& target,
                           ShiftMode mode) {
  const unsigned d = target.degree() < 0 ? 0 : static_cast<unsigned>(target.degree());
  if (mode == ShiftMode::homogeneous && !target.is_homogeneous())
    throw std::invalid_argument("constant_shift: homogeneous mode needs a homogeneous target");
  const EpsSeries S = F * ell + G;
  const BorderWitness base = extract(S, mode, d);
  if (!approximates(base, target))
    throw std::invalid_argument("constant_shift: F*ell + G does not approximate the target within T = " +
                                std::to_string(S.truncation()));
  const unsigned T = S.truncation();
  for (unsigned M = 1; M + base.order < T; ++M) {
    const BorderWitness w = extract(S + F.shifted(M), mode, d);
    if (w.order == base.order && approximates(w, target)) return {M, w};
  }
  throw std::invalid_argument("constant_shift: truncation T = " + std::to_string(T) +
                              " is too small to verify any shift eps^M");
}

ShiftResult constant_shift(const EpsSeries& F, const EpsSeries& G, const LinearForm& ell, const Polynomial& target,
                           ShiftMode mode) {
  return constant_shift(F, G, EpsSeries::constant(ell.to_polynomial(), F.truncation()), target, mode);
}

EpsSeries esp_of_series(const std::vector<EpsSeries>& forms, unsigned d, const Field& field, unsigned T,
                        std::size_t nvars) {
  std::vector<EpsSeries> e(d + 1, EpsSeries(field, T, nvars));
  e[0] = EpsSeries::constant(Polynomial::constant(field, 1, nvars), T);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const unsigned top = static_cast<unsigned>(std::min<std::size_t>(d, i + 1));
    for (unsigned k = top; k >= 1; --k) e[k] += forms[i] * e[k - 1];
  }
  return e[d];
}

std::vector<DepthThreeTerm> kumar_terms(const std::vector<LinearForm>& forms, unsigned T) {
  if (forms.empty()) throw std::invalid_argument("kumar_terms: no forms");
  const Field& F = forms.front().field();
  std::size_t n = 0;
  for (const auto& l : forms) n = std::max(n, l.nvars());
  DepthThreeTerm prod{EpsSeries::constant(Polynomial::constant(F, 1, n), T), {}};
  for (const auto& l : forms) prod.factors.push_back(EpsSeries::one_plus_eps(l.widened(n), T));
  DepthThreeTerm minus_one{EpsSeries::constant(Polynomial::constant(F, -1, n), T), {}};
  return {std::move(prod), std::move(minus_one)};
}

namespace {

EpsSeries term_value(const DepthThreeTerm& t, std::size_t skip = static_cast<std::size_t>(-1)) {
  EpsSeries v = t.scalar;
  for (std::size_t j = 0; j < t.factors.size(); ++j)
    if (j != skip) v = v * t.factors[j];
  return v;
}

EpsSeries total_value(const std::vector<DepthThreeTerm>& terms, const Field& F, unsigned T, std::size_t n) {
  EpsSeries s(F, T, n);
  for (const auto& t : terms) s += term_value(t);
  return s;
}

}  // namespace

DepthThreeToSym depth3_to_sym(std::vector<DepthThreeTerm> terms, const Polynomial& target, unsigned T) {
  if (target.is_zero() || !target.is_homogeneous())
    throw std::invalid_argument("depth3_to_sym: target must be a nonzero homogeneous polynomial");
  const unsigned d = static_cast<unsigned>(target.degree());
  const Field& F = target.field();
  std::size_t n = target.nvars();
  for (auto& t : terms) {
    if (t.scalar.field() != F) throw FieldError("depth3_to_sym: term field mismatch");
    if (!t.scalar.is_scalar()) throw std::invalid_argument("depth3_to_sym: term scalar depends on x");
    t.scalar = t.scalar.retruncated(T);
    n = std::max(n, t.scalar.nvars());
    for (auto& f : t.factors) {
      for (const auto& c : f.coefficients())
        if (c.degree() > 1) throw std::invalid_argument("depth3_to_sym: factor is not affine");
      f = f.retruncated(T);
      n = std::max(n, f.nvars());
    }
  }

  DepthThreeToSym out;
  EpsSeries orig = total_value(terms, F, T, n);
  const BorderWitness w0 = approx_extract(orig.homogeneous_component(d));
  if (!approximates(w0, target)) throw std::invalid_argument("depth3_to_sym: input does not approximate the target");
  out.order = w0.order;

  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = 0; j < terms[i].factors.size(); ++j) {
      if (!terms[i].factors[j].constant_part().is_zero()) continue;
      const EpsSeries rest = term_value(terms[i], j);
      const EpsSeries others = orig - rest * terms[i].factors[j];
      const ShiftResult s = constant_shift(rest, others, terms[i].factors[j], target, ShiftMode::homogeneous);
      terms[i].factors[j] += EpsSeries::monomial(Polynomial::constant(F, 1, n), s.M, T);
      out.shifts.push_back({i, j, s.M});
      orig = total_value(terms, F, T, n);
    }
  }

  std::vector<unsigned> s_max(terms.size(), 0);
  unsigned S = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (const auto& f : terms[i].factors) s_max[i] = std::max(s_max[i], f.constant_part().valuation());
    S = std::max(S, s_max[i]);
  }
  const unsigned K = d * S;
  const unsigned T2 = T + K;
  out.offset = K;

  EpsSeries sum(F, T2, n);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    EpsSymTerm st{terms[i].scalar.retruncated(T2), -static_cast<int>(d * s_max[i]), {}, d};
    for (const auto& f : terms[i].factors) {
      const EpsSeries a = f.constant_part();
      const unsigned v = a.valuation();
      const EpsSeries u = a.unshifted(v).retruncated(T2);
      const EpsSeries lin = (f - a).retruncated(T2);
      st.scale = st.scale * a.retruncated(T2);
      st.forms.push_back((lin * u.inverse()).shifted(s_max[i] - v));
    }
    const EpsSeries value = st.scale * esp_of_series(st.forms, d, F, T2, n);
    sum += value.shifted(static_cast<unsigned>(static_cast<int>(K) + st.eps_shift));
    out.terms.push_back(std::move(st));
  }

  const EpsSeries reference = orig.homogeneous_component(d).retruncated(T2).shifted(K);
  out.witness = approx_extract(sum);
  out.verified = sum == reference && approximates(out.witness, target) && out.witness.order == out.order + K;
  return out;
}

}  // namespace esym
