#include "esym/poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace esym {

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) { trim(); }

Monomial Monomial::variable(std::size_t index, std::uint32_t power) {
  std::vector<std::uint32_t> e(index + 1, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
  degree_ = 0;
  for (auto e : exps_) degree_ += e;
}

bool Monomial::is_multilinear() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e <= 1; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  std::vector<std::uint32_t> e(std::max(exps_.size(), o.exps_.size()), 0);
  for (std::size_t i = 0; i < exps_.size(); ++i) e[i] += exps_[i];
  for (std::size_t i = 0; i < o.exps_.size(); ++i) e[i] += o.exps_[i];
  Monomial m;
  m.exps_ = std::move(e);
  m.degree_ = degree_ + o.degree_;
  return m;
}

bool GradedLexOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const std::size_t n = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < n; ++i) {
    auto ea = a.exponent(i), eb = b.exponent(i);
    if (ea != eb) return ea > eb;
  }
  return false;
}

Polynomial Polynomial::constant(const FieldElement& c, std::size_t nvars) {
  Polynomial p(c.field(), nvars);
  p.add_term(Monomial(), c.value());
  return p;
}

Polynomial Polynomial::constant(const Field& field, long long c, std::size_t nvars) {
  return constant(field.element_from_integer(c), nvars);
}

Polynomial Polynomial::variable(const Field& field, std::size_t index, std::size_t nvars) {
  Polynomial p(field, std::max(nvars, index + 1));
  p.add_term(Monomial::variable(index), field.one());
  return p;
}

Polynomial Polynomial::monomial(const FieldElement& c, const Monomial& m, std::size_t nvars) {
  Polynomial p(c.field(), std::max(nvars, m.length()));
  p.add_term(m, c.value());
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.begin()->first.degree());
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == std::prev(terms_.end())->first.degree();
}

bool Polynomial::is_homogeneous(unsigned d) const {
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

bool Polynomial::is_constant_free() const { return constant_term().is_zero(); }

FieldElement Polynomial::constant_term() const { return coefficient(Monomial()); }

FieldElement Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return FieldElement(field_, it == terms_.end() ? field_.zero() : it->second);
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (field_.is_zero(c)) return;
  nvars_ = std::max(nvars_, m.length());
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = field_.add(it->second, c);
  if (field_.is_zero(it->second)) terms_.erase(it);
}

Polynomial Polynomial::widened(std::size_t n) const {
  Polynomial p = *this;
  p.nvars_ = std::max(p.nvars_, n);
  return p;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (field_ != o.field_) throw FieldError("polynomial field mismatch: " + field_.spec() + " vs " + o.field_.spec());
}

Polynomial Polynomial::operator-() const {
  Polynomial r(field_, nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, field_.neg(c));
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [m, c] : o.terms_) add_term(m, field_.neg(c));
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial r(a.field_, std::max(a.nvars_, b.nvars_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, a.field_.mul(ca, cb));
  return r;
}

Polynomial operator*(const Polynomial& a, const FieldElement& c) {
  if (a.field_ != c.field()) throw FieldError("scalar field mismatch");
  Polynomial r(a.field_, a.nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, s] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), m, a.field_.mul(s, c.value()));
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(field_.element(field_.one()), nvars_);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.field_ != b.field_ || a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib) {
    if (!(ia->first == ib->first) || !a.field_.equal(ia->second, ib->second)) return false;
  }
  return true;
}

namespace {

std::string monomial_text(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.length(); ++i) {
    auto e = m.exponent(i);
    if (!e) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool negative = false;
    std::string coeff;
    if (!field_.is_finite() && std::get<Rational>(c) < 0) {
      negative = true;
      coeff = field_.format(field_.neg(c));
    } else {
      coeff = field_.format(c);
    }
    const bool unit = coeff == "1";
    std::string term;
    if (m.is_constant()) {
      term = coeff;
    } else {
      if (!unit) {
        if (coeff.find_first_of("+-") != std::string::npos) coeff = "(" + coeff + ")";
        term = coeff + "*";
      }
      term += monomial_text(m);
    }
    if (first) {
      out = negative ? "-" + term : term;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

LinearForm::LinearForm(Field field, std::size_t nvars) : field_(std::move(field)), coeffs_(nvars, field_.zero()) {}

LinearForm::LinearForm(Field field, std::vector<Scalar> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

LinearForm LinearForm::variable(const Field& field, std::size_t index, std::size_t nvars) {
  LinearForm l(field, std::max(nvars, index + 1));
  l.coeffs_[index] = field.one();
  return l;
}

LinearForm LinearForm::from_polynomial(const Polynomial& p) {
  if (!p.is_homogeneous(1)) throw std::invalid_argument("not a linear form: " + p.to_string());
  LinearForm l(p.field(), p.nvars());
  for (const auto& [m, c] : p.terms()) l.coeffs_[m.length() - 1] = c;
  return l;
}

FieldElement LinearForm::coefficient(std::size_t i) const {
  return FieldElement(field_, i < coeffs_.size() ? coeffs_[i] : field_.zero());
}

bool LinearForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [&](const Scalar& c) { return field_.is_zero(c); });
}

Polynomial LinearForm::to_polynomial() const {
  Polynomial p(field_, coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) p.add_term(Monomial::variable(i), coeffs_[i]);
  return p;
}

LinearForm LinearForm::widened(std::size_t n) const {
  LinearForm l = *this;
  if (l.coeffs_.size() < n) l.coeffs_.resize(n, field_.zero());
  return l;
}

LinearForm operator+(const LinearForm& a, const LinearForm& b) {
  if (a.field_ != b.field_) throw FieldError("linear form field mismatch");
  const std::size_t n = std::max(a.nvars(), b.nvars());
  LinearForm r(a.field_, n);
  for (std::size_t i = 0; i < n; ++i) r.coeffs_[i] = (a.coefficient(i) + b.coefficient(i)).value();
  return r;
}

LinearForm operator*(const FieldElement& c, const LinearForm& l) {
  if (c.field() != l.field_) throw FieldError("linear form field mismatch");
  LinearForm r = l;
  for (auto& s : r.coeffs_) s = l.field_.mul(c.value(), s);
  return r;
}

bool operator==(const LinearForm& a, const LinearForm& b) {
  if (a.field_ != b.field_) return false;
  const std::size_t n = std::max(a.nvars(), b.nvars());
  for (std::size_t i = 0; i < n; ++i)
    if (a.coefficient(i) != b.coefficient(i)) return false;
  return true;
}

Polynomial homogeneous_component(const Polynomial& f, unsigned d) {
  Polynomial r(f.field(), f.nvars());
  for (const auto& [m, c] : f.terms())
    if (m.degree() == d) r.add_term(m, c);
  return r;
}

Polynomial partial_derivative(const Polynomial& f, std::size_t index) {
  if (index >= f.nvars()) throw std::out_of_range("partial derivative index out of range");
  const Field& F = f.field();
  Polynomial r(F, f.nvars());
  for (const auto& [m, c] : f.terms()) {
    auto e = m.exponent(index);
    if (!e) continue;
    auto exps = m.exponents();
    exps[index] -= 1;
    r.add_term(Monomial(std::move(exps)), F.mul(c, F.from_integer(static_cast<long long>(e))));
  }
  return r;
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> values) {
  if (values.size() != f.nvars())
    throw std::invalid_argument("substitution arity mismatch: " + std::to_string(values.size()) + " values for " +
                                std::to_string(f.nvars()) + " variables");
  std::size_t out_vars = 0;
  for (const auto& v : values) {
    if (v.field() != f.field()) throw FieldError("substitution field mismatch");
    out_vars = std::max(out_vars, v.nvars());
  }
  const Field& F = f.field();
  std::vector<std::vector<Polynomial>> powers(values.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(F.element(F.one()), out_vars));
    while (cache.size() <= e) cache.push_back(cache.back() * values[i]);
    return cache[e];
  };
  Polynomial r(F, out_vars);
  for (const auto& [m, c] : f.terms()) {
    Polynomial term = Polynomial::constant(F.element(c), out_vars);
    for (std::size_t i = 0; i < m.length(); ++i)
      if (m.exponent(i)) term = term * power(i, m.exponent(i));
    r += term;
  }
  return r;
}

Polynomial substitute_linear(const Polynomial& f, std::span<const LinearForm> forms) {
  std::vector<Polynomial> values;
  values.reserve(forms.size());
  for (const auto& l : forms) values.push_back(l.to_polynomial());
  return substitute(f, values);
}

std::map<std::vector<std::size_t>, FieldElement> multilinear_coefficients(const Polynomial& f) {
  std::map<std::vector<std::size_t>, FieldElement> out;
  for (const auto& [m, c] : f.terms()) {
    if (!m.is_multilinear()) continue;
    std::vector<std::size_t> set;
    for (std::size_t i = 0; i < m.length(); ++i)
      if (m.exponent(i)) set.push_back(i);
    out.emplace(std::move(set), FieldElement(f.field(), c));
  }
  return out;
}

FieldElement evaluate(const Polynomial& f, std::span<const FieldElement> point) {
  if (point.size() != f.nvars())
    throw std::invalid_argument("evaluation point has " + std::to_string(point.size()) + " coordinates for " +
                                std::to_string(f.nvars()) + " variables");
  Field target = f.field();
  for (const auto& a : point) {
    if (a.field() != target) {
      if (embeds(target, a.field())) {
        target = a.field();
      } else if (!embeds(a.field(), target)) {
        throw FieldError("evaluation point field mismatch");
      }
    }
  }
  const Polynomial g = (target == f.field()) ? f : lift(f, target);
  std::vector<Scalar> coords;
  coords.reserve(point.size());
  for (const auto& a : point) coords.push_back(a.field() == target ? a.value() : Embedding(a.field(), target)(a.value()));
  Scalar acc = target.zero();
  for (const auto& [m, c] : g.terms()) {
    Scalar term = c;
    for (std::size_t i = 0; i < m.length(); ++i)
      if (m.exponent(i)) term = target.mul(term, target.pow(coords[i], m.exponent(i)));
    acc = target.add(acc, term);
  }
  return FieldElement(target, acc);
}

Polynomial lift(const Polynomial& f, const Field& to) {
  if (f.field() == to) return f;
  Embedding emb(f.field(), to);
  Polynomial r(to, f.nvars());
  for (const auto& [m, c] : f.terms()) r.add_term(m, emb(c));
  return r;
}

LinearForm lift(const LinearForm& l, const Field& to) {
  if (l.field() == to) return l;
  Embedding emb(l.field(), to);
  std::vector<Scalar> coeffs;
  for (const auto& c : l.coefficients()) coeffs.push_back(emb(c));
  return LinearForm(to, std::move(coeffs));
}

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const Field& field) : field_(field) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  Polynomial parse(std::size_t nvars) {
    Polynomial result(field_, nvars);
    if (s_.empty()) fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size() || first) {
      bool negative = false;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        negative = s_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Polynomial term = parse_term();
      result += negative ? -term : term;
    }
    return result.widened(nvars);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                                s_ + "'");
  }

  bool at(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  Polynomial parse_term() {
    Polynomial term = parse_factor();
    while (true) {
      if (at('*')) {
        ++pos_;
        term = term * parse_factor();
      } else if (at('x') || at('(')) {
        term = term * parse_factor();  // implicit product such as 2x1
      } else {
        break;
      }
    }
    return term;
  }

  Polynomial parse_factor() {
    if (at('x')) {
      ++pos_;
      auto idx = std::stoul(digits());
      if (idx == 0) fail("variables are numbered from x1");
      std::uint32_t e = 1;
      if (at('^')) {
        ++pos_;
        e = static_cast<std::uint32_t>(std::stoul(digits()));
      }
      return Polynomial::monomial(field_.element(field_.one()), Monomial::variable(idx - 1, e));
    }
    if (at('(')) {
      auto close = s_.find(')', pos_);
      if (close == std::string::npos) fail("unbalanced parenthesis");
      auto literal = s_.substr(pos_ + 1, close - pos_ - 1);
      pos_ = close + 1;
      return Polynomial::constant(field_.element(literal));
    }
    if (at('t')) {
      std::size_t start = pos_++;
      if (at('^')) {
        ++pos_;
        digits();
      }
      return Polynomial::constant(field_.element(s_.substr(start, pos_ - start)));
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::string literal = digits();
      if (at('/')) {
        ++pos_;
        literal += "/" + digits();
      }
      return Polynomial::constant(field_.element(literal));
    }
    fail("unexpected character");
  }

  Field field_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Field& field, std::size_t nvars) {
  return PolynomialParser(text, field).parse(nvars);
}

}  // namespace esym
