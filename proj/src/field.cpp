#include "esym/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

namespace esym {

namespace detail {

struct FieldImpl {
  FieldKind kind = FieldKind::rationals;
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  std::uint64_t q = 0;
  std::vector<std::uint32_t> modulus;  // monic, constant first
  bool table = false;

  // Extension fields: discrete log tables over a primitive element.
  std::vector<std::uint32_t> exp;  // size q - 1
  std::vector<std::uint32_t> log;  // size q; log[0] unused
  // Odd characteristic, small q: full addition table.
  std::vector<std::uint32_t> add_table;
  std::vector<std::uint32_t> powers_of_p;  // p^0 .. p^(k-1)

  std::uint32_t digit(std::uint32_t code, std::uint32_t i) const { return (code / powers_of_p[i]) % p; }

  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
      r += ((a % p + b % p) % p) * powers_of_p[i];
      a /= p;
      b /= p;
    }
    return r;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (kind == FieldKind::prime) {
      std::uint64_t s = std::uint64_t{a} + b;
      return static_cast<std::uint32_t>(s >= p ? s - p : s);
    }
    if (p == 2) return a ^ b;
    if (!add_table.empty()) return add_table[std::uint64_t{a} * q + b];
    return add_digits(a, b);
  }

  std::uint32_t neg(std::uint32_t a) const {
    if (kind == FieldKind::prime) return a == 0 ? 0 : p - a;
    if (p == 2) return a;
    std::uint32_t r = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
      std::uint32_t d = a % p;
      r += (d == 0 ? 0 : p - d) * powers_of_p[i];
      a /= p;
    }
    return r;
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (kind == FieldKind::prime) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
    if (a == 0 || b == 0) return 0;
    std::uint64_t e = std::uint64_t{log[a]} + log[b];
    if (e >= q - 1) e -= q - 1;
    return exp[e];
  }

  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (kind == FieldKind::prime) {
      // Fermat: a^(p-2)
      std::uint64_t r = 1, b = a, e = p - 2;
      while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
      }
      return static_cast<std::uint32_t>(r);
    }
    std::uint32_t l = log[a];
    return exp[l == 0 ? 0 : (q - 1 - l)];
  }

  // Polynomial multiplication modulo the modulus on digit vectors; used only
  // while building the log tables.
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    std::vector<std::uint64_t> prod(2 * k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
      std::uint64_t ai = digit(a, i);
      if (!ai) continue;
      for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + ai * digit(b, j)) % p;
    }
    for (std::uint32_t deg = 2 * k - 1; deg >= k; --deg) {
      std::uint64_t c = prod[deg] % p;
      if (!c) continue;
      prod[deg] = 0;
      for (std::uint32_t j = 0; j < k; ++j)
        prod[deg - k + j] = (prod[deg - k + j] + (p - c) * modulus[j]) % p;
    }
    std::uint32_t r = 0;
    for (std::uint32_t i = 0; i < k; ++i) r += static_cast<std::uint32_t>(prod[i]) * powers_of_p[i];
    return r;
  }
};

}  // namespace detail

namespace {

using detail::FieldImpl;

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;

// Remainder of a dense polynomial (constant first) modulo a monic one.
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& m,
                                    std::uint32_t p) {
  std::size_t dm = m.size() - 1;
  for (std::size_t deg = a.size(); deg-- > dm;) {
    std::uint64_t c = a[deg] % p;
    if (!c) continue;
    for (std::size_t j = 0; j <= dm; ++j)
      a[deg - dm + j] = static_cast<std::uint32_t>((a[deg - dm + j] + (p - c) * std::uint64_t{m[j]}) % p);
  }
  a.resize(std::min(a.size(), dm));
  return a;
}

bool is_irreducible(const std::vector<std::uint32_t>& m, std::uint32_t p) {
  std::uint32_t k = static_cast<std::uint32_t>(m.size() - 1);
  for (std::uint32_t j = 1; j <= k / 2; ++j) {
    std::uint64_t count = ipow(p, j);
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> g(j + 1);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < j; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[j] = 1;
      auto r = poly_mod(m, g, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; })) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void build_tables(FieldImpl& f) {
  auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = f.slow_mul(r, a);
      a = f.slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  const std::uint64_t order = f.q - 1;
  const auto factors = prime_factors(order);
  std::uint32_t gen = 0;
  for (std::uint32_t g = 2; g < f.q; ++g) {
    bool primitive = true;
    for (auto r : factors) {
      if (slow_pow(g, order / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = g;
      break;
    }
  }
  if (gen == 0) throw FieldError("no primitive element found; modulus is not irreducible");
  f.exp.resize(order);
  f.log.assign(f.q, 0);
  std::uint32_t x = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    f.exp[i] = x;
    f.log[x] = static_cast<std::uint32_t>(i);
    x = f.slow_mul(x, gen);
  }
  if (f.p != 2 && f.q <= 1024) {
    f.add_table.resize(f.q * f.q);
    for (std::uint32_t a = 0; a < f.q; ++a)
      for (std::uint32_t b = 0; b < f.q; ++b) f.add_table[std::uint64_t{a} * f.q + b] = f.add_digits(a, b);
  }
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::vector<std::uint32_t>, std::shared_ptr<const FieldImpl>>& registry() {
  static std::map<std::vector<std::uint32_t>, std::shared_ptr<const FieldImpl>> r;
  return r;
}

std::shared_ptr<const FieldImpl> rationals_impl() {
  static const auto impl = std::make_shared<const FieldImpl>();
  return impl;
}

const std::uint32_t& as_code(const Scalar& s) { return std::get<std::uint32_t>(s); }
const Rational& as_rational(const Scalar& s) { return std::get<Rational>(s); }

std::string trim(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

std::vector<std::uint32_t> table_modulus(std::uint32_t p, std::uint32_t k) {
  // constant coefficient first
  if (p == 2 && k == 2) return {1, 1, 1};        // t^2 + t + 1
  if (p == 2 && k == 3) return {1, 1, 0, 1};     // t^3 + t + 1
  if (p == 2 && k == 4) return {1, 1, 0, 0, 1};  // t^4 + t + 1
  if (p == 3 && k == 2) return {1, 0, 1};        // t^2 + 1
  if (p == 3 && k == 3) return {1, 2, 0, 1};     // t^3 + 2t + 1
  if (p == 5 && k == 2) return {1, 1, 1};        // t^2 + t + 1
  return {};
}

std::vector<Field> table_fields(std::uint32_t p) {
  std::vector<Field> out{Field::prime(p)};
  for (std::uint32_t k = 2; k <= 4; ++k)
    if (!table_modulus(p, k).empty()) out.push_back(Field::extension(p, k));
  return out;
}

Field::Field() : impl_(rationals_impl()) {}

Field Field::rationals() { return Field(); }

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw FieldError(std::to_string(p) + " is not prime");
  std::lock_guard lock(registry_mutex());
  std::vector<std::uint32_t> key{p, 1};
  auto& slot = registry()[key];
  if (!slot) {
    auto f = std::make_shared<FieldImpl>();
    f->kind = FieldKind::prime;
    f->p = p;
    f->k = 1;
    f->q = p;
    f->powers_of_p = {1};
    f->table = true;
    slot = f;
  }
  return Field(slot);
}

Field Field::extension(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw FieldError(std::to_string(p) + " is not prime");
  if (k == 0) throw FieldError("extension degree must be positive");
  if (k == 1 && modulus.empty()) return prime(p);
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldSize) throw FieldError("fields beyond 2^20 elements are not supported");
  }
  const auto table = table_modulus(p, k);
  if (modulus.empty()) {
    if (table.empty())
      throw FieldError("gf(" + std::to_string(p) + "^" + std::to_string(k) +
                       ") is not in the modulus table; supply a modulus");
    modulus = table;
  }
  if (modulus.size() != k + 1) throw FieldError("modulus must have degree " + std::to_string(k));
  for (auto& c : modulus) {
    if (c >= p) throw FieldError("modulus coefficients must lie in [0, p)");
  }
  if (modulus.back() != 1) throw FieldError("modulus must be monic");
  if (k == 1) return prime(p);

  std::vector<std::uint32_t> key{p, k};
  key.insert(key.end(), modulus.begin(), modulus.end());
  std::lock_guard lock(registry_mutex());
  auto& slot = registry()[key];
  if (!slot) {
    if (!is_irreducible(modulus, p)) throw FieldError("modulus is reducible over gf(" + std::to_string(p) + ")");
    auto f = std::make_shared<FieldImpl>();
    f->kind = FieldKind::extension;
    f->p = p;
    f->k = k;
    f->q = q;
    f->modulus = modulus;
    f->table = (modulus == table);
    f->powers_of_p.resize(k);
    for (std::uint32_t i = 0; i < k; ++i) f->powers_of_p[i] = static_cast<std::uint32_t>(ipow(p, i));
    build_tables(*f);
    slot = f;
  }
  return Field(slot);
}

FieldKind Field::kind() const { return impl_->kind; }
std::uint32_t Field::characteristic() const { return impl_->p; }
std::uint32_t Field::degree() const { return impl_->k; }
std::uint64_t Field::size() const { return impl_->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return impl_->modulus; }
bool Field::uses_table_modulus() const { return impl_->table; }

std::string Field::spec() const {
  switch (impl_->kind) {
    case FieldKind::rationals:
      return "q";
    case FieldKind::prime:
      return "gf(" + std::to_string(impl_->p) + ")";
    case FieldKind::extension: {
      std::string s = "gf(" + std::to_string(impl_->p) + "^" + std::to_string(impl_->k);
      if (!impl_->table) {
        s += ";";
        for (std::size_t i = 0; i < impl_->modulus.size(); ++i) {
          if (i) s += ",";
          s += std::to_string(impl_->modulus[i]);
        }
      }
      return s + ")";
    }
  }
  return {};
}

bool operator==(const Field& a, const Field& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->kind == b.impl_->kind && a.impl_->p == b.impl_->p && a.impl_->k == b.impl_->k &&
         a.impl_->modulus == b.impl_->modulus;
}

Scalar Field::zero() const {
  if (!is_finite()) return Rational(0);
  return std::uint32_t{0};
}

Scalar Field::one() const {
  if (!is_finite()) return Rational(1);
  return std::uint32_t{1};
}

Scalar Field::from_integer(long long v) const {
  if (!is_finite()) return Rational(static_cast<long>(v));
  long long p = impl_->p;
  long long r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

Scalar Field::from_integer(const Integer& v) const {
  if (!is_finite()) return Rational(v);
  Integer r = v % impl_->p;
  if (r < 0) r += impl_->p;
  return static_cast<std::uint32_t>(r.get_ui());
}

Scalar Field::from_code(std::uint32_t code) const {
  if (!is_finite()) throw FieldError("codes are only defined for finite fields");
  if (code >= impl_->q) throw FieldError("element code out of range");
  return code;
}

std::uint32_t Field::code(const Scalar& s) const {
  if (!is_finite()) throw FieldError("codes are only defined for finite fields");
  return as_code(s);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (!is_finite()) {
    Rational r = as_rational(a) + as_rational(b);
    return r;
  }
  return impl_->add(as_code(a), as_code(b));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (!is_finite()) {
    Rational r = as_rational(a) - as_rational(b);
    return r;
  }
  return impl_->add(as_code(a), impl_->neg(as_code(b)));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (!is_finite()) {
    Rational r = as_rational(a) * as_rational(b);
    return r;
  }
  return impl_->mul(as_code(a), as_code(b));
}

Scalar Field::neg(const Scalar& a) const {
  if (!is_finite()) {
    Rational r = -as_rational(a);
    return r;
  }
  return impl_->neg(as_code(a));
}

Scalar Field::inv(const Scalar& a) const {
  if (!is_finite()) {
    if (as_rational(a) == 0) throw std::domain_error("inverse of zero");
    Rational r = 1 / as_rational(a);
    return r;
  }
  return impl_->inv(as_code(a));
}

Scalar Field::pow(const Scalar& a, std::uint64_t e) const {
  Scalar r = one();
  Scalar b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

bool Field::is_zero(const Scalar& a) const {
  if (!is_finite()) return as_rational(a) == 0;
  return as_code(a) == 0;
}

bool Field::is_one(const Scalar& a) const {
  if (!is_finite()) return as_rational(a) == 1;
  return as_code(a) == 1;
}

bool Field::equal(const Scalar& a, const Scalar& b) const {
  if (!is_finite()) return as_rational(a) == as_rational(b);
  return as_code(a) == as_code(b);
}

std::uint32_t Field::add_code(std::uint32_t a, std::uint32_t b) const { return impl_->add(a, b); }
std::uint32_t Field::sub_code(std::uint32_t a, std::uint32_t b) const { return impl_->add(a, impl_->neg(b)); }
std::uint32_t Field::mul_code(std::uint32_t a, std::uint32_t b) const { return impl_->mul(a, b); }
std::uint32_t Field::neg_code(std::uint32_t a) const { return impl_->neg(a); }
std::uint32_t Field::inv_code(std::uint32_t a) const { return impl_->inv(a); }

std::string Field::format(const Scalar& s) const {
  switch (impl_->kind) {
    case FieldKind::rationals:
      return as_rational(s).get_str();
    case FieldKind::prime:
      return std::to_string(as_code(s));
    case FieldKind::extension:
      break;
  }
  std::uint32_t c = as_code(s);
  if (c == 0) return "0";
  std::string out;
  for (std::uint32_t i = impl_->k; i-- > 0;) {
    std::uint32_t d = impl_->digit(c, i);
    if (!d) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(d);
      continue;
    }
    if (d != 1) out += std::to_string(d) + "*";
    out += (i == 1) ? "t" : "t^" + std::to_string(i);
  }
  return out;
}

namespace {

// Parses an integer with optional sign at pos; advances pos.
Integer parse_integer(const std::string& s, std::size_t& pos) {
  std::size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  std::size_t digits = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == digits) throw FieldError("expected integer in '" + s + "'");
  std::string text = s.substr(start, pos - start);
  if (text[0] == '+') text.erase(0, 1);
  return Integer(text);
}

}  // namespace

Scalar Field::parse(std::string_view text) const {
  std::string s = trim(text);
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw FieldError("empty field element literal");

  if (impl_->kind != FieldKind::extension) {
    std::size_t pos = 0;
    Integer num = parse_integer(s, pos);
    Integer den = 1;
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      den = parse_integer(s, pos);
    }
    if (pos != s.size()) throw FieldError("malformed element literal '" + s + "'");
    if (den == 0) throw FieldError("zero denominator in '" + s + "'");
    if (impl_->kind == FieldKind::rationals) {
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    return mul(from_integer(num), inv(from_integer(den)));
  }

  // Polynomial in t with integer coefficients.
  Scalar acc = zero();
  const Scalar t = from_code(impl_->p);
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    }
    Integer coeff = 1;
    bool have_coeff = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = parse_integer(s, pos);
      have_coeff = true;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    std::uint64_t e = 0;
    if (pos < s.size() && s[pos] == 't') {
      ++pos;
      e = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        e = parse_integer(s, pos).get_ui();
      }
    } else if (!have_coeff) {
      throw FieldError("malformed element literal '" + s + "'");
    }
    Scalar term = mul(from_integer(coeff), pow(t, e));
    acc = negative ? sub(acc, term) : add(acc, term);
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
      throw FieldError("malformed element literal '" + s + "'");
  }
  return acc;
}

FieldElement Field::element(const Scalar& s) const { return FieldElement(*this, s); }
FieldElement Field::element_from_code(std::uint32_t code) const { return FieldElement(*this, from_code(code)); }
FieldElement Field::element_from_integer(long long v) const { return FieldElement(*this, from_integer(v)); }
FieldElement Field::element(std::string_view text) const { return FieldElement(*this, parse(text)); }

std::vector<FieldElement> Field::elements() const {
  if (!is_finite()) throw FieldError("cannot list the elements of an infinite field");
  std::vector<FieldElement> out;
  out.reserve(impl_->q);
  for (std::uint32_t c = 0; c < impl_->q; ++c) out.emplace_back(*this, Scalar{c});
  return out;
}

Field make_field(std::string_view spec_text) {
  std::string s = trim(spec_text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "q") return Field::rationals();
  if (s.rfind("gf(", 0) != 0 || s.back() != ')') throw FieldError("unrecognized field string '" + s + "'");
  std::string body = s.substr(3, s.size() - 4);
  std::string modulus_text;
  if (auto semi = body.find(';'); semi != std::string::npos) {
    modulus_text = body.substr(semi + 1);
    body = body.substr(0, semi);
  }
  std::size_t pos = 0;
  Integer p = parse_integer(body, pos);
  Integer k = 1;
  bool has_power = false;
  if (pos < body.size() && body[pos] == '^') {
    ++pos;
    k = parse_integer(body, pos);
    has_power = true;
  }
  if (pos != body.size()) throw FieldError("malformed field string '" + s + "'");
  // gf(Q) with Q = P^K a prime power
  if (!has_power && p > 1 && p.fits_ulong_p() && p.get_ui() <= 0xFFFFFFFFu && !is_prime(p.get_ui())) {
    std::uint64_t q = p.get_ui(), base = 0;
    for (std::uint64_t f = 2; f * f <= q; ++f)
      if (q % f == 0) {
        base = f;
        break;
      }
    std::uint64_t r = q, e = 0;
    while (base && r % base == 0) {
      r /= base;
      ++e;
    }
    if (base && r == 1) {
      p = static_cast<unsigned long>(base);
      k = static_cast<unsigned long>(e);
      has_power = true;
    } else {
      throw FieldError(p.get_str() + " is not a prime power");
    }
  }
  if (p <= 1 || !p.fits_ulong_p() || p.get_ui() > 0xFFFFFFFFu || !is_prime(p.get_ui())) {
    throw FieldError(p.get_str() + " is not prime" +
                     std::string());
  }
  if (k <= 0 || !k.fits_ulong_p() || k.get_ui() > 64) throw FieldError("invalid extension degree");
  std::vector<std::uint32_t> modulus;
  if (!modulus_text.empty()) {
    std::stringstream ss(modulus_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t ip = 0;
      Integer c = parse_integer(item, ip);
      if (ip != item.size() || c < 0) throw FieldError("malformed modulus coefficient '" + item + "'");
      modulus.push_back(static_cast<std::uint32_t>(c.get_ui()));
    }
  }
  auto pp = static_cast<std::uint32_t>(p.get_ui());
  auto kk = static_cast<std::uint32_t>(k.get_ui());
  if (kk == 1 && modulus.empty()) return Field::prime(pp);
  return Field::extension(pp, kk, std::move(modulus));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  if (a.field_ != b.field_) throw FieldError("field mismatch");
  return {a.field_, a.field_.add(a.value_, b.value_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  if (a.field_ != b.field_) throw FieldError("field mismatch");
  return {a.field_, a.field_.sub(a.value_, b.value_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  if (a.field_ != b.field_) throw FieldError("field mismatch");
  return {a.field_, a.field_.mul(a.value_, b.value_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  if (a.field_ != b.field_) throw FieldError("field mismatch");
  return {a.field_, a.field_.mul(a.value_, a.field_.inv(b.value_))};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.field_.equal(a.value_, b.value_);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.to_string(); }
std::ostream& operator<<(std::ostream& os, const Field& f) { return os << f.spec(); }

bool embeds(const Field& from, const Field& to) {
  if (from == to) return true;
  if (from.characteristic() != to.characteristic()) return false;
  if (!from.is_finite()) return true;
  return to.degree() % from.degree() == 0;
}

Embedding::Embedding(const Field& from, const Field& to) : from_(from), to_(to) {
  if (from == to || !from.is_finite()) {
    if (!embeds(from, to)) throw FieldError("cannot embed " + from.spec() + " into " + to.spec());
    return;
  }
  if (!embeds(from, to)) throw FieldError("cannot embed " + from.spec() + " into " + to.spec());
  if (from.kind() == FieldKind::prime) {
    image_.resize(from.size());
    for (std::uint32_t c = 0; c < from.size(); ++c) image_[c] = c;
    return;
  }
  // Image of t: the smallest-code root of the source modulus in the target.
  const auto& m = from.modulus();
  std::uint32_t root = 0;
  bool found = false;
  for (std::uint32_t r = 0; r < to.size() && !found; ++r) {
    std::uint32_t acc = 0;
    for (std::size_t i = m.size(); i-- > 0;) acc = to.add_code(to.mul_code(acc, r), m[i]);
    if (acc == 0) {
      root = r;
      found = true;
    }
  }
  if (!found) throw FieldError("no root of the source modulus in " + to.spec());
  image_.resize(from.size());
  const std::uint32_t p = from.characteristic();
  for (std::uint32_t c = 0; c < from.size(); ++c) {
    std::uint32_t acc = 0, power = 1, rest = c;
    for (std::uint32_t i = 0; i < from.degree(); ++i) {
      acc = to.add_code(acc, to.mul_code(rest % p, power));
      rest /= p;
      power = to.mul_code(power, root);
    }
    image_[c] = acc;
  }
}

Scalar Embedding::operator()(const Scalar& s) const {
  if (image_.empty()) return s;
  return image_[std::get<std::uint32_t>(s)];
}

FieldElement Embedding::operator()(const FieldElement& e) const {
  if (e.field() != from_) throw FieldError("element is not in the embedding's source field");
  return FieldElement(to_, (*this)(e.value()));
}

RootsOfMinusOne roots_of_z_pow_d_plus_one(const Field& base, std::uint32_t d) {
  if (!base.is_finite()) throw FieldError("z^d + 1 need not split over Q; a finite field is required");
  if (d == 0) throw FieldError("d must be positive");
  const std::uint32_t p = base.characteristic();
  std::uint32_t reduced = d, multiplicity = 1;
  while (reduced % p == 0) {
    reduced /= p;
    multiplicity *= p;
  }

  std::vector<Field> candidates{base};
  for (const auto& f : table_fields(p))
    if (f.size() > base.size() && embeds(base, f)) candidates.push_back(f);

  for (const auto& host : candidates) {
    if (host.size() > kMaxFieldSize) continue;
    const std::uint32_t minus_one = host.neg_code(1);
    std::vector<std::uint32_t> found;
    for (std::uint32_t c = 1; c < host.size(); ++c) {
      if (host.code(host.pow(host.from_code(c), reduced)) == minus_one) found.push_back(c);
    }
    if (found.size() != reduced) continue;
    RootsOfMinusOne out{host, {}};
    for (auto c : found)
      for (std::uint32_t r = 0; r < multiplicity; ++r) out.roots.push_back(host.element_from_code(c));
    return out;
  }

  const std::uint64_t order = (p == 2) ? reduced : 2ull * reduced;
  std::uint32_t k = 1;
  std::uint64_t pk = p % order;
  while (pk != 1 % order && k < 64) {
    pk = pk * p % order;
    ++k;
  }
  throw FieldError("host too large: z^" + std::to_string(d) + "+1 splits only once the multiplicative group has order divisible by " +
                   std::to_string(order) + " (gf(" + std::to_string(p) + "^" + std::to_string(k) +
                   ") or an extension); no table field of size <= 2^20 over " + base.spec() + " qualifies");
}

namespace {

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = static_cast<std::uint64_t>((unsigned __int128)r * b % m);
    b = static_cast<std::uint64_t>((unsigned __int128)b * b % m);
    e >>= 1;
  }
  return r;
}

std::uint64_t small_binomial(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (b > a) return 0;
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    num = static_cast<std::uint64_t>((unsigned __int128)num * ((a - i) % p) % p);
    den = static_cast<std::uint64_t>((unsigned __int128)den * ((i + 1) % p) % p);
  }
  return static_cast<std::uint64_t>((unsigned __int128)num * powmod(den, p - 2, p) % p);
}

}  // namespace

std::uint32_t lucas_binomial(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
  if (!is_prime(p)) throw FieldError(std::to_string(p) + " is not prime");
  if (b > a) return 0;
  std::uint64_t result = 1 % p;
  while (a || b) {
    std::uint64_t ai = a % p, bi = b % p;
    if (bi > ai) return 0;
    result = result * small_binomial(ai, bi, p) % p;
    a /= p;
    b /= p;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace esym
