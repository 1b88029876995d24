#pragma once

// Exact field arithmetic: the rationals, prime fields GF(p) and extension
// fields GF(p^k) = GF(p)[t]/(modulus).
//
// A Field is a cheap, immutable handle. Coefficients are stored as raw
// Scalars whose meaning depends on the owning field: finite-field elements
// are integer codes in [0, q) (code = sum c_i p^i for c_0 + c_1 t + ...),
// rationals are GMP rationals in lowest terms.

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace esym {

using Integer = mpz_class;
using Rational = mpq_class;

enum class FieldKind { rationals, prime, extension };

using Scalar = std::variant<std::uint32_t, Rational>;

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {
struct FieldImpl;
}

class FieldElement;

class Field {
 public:
  /// The rationals.
  Field();

  static Field rationals();
  static Field prime(std::uint32_t p);
  /// GF(p^k). Without a modulus the built-in table entry is used; a
  /// user modulus is a coefficient list, constant first, monic of degree k.
  static Field extension(std::uint32_t p, std::uint32_t k,
                         std::vector<std::uint32_t> modulus = {});

  FieldKind kind() const;
  bool is_finite() const { return kind() != FieldKind::rationals; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const;
  /// Extension degree over the prime field (1 for prime fields and Q).
  std::uint32_t degree() const;
  /// Number of elements; 0 for the rationals.
  std::uint64_t size() const;
  /// Dense modulus coefficients, constant first (extension fields only).
  const std::vector<std::uint32_t>& modulus() const;
  /// Whether the modulus is the built-in table entry for (p, k).
  bool uses_table_modulus() const;

  /// Canonical field string, accepted by make_field.
  std::string spec() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_integer(long long v) const;
  Scalar from_integer(const Integer& v) const;
  /// Finite fields only: element with the given code.
  Scalar from_code(std::uint32_t code) const;
  std::uint32_t code(const Scalar& s) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Throws std::domain_error on zero.
  Scalar inv(const Scalar& a) const;
  Scalar pow(const Scalar& a, std::uint64_t e) const;
  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  bool equal(const Scalar& a, const Scalar& b) const;

  // Hot-path arithmetic on codes (finite fields only, no validation).
  std::uint32_t add_code(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub_code(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul_code(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_code(std::uint32_t a) const;
  std::uint32_t inv_code(std::uint32_t a) const;

  std::string format(const Scalar& s) const;
  Scalar parse(std::string_view text) const;

  FieldElement element(const Scalar& s) const;
  FieldElement element_from_code(std::uint32_t code) const;
  FieldElement element_from_integer(long long v) const;
  /// Parses an element literal in this field's syntax.
  FieldElement element(std::string_view text) const;

  /// All elements in canonical (code) order. Finite fields only.
  std::vector<FieldElement> elements() const;

  bool same_as(const Field& other) const { return impl_ == other.impl_; }
  friend bool operator==(const Field& a, const Field& b);
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  explicit Field(std::shared_ptr<const detail::FieldImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const detail::FieldImpl> impl_;
};

/// Parses `q`, `gf(P)`, `gf(P^K)` or `gf(P^K;c0,c1,...,cK)`.
Field make_field(std::string_view spec);

/// The fixed modulus table entry for (p, k), empty if absent.
std::vector<std::uint32_t> table_modulus(std::uint32_t p, std::uint32_t k);

/// Table extensions (and prime fields) in increasing size, for host search.
std::vector<Field> table_fields(std::uint32_t p);

class FieldElement {
 public:
  FieldElement() : field_(), value_(field_.zero()) {}
  FieldElement(Field field, Scalar value) : field_(std::move(field)), value_(std::move(value)) {}

  const Field& field() const { return field_; }
  const Scalar& value() const { return value_; }
  std::uint32_t code() const { return field_.code(value_); }

  bool is_zero() const { return field_.is_zero(value_); }
  bool is_one() const { return field_.is_one(value_); }

  FieldElement inverse() const { return {field_, field_.inv(value_)}; }
  FieldElement pow(std::uint64_t e) const { return {field_, field_.pow(value_, e)}; }

  FieldElement operator-() const { return {field_, field_.neg(value_)}; }
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  std::string to_string() const { return field_.format(value_); }

 private:
  Field field_;
  Scalar value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);
std::ostream& operator<<(std::ostream& os, const Field& f);

/// Maps elements of `from` into `to` when `from` is a subfield of `to`
/// (identity, prime-field inclusion, or GF(p^a) into GF(p^b) with a | b).
class Embedding {
 public:
  Embedding(const Field& from, const Field& to);

  const Field& source() const { return from_; }
  const Field& target() const { return to_; }
  Scalar operator()(const Scalar& s) const;
  FieldElement operator()(const FieldElement& e) const;

 private:
  Field from_;
  Field to_;
  std::vector<std::uint32_t> image_;  // code map for finite extensions
};

bool embeds(const Field& from, const Field& to);

/// Roots of z^d + 1 with multiplicity, in the smallest host field.
struct RootsOfMinusOne {
  Field host;
  std::vector<FieldElement> roots;
};

/// Roots of z^d + 1 in the smallest table extension of `base` in which it
/// splits. When p | d the roots of z^(d/p^a) + 1 are repeated p^a times.
RootsOfMinusOne roots_of_z_pow_d_plus_one(const Field& base, std::uint32_t d);

/// C(a, b) mod p by Lucas's digitwise product.
std::uint32_t lucas_binomial(std::uint64_t a, std::uint64_t b, std::uint32_t p);

bool is_prime(std::uint64_t n);

}  // namespace esym
