#pragma once

// Order-2 zero spaces V_2(f) = V(f, df/dx_1, ..., df/dx_n), with a fast path
// for f = e_d^n and exhaustive enumeration over small finite fields.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "esym/field.hpp"
#include "esym/poly.hpp"

namespace esym {

using Point = std::vector<FieldElement>;

/// f and all of its first partials vanish at the point.
bool is_order2_zero(const Polynomial& f, std::span<const FieldElement> point);

/// Same test for e_d^n at a point of length n, using
/// d e_d / dx_i = e_(d-1)(point without coordinate i).
bool is_order2_zero_esp(unsigned d, std::span<const FieldElement> point);

/// At most k distinct coordinate values.
bool in_s_k(std::span<const FieldElement> point, std::size_t k);

/// Number of nonzero coordinates.
std::size_t support_size(std::span<const FieldElement> point);

inline constexpr std::uint64_t default_point_cap = 1ull << 24;

struct V2PointSet {
  Field field;
  unsigned n = 0;
  unsigned d = 0;
  std::vector<Point> points;
  std::uint64_t count = 0;
  std::uint64_t scanned = 0;
};

/// Every point of V_2(e_d^n) over a finite field, in odometer order over the
/// code ordering of the field (last coordinate varies fastest).
V2PointSet enumerate_v2(unsigned n, unsigned d, const Field& field, std::uint64_t cap = default_point_cap);

struct DimensionEstimate {
  bool empty = false;
  /// Exact slope when every count is a power of p.
  std::optional<Rational> exact;
  double slope = 0.0;
  long rounded = 0;
};

/// Least-squares slope of log_p(count) against the extension degree k over
/// the entries with nonzero counts. Heuristic proxy for the dimension.
DimensionEstimate dimension_estimate(std::span<const std::pair<unsigned, std::uint64_t>> counts, std::uint32_t p);

struct LucasCheck {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint32_t residue = 0;  // C(a, b) mod p
};

struct WitnessFamily {
  std::uint32_t p = 0;
  unsigned d = 0;
  unsigned n = 0;
  unsigned parameter_arity = 0;  // d - 1
  std::vector<LucasCheck> checks;

  bool checks_vanish() const;
  /// (b_1, ..., b_(d-1)) -> (b_1, ..., b_(d-2), b_(d-1), ..., b_(d-1)).
  Point alpha(std::span<const FieldElement> beta) const;
};

/// Smallest n with n - d + 1 = p^j >= d - 1 for which the binomials
/// C(n-d+2, i), 2 <= i <= min(d, n-d+2), and C(n-d+1, i),
/// 1 <= i <= min(d-1, n-d+1), all vanish mod p. Requires d >= 2.
WitnessFamily witness_family(std::uint32_t p, unsigned d);

struct ContainmentResult {
  bool holds = true;
  bool exhaustive = false;
  std::uint64_t points_checked = 0;
  std::uint64_t common_zeros = 0;
};

/// Checks that every common zero of all f_i, g_i lies in V_2(sum f_i g_i).
/// Exhaustive when |F|^n <= 2^20, otherwise `trials` seeded random points.
ContainmentResult product_zero_containment(std::span<const std::pair<Polynomial, Polynomial>> factors,
                                           std::uint64_t trials, std::uint64_t seed);

}  // namespace esym
