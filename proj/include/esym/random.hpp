#pragma once

// Deterministic pseudo-random generation for fuzzing and experiments.
//
// SplitMix64: state += 0x9E3779B97F4A7C15, then the output is mixed by
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   z ^ (z >> 31)
// Bounded draws use rejection: a draw r is accepted iff r >= (2^64 - b) mod b,
// and the result is r mod b.

#include <cstdint>

#include "esym/field.hpp"
#include "esym/poly.hpp"

namespace esym {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t uniform(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(uniform(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::uint64_t state_;
};

/// Uniform element of a finite field; an integer in [-3, 3] over Q.
FieldElement random_element(SplitMix64& rng, const Field& field);
FieldElement random_nonzero_element(SplitMix64& rng, const Field& field);

LinearForm random_linear_form(SplitMix64& rng, const Field& field, std::size_t nvars);

/// Every degree-d monomial in nvars variables receives an independent random
/// coefficient (so zero coefficients occur with probability 1/q).
Polynomial random_homogeneous(SplitMix64& rng, const Field& field, std::size_t nvars, unsigned degree);

/// All exponent vectors of total degree d in n variables, in graded-lex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

}  // namespace esym
