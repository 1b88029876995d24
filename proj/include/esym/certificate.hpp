#pragma once

// The partition-sum metapolynomial
//   F(f) = sum over partitions I of [n] into blocks of size p+1 of
//          prod_{B in I} c_B(f),
// where c_B is the coefficient of the multilinear monomial prod_{i in B} x_i.
// F(f) != 0 certifies that f lies outside (border) Sigma^[k]Sym for small k.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "esym/field.hpp"
#include "esym/poly.hpp"

namespace esym {

inline constexpr std::size_t certificate_max_vars = 24;
inline constexpr std::uint64_t default_partition_cap = 10'000'000;

struct BlockPolynomialSpec {
  std::uint32_t p = 2;
  std::uint32_t ell = 1;
  std::size_t n() const { return static_cast<std::size_t>(p + 1) * ell; }
};

/// sum_{i=1}^{ell} prod of the i-th block of p+1 consecutive variables, over GF(p).
Polynomial hard_poly(const BlockPolynomialSpec& spec);

/// n! / ((b!)^(n/b) (n/b)!), the number of partitions of [n] into blocks of size b.
Integer partition_count(std::size_t n, std::size_t block);

/// Visits every partition of {0..n-1} into blocks of size `block` in canonical
/// order: each block is anchored at the smallest unused index and the
/// remaining members are chosen in lexicographic order. Blocks are bitmasks.
void for_each_partition(std::size_t n, std::size_t block,
                        const std::function<void(const std::vector<std::uint32_t>&)>& visit);

struct PartitionSum {
  FieldElement value;
  std::uint64_t partitions = 0;  // total number of partitions of [n]
};

/// Throws if nvars is not divisible by p+1, if f is not over a field of
/// characteristic p, or if the partition count exceeds `cap`.
PartitionSum partition_sum(const Polynomial& f, std::uint32_t p, std::uint64_t cap = default_partition_cap);

struct CertificateReport {
  std::uint32_t p = 0;
  std::size_t n = 0;
  std::uint32_t ell = 0;
  FieldElement F_value;
  bool certified = false;
  /// f is outside closure(Sigma^[k]Sym) and border Sigma^[k]PiSigma for all
  /// k <= this bound (0 and meaningless when not certified).
  std::uint32_t nonmember_of_k_up_to = 0;
  bool border_valid = false;
  std::uint64_t partitions_evaluated = 0;
  std::string field;

  std::string status() const { return certified ? "certificate" : "inconclusive"; }
};

CertificateReport certify_nonmembership(const Polynomial& f, std::uint32_t p,
                                        std::uint64_t cap = default_partition_cap);

/// Sum of k random reducible homogeneous polynomials of degree p+1 (factor
/// degrees d1 in [1, (p+1)/2] and p+1-d1, dense random coefficients) plus 0..3
/// random (p+1)-th powers of linear forms, in (p+1)*ell variables over GF(p).
Polynomial random_member(std::uint32_t k, std::uint32_t p, std::uint32_t ell, std::uint64_t seed);

}  // namespace esym
