#include "esym/certificate.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "esym/random.hpp"

namespace esym {

namespace {

void check_block_spec(const BlockPolynomialSpec& spec) {
  if (!is_prime(spec.p)) throw std::invalid_argument("p must be prime, got " + std::to_string(spec.p));
  if (spec.ell == 0) throw std::invalid_argument("ell must be positive");
  if (spec.n() > certificate_max_vars)
    throw std::invalid_argument("(p+1)*ell = " + std::to_string(spec.n()) + " exceeds the guard of " +
                                std::to_string(certificate_max_vars) + " variables");
}

Integer factorial(std::size_t n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

void partition_rec(std::uint32_t used, std::uint32_t full, std::size_t n, std::size_t block,
                   std::vector<std::uint32_t>& blocks,
                   const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  if (used == full) {
    visit(blocks);
    return;
  }
  const std::size_t anchor = static_cast<std::size_t>(std::countr_one(used));
  std::vector<std::size_t> free;
  for (std::size_t i = anchor + 1; i < n; ++i)
    if (!(used >> i & 1u)) free.push_back(i);
  const std::size_t r = block - 1;
  if (free.size() < r) return;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    std::uint32_t mask = 1u << anchor;
    for (auto i : idx) mask |= 1u << free[i];
    blocks.push_back(mask);
    partition_rec(used | mask, full, n, block, blocks, visit);
    blocks.pop_back();
    std::size_t pos = r;
    while (pos > 0 && idx[pos - 1] == free.size() - r + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct PruningSum {
  const Field& field;
  const std::unordered_map<std::uint32_t, std::uint32_t>& coeffs;
  std::size_t n;
  std::size_t block;
  std::uint32_t full;

  std::uint32_t run(std::uint32_t used) const {
    if (used == full) return 1u;
    const std::size_t anchor = static_cast<std::size_t>(std::countr_one(used));
    std::uint32_t acc = 0;
    for (const auto& [mask, c] : coeffs) {
      if (!(mask >> anchor & 1u) || (mask & used) || (mask & ((1u << anchor) - 1u))) continue;
      const std::uint32_t rest = run(used | mask);
      if (rest) acc = field.add_code(acc, field.mul_code(c, rest));
    }
    return acc;
  }
};

}  // namespace

Polynomial hard_poly(const BlockPolynomialSpec& spec) {
  check_block_spec(spec);
  const Field F = Field::prime(spec.p);
  const std::size_t b = spec.p + 1;
  Polynomial f(F, spec.n());
  for (std::size_t i = 0; i < spec.ell; ++i) {
    std::vector<std::uint32_t> e(spec.n(), 0);
    for (std::size_t j = 0; j < b; ++j) e[i * b + j] = 1;
    f.add_term(Monomial(std::move(e)), F.one());
  }
  return f;
}

Integer partition_count(std::size_t n, std::size_t block) {
  if (block == 0 || n % block != 0) return 0;
  const std::size_t blocks = n / block;
  Integer denom = factorial(blocks);
  const Integer bf = factorial(block);
  for (std::size_t i = 0; i < blocks; ++i) denom *= bf;
  return factorial(n) / denom;
}

void for_each_partition(std::size_t n, std::size_t block,
                        const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  if (block == 0 || n % block != 0) throw std::invalid_argument("n must be a multiple of the block size");
  if (n > 31) throw std::invalid_argument("for_each_partition supports at most 31 elements");
  std::vector<std::uint32_t> blocks;
  const std::uint32_t full = n == 0 ? 0u : static_cast<std::uint32_t>((1ull << n) - 1);
  partition_rec(0, full, n, block, blocks, visit);
}

PartitionSum partition_sum(const Polynomial& f, std::uint32_t p, std::uint64_t cap) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  const Field& F = f.field();
  if (F.characteristic() != p)
    throw std::invalid_argument("partition_sum: polynomial is over " + F.spec() + ", not characteristic " +
                                std::to_string(p));
  const std::size_t n = f.nvars(), b = p + 1;
  if (n % b != 0)
    throw std::invalid_argument("partition_sum: " + std::to_string(n) + " variables is not a multiple of p+1 = " +
                                std::to_string(b));
  if (n > certificate_max_vars) throw std::invalid_argument("partition_sum: too many variables");
  const Integer count = partition_count(n, b);
  if (count > Integer(std::to_string(cap)))
    throw std::invalid_argument("partition_sum: " + count.get_str() + " partitions exceed the cap of " +
                                std::to_string(cap));

  std::unordered_map<std::uint32_t, std::uint32_t> coeffs;
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() != b || !m.is_multilinear()) continue;
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < m.length(); ++i)
      if (m.exponent(i)) mask |= 1u << i;
    coeffs.emplace(mask, F.code(c));
  }
  const std::uint32_t full = n == 0 ? 0u : static_cast<std::uint32_t>((1ull << n) - 1);
  const PruningSum sum{F, coeffs, n, b, full};
  return {F.element_from_code(sum.run(0)), count.get_ui()};
}

CertificateReport certify_nonmembership(const Polynomial& f, std::uint32_t p, std::uint64_t cap) {
  const PartitionSum s = partition_sum(f, p, cap);
  CertificateReport r;
  r.p = p;
  r.n = f.nvars();
  r.ell = static_cast<std::uint32_t>(r.n / (p + 1));
  r.F_value = s.value;
  r.partitions_evaluated = s.partitions;
  r.field = f.field().spec();
  r.certified = !s.value.is_zero();
  if (r.certified) {
    r.nonmember_of_k_up_to = (r.ell + (p - 1) - 1) / (p - 1) - 1;
    r.border_valid = true;
  }
  return r;
}

Polynomial random_member(std::uint32_t k, std::uint32_t p, std::uint32_t ell, std::uint64_t seed) {
  const BlockPolynomialSpec spec{p, ell};
  check_block_spec(spec);
  const Field F = Field::prime(p);
  const std::size_t n = spec.n();
  SplitMix64 rng(seed);
  Polynomial f(F, n);
  for (std::uint32_t i = 0; i < k; ++i) {
    const auto d1 = static_cast<unsigned>(rng.between(1, (p + 1) / 2));
    const Polynomial a = random_homogeneous(rng, F, n, d1);
    const Polynomial b = random_homogeneous(rng, F, n, p + 1 - d1);
    f += a * b;
  }
  const auto powers = rng.uniform(4);
  for (std::uint64_t i = 0; i < powers; ++i) f += random_linear_form(rng, F, n).to_polynomial().pow(p + 1);
  return f.widened(n);
}

}  // namespace esym
