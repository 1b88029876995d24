#include <doctest.h>

#include <set>

#include "esym/certificate.hpp"
#include "esym/random.hpp"
#include "esym/symmodel.hpp"
#include "oracle.hpp"

using namespace esym;

TEST_SUITE("certificate") {
  TEST_CASE("hard_poly") {
    Field F2 = Field::prime(2), F3 = Field::prime(3);
    CHECK(hard_poly({2, 2}) == parse_polynomial("x1*x2*x3 + x4*x5*x6", F2));
    CHECK(hard_poly({2, 1}) == parse_polynomial("x1*x2*x3", F2));
    CHECK(hard_poly({3, 2}) == parse_polynomial("x1*x2*x3*x4 + x5*x6*x7*x8", F3));
    CHECK_THROWS(hard_poly({2, 9}));
  }

  TEST_CASE("partition counts agree with the restricted-growth enumerator") {
    for (auto [n, b] : std::vector<std::pair<std::size_t, std::size_t>>{{6, 3}, {9, 3}, {8, 4}, {12, 4}, {12, 3}, {6, 2}}) {
      std::uint64_t ours = 0;
      std::set<std::vector<std::uint32_t>> seen;
      for_each_partition(n, b, [&](const std::vector<std::uint32_t>& blocks) {
        ++ours;
        auto sorted = blocks;
        std::sort(sorted.begin(), sorted.end());
        seen.insert(sorted);
        std::uint32_t all = 0;
        for (auto m : blocks) {
          CHECK(static_cast<std::size_t>(__builtin_popcount(m)) == b);
          CHECK((all & m) == 0);
          all |= m;
        }
        CHECK(all == (1u << n) - 1);
      });
      std::uint64_t theirs = 0;
      oracle::rgs_partitions(n, b, [&](const auto&) { ++theirs; });
      CHECK(ours == theirs);
      CHECK(seen.size() == ours);
      CHECK(partition_count(n, b) == Integer(static_cast<unsigned long>(ours)));
    }
    CHECK(partition_count(6, 3) == 10);
    CHECK(partition_count(9, 3) == 280);
    CHECK(partition_count(8, 4) == 35);
    CHECK(partition_count(12, 4) == 5775);
  }

  TEST_CASE("partition_sum examples") {
    auto r = partition_sum(hard_poly({2, 2}), 2);
    CHECK(r.value.is_one());
    CHECK(r.partitions == 10);
    CHECK(partition_sum(Polynomial(Field::prime(2), 6), 2).value.is_zero());
    CHECK_THROWS(partition_sum(hard_poly({2, 2}), 3));
    CHECK_THROWS(partition_sum(hard_poly({2, 3}), 2, 100));
  }

  TEST_CASE("partition_sum agrees with the oracle on random polynomials") {
    SplitMix64 rng(2024);
    for (std::uint32_t p : {2u, 3u}) {
      Field F = Field::prime(p);
      const std::size_t n = 2 * (p + 1);
      for (int t = 0; t < 25; ++t) {
        auto f = random_homogeneous(rng, F, n, p + 1);
        auto want = oracle::partition_sum(f, p);
        auto got = partition_sum(f, p);
        CHECK(got.value.code() == want.value);
        CHECK(got.partitions == want.count);
      }
    }
  }

  TEST_CASE("partition_sum ignores non-multilinear terms") {
    SplitMix64 rng(8);
    Field F = Field::prime(2);
    auto f = hard_poly({2, 2});
    for (int t = 0; t < 10; ++t) {
      auto q = random_linear_form(rng, F, 6).to_polynomial();
      CHECK(partition_sum(f + q.pow(3), 2).value == partition_sum(f, 2).value);
    }
  }

  TEST_CASE("single reducible cubic over GF(2) sums to zero") {
    SplitMix64 rng(99);
    Field F = Field::prime(2);
    for (int t = 0; t < 20; ++t) {
      auto a = random_homogeneous(rng, F, 6, 2), b = random_homogeneous(rng, F, 6, 1);
      CHECK(partition_sum(a * b, 2).value.is_zero());
      CHECK(oracle::partition_sum(a * b, 2).value == 0);
    }
  }

  TEST_CASE("one reducible quartic over GF(3) can have a nonzero sum") {
    Field F3 = Field::prime(3);
    auto g = parse_polynomial("x1*x2 + x5*x6", F3, 8) * parse_polynomial("x3*x4 + x7*x8", F3, 8);
    CHECK(partition_sum(g, 3).value == F3.element_from_integer(2));
    CHECK(oracle::partition_sum(g, 3).value == 2);
  }

  TEST_CASE("certify_nonmembership") {
    auto r = certify_nonmembership(hard_poly({2, 2}), 2);
    CHECK(r.certified);
    CHECK(r.status() == "certificate");
    CHECK(r.nonmember_of_k_up_to == 1);
    CHECK(r.border_valid);
    CHECK(r.partitions_evaluated == 10);

    auto r3 = certify_nonmembership(hard_poly({3, 3}), 3);
    CHECK(r3.partitions_evaluated == 5775);
    CHECK(r3.certified);
    CHECK(r3.nonmember_of_k_up_to == 1);

    auto m = certify_nonmembership(random_member(1, 2, 2, 7), 2);
    CHECK_FALSE(m.certified);
    CHECK(m.status() == "inconclusive");
    CHECK(m.nonmember_of_k_up_to == 0);
    CHECK(m.F_value.is_zero());
  }

  TEST_CASE("random_member") {
    CHECK(random_member(1, 2, 2, 7) == random_member(1, 2, 2, 7));
    CHECK(partition_sum(random_member(1, 2, 2, 7), 2).value.is_zero());
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto f = random_member(0, 3, 2, seed);
      CHECK(partition_sum(f, 3).value.is_zero());
      CHECK(f.nvars() == 8);
      CHECK((f.is_zero() || f.is_homogeneous(4)));
    }
  }
}
