#include <doctest.h>

#include "esym/random.hpp"
#include "esym/symfunc.hpp"
#include "oracle.hpp"

using namespace esym;

TEST_SUITE("symfunc") {
  TEST_CASE("gen_esp against subset enumeration") {
    for (const char* spec : {"q", "gf(2)", "gf(3)", "gf(2^2)"}) {
      Field F = make_field(spec);
      for (unsigned n = 1; n <= 7; ++n)
        for (unsigned d = 0; d <= n; ++d) {
          CAPTURE(n);
          CAPTURE(d);
          REQUIRE(oracle::is_esp(gen_esp(n, d, F), n, d));
        }
    }
    Field Q = Field::rationals();
    CHECK(gen_esp(3, 2, Q).to_string() == "x1*x2 + x1*x3 + x2*x3");
    CHECK(gen_esp(4, 0, Q) == Polynomial::constant(Q, 1, 4));
    CHECK(gen_esp(5, 5, Field::prime(2)).to_string() == "x1*x2*x3*x4*x5");
    CHECK_THROWS(gen_esp(3, 4, Q));
  }

  TEST_CASE("power sums") {
    Field Q = Field::rationals(), F2 = Field::prime(2);
    CHECK(gen_power_sum(3, 1, Q) == gen_esp(3, 1, Q));
    CHECK(gen_power_sum(2, 2, F2) == parse_polynomial("x1^2 + x2^2", F2));
    CHECK(gen_power_sum(2, 2, F2) == parse_polynomial("x1 + x2", F2).pow(2));
    CHECK(gen_power_sum(2, 3, Q) == parse_polynomial("x1^3 + x2^3", Q));
  }

  TEST_CASE("esp of arbitrary values matches the oracle") {
    SplitMix64 rng(5);
    for (const char* spec : {"gf(3)", "gf(2^2)", "q"}) {
      Field F = make_field(spec);
      for (int t = 0; t < 10; ++t) {
        std::vector<Polynomial> vals;
        const auto m = 1 + rng.uniform(5);
        for (std::uint64_t i = 0; i < m; ++i) vals.push_back(random_homogeneous(rng, F, 3, 1 + rng.uniform(2)));
        for (unsigned d = 0; d <= m + 1; ++d) CHECK(esp_of(F, vals, d, 3) == oracle::esp_of_polys(F, vals, d, 3));
        auto prefix = esp_prefix(F, vals, static_cast<unsigned>(m), 3);
        REQUIRE(prefix.size() == m + 1);
        for (unsigned d = 0; d <= m; ++d) CHECK(prefix[d] == oracle::esp_of_polys(F, vals, d, 3));
      }
    }
  }

  TEST_CASE("identity names round trip") {
    for (auto k : all_identity_kinds) CHECK(parse_identity_kind(identity_name(k)) == k);
    CHECK_FALSE(parse_identity_kind("bogus").has_value());
  }

  TEST_CASE("named identity instances") {
    Field Q = Field::rationals(), F2 = Field::prime(2);
    CHECK(verify_identity(IdentityKind::newton, {3, 0, 3}, Q).holds);
    auto euler = verify_identity(IdentityKind::euler, {4, 0, 2}, F2);
    CHECK(euler.holds);
    CHECK(euler.discrepancy.is_zero());
    CHECK(verify_identity(IdentityKind::generating_function, {3, 0, 0}, Q).holds);
    CHECK(verify_identity(IdentityKind::split, {2, 3, 3}, F2).holds);
    CHECK(verify_identity(IdentityKind::partial_derivative, {4, 0, 3}, Field::prime(3)).holds);
  }

  TEST_CASE("identity grid") {
    for (const char* spec : {"q", "gf(2)", "gf(3)", "gf(2^2)", "gf(5)"}) {
      Field F = make_field(spec);
      for (auto k : all_identity_kinds)
        for (unsigned n = 1; n <= 5; ++n)
          for (unsigned d = 0; d <= n; ++d) {
            if (k == IdentityKind::split) {
              for (unsigned m = 0; m <= 2; ++m) REQUIRE(verify_identity(k, {n, m, d}, F).holds);
            } else {
              REQUIRE(verify_identity(k, {n, 0, d}, F).holds);
            }
          }
    }
  }

  TEST_CASE("identity preconditions") {
    Field Q = Field::rationals();
    CHECK_THROWS(verify_identity(IdentityKind::newton, {3, 0, 4}, Q));
    CHECK_THROWS(verify_identity(IdentityKind::euler, {0, 0, 0}, Q));
    CHECK_THROWS(verify_identity(IdentityKind::split, {10, 10, 2}, Q));
  }
}
