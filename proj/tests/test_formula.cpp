#include <doctest.h>

#include "esym/formula.hpp"
#include "esym/random.hpp"
#include "esym/symfunc.hpp"
#include "oracle.hpp"

using namespace esym;

namespace {

// Independent formal degree and size by recursion on the node table.
unsigned fdeg(const Formula& phi, NodeId v) {
  const auto& n = phi.node(v);
  if (n.kind == NodeKind::leaf) return n.label.degree() > 0 ? 1 : 0;
  const unsigned a = fdeg(phi, n.left), b = fdeg(phi, n.right);
  return n.kind == NodeKind::add ? std::max(a, b) : a + b;
}

std::size_t leaves(const Formula& phi, NodeId v) {
  const auto& n = phi.node(v);
  if (n.kind == NodeKind::leaf) return n.label.degree() > 0 ? 1 : 0;
  return leaves(phi, n.left) + leaves(phi, n.right);
}

Polynomial eval_tree(const Formula& phi, NodeId v) {
  const auto& n = phi.node(v);
  if (n.kind == NodeKind::leaf) return n.label.widened(phi.nvars());
  auto a = eval_tree(phi, n.left), b = eval_tree(phi, n.right);
  return n.kind == NodeKind::add ? a + b : a * b;
}

bool in_subtree(const Formula& phi, NodeId root, NodeId v) {
  for (std::optional<NodeId> u = v; u; u = phi.parent(*u))
    if (*u == root) return true;
  return false;
}

}  // namespace

TEST_SUITE("formula") {
  TEST_CASE("formal degree and size") {
    Field F = Field::prime(5);
    auto leaf = parse_formula("x1", F);
    CHECK(leaf.formal_degree() == 1);
    auto p = parse_formula("(x1+x2)*(x3*x4)", F);
    CHECK(p.formal_degree() == 3);
    CHECK(p.size() == 4);
    auto c = parse_formula("3", F);
    CHECK(c.formal_degree() == 0);
    CHECK(c.size() == 0);
  }

  TEST_CASE("parse, print and expand") {
    Field F = Field::prime(5);
    auto phi = parse_formula("(x1 + x2) * x3 + [x4 + 2] * 3", F);
    CHECK(phi.expand() == parse_polynomial("x1*x3 + x2*x3 + 3x4 + 1", F, 4));
    auto again = parse_formula(phi.to_string(), F);
    CHECK(again.expand() == phi.expand());
    CHECK(again.size() == phi.size());
    CHECK_THROWS(parse_formula("x1 *", F));
    CHECK_THROWS(parse_formula("[x1*x2]", F));
  }

  TEST_CASE("find_degree_vertex") {
    Field F = Field::prime(5);
    auto comb = parse_formula("x1*x2*x3*x4", F);
    auto v = find_degree_vertex(comb, 2);
    CHECK(comb.formal_degree(v) == 2);
    CHECK(comb.expand(v) == parse_polynomial("x1*x2", F));
    auto three = parse_formula("x1*x2*x3", F);
    CHECK(three.formal_degree(find_degree_vertex(three, 1)) == 1);
    CHECK_THROWS(find_degree_vertex(three, 2));

    SplitMix64 rng(500);
    for (int s = 0; s < 500; ++s) {
      auto phi = random_formula(rng, F, 1 + rng.uniform(6), 30);
      const unsigned d = phi.formal_degree();
      for (unsigned t = 1; 2 * t <= d; ++t) {
        auto u = find_degree_vertex(phi, t);
        REQUIRE(phi.formal_degree(u) >= t);
        REQUIRE(phi.formal_degree(u) <= 2 * t - 1);
      }
    }
  }

  TEST_CASE("split_linear") {
    Field F = Field::prime(5);
    auto phi = parse_formula("(x1+x2)*x3 + x5", F);
    NodeId x3 = 0;
    for (NodeId v = 0; v < phi.num_nodes(); ++v)
      if (phi.node(v).kind == NodeKind::leaf && phi.node(v).label == parse_polynomial("x3", F, 5)) x3 = v;
    auto s = split_linear(phi, x3);
    CHECK(s.h == parse_polynomial("x1 + x2", F, 5));
    CHECK(s.f == parse_polynomial("x5", F, 5));
    auto r = split_linear(phi, phi.root());
    CHECK(r.h == Polynomial::constant(F, 1, 5));
    CHECK(r.f.is_zero());
    auto sq = parse_formula("x1*x1", F);
    auto l = split_linear(sq, 0);
    CHECK(l.h == parse_polynomial("x1", F));
    CHECK(l.f.is_zero());
  }

  TEST_CASE("split_linear reconstruction on random formulas") {
    Field F = Field::prime(5);
    SplitMix64 rng(61);
    for (int s = 0; s < 200; ++s) {
      auto phi = random_formula(rng, F, 1 + rng.uniform(6), 30);
      const auto v = static_cast<NodeId>(rng.uniform(phi.num_nodes()));
      auto sp = split_linear(phi, v);
      REQUIRE(sp.h * phi.expand(v) + sp.f == phi.expand());
      auto gamma = random_element(rng, F);
      auto sub = substitute_vertex(phi, v, gamma);
      CHECK(sub.expand() == sp.h * Polynomial::constant(gamma, phi.nvars()) + sp.f);
      CHECK(sub.size() <= phi.size() - phi.size(v));
    }
  }

  TEST_CASE("peel_decompose") {
    Field F = Field::prime(5);
    SUBCASE("degree below threshold") {
      auto phi = parse_formula("x1*x2 + x3", F);
      auto dec = peel_decompose(phi, 3);
      CHECK(dec.k() == 0);
      CHECK(dec.residual.expand() == phi.expand());
    }
    SUBCASE("small example") {
      auto phi = parse_formula("(x1+x2)*(x3*x4) + x5", F);
      auto dec = peel_decompose(phi, 3);
      CHECK(dec.k() >= 1);
      CHECK(dec.residual.formal_degree() <= 2);
      CHECK(dec.reassembled() == phi.expand());
      CHECK(audit_peel(phi, dec).ok());
    }
    SUBCASE("fuzz with independent checks") {
      SplitMix64 rng(1234);
      for (int s = 0; s < 300; ++s) {
        auto phi = random_formula(rng, F, 1 + rng.uniform(6), 30);
        for (unsigned dp : {3u, 4u, 5u}) {
          auto dec = peel_decompose(phi, dp);
          Polynomial rhs = eval_tree(dec.residual, dec.residual.root());
          for (const auto& [f, g] : dec.pairs) {
            REQUIRE(f.is_constant_free());
            REQUIRE(g.is_constant_free());
            rhs += f * g;
          }
          REQUIRE(rhs == eval_tree(phi, phi.root()));
          REQUIRE(fdeg(dec.residual, dec.residual.root()) < dp);
          REQUIRE(dec.k() * dp <= 3 * leaves(phi, phi.root()));
        }
      }
    }
  }

  TEST_CASE("ben_or") {
    Field F7 = Field::prime(7);
    auto phi = ben_or(3, 2, F7);
    CHECK(oracle::is_esp(phi.expand(), 3, 2));
    auto c = ben_or(3, 0, F7);
    CHECK(c.expand() == Polynomial::constant(F7, 1, 3));
    CHECK_THROWS(ben_or(4, 2, Field::prime(3)));
    for (const char* spec : {"gf(11)", "gf(2^4)", "q"})
      for (unsigned n = 1; n <= 6; ++n)
        for (unsigned d = 0; d <= n; ++d) {
          auto b = ben_or(n, d, make_field(spec));
          REQUIRE(oracle::is_esp(b.expand(), n, d));
          CHECK(b.size() <= (n + 1) * n);
          CHECK(fdeg(b, b.root()) == b.formal_degree());
        }
  }

  TEST_CASE("lower_bound_report") {
    CHECK(lower_bound_report(6, 3, 2).bound == 2);
    CHECK(lower_bound_report(100, 50, 49).bound == 425);
    auto r = lower_bound_report(6, 3);
    CHECK(r.dim_defaulted);
    CHECK(r.dim_v2 == 2);
    REQUIRE(r.ben_or_size.has_value());
    CHECK(*r.ben_or_size == 42);
    CHECK_THROWS(lower_bound_report(6, 2, 1));
    CHECK_THROWS(lower_bound_report(6, 3, 7));
  }

  TEST_CASE("tree bookkeeping") {
    Field F = Field::prime(5);
    SplitMix64 rng(3);
    for (int s = 0; s < 50; ++s) {
      auto phi = random_formula(rng, F, 4, 20);
      for (NodeId v = 0; v < phi.num_nodes(); ++v) {
        CHECK(phi.formal_degree(v) == fdeg(phi, v));
        CHECK(phi.size(v) == leaves(phi, v));
        CHECK(phi.expand(v) == eval_tree(phi, v));
        CHECK(in_subtree(phi, phi.root(), v));
        CHECK(phi.expand(v).degree() <= static_cast<int>(phi.formal_degree(v)));
      }
    }
  }
}
