// Acceptance checks 1-11. Prints one PASS/FAIL line per criterion.
// Usage: acceptance [criterion ...]   (default: all)

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "esym/border.hpp"
#include "esym/certificate.hpp"
#include "esym/formula.hpp"
#include "esym/random.hpp"
#include "esym/symfunc.hpp"
#include "esym/symmodel.hpp"
#include "esym/v2space.hpp"
#include "oracle.hpp"

using namespace esym;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : "; ") + p;
  return s;
}

Polynomial random_nonzero_quadratic(SplitMix64& rng, const Field& F, std::size_t n) {
  while (true) {
    auto f = random_homogeneous(rng, F, n, 2);
    if (!f.is_zero()) return f;
  }
}

// e_k of forms by pairwise/explicit expansion for k <= 2.
Polynomial pairwise_e2(const std::vector<LinearForm>& forms, const Field& F, std::size_t n) {
  Polynomial s(F, n);
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = i + 1; j < forms.size(); ++j)
      s += forms[i].to_polynomial().widened(n) * forms[j].to_polynomial().widened(n);
  return s;
}

Polynomial sum_forms(const std::vector<LinearForm>& forms, const Field& F, std::size_t n) {
  Polynomial s(F, n);
  for (const auto& l : forms) s += l.to_polynomial().widened(n);
  return s;
}

// 1 ---------------------------------------------------------------------------
Outcome criterion1() {
  std::size_t cases = 0, failures = 0, oracle_mismatch = 0;
  std::vector<std::string> bad;
  for (const char* spec : {"q", "gf(2)", "gf(3)", "gf(2^2)", "gf(5)"}) {
    const Field F = make_field(spec);
    for (unsigned n = 1; n <= 10; ++n)
      for (unsigned d = 0; d <= n; ++d)
        if (!oracle::is_esp(gen_esp(n, d, F), n, d)) ++oracle_mismatch;
    for (auto kind : all_identity_kinds) {
      for (unsigned n = 1; n <= 10; ++n) {
        auto check = [&](unsigned m, unsigned d) {
          ++cases;
          if (!verify_identity(kind, {n, m, d}, F).holds) {
            ++failures;
            if (bad.size() < 5)
              bad.push_back(std::string(identity_name(kind)) + "(" + spec + ",n=" + std::to_string(n) +
                            ",m=" + std::to_string(m) + ",d=" + std::to_string(d) + ")");
          }
        };
        if (kind == IdentityKind::generating_function) {
          check(0, 0);
        } else if (kind == IdentityKind::split) {
          for (unsigned m = 0; n + m <= 10; ++m)
            for (unsigned d = 0; d <= n + m; ++d) check(m, d);
        } else {
          for (unsigned d = 0; d <= n; ++d) check(0, d);
        }
      }
    }
  }
  std::ostringstream os;
  os << cases << " identity instances over Q, GF(2), GF(3), GF(4), GF(5), " << failures
     << " failures; gen_esp vs subset oracle mismatches " << oracle_mismatch;
  if (!bad.empty()) os << " [" << join(bad) << "]";
  return {failures == 0 && oracle_mismatch == 0, os.str()};
}

// 2 ---------------------------------------------------------------------------
Outcome criterion2() {
  const Field F4 = make_field("gf(2^2)");
  int bad = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SplitMix64 rng(seed);
    const std::size_t n = 1 + rng.uniform(6);
    const Polynomial f = random_homogeneous(rng, F4, n, 2);
    const SymRepresentation rep = quadratic_to_sym(f);
    const Polynomial e2 = pairwise_e2(rep.forms, rep.field, n);
    const Polynomial e1 = sum_forms(rep.forms, rep.field, n);
    if (!(e2 == lift(f, rep.field)) || !e1.is_zero() || !(rep.realized() == rep.target)) ++bad;
  }
  return {bad == 0, "100 random quadratics over GF(4), n <= 6: " + std::to_string(bad) +
                        " with e_2(forms) != f or e_1(forms) != 0"};
}

// 3 ---------------------------------------------------------------------------
Outcome criterion3() {
  int bad = 0, cases = 0;
  for (std::uint32_t p : {2u, 3u}) {
    const Field F = Field::prime(p);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      SplitMix64 rng(seed * 2654435761u + p);
      const std::size_t n = 1 + rng.uniform(4);
      const unsigned d = 2 + static_cast<unsigned>(rng.uniform(3));
      std::vector<LinearForm> forms;
      const auto m = rng.uniform(5);
      for (std::uint64_t i = 0; i < m; ++i) forms.push_back(random_linear_form(rng, F, n));
      const SymRepresentation rep = make_representation(F, d, forms, n);
      const LinearForm q = random_linear_form(rng, F, n);
      const SymRepresentation out = append_linear_power(rep, q);
      const Polynomial before = oracle::esp_of_linear(F, forms, d, n);
      const Polynomial after = oracle::esp_of_linear(out.field, out.forms, d, n);
      const Polynomial gain = lift(q.to_polynomial().widened(n), out.field).pow(d);
      ++cases;
      if (out.size() != rep.size() + d || !(after == lift(before, out.field) + gain) || !(out.realized() == out.target))
        ++bad;
    }
  }
  return {bad == 0, std::to_string(cases) + " (rep, q) cases in characteristic 2 and 3: " + std::to_string(bad) +
                        " where the target did not gain exactly q^d"};
}

// 4 ---------------------------------------------------------------------------
Outcome criterion4() {
  int bad = 0, cases = 0;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const Field F = Field::prime(p);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      SplitMix64 rng(seed + 1000 * p);
      const std::size_t m = 1 + rng.uniform(6), n = 1 + rng.uniform(4);
      std::vector<LinearForm> forms;
      for (std::size_t i = 0; i < m; ++i) forms.push_back(random_linear_form(rng, F, n));
      const SymRepresentation rep = make_representation(F, p + 1, forms, n);
      const NewtonDecomposition dec = newton_decompose(rep);
      const Polynomial want = oracle::esp_of_linear(F, forms, p + 1, n);
      bool ok = dec.assembled() == want && dec.reducibles.size() == p - 1;
      for (const auto& r : dec.reducibles) ok = ok && r.product == r.factor_low * r.factor_high;
      ++cases;
      if (!ok) ++bad;
    }
  }
  return {bad == 0, std::to_string(cases) + " decompositions, p in {2,3,5}, m <= 6, n <= 4: " + std::to_string(bad) +
                        " discrepancies"};
}

// 5 ---------------------------------------------------------------------------
Outcome criterion5() {
  struct Setting {
    std::uint32_t p, ell;
    std::uint64_t partitions;
    std::uint32_t k;
  };
  std::vector<std::string> parts;
  bool ok = true;
  for (Setting s : {Setting{2, 2, 10, 1}, Setting{2, 3, 280, 2}, Setting{3, 2, 35, 0}}) {
    const Polynomial f = hard_poly({s.p, s.ell});
    const PartitionSum ps = partition_sum(f, s.p);
    const auto ref = oracle::partition_sum(f, s.p);
    const CertificateReport r = certify_nonmembership(f, s.p);
    const bool here = ps.value.is_one() && ref.value == 1 && ps.partitions == s.partitions && ref.count == s.partitions &&
                      r.certified && r.border_valid && r.nonmember_of_k_up_to == s.k;
    ok = ok && here;
    parts.push_back("(p=" + std::to_string(s.p) + ",l=" + std::to_string(s.ell) + ") F=" + ps.value.to_string() +
                    " over " + std::to_string(ps.partitions) + " partitions, k<=" +
                    std::to_string(r.nonmember_of_k_up_to));
  }
  return {ok, join(parts)};
}

// 6 ---------------------------------------------------------------------------
Outcome criterion6() {
  struct Setting {
    std::uint32_t p, ell, k;
  };
  std::vector<std::string> parts;
  std::size_t violations = 0, mismatches = 0;
  for (Setting s : {Setting{2, 2, 1}, Setting{2, 3, 1}, Setting{2, 3, 2}, Setting{3, 2, 1}}) {
    std::size_t v = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const Polynomial f = random_member(s.k, s.p, s.ell, seed);
      const PartitionSum ps = partition_sum(f, s.p);
      if (ps.value.code() != oracle::partition_sum(f, s.p).value) ++mismatches;
      if (!ps.value.is_zero()) ++v;
    }
    violations += v;
    parts.push_back("(p,l,k)=(" + std::to_string(s.p) + "," + std::to_string(s.ell) + "," + std::to_string(s.k) +
                    "): " + std::to_string(v) + "/50 nonzero" +
                    (s.ell > s.k * (s.p - 1) ? "" : " [l > k(p-1) fails for this setting]"));
  }
  return {violations == 0 && mismatches == 0,
          "200 random members: " + std::to_string(violations) + " violations, " + std::to_string(mismatches) +
              " oracle mismatches; " + join(parts)};
}

// 7 ---------------------------------------------------------------------------
Outcome criterion7() {
  std::size_t sets = 0, violations = 0, count_mismatch = 0;
  auto scan = [&](const Field& F, unsigned nmax) {
    const auto G = oracle::GF::of(F);
    for (unsigned n = 1; n <= nmax; ++n)
      for (unsigned d = 1; d <= n; ++d) {
        const V2PointSet s = enumerate_v2(n, d, F);
        ++sets;
        for (const auto& pt : s.points) {
          std::vector<std::uint32_t> xs;
          for (const auto& x : pt) xs.push_back(x.code());
          if (!in_s_k(pt, d - 1)) ++violations;
          if (!oracle::esp_order2_zero(G, xs, d)) ++count_mismatch;
        }
      }
  };
  scan(Field::prime(2), 6);
  scan(make_field("gf(2^2)"), 5);
  std::vector<std::uint64_t> counts;
  bool counts_ok = true;
  for (std::uint32_t k = 1; k <= 3; ++k) {
    const Field F = k == 1 ? Field::prime(2) : Field::extension(2, k);
    counts.push_back(enumerate_v2(5, 2, F).count);
    counts_ok = counts_ok && counts.back() == (1ull << k);
  }
  std::ostringstream os;
  os << sets << " exhaustive scans (GF(2) n<=6, GF(4) n<=5): " << violations
     << " points with more than d-1 distinct coordinates, " << count_mismatch << " non-V2 points; |V2(e_2^5)| over GF(2^k), k=1..3: "
     << counts[0] << "," << counts[1] << "," << counts[2];
  return {violations == 0 && count_mismatch == 0 && counts_ok, os.str()};
}

// 8 ---------------------------------------------------------------------------
Outcome criterion8() {
  struct Setting {
    std::uint32_t p;
    unsigned d;
    const char* field;
  };
  std::vector<std::string> parts;
  bool ok = true;
  for (Setting s : {Setting{2, 2, "gf(2^8;1,1,0,1,1,0,0,0,1)"}, Setting{2, 3, "gf(2^8;1,1,0,1,1,0,0,0,1)"},
                    Setting{3, 2, "gf(3^3)"}}) {
    const WitnessFamily w = witness_family(s.p, s.d);
    const Field F = make_field(s.field);
    const auto G = oracle::GF::of(F);
    const Polynomial f = gen_esp(w.n, w.d, F);
    std::size_t failures = 0;
    SplitMix64 rng(s.p * 100 + s.d);
    for (int t = 0; t < 1000; ++t) {
      Point beta;
      for (unsigned i = 0; i < w.parameter_arity; ++i) beta.push_back(random_element(rng, F));
      const Point a = w.alpha(beta);
      std::vector<std::uint32_t> xs;
      for (const auto& x : a) xs.push_back(x.code());
      if (!is_order2_zero(f, a) || !oracle::esp_order2_zero(G, xs, w.d)) ++failures;
    }
    bool lucas = w.checks_vanish() && !w.checks.empty();
    for (const auto& c : w.checks) lucas = lucas && c.residue == 0 && lucas_binomial(c.a, c.b, s.p) == 0;
    ok = ok && failures == 0 && lucas;
    parts.push_back("(p=" + std::to_string(s.p) + ",d=" + std::to_string(s.d) + ",n=" + std::to_string(w.n) + ") " +
                    std::to_string(failures) + "/1000 failures, Lucas " + (lucas ? "ok" : "nonzero"));
  }
  return {ok, join(parts)};
}

// 9 ---------------------------------------------------------------------------
Outcome criterion9() {
  const Field F = Field::prime(5);
  std::size_t runs = 0, violations = 0, size_exceeded = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    SplitMix64 rng(seed);
    const std::size_t n = 1 + rng.uniform(6);
    const Formula phi = random_formula(rng, F, n, 30);
    if (phi.size() > 30) ++size_exceeded;
    const Polynomial lhs = phi.expand();
    for (unsigned dp : {3u, 4u, 5u}) {
      ++runs;
      const PeelDecomposition dec = peel_decompose(phi, dp);
      Polynomial rhs = dec.residual.expand();
      bool constant_free = true;
      for (const auto& [f, g] : dec.pairs) {
        constant_free = constant_free && f.is_constant_free() && g.is_constant_free();
        rhs += f * g;
      }
      const bool identity = rhs == lhs;
      const bool degree = dec.residual.formal_degree() < dp;
      const bool size = Rational(static_cast<long>(dec.k() * dp), 3) <= Rational(static_cast<long>(phi.size()));
      if (!(identity && constant_free && degree && size && audit_peel(phi, dec).ok())) ++violations;
    }
  }
  return {violations == 0 && size_exceeded == 0,
          std::to_string(runs) + " peel runs on 500 random formulas (size <= 30, n <= 6, GF(5)), d' in {3,4,5}: " +
              std::to_string(violations) + " violations"};
}

// 10 --------------------------------------------------------------------------
Outcome criterion10() {
  const Field F = Field::prime(11);
  std::size_t cases = 0, wrong = 0, too_big = 0, bound_above = 0;
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned d = 0; d <= n; ++d) {
      ++cases;
      const Formula phi = ben_or(n, d, F);
      if (!(phi.expand() == gen_esp(n, d, F)) || !oracle::is_esp(phi.expand(), n, d)) ++wrong;
      if (phi.size() > static_cast<std::size_t>(n + 1) * n) ++too_big;
      if (d >= 3) {
        const LowerBoundReport r = lower_bound_report(n, d, d - 1);
        if (r.bound > Rational(static_cast<long>(phi.size()))) ++bound_above;
      }
    }
  std::ostringstream os;
  os << cases << " (n,d) pairs over GF(11): " << wrong << " unequal to e_d^n, " << too_big
     << " exceeding (n+1)n, " << bound_above << " with lower bound above the formula size";
  return {wrong == 0 && too_big == 0 && bound_above == 0, os.str()};
}

// 11 --------------------------------------------------------------------------

// prod(1 + e L_i) - 1 with e as an extra variable, then the e^2 coefficient.
Polynomial eps_coefficient_by_expansion(const std::vector<LinearForm>& forms, const Field& F, std::size_t n,
                                        unsigned power) {
  const Polynomial e = Polynomial::variable(F, n, n + 1);
  Polynomial prod = Polynomial::constant(F, 1, n + 1);
  for (const auto& l : forms) {
    prod = prod * (Polynomial::constant(F, 1, n + 1) + e * l.to_polynomial().widened(n + 1));
    Polynomial kept(F, n + 1);
    for (const auto& [m, c] : prod.terms())
      if (m.exponent(n) <= power) kept.add_term(m, c);
    prod = kept;
  }
  prod -= Polynomial::constant(F, 1, n + 1);
  Polynomial out(F, n);
  for (const auto& [m, c] : prod.terms()) {
    if (m.exponent(n) != power) continue;
    std::vector<std::uint32_t> ex(n);
    for (std::size_t i = 0; i < n; ++i) ex[i] = m.exponent(i);
    out.add_term(Monomial(ex), c);
  }
  return out;
}

Outcome criterion11() {
  const Field F4 = make_field("gf(2^2)");
  std::size_t bad_kumar = 0, bad_oracle = 0, bad_round_trip = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SplitMix64 rng(seed + 77);
    const std::size_t n = 1 + rng.uniform(6);
    const Polynomial f = random_nonzero_quadratic(rng, F4, n);
    const SymRepresentation rep = quadratic_to_sym(f);
    const unsigned T = 6;
    const KumarResult k = kumar_fanin2(rep.forms, 2, T);
    if (k.witness.zero || k.witness.order != 2 || !(k.witness.principal == rep.target)) ++bad_kumar;
    if (!eps_coefficient_by_expansion(rep.forms, rep.field, n, 1).is_zero() ||
        !(eps_coefficient_by_expansion(rep.forms, rep.field, n, 2) == lift(f, rep.field)))
      ++bad_oracle;
    const DepthThreeToSym back = depth3_to_sym(kumar_terms(rep.forms, T), rep.target, T);
    // eps^K * sum scale * eps^shift * e_d(forms) must equal eps^K * H_2[combined]
    const unsigned T2 = T + back.offset;
    EpsSeries sum(rep.field, T2, n);
    for (const auto& t : back.terms) {
      const int shift = static_cast<int>(back.offset) + t.eps_shift;
      EpsSeries e2 = esp_of_series(t.forms, t.degree, rep.field, T2, n);
      EpsSeries term = (t.scale.retruncated(T2) * e2);
      sum += shift >= 0 ? term.shifted(static_cast<unsigned>(shift)) : term.unshifted(static_cast<unsigned>(-shift));
    }
    const EpsSeries want = k.combined.homogeneous_component(2).retruncated(T2).shifted(back.offset);
    if (!back.verified || !(sum == want) || !(back.witness.principal == rep.target)) ++bad_round_trip;
  }
  std::ostringstream os;
  os << "100 gadget quadratics over GF(4): " << bad_kumar << " with N != 2 or wrong principal, " << bad_oracle
     << " disagreeing with direct expansion, " << bad_round_trip << " failed depth3_to_sym round trips";
  return {bad_kumar == 0 && bad_oracle == 0 && bad_round_trip == 0, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                       criterion5, criterion6, criterion7, criterion8,
                                                       criterion9, criterion10, criterion11};
  std::vector<std::size_t> selected;
  for (int i = 1; i < argc; ++i) {
    const std::size_t c = std::stoul(argv[i]);
    if (c < 1 || c > criteria.size()) {
      std::cerr << "unknown criterion " << argv[i] << "\n";
      return 1;
    }
    selected.push_back(c);
  }
  if (selected.empty())
    for (std::size_t c = 1; c <= criteria.size(); ++c) selected.push_back(c);

  int failed = 0;
  for (std::size_t c : selected) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[c - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c << ": " << o.detail << " (" << t.str() << "s)"
              << std::endl;
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
