#include "esym/serialize.hpp"

#include <stdexcept>

namespace esym {

Json to_json(const SymRepresentation& rep) {
  Json forms = Json::array();
  for (const auto& l : rep.forms) {
    Json row = Json::array();
    for (std::size_t i = 0; i < rep.nvars; ++i) row.push_back(l.coefficient(i).to_string());
    forms.push_back(std::move(row));
  }
  return Json{{"field", rep.field.spec()},
              {"base_field", rep.base_field.spec()},
              {"degree", rep.degree},
              {"nvars", rep.nvars},
              {"forms", std::move(forms)},
              {"target", rep.target.to_string()}};
}

SymRepresentation sym_from_json(const Json& j) {
  const Field field = make_field(j.at("field").get<std::string>());
  const auto degree = j.at("degree").get<unsigned>();
  std::size_t nvars = j.value("nvars", std::size_t{0});
  std::vector<LinearForm> forms;
  for (const auto& row : j.at("forms")) {
    std::vector<Scalar> coeffs;
    for (const auto& c : row) coeffs.push_back(field.parse(c.get<std::string>()));
    nvars = std::max(nvars, coeffs.size());
    forms.emplace_back(field, std::move(coeffs));
  }
  SymRepresentation rep = make_representation(field, degree, std::move(forms), nvars);
  if (j.contains("base_field")) rep.base_field = make_field(j.at("base_field").get<std::string>());
  if (j.contains("target")) rep.target = parse_polynomial(j.at("target").get<std::string>(), field, rep.nvars);
  return rep;
}

Json to_json(const IdentityReport& r) {
  return Json{{"kind", std::string(identity_name(r.kind))},
              {"params", {{"n", r.params.n}, {"m", r.params.m}, {"d", r.params.d}}},
              {"field", r.discrepancy.field().spec()},
              {"holds", r.holds},
              {"discrepancy_text", r.discrepancy.to_string()}};
}

namespace {

Json reducible_json(const ReduciblePolynomial& g) {
  return Json{{"factor_low", g.factor_low.to_string()},
              {"factor_high", g.factor_high.to_string()},
              {"product", g.product.to_string()}};
}

}  // namespace

Json to_json(const NewtonDecomposition& d) {
  Json reducibles = Json::array();
  for (const auto& g : d.reducibles) reducibles.push_back(reducible_json(g));
  Json powers = Json::array();
  for (const auto& l : d.linear_power_terms) powers.push_back(l.to_string());
  return Json{{"characteristic", d.characteristic},
              {"reducibles", std::move(reducibles)},
              {"frobenius_term", d.frobenius_term.to_string()},
              {"linear_power_sign", d.linear_power_sign.to_string()},
              {"linear_power_terms", std::move(powers)},
              {"assembled", d.assembled().to_string()}};
}

Json to_json(const CertificateReport& r) {
  return Json{{"status", r.status()},
              {"field", r.field},
              {"p", r.p},
              {"n", r.n},
              {"ell", r.ell},
              {"F_value", r.F_value.to_string()},
              {"nonmember_of_k_up_to", r.certified ? Json(r.nonmember_of_k_up_to) : Json(nullptr)},
              {"border_valid", r.border_valid},
              {"partitions_evaluated", r.partitions_evaluated},
              {"claim", r.certified ? "not in closure(Sigma^[k]Sym) nor border Sigma^[k]PiSigma for k <= " +
                                          std::to_string(r.nonmember_of_k_up_to)
                                    : "no certificate (F = 0 does not imply membership)"}};
}

Json point_json(const Point& p) {
  Json a = Json::array();
  for (const auto& x : p) a.push_back(x.to_string());
  return a;
}

Json to_json(const V2PointSet& s) {
  Json pts = Json::array();
  std::size_t max_distinct = 0;
  for (const auto& p : s.points) {
    pts.push_back(point_json(p));
    std::size_t k = 0;
    while (!in_s_k(p, k)) ++k;
    max_distinct = std::max(max_distinct, k);
  }
  return Json{{"field", s.field.spec()}, {"n", s.n},           {"d", s.d},
              {"scanned", s.scanned},    {"count", s.count},   {"max_distinct_coordinates", max_distinct},
              {"points", std::move(pts)}};
}

Json to_json(const WitnessFamily& w) {
  Json checks = Json::array();
  for (const auto& c : w.checks) checks.push_back(Json{{"a", c.a}, {"b", c.b}, {"residue", c.residue}});
  return Json{{"p", w.p},
              {"d", w.d},
              {"n", w.n},
              {"parameter_arity", w.parameter_arity},
              {"lucas_checks", std::move(checks)},
              {"checks_vanish", w.checks_vanish()}};
}

Json to_json(const DimensionEstimate& e) {
  if (e.empty) return Json{{"empty", true}};
  Json j{{"empty", false}, {"slope", e.slope}, {"rounded", e.rounded}};
  if (e.exact) j["exact_slope"] = e.exact->get_str();
  j["note"] = "point-count heuristic, not a proof of dimension";
  return j;
}

Json to_json(const PeelDecomposition& d, const Formula& original) {
  Json pairs = Json::array();
  for (const auto& [f, g] : d.pairs) pairs.push_back(Json{{"f", f.to_string()}, {"g", g.to_string()}});
  const PeelAudit a = audit_peel(original, d);
  return Json{{"d_prime", d.d_prime},
              {"original_size", d.original_size},
              {"original_formal_degree", original.formal_degree()},
              {"k", d.k()},
              {"residual", d.residual.to_string()},
              {"residual_formal_degree", d.residual.formal_degree()},
              {"pairs", std::move(pairs)},
              {"lhs_expansion", original.expand().to_string()},
              {"rhs_expansion", d.reassembled().to_string()},
              {"audit",
               {{"identity", a.identity},
                {"constant_free", a.constant_free},
                {"degree_below", a.degree_below},
                {"size_bound", a.size_bound}}}};
}

Json to_json(const LowerBoundReport& r) {
  Json j{{"n", r.n}, {"d", r.d}, {"dim_v2", r.dim_v2}, {"dim_defaulted", r.dim_defaulted},
         {"bound", r.bound.get_str()}, {"bound_value", r.bound.get_d()}};
  if (r.ben_or_size) j["ben_or_size"] = *r.ben_or_size;
  return j;
}

Json to_json(const BorderWitness& w) {
  return Json{{"order", w.order}, {"principal", w.principal.to_string()}, {"tail_present", w.tail_present},
              {"zero", w.zero}};
}

Json to_json(const EpsSymTerm& t) {
  Json forms = Json::array();
  for (const auto& f : t.forms) forms.push_back(f.to_string());
  return Json{{"scale", t.scale.to_string()}, {"eps_shift", t.eps_shift}, {"degree", t.degree},
              {"forms", std::move(forms)}};
}

}  // namespace esym
