#include "esym/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "esym/random.hpp"
#include "esym/serialize.hpp"

namespace esym::cli {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_inconclusive = 2;

struct Globals {
  std::string field;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::uint64_t cap_partitions = default_partition_cap;
  std::uint64_t cap_points = default_point_cap;
};

Field field_or(const Globals& g, const std::string& fallback) { return make_field(g.field.empty() ? fallback : g.field); }

/// File contents when `arg` names a readable file, else `arg` itself.
std::string read_text(const std::string& arg) {
  std::error_code ec;
  if (!arg.empty() && std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string s = ss.str();
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    return s;
  }
  return arg;
}

std::vector<LinearForm> parse_forms(const std::string& text, const Field& field) {
  std::vector<Polynomial> polys;
  std::size_t n = 0;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    polys.push_back(parse_polynomial(item, field));
    n = std::max(n, polys.back().nvars());
  }
  std::vector<LinearForm> forms;
  for (const auto& p : polys) forms.push_back(LinearForm::from_polynomial(p.widened(n)).widened(n));
  return forms;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emit(Json j, const std::string& schema, const Globals& g, std::ostream& out) {
  Json doc{{"schema", "esym/" + schema + "/v1"}};
  for (auto it = j.begin(); it != j.end(); ++it) doc[it.key()] = it.value();
  if (g.format == "json") {
    out << doc.dump(2) << "\n";
  } else if (g.format == "text") {
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      const Json& v = it.value();
      if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); })) {
        out << it.key() << ":";
        for (const auto& x : v) out << " " << scalar_text(x);
        out << "\n";
      } else if (v.is_structured()) {
        out << it.key() << ": " << v.dump() << "\n";
      } else {
        out << it.key() << ": " << scalar_text(v) << "\n";
      }
    }
  } else {
    std::string header, row;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      if (!it.value().is_primitive()) continue;
      std::string cell = scalar_text(it.value());
      if (cell.find_first_of(",\"") != std::string::npos) {
        std::string quoted = "\"";
        for (char c : cell) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
        cell = quoted + "\"";
      }
      header += (header.empty() ? "" : ",") + it.key();
      row += (row.empty() ? "" : ",") + cell;
    }
    out << header << "\n" << row << "\n";
  }
}

// identities ----------------------------------------------------------------

struct IdentityOptions {
  std::string kind = "all";
  bool all = false;
  unsigned max_n = 8;
  unsigned n = 0, m = 0, d = 0;
  CLI::Option* n_opt = nullptr;
};

int cmd_identities(const IdentityOptions& o, const Globals& g, std::ostream& out) {
  std::vector<IdentityKind> kinds;
  if (o.all || o.kind == "all") {
    kinds.assign(std::begin(all_identity_kinds), std::end(all_identity_kinds));
  } else {
    auto k = parse_identity_kind(o.kind);
    if (!k) throw std::invalid_argument("unknown identity kind '" + o.kind + "'");
    kinds.push_back(*k);
  }

  if (o.n_opt->count() > 0) {
    if (kinds.size() != 1) throw std::invalid_argument("a single case needs --kind");
    const IdentityReport r = verify_identity(kinds.front(), {o.n, o.m, o.d}, field_or(g, "q"));
    emit(to_json(r), "identities", g, out);
    return r.holds ? exit_ok : exit_error;
  }

  if (o.max_n + 1 > identity_variable_cap)
    throw std::invalid_argument("--max-n must be below " + std::to_string(identity_variable_cap));
  std::vector<Field> fields;
  if (g.field.empty()) {
    for (const char* s : {"q", "gf(2)", "gf(3)", "gf(2^2)", "gf(5)"}) fields.push_back(make_field(s));
  } else {
    fields.push_back(make_field(g.field));
  }

  Json summary = Json::array(), failures = Json::array(), field_names = Json::array();
  for (const auto& F : fields) field_names.push_back(F.spec());
  std::size_t cases = 0, failed = 0;
  for (const auto& F : fields) {
    for (auto kind : kinds) {
      std::size_t kc = 0, kh = 0;
      auto check = [&](unsigned n, unsigned m, unsigned d) {
        const IdentityReport r = verify_identity(kind, {n, m, d}, F);
        ++kc;
        if (r.holds) ++kh;
        else failures.push_back(to_json(r));
      };
      for (unsigned n = 1; n <= o.max_n; ++n) {
        switch (kind) {
          case IdentityKind::generating_function: check(n, 0, 0); break;
          case IdentityKind::split:
            for (unsigned m = 0; n + m <= o.max_n; ++m)
              for (unsigned d = 0; d <= n + m; ++d) check(n, m, d);
            break;
          default:
            for (unsigned d = 0; d <= n; ++d) check(n, 0, d);
        }
      }
      cases += kc;
      failed += kc - kh;
      summary.push_back(Json{{"kind", std::string(identity_name(kind))}, {"field", F.spec()}, {"cases", kc},
                             {"holds", kh}});
    }
  }
  emit(Json{{"max_n", o.max_n},
            {"fields", field_names},
            {"cases", cases},
            {"failed", failed},
            {"all_hold", failed == 0},
            {"summary", summary},
            {"failures", failures}},
       "identities", g, out);
  return failed == 0 ? exit_ok : exit_error;
}

// esp -------------------------------------------------------------------------

int cmd_esp(unsigned n, unsigned d, bool power, const Globals& g, std::ostream& out) {
  const Field F = field_or(g, "q");
  const Polynomial f = power ? gen_power_sum(n, d, F) : gen_esp(n, d, F);
  emit(Json{{"kind", power ? "power_sum" : "elementary"},
            {"field", F.spec()},
            {"n", n},
            {"d", d},
            {"terms", f.num_terms()},
            {"polynomial", f.to_string()}},
       "esp", g, out);
  return exit_ok;
}

// sym -------------------------------------------------------------------------

struct SymOptions {
  std::string quadratic, low, high, forms, rep, target;
  std::vector<std::string> append;
  unsigned degree = 0;
};

SymRepresentation rep_from_options(const SymOptions& o, const Globals& g, unsigned default_degree) {
  if (!o.rep.empty()) return sym_from_json(Json::parse(read_text(o.rep)));
  if (o.forms.empty()) throw std::invalid_argument("need --rep or --forms");
  const Field F = field_or(g, "gf(2)");
  return make_representation(F, o.degree ? o.degree : default_degree, parse_forms(read_text(o.forms), F));
}

int cmd_sym_build(const SymOptions& o, const Globals& g, std::ostream& out) {
  const Field F = field_or(g, "gf(2)");
  SymRepresentation rep = [&] {
    if (!o.quadratic.empty()) return quadratic_to_sym(parse_polynomial(read_text(o.quadratic), F));
    if (!o.low.empty() || !o.high.empty()) {
      Polynomial a = parse_polynomial(read_text(o.low), F), b = parse_polynomial(read_text(o.high), F);
      const std::size_t n = std::max(a.nvars(), b.nvars());
      return reducible_to_sym(make_reducible(a.widened(n), b.widened(n)));
    }
    if (!o.forms.empty()) return make_representation(F, o.degree ? o.degree : 2, parse_forms(read_text(o.forms), F));
    throw std::invalid_argument("sym build needs --quadratic, --low/--high or --forms");
  }();
  for (const auto& a : o.append) {
    const Polynomial q = parse_polynomial(read_text(a), F);
    rep = append_linear_power(rep, LinearForm::from_polynomial(q.widened(std::max(q.nvars(), rep.nvars))));
  }
  Json j = to_json(rep);
  j["m"] = rep.size();
  j["verified"] = verify_representation(rep, rep.target);
  if (rep.degree == 2) {
    const auto e = esp_prefix_forms(rep.field, rep.forms, 1);
    j["e1_zero"] = e[1].is_zero();
  }
  emit(j, "sym/build", g, out);
  return exit_ok;
}

int cmd_sym_verify(const SymOptions& o, const Globals& g, std::ostream& out) {
  const SymRepresentation rep = rep_from_options(o, g, 2);
  const Polynomial target =
      o.target.empty() ? rep.target : parse_polynomial(read_text(o.target), rep.field, rep.nvars);
  const bool ok = verify_representation(rep, target);
  emit(Json{{"field", rep.field.spec()},
            {"degree", rep.degree},
            {"m", rep.size()},
            {"target", target.to_string()},
            {"realized", rep.realized().to_string()},
            {"verified", ok}},
       "sym/verify", g, out);
  return exit_ok;
}

int cmd_sym_decompose(const SymOptions& o, const Globals& g, std::ostream& out) {
  const Field F = field_or(g, "gf(2)");
  const SymRepresentation rep = rep_from_options(o, g, F.characteristic() + 1);
  const NewtonDecomposition dec = newton_decompose(rep);
  Json j = to_json(dec);
  const Polynomial realized = rep.realized();
  j["field"] = rep.field.spec();
  j["realized"] = realized.to_string();
  j["matches"] = dec.assembled() == realized;
  emit(j, "sym/decompose", g, out);
  return exit_ok;
}

// certify ---------------------------------------------------------------------

struct CertifyOptions {
  std::uint32_t p = 2;
  std::uint32_t ell = 0;
  std::string poly;
  std::size_t n = 0;
  CLI::Option* member = nullptr;
  std::uint32_t member_k = 0;
};

int cmd_certify(const CertifyOptions& o, const Globals& g, std::ostream& out) {
  Polynomial f;
  std::string source;
  if (!o.poly.empty()) {
    const Field F = field_or(g, "gf(" + std::to_string(o.p) + ")");
    f = parse_polynomial(read_text(o.poly), F, o.n);
    source = "input";
  } else if (o.member->count() > 0) {
    if (o.ell == 0) throw std::invalid_argument("--member needs --ell");
    f = random_member(o.member_k, o.p, o.ell, g.seed);
    source = "random_member(k=" + std::to_string(o.member_k) + ", seed=" + std::to_string(g.seed) + ")";
  } else {
    if (o.ell == 0) throw std::invalid_argument("certify needs --ell, --poly or --member");
    f = hard_poly({o.p, o.ell});
    source = "hard_poly";
  }
  const CertificateReport r = certify_nonmembership(f, o.p, g.cap_partitions);
  Json j = to_json(r);
  j["source"] = source;
  j["polynomial"] = f.to_string();
  emit(j, "certify", g, out);
  return r.certified ? exit_ok : exit_inconclusive;
}

// v2 --------------------------------------------------------------------------

struct V2Options {
  unsigned n = 5, d = 2;
  std::uint32_t p = 2;
  std::uint64_t trials = 1000;
  std::string ks = "1,2,3";
  bool no_points = false;
};

int cmd_v2_scan(const V2Options& o, const Globals& g, std::ostream& out) {
  const V2PointSet s = enumerate_v2(o.n, o.d, field_or(g, "gf(2)"), g.cap_points);
  Json j = to_json(s);
  bool contained = true;
  for (const auto& p : s.points) contained = contained && in_s_k(p, o.d >= 1 ? o.d - 1 : 0);
  j["within_s_d_minus_1"] = contained;
  if (o.no_points) j.erase("points");
  emit(j, "v2/scan", g, out);
  return exit_ok;
}

int cmd_v2_witness(const V2Options& o, const Globals& g, std::ostream& out) {
  const WitnessFamily w = witness_family(o.p, o.d);
  const std::string fallback = o.p == 2   ? "gf(2^8;1,1,0,1,1,0,0,0,1)"
                               : o.p == 3 ? "gf(3^3)"
                                          : "gf(" + std::to_string(o.p) + ")";
  const Field F = field_or(g, fallback);
  if (F.characteristic() != o.p) throw std::invalid_argument("--field must have characteristic p");
  SplitMix64 rng(g.seed);
  std::uint64_t failures = 0;
  Json first_failure;
  for (std::uint64_t t = 0; t < o.trials; ++t) {
    Point beta;
    for (unsigned i = 0; i < w.parameter_arity; ++i) beta.push_back(random_element(rng, F));
    const Point a = w.alpha(beta);
    if (!is_order2_zero_esp(w.d, a)) {
      if (failures++ == 0) first_failure = point_json(a);
    }
  }
  Json j = to_json(w);
  j["field"] = F.spec();
  j["trials"] = o.trials;
  j["seed"] = g.seed;
  j["failures"] = failures;
  if (failures) j["first_failure"] = first_failure;
  emit(j, "v2/witness", g, out);
  return exit_ok;
}

int cmd_v2_dim(const V2Options& o, const Globals& g, std::ostream& out) {
  std::vector<std::pair<unsigned, std::uint64_t>> counts;
  Json rows = Json::array();
  std::stringstream ss(o.ks);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto k = static_cast<unsigned>(std::stoul(item));
    const Field F = k == 1 ? Field::prime(o.p) : Field::extension(o.p, k);
    const V2PointSet s = enumerate_v2(o.n, o.d, F, g.cap_points);
    counts.emplace_back(k, s.count);
    rows.push_back(Json{{"k", k}, {"field", F.spec()}, {"count", s.count}});
  }
  const DimensionEstimate e = dimension_estimate(counts, o.p);
  Json j{{"n", o.n}, {"d", o.d}, {"p", o.p}, {"counts", rows}, {"estimate", to_json(e)}};
  if (!e.empty) {
    j["bracket_d_minus_2_to_d_minus_1"] =
        e.rounded >= static_cast<long>(o.d) - 2 && e.rounded <= static_cast<long>(o.d) - 1;
    j["n_minus_d_plus_1_mod_p"] = (o.n + 1 - o.d) % o.p;
  }
  emit(j, "v2/dim", g, out);
  return exit_ok;
}

// formula ---------------------------------------------------------------------

int cmd_formula_peel(const std::string& text, unsigned d_prime, const Globals& g, std::ostream& out) {
  const Formula phi = parse_formula(read_text(text), field_or(g, "gf(5)"));
  const PeelDecomposition dec = peel_decompose(phi, d_prime);
  Json j = to_json(dec, phi);
  j["field"] = phi.field().spec();
  j["formula"] = phi.to_string();
  emit(j, "formula/peel", g, out);
  return audit_peel(phi, dec).ok() ? exit_ok : exit_error;
}

int cmd_formula_ben_or(unsigned n, unsigned d, const Globals& g, std::ostream& out) {
  const Field F = field_or(g, "gf(11)");
  const Formula phi = ben_or(n, d, F);
  const bool equal = phi.expand() == gen_esp(n, d, F);
  emit(Json{{"field", F.spec()},
            {"n", n},
            {"d", d},
            {"size", phi.size()},
            {"size_bound", static_cast<std::uint64_t>(n + 1) * n},
            {"formal_degree", phi.formal_degree()},
            {"equals_esp", equal},
            {"formula", phi.to_string()}},
       "formula/ben-or", g, out);
  return equal ? exit_ok : exit_error;
}

int cmd_formula_bound(unsigned n, unsigned d, CLI::Option* dim_opt, unsigned dim, const Globals& g,
                      std::ostream& out) {
  const LowerBoundReport r =
      lower_bound_report(n, d, dim_opt->count() ? std::optional<unsigned>(dim) : std::nullopt);
  emit(to_json(r), "formula/bound", g, out);
  return exit_ok;
}

// border ----------------------------------------------------------------------

int cmd_border_demo(const std::string& target_text, CLI::Option* t_opt, unsigned T_in, const Globals& g,
                    std::ostream& out) {
  const Field F = field_or(g, "gf(2)");
  const Polynomial target = parse_polynomial(read_text(target_text), F);
  if (F.characteristic() != 2 || !target.is_homogeneous(2) || target.is_zero())
    throw std::invalid_argument("border demo needs a nonzero homogeneous quadratic target over characteristic 2");
  const SymRepresentation rep = quadratic_to_sym(target);
  const unsigned T = t_opt->count() ? T_in : 2 * 2 + 2;
  const KumarResult k = kumar_fanin2(rep.forms, 2, T);
  const Polynomial lifted_target = lift(target, rep.field);
  const DepthThreeToSym back = depth3_to_sym(kumar_terms(rep.forms, T), lifted_target, T);
  Json sym_terms = Json::array();
  for (const auto& t : back.terms) sym_terms.push_back(to_json(t));
  emit(Json{{"field", rep.field.spec()},
            {"T", T},
            {"target", target.to_string()},
            {"m", rep.size()},
            {"N", k.witness.order},
            {"principal", k.witness.principal.to_string()},
            {"matches_target", !k.witness.zero && k.witness.principal == lifted_target},
            {"product_term", k.product_term.to_string()},
            {"constant_term", k.constant_term.to_string()},
            {"combined", k.combined.to_string()},
            {"depth3_to_sym", {{"verified", back.verified}, {"offset", back.offset}, {"terms", sym_terms}}}},
       "border/demo", g, out);
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"esym: elementary symmetric polynomials, symmetric models and border experiments"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--field", g.field, "Field: q, gf(P), gf(P^K) or gf(P^K;c0,...,cK)");
  app.add_option("--seed", g.seed, "Seed for the SplitMix64 generator");
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cap-partitions", g.cap_partitions, "Maximum number of set partitions to enumerate");
  app.add_option("--cap-points", g.cap_points, "Maximum number of points to enumerate");

  IdentityOptions io;
  auto* ids = app.add_subcommand("identities", "Verify the symmetric-function identities exactly");
  ids->add_option("--kind", io.kind, "generating_function, split, partial_derivative, euler, newton or all");
  ids->add_flag("--all", io.all, "Check every identity kind");
  ids->add_option("--max-n", io.max_n, "Grid bound on n + m");
  io.n_opt = ids->add_option("--n", io.n, "Single case: number of variables");
  ids->add_option("--m", io.m, "Single case: size of the second block (split)");
  ids->add_option("--d", io.d, "Single case: degree");

  unsigned esp_n = 3, esp_d = 2;
  bool esp_power = false;
  auto* esp = app.add_subcommand("esp", "Print e_d^n or p_d^n");
  esp->add_option("--n", esp_n, "Number of variables");
  esp->add_option("--d", esp_d, "Degree");
  esp->add_flag("--power", esp_power, "Power sum instead of elementary symmetric polynomial");

  SymOptions so;
  auto* sym = app.add_subcommand("sym", "Symmetric-model constructions");
  sym->require_subcommand(1);
  auto* sym_build = sym->add_subcommand("build", "Build a representation");
  sym_build->add_option("--quadratic", so.quadratic, "Homogeneous quadratic (characteristic 2)");
  sym_build->add_option("--low", so.low, "Linear factor of a reducible cubic");
  sym_build->add_option("--high", so.high, "Quadratic factor of a reducible cubic");
  sym_build->add_option("--forms", so.forms, "Semicolon-separated linear forms");
  sym_build->add_option("--degree", so.degree, "Degree for --forms");
  sym_build->add_option("--append", so.append, "Append a linear power q^d (repeatable)");
  auto* sym_verify = sym->add_subcommand("verify", "Check e_d(forms) against a target");
  sym_verify->add_option("--rep", so.rep, "Representation JSON (file or text)");
  sym_verify->add_option("--forms", so.forms, "Semicolon-separated linear forms");
  sym_verify->add_option("--degree", so.degree, "Degree for --forms");
  sym_verify->add_option("--target", so.target, "Target polynomial (file or text)");
  auto* sym_decompose = sym->add_subcommand("decompose", "Newton decomposition of e_(p+1)(L)");
  sym_decompose->add_option("--rep", so.rep, "Representation JSON (file or text)");
  sym_decompose->add_option("--forms", so.forms, "Semicolon-separated linear forms");
  sym_decompose->add_option("--degree", so.degree, "Degree (defaults to p + 1)");

  CertifyOptions co;
  auto* certify = app.add_subcommand("certify", "Partition-sum non-membership certificate");
  certify->add_option("--p", co.p, "Characteristic");
  certify->add_option("--ell", co.ell, "Number of blocks of hard_poly");
  certify->add_option("--poly", co.poly, "Polynomial (file or text) instead of hard_poly");
  certify->add_option("--n", co.n, "Number of variables for --poly");
  co.member = certify->add_option("--member", co.member_k, "Certify random_member with this many reducibles");

  V2Options vo;
  auto* v2 = app.add_subcommand("v2", "Order-2 zero spaces of e_d^n");
  v2->require_subcommand(1);
  auto* v2_scan = v2->add_subcommand("scan", "Enumerate V_2(e_d^n) over a finite field");
  v2_scan->add_option("--n", vo.n, "Number of variables");
  v2_scan->add_option("--d", vo.d, "Degree");
  v2_scan->add_flag("--no-points", vo.no_points, "Omit the point list");
  auto* v2_witness = v2->add_subcommand("witness", "Check the witness family on random parameters");
  v2_witness->add_option("--p", vo.p, "Characteristic");
  v2_witness->add_option("--d", vo.d, "Degree");
  v2_witness->add_option("--trials", vo.trials, "Number of random parameter tuples");
  auto* v2_dim = v2->add_subcommand("dim", "Point-count dimension estimate over GF(p^k)");
  v2_dim->add_option("--n", vo.n, "Number of variables");
  v2_dim->add_option("--d", vo.d, "Degree");
  v2_dim->add_option("--p", vo.p, "Characteristic");
  v2_dim->add_option("--ks", vo.ks, "Comma-separated extension degrees");

  std::string formula_text;
  unsigned d_prime = 3, fn = 3, fd = 2, fdim = 0;
  auto* formula = app.add_subcommand("formula", "Formula decompositions and bounds");
  formula->require_subcommand(1);
  auto* peel = formula->add_subcommand("peel", "Peel decomposition of a formula");
  peel->add_option("--formula", formula_text, "Formula (file or text)")->required();
  peel->add_option("--dprime", d_prime, "Degree threshold d'");
  auto* benor = formula->add_subcommand("ben-or", "Depth-3 formula for e_d^n by interpolation");
  benor->add_option("--n", fn, "Number of variables");
  benor->add_option("--d", fd, "Degree");
  auto* bound = formula->add_subcommand("bound", "Formula-size lower bound d(n - dim)/6");
  bound->add_option("--n", fn, "Number of variables");
  bound->add_option("--d", fd, "Degree");
  auto* dim_opt = bound->add_option("--dim", fdim, "dim V_2 (defaults to d - 1)");

  std::string border_target;
  unsigned border_T = 0;
  auto* border = app.add_subcommand("border", "Border computations");
  border->require_subcommand(1);
  auto* demo = border->add_subcommand("demo", "Fan-in-2 border representation of a quadratic");
  demo->add_option("--target", border_target, "Quadratic target (file or text)")->required();
  auto* t_opt = demo->add_option("--T", border_T, "Truncation order");

  for (CLI::App* sub : {ids, esp, sym, sym_build, sym_verify, sym_decompose, certify, v2, v2_scan, v2_witness, v2_dim,
                        formula, peel, benor, bound, border, demo})
    sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_error;
  }

  try {
    if (ids->parsed()) return cmd_identities(io, g, out);
    if (esp->parsed()) return cmd_esp(esp_n, esp_d, esp_power, g, out);
    if (sym_build->parsed()) return cmd_sym_build(so, g, out);
    if (sym_verify->parsed()) return cmd_sym_verify(so, g, out);
    if (sym_decompose->parsed()) return cmd_sym_decompose(so, g, out);
    if (certify->parsed()) return cmd_certify(co, g, out);
    if (v2_scan->parsed()) return cmd_v2_scan(vo, g, out);
    if (v2_witness->parsed()) return cmd_v2_witness(vo, g, out);
    if (v2_dim->parsed()) return cmd_v2_dim(vo, g, out);
    if (peel->parsed()) return cmd_formula_peel(formula_text, d_prime, g, out);
    if (benor->parsed()) return cmd_formula_ben_or(fn, fd, g, out);
    if (bound->parsed()) return cmd_formula_bound(fn, fd, dim_opt, fdim, g, out);
    if (demo->parsed()) return cmd_border_demo(border_target, t_opt, border_T, g, out);
  } catch (const std::exception& e) {
    err << "esym: " << e.what() << "\n";
    return exit_error;
  }
  err << "esym: no command\n";
  return exit_error;
}

}  // namespace esym::cli
