#include "esym/formula.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "esym/random.hpp"

namespace esym {

NodeId FormulaBuilder::push(FormulaNode node) {
  nodes_.push_back(std::move(node));
  return static_cast<NodeId>(nodes_.size() - 1);
}

NodeId FormulaBuilder::leaf(const Polynomial& label) {
  if (label.field() != field_) throw FieldError("formula leaf field mismatch");
  if (label.degree() > 1) throw std::invalid_argument("formula leaf must be affine: " + label.to_string());
  nvars_ = std::max(nvars_, label.nvars());
  return push({NodeKind::leaf, label, 0, 0});
}

NodeId FormulaBuilder::constant(const FieldElement& c) { return leaf(Polynomial::constant(c)); }

NodeId FormulaBuilder::variable(std::size_t index) { return leaf(Polynomial::variable(field_, index)); }

NodeId FormulaBuilder::add(NodeId a, NodeId b) {
  if (a >= nodes_.size() || b >= nodes_.size()) throw std::out_of_range("formula child id");
  return push({NodeKind::add, Polynomial(field_), a, b});
}

NodeId FormulaBuilder::mul(NodeId a, NodeId b) {
  if (a >= nodes_.size() || b >= nodes_.size()) throw std::out_of_range("formula child id");
  return push({NodeKind::mul, Polynomial(field_), a, b});
}

Formula::Formula(const FormulaBuilder& builder, NodeId root) : field_(builder.field()), nvars_(builder.nvars()) {
  const auto& src = builder.nodes();
  if (root >= src.size()) throw std::out_of_range("formula root id");

  // Post-order renumbering of the reachable tree.
  std::vector<NodeId> order;
  std::vector<std::pair<NodeId, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [v, expanded] = stack.back();
    stack.pop_back();
    if (expanded || src[v].kind == NodeKind::leaf) {
      order.push_back(v);
      continue;
    }
    stack.push_back({v, true});
    stack.push_back({src[v].right, false});
    stack.push_back({src[v].left, false});
  }
  const std::size_t m = order.size();
  nodes_.reserve(m);
  std::vector<NodeId> stack_ids;
  for (NodeId old : order) {
    FormulaNode node = src[old];
    if (node.kind != NodeKind::leaf) {
      node.right = stack_ids.back();
      stack_ids.pop_back();
      node.left = stack_ids.back();
      stack_ids.pop_back();
    }
    stack_ids.push_back(static_cast<NodeId>(nodes_.size()));
    nodes_.push_back(std::move(node));
  }

  fdeg_.resize(m);
  size_.resize(m);
  parent_.assign(m, static_cast<NodeId>(m));
  for (NodeId v = 0; v < m; ++v) {
    const auto& n = nodes_[v];
    switch (n.kind) {
      case NodeKind::leaf:
        fdeg_[v] = n.label.degree() > 0 ? static_cast<unsigned>(n.label.degree()) : 0;
        size_[v] = n.label.degree() > 0 ? 1 : 0;
        break;
      case NodeKind::add:
        fdeg_[v] = std::max(fdeg_[n.left], fdeg_[n.right]);
        size_[v] = size_[n.left] + size_[n.right];
        break;
      case NodeKind::mul:
        fdeg_[v] = fdeg_[n.left] + fdeg_[n.right];
        size_[v] = size_[n.left] + size_[n.right];
        break;
    }
    if (n.kind != NodeKind::leaf) parent_[n.left] = parent_[n.right] = v;
  }

  depth_.assign(m, 0);
  preorder_.assign(m, 0);
  std::vector<NodeId> walk{this->root()};
  std::size_t counter = 0;
  while (!walk.empty()) {
    NodeId v = walk.back();
    walk.pop_back();
    preorder_[v] = counter++;
    if (nodes_[v].kind == NodeKind::leaf) continue;
    depth_[nodes_[v].left] = depth_[nodes_[v].right] = depth_[v] + 1;
    walk.push_back(nodes_[v].right);
    walk.push_back(nodes_[v].left);
  }
}

std::optional<NodeId> Formula::parent(NodeId v) const {
  if (parent_.at(v) == nodes_.size()) return std::nullopt;
  return parent_[v];
}

namespace {

// In post-order numbering the subtree of v is the id range [first, v].
NodeId subtree_first(const std::vector<FormulaNode>& nodes, NodeId v) {
  while (nodes[v].kind != NodeKind::leaf) v = nodes[v].left;
  return v;
}

}  // namespace

Polynomial Formula::expand(NodeId v) const {
  if (!contains(v)) throw std::out_of_range("vertex not in formula");
  const NodeId first = subtree_first(nodes_, v);
  std::vector<Polynomial> value;
  value.reserve(v - first + 1);
  for (NodeId u = first; u <= v; ++u) {
    const auto& n = nodes_[u];
    switch (n.kind) {
      case NodeKind::leaf: value.push_back(n.label.widened(nvars_)); break;
      case NodeKind::add: value.push_back(value[n.left - first] + value[n.right - first]); break;
      case NodeKind::mul: value.push_back(value[n.left - first] * value[n.right - first]); break;
    }
  }
  return value.back();
}

NodeId Formula::copy_into(FormulaBuilder& b, NodeId v) const {
  if (!contains(v)) throw std::out_of_range("vertex not in formula");
  const NodeId first = subtree_first(nodes_, v);
  std::vector<NodeId> map(v - first + 1);
  for (NodeId u = first; u <= v; ++u) {
    const auto& n = nodes_[u];
    switch (n.kind) {
      case NodeKind::leaf: map[u - first] = b.leaf(n.label); break;
      case NodeKind::add: map[u - first] = b.add(map[n.left - first], map[n.right - first]); break;
      case NodeKind::mul: map[u - first] = b.mul(map[n.left - first], map[n.right - first]); break;
    }
  }
  return map.back();
}

std::string Formula::node_text(NodeId v) const {
  const auto& n = nodes_[v];
  if (n.kind == NodeKind::leaf) {
    const Polynomial& l = n.label;
    if (l.num_terms() == 1 && l.degree() == 1 && l.terms().begin()->second == field_.one()) return l.to_string();
    std::string s = l.to_string();
    if (l.degree() <= 0 && s.find_first_of("+- ") == std::string::npos) return s;
    return "[" + s + "]";
  }
  if (n.kind == NodeKind::add) return "(" + node_text(n.left) + " + " + node_text(n.right) + ")";
  std::string right = node_text(n.right);
  if (nodes_[n.right].kind == NodeKind::mul) right = "(" + right + ")";
  return node_text(n.left) + " * " + right;
}

std::string Formula::to_string() const {
  std::string s = node_text(root());
  if (nodes_.back().kind == NodeKind::add) s = s.substr(1, s.size() - 2);
  return s;
}

unsigned formal_degree(const Formula& phi) { return phi.formal_degree(); }

NodeId find_degree_vertex(const Formula& phi, unsigned t) {
  const unsigned d = phi.formal_degree();
  if (t < 1 || 2 * t > d)
    throw std::invalid_argument("find_degree_vertex: t = " + std::to_string(t) + " outside [1, " +
                                std::to_string(d / 2) + "]");
  std::optional<NodeId> best;
  for (NodeId v = 0; v < phi.num_nodes(); ++v) {
    const unsigned fd = phi.formal_degree(v);
    if (fd < t || fd > 2 * t - 1) continue;
    if (!best || phi.depth(v) > phi.depth(*best) ||
        (phi.depth(v) == phi.depth(*best) && phi.preorder(v) < phi.preorder(*best)))
      best = v;
  }
  if (!best) throw std::logic_error("find_degree_vertex: no qualifying vertex");
  return *best;
}

LinearSplit split_linear(const Formula& phi, NodeId v) {
  if (!phi.contains(v)) throw std::out_of_range("split_linear: vertex not in formula");
  const Field& F = phi.field();
  const std::size_t n = phi.nvars();
  LinearSplit s{Polynomial::constant(F, 1, n), Polynomial(F, n)};
  NodeId child = v;
  for (auto p = phi.parent(v); p; child = *p, p = phi.parent(*p)) {
    const auto& node = phi.node(*p);
    const NodeId sibling = node.left == child ? node.right : node.left;
    const Polynomial b = phi.expand(sibling);
    if (node.kind == NodeKind::add) {
      s.f += b;
    } else {
      s.h = s.h * b;
      s.f = s.f * b;
    }
  }
  return s;
}

Formula substitute_vertex(const Formula& phi, NodeId v, const FieldElement& gamma) {
  if (!phi.contains(v)) throw std::out_of_range("substitute_vertex: vertex not in formula");
  FormulaBuilder b(phi.field(), phi.nvars());
  std::vector<NodeId> map(phi.num_nodes());
  NodeId lo = v;
  while (phi.node(lo).kind != NodeKind::leaf) lo = phi.node(lo).left;
  for (NodeId u = 0; u < phi.num_nodes(); ++u) {
    if (u >= lo && u < v) continue;
    if (u == v) {
      map[u] = b.constant(gamma);
      continue;
    }
    const auto& n = phi.node(u);
    switch (n.kind) {
      case NodeKind::leaf: map[u] = b.leaf(n.label); break;
      case NodeKind::add: map[u] = b.add(map[n.left], map[n.right]); break;
      case NodeKind::mul: map[u] = b.mul(map[n.left], map[n.right]); break;
    }
  }
  return Formula(b, map[phi.root()]);
}

Polynomial PeelDecomposition::reassembled() const {
  Polynomial sum = residual.expand();
  for (const auto& [f, g] : pairs) sum += f * g;
  return sum;
}

PeelDecomposition peel_decompose(const Formula& phi, unsigned d_prime) {
  if (d_prime < 3) throw std::invalid_argument("peel_decompose: d' must be at least 3");
  const Field& F = phi.field();
  const unsigned t = (d_prime + 2) / 3;

  struct Side {
    FieldElement alpha;
    Formula sub;
    FieldElement beta;
  };
  std::vector<Side> sides;
  std::vector<std::pair<Polynomial, Polynomial>> pairs;
  Formula work = phi;
  while (work.formal_degree() >= d_prime) {
    const NodeId v = find_degree_vertex(work, t);
    const LinearSplit split = split_linear(work, v);
    const Polynomial gv = work.expand(v);
    const FieldElement beta = gv.constant_term();
    const FieldElement alpha = split.h.constant_term();
    pairs.emplace_back(split.h - Polynomial::constant(alpha), gv - Polynomial::constant(beta));
    if (!alpha.is_zero()) {
      FormulaBuilder sb(F, work.nvars());
      const NodeId r = work.copy_into(sb, v);
      sides.push_back({alpha, Formula(sb, r), beta});
    }
    work = substitute_vertex(work, v, beta);
  }

  FormulaBuilder b(F, phi.nvars());
  NodeId r = work.copy_into(b, work.root());
  for (const auto& s : sides) {
    const NodeId scaled = b.mul(b.constant(s.alpha), s.sub.copy_into(b, s.sub.root()));
    r = b.add(r, b.add(scaled, b.constant(-(s.alpha * s.beta))));
  }
  return PeelDecomposition{Formula(b, r), std::move(pairs), d_prime, phi.size()};
}

PeelAudit audit_peel(const Formula& phi, const PeelDecomposition& dec) {
  PeelAudit a;
  a.identity = dec.reassembled() == phi.expand();
  a.constant_free = std::all_of(dec.pairs.begin(), dec.pairs.end(), [](const auto& pr) {
    return pr.first.is_constant_free() && pr.second.is_constant_free();
  });
  a.degree_below = dec.residual.formal_degree() < dec.d_prime;
  a.size_bound = dec.k() * dec.d_prime <= 3 * phi.size();
  return a;
}

namespace {

// Solves A c = rhs over F by Gauss-Jordan elimination; A is square and invertible.
std::vector<Scalar> solve(const Field& F, std::vector<std::vector<Scalar>> A, std::vector<Scalar> rhs) {
  const std::size_t n = A.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && F.is_zero(A[piv][col])) ++piv;
    if (piv == n) throw std::logic_error("singular interpolation system");
    std::swap(A[piv], A[col]);
    std::swap(rhs[piv], rhs[col]);
    const Scalar inv = F.inv(A[col][col]);
    for (auto& x : A[col]) x = F.mul(x, inv);
    rhs[col] = F.mul(rhs[col], inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || F.is_zero(A[r][col])) continue;
      const Scalar factor = A[r][col];
      for (std::size_t c = 0; c < n; ++c) A[r][c] = F.sub(A[r][c], F.mul(factor, A[col][c]));
      rhs[r] = F.sub(rhs[r], F.mul(factor, rhs[col]));
    }
  }
  return rhs;
}

}  // namespace

Formula ben_or(unsigned n, unsigned d, const Field& field) {
  if (n == 0) throw std::invalid_argument("ben_or: n must be positive");
  if (d > n) throw std::invalid_argument("ben_or: d exceeds n");
  if (field.is_finite() && field.size() < n + 1)
    throw std::invalid_argument("ben_or: field too small, " + field.spec() + " has fewer than n+1 = " +
                                std::to_string(n + 1) + " elements");
  std::vector<FieldElement> nodes;
  for (unsigned j = 0; j <= n; ++j)
    nodes.push_back(field.is_finite() ? field.element_from_code(j) : field.element_from_integer(j));

  // prod_i (x_i + a) = sum_k a^(n-k) e_k, so row r = n - k holds a_j^r.
  std::vector<std::vector<Scalar>> A(n + 1, std::vector<Scalar>(n + 1));
  for (unsigned r = 0; r <= n; ++r)
    for (unsigned j = 0; j <= n; ++j) A[r][j] = field.pow(nodes[j].value(), r);
  std::vector<Scalar> rhs(n + 1, field.zero());
  rhs[n - d] = field.one();
  const auto c = solve(field, std::move(A), std::move(rhs));

  FormulaBuilder b(field, n);
  std::optional<NodeId> sum;
  for (unsigned j = 0; j <= n; ++j) {
    NodeId prod = b.constant(field.element(c[j]));
    for (unsigned i = 0; i < n; ++i) {
      const Polynomial label = Polynomial::variable(field, i, n) + Polynomial::constant(nodes[j], n);
      prod = b.mul(prod, b.leaf(label));
    }
    sum = sum ? b.add(*sum, prod) : prod;
  }
  return Formula(b, *sum);
}

LowerBoundReport lower_bound_report(unsigned n, unsigned d, std::optional<unsigned> dim_v2) {
  if (d < 3) throw std::invalid_argument("lower_bound_report: the bound needs degree d >= 3");
  LowerBoundReport r;
  r.n = n;
  r.d = d;
  r.dim_defaulted = !dim_v2.has_value();
  r.dim_v2 = dim_v2.value_or(d - 1);
  if (r.dim_v2 > n) throw std::invalid_argument("lower_bound_report: dim exceeds n");
  r.bound = Rational(static_cast<long>(d) * static_cast<long>(n - r.dim_v2), 6);
  r.bound.canonicalize();
  if (r.dim_defaulted) r.ben_or_size = static_cast<std::uint64_t>(n + 1) * n;
  return r;
}

namespace {

NodeId random_subtree(SplitMix64& rng, FormulaBuilder& b, std::size_t nvars, std::size_t leaves) {
  if (leaves == 1) {
    const Field& F = b.field();
    if (rng.uniform(5) == 0) return b.constant(random_element(rng, F));
    const auto i = static_cast<std::size_t>(rng.uniform(nvars));
    Polynomial label = Polynomial::variable(F, i, nvars);
    if (rng.uniform(2) == 0) label += Polynomial::constant(random_element(rng, F), nvars);
    return b.leaf(label);
  }
  const auto left = static_cast<std::size_t>(1 + rng.uniform(leaves - 1));
  const NodeId l = random_subtree(rng, b, nvars, left);
  const NodeId r = random_subtree(rng, b, nvars, leaves - left);
  return rng.uniform(2) == 0 ? b.add(l, r) : b.mul(l, r);
}

class FormulaParser {
 public:
  FormulaParser(std::string_view text, const Field& field, std::size_t nvars) : b_(field, nvars) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  Formula parse() {
    const NodeId r = expr();
    if (pos_ != s_.size()) fail("trailing input");
    return Formula(b_, r);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("formula parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  bool at(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  NodeId expr() {
    NodeId r = term();
    while (at('+')) {
      ++pos_;
      r = b_.add(r, term());
    }
    return r;
  }

  NodeId term() {
    NodeId r = factor();
    while (at('*')) {
      ++pos_;
      r = b_.mul(r, factor());
    }
    return r;
  }

  NodeId factor() {
    if (at('(')) {
      ++pos_;
      const NodeId r = expr();
      if (!at(')')) fail("expected ')'");
      ++pos_;
      return r;
    }
    std::size_t start = pos_;
    if (at('[')) {
      const auto close = s_.find(']', pos_);
      if (close == std::string::npos) fail("unbalanced '['");
      pos_ = close + 1;
      return b_.leaf(parse_polynomial(s_.substr(start + 1, close - start - 1), b_.field()));
    }
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '^' ||
                                s_[pos_] == '/' || (s_[pos_] == '-' && pos_ == start)))
      ++pos_;
    if (start == pos_) fail("expected a leaf");
    return b_.leaf(parse_polynomial(s_.substr(start, pos_ - start), b_.field()));
  }

  FormulaBuilder b_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula random_formula(SplitMix64& rng, const Field& field, std::size_t nvars, std::size_t max_leaves) {
  if (nvars == 0 || max_leaves == 0) throw std::invalid_argument("random_formula: empty shape");
  FormulaBuilder b(field, nvars);
  const auto leaves = static_cast<std::size_t>(1 + rng.uniform(max_leaves));
  return Formula(b, random_subtree(rng, b, nvars, leaves));
}

Formula parse_formula(std::string_view text, const Field& field, std::size_t nvars) {
  return FormulaParser(text, field, nvars).parse();
}

}  // namespace esym
