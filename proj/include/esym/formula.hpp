#pragma once

// Algebraic formulas: binary trees of + and * gates over affine leaves.
//
// size(phi) counts the leaves whose label is not constant. The formal degree
// of a leaf is the degree of its label, of a + gate the maximum over its
// children, and of a * gate the sum.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "esym/field.hpp"
#include "esym/poly.hpp"

namespace esym {

class SplitMix64;

using NodeId = std::uint32_t;

enum class NodeKind { leaf, add, mul };

struct FormulaNode {
  NodeKind kind = NodeKind::leaf;
  Polynomial label;  // leaves only; degree <= 1
  NodeId left = 0;
  NodeId right = 0;
};

/// Accumulates nodes; children must be created before their parents.
class FormulaBuilder {
 public:
  explicit FormulaBuilder(Field field, std::size_t nvars = 0) : field_(std::move(field)), nvars_(nvars) {}

  NodeId leaf(const Polynomial& label);
  NodeId constant(const FieldElement& c);
  NodeId variable(std::size_t index);
  NodeId add(NodeId a, NodeId b);
  NodeId mul(NodeId a, NodeId b);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<FormulaNode>& nodes() const { return nodes_; }

 private:
  NodeId push(FormulaNode node);
  Field field_;
  std::size_t nvars_;
  std::vector<FormulaNode> nodes_;
};

class Formula {
 public:
  /// The tree reachable from `root`, renumbered in post-order.
  Formula(const FormulaBuilder& builder, NodeId root);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  NodeId root() const { return static_cast<NodeId>(nodes_.size() - 1); }
  std::size_t num_nodes() const { return nodes_.size(); }
  const FormulaNode& node(NodeId v) const { return nodes_.at(v); }
  bool contains(NodeId v) const { return v < nodes_.size(); }

  unsigned formal_degree() const { return formal_degree(root()); }
  unsigned formal_degree(NodeId v) const { return fdeg_.at(v); }
  std::size_t size() const { return size(root()); }
  std::size_t size(NodeId v) const { return size_.at(v); }
  std::optional<NodeId> parent(NodeId v) const;
  std::size_t depth(NodeId v) const { return depth_.at(v); }
  /// Position in a left-to-right pre-order walk.
  std::size_t preorder(NodeId v) const { return preorder_.at(v); }

  /// The polynomial computed at v (the whole formula by default).
  Polynomial expand() const { return expand(root()); }
  Polynomial expand(NodeId v) const;

  /// Copies the subtree rooted at v into a builder.
  NodeId copy_into(FormulaBuilder& b, NodeId v) const;

  std::string to_string() const;

 private:
  std::string node_text(NodeId v) const;

  Field field_;
  std::size_t nvars_;
  std::vector<FormulaNode> nodes_;
  std::vector<unsigned> fdeg_;
  std::vector<std::size_t> size_;
  std::vector<NodeId> parent_;
  std::vector<std::size_t> depth_;
  std::vector<std::size_t> preorder_;
};

unsigned formal_degree(const Formula& phi);

/// Deepest, then leftmost, vertex with formal degree in [t, 2t-1].
/// Requires 1 <= t and 2t <= formal_degree(phi).
NodeId find_degree_vertex(const Formula& phi, unsigned t);

struct LinearSplit {
  Polynomial h;  // coefficient of the fresh variable standing for phi_v
  Polynomial f;
};

/// phi = h * poly(phi_v) + f, read off the path from v to the root.
LinearSplit split_linear(const Formula& phi, NodeId v);

/// phi with the subtree at v replaced by the constant gamma; computes
/// h * gamma + f and has size(phi) - size(phi_v).
Formula substitute_vertex(const Formula& phi, NodeId v, const FieldElement& gamma);

struct PeelDecomposition {
  Formula residual;
  std::vector<std::pair<Polynomial, Polynomial>> pairs;
  unsigned d_prime = 0;
  std::size_t original_size = 0;

  std::size_t k() const { return pairs.size(); }
  /// residual + sum f_i g_i, expanded.
  Polynomial reassembled() const;
};

/// Repeatedly peels a vertex of formal degree in [t, 2t-1], t = ceil(d'/3),
/// until the formal degree drops below d'.
PeelDecomposition peel_decompose(const Formula& phi, unsigned d_prime);

struct PeelAudit {
  bool identity = false;
  bool constant_free = false;
  bool degree_below = false;
  bool size_bound = false;  // k d' / 3 <= s
  bool ok() const { return identity && constant_free && degree_below && size_bound; }
};

PeelAudit audit_peel(const Formula& phi, const PeelDecomposition& dec);

/// sum_j c_j prod_i (x_i + a_j) over the first n+1 field elements a_j, with
/// c solving the Vandermonde system that isolates e_d^n. Needs |F| >= n+1.
Formula ben_or(unsigned n, unsigned d, const Field& field);

struct LowerBoundReport {
  unsigned n = 0;
  unsigned d = 0;
  unsigned dim_v2 = 0;
  bool dim_defaulted = false;
  Rational bound;  // d (n - dim) / 6
  std::optional<std::uint64_t> ben_or_size;  // (n+1) n when dim defaulted
};

/// Requires d >= 3 and dim <= n; dim defaults to d - 1.
LowerBoundReport lower_bound_report(unsigned n, unsigned d, std::optional<unsigned> dim_v2 = std::nullopt);

/// Random formula with at most max_leaves leaves over x1..x_nvars.
Formula random_formula(SplitMix64& rng, const Field& field, std::size_t nvars, std::size_t max_leaves);

/// Grammar: expr = term ('+' term)*, term = factor ('*' factor)*,
/// factor = '(' expr ')' | '[' affine polynomial ']' | x<i> | literal.
Formula parse_formula(std::string_view text, const Field& field, std::size_t nvars = 0);

}  // namespace esym
