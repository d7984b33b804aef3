#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "quadop/exactla.hpp"
#include "quadop/perm.hpp"
#include "quadop/rational.hpp"

namespace quadop {

// Parenthesized product of n distinct variables: a full binary tree whose
// leaves carry the labels 1..n bijectively, read left to right. Text form
// "(1 (2 3))"; a bare label is the arity-1 monomial.
class TreeMonomial {
public:
  // Parses the grammar  monomial := label | "(" monomial " " monomial ")".
  // The labels must be exactly 1..n for some n.
  static TreeMonomial parse(std::string_view text);
  static TreeMonomial from_basis_index(int n, int index);

  int arity() const { return static_cast<int>(labels_.size()); }
  // Index of the tree shape in the canonical per-arity catalog
  // (left comb first).
  int shape() const { return shape_; }
  const std::vector<int>& labels() const { return labels_; }

  // Position in the basis enumeration: shape-major, label order minor.
  int basis_index() const;

  // Leaf relabeling j -> p(j).
  TreeMonomial relabel(const Permutation& p) const;

  // Substitutes other at the leaf labeled slot; other's labels shift to
  // {slot..slot+k-1} and labels above slot shift up by k-1.
  TreeMonomial graft(int slot, const TreeMonomial& other) const;

  std::string str() const;

  friend auto operator<=>(const TreeMonomial&, const TreeMonomial&) = default;

private:
  TreeMonomial(int shape, std::vector<int> labels);
  friend TreeMonomial parse_monomial(std::string_view text, std::size_t& pos);

  int shape_;
  std::vector<int> labels_;
};

// Scanner-level parser used by the presentation file reader; pos is
// advanced past the monomial. Labels may be any distinct positive
// integers at this level; full 1..n coverage is checked by the caller
// via the public parse().
TreeMonomial parse_monomial(std::string_view text, std::size_t& pos);

// Catalan(n-1) * n!.
int free_dim(int n);

// The basis of the free module in arity n (1 <= n <= 5), in canonical
// order: tree shapes left-comb first, labelings lexicographic within a
// shape.
const std::vector<TreeMonomial>& basis(int n);

// Finite rational linear combination of monomials of one arity.
class OperadElement {
public:
  explicit OperadElement(int arity);
  static OperadElement monomial(const TreeMonomial& m, Rat coeff = Rat(1));
  static OperadElement from_terms(const std::vector<std::pair<Rat, std::string>>& terms);

  int arity() const { return arity_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<TreeMonomial, Rat>& coeffs() const { return coeffs_; }
  Rat coeff(const TreeMonomial& m) const;

  OperadElement& add(const TreeMonomial& m, const Rat& c);
  OperadElement operator+(const OperadElement& o) const;
  OperadElement operator-(const OperadElement& o) const;
  OperadElement operator-() const;
  OperadElement operator*(const Rat& c) const;

  // Coordinates in the basis enumeration (arity <= 5).
  SparseVec sparse_coords() const;
  std::vector<Rat> dense_coords() const;
  static OperadElement from_sparse_coords(int n, const SparseVec& v);

  // Grammar-compatible rendering: "1 ((1 2) 3) - 1 (1 (2 3))".
  std::string str() const;

  friend bool operator==(const OperadElement& a, const OperadElement& b) = default;

private:
  int arity_;
  std::map<TreeMonomial, Rat> coeffs_;
};

// Linear extension of leaf relabeling; a left group action.
OperadElement act(const Permutation& p, const OperadElement& e);

// Bilinear extension of monomial grafting.
OperadElement graft(const OperadElement& a, int slot, const OperadElement& b);

// Permutation of basis indices induced by relabeling, one entry per basis
// monomial of the permutation's arity.
std::vector<int> action_index_table(const Permutation& p);

// The permutation on n+k-1 letters obtained from p by replacing the point
// slot with a block of k letters:
//   act(block, graft(m, slot, m2)) == graft(act(p, m), p(slot), m2).
Permutation block_permutation(const Permutation& p, int slot, int inner_arity);

// Signed sum of relabeled associator patterns over a subgroup:
//   sum over sigma of sign(sigma) * act(sigma, ((1 2) 3) - (1 (2 3))).
OperadElement condition_vector(GSubgroup g);

}  // namespace quadop
