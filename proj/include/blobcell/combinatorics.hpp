// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The blobcell authors

// Multipartitions, tableaux and the weighted dominance orders on them,
// residues, and Garnir tableaux for one-column shapes.  Everything here is
// pure combinatorics; no algebra is involved.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace blobcell {

// A node (row, col, comp) of a multicomposition diagram, all 1-based.
struct Node {
  int row = 1;
  int col = 1;
  int comp = 1;
  friend bool operator==(const Node&, const Node&) = default;
  friend auto operator<=>(const Node&, const Node&) = default;
};

// Row lengths per component.  A multipartition has weakly decreasing rows
// in every component; a one-column shape has every row of length one.
using Shape = std::vector<std::vector<int>>;
using Weighting = std::vector<int>;
using Perm = std::vector<int>;  // one-line notation, 0-based values
using Residues = std::vector<int>;

enum class Cmp { less, equal, greater, incomparable };
const char* cmp_name(Cmp c);

int shape_size(const Shape& s);
bool is_multipartition(const Shape& s);
bool is_one_column(const Shape& s);
Shape one_column(const std::vector<int>& heights);
std::vector<int> column_heights(const Shape& s);
std::vector<Node> diagram(const Shape& s);
std::string shape_str(const Shape& s);

Weighting theta_zero(int l);
// theta_i > theta_{i+1} + n for all i.
Weighting theta_separated(int l, int n);

// theta_b + col - row.
int node_key(const Node& g, const Weighting& theta);
// Compare a and b in the order where higher key is larger and, on equal
// keys, the smaller component index is larger.
Cmp node_cmp(const Node& a, const Node& b, const Weighting& theta);
inline bool node_less(const Node& a, const Node& b, const Weighting& theta) {
  return node_cmp(a, b, theta) == Cmp::less;
}

// lhs is dominated by rhs: for every node g0, the number of nodes of lhs
// above g0 is at most the number for rhs.  Throws on a size mismatch.
bool dominance_leq(const Shape& lhs, const Shape& rhs, const Weighting& theta);
Cmp dominance_cmp(const Shape& lhs, const Shape& rhs, const Weighting& theta);
// Search for a bijection f : [lhs] -> [rhs] with f(g) >= g for every node.
// One-column shapes only; used as an independent oracle for dominance.
bool raising_bijection_exists(const Shape& lhs, const Shape& rhs, const Weighting& theta);

// The balanced one-column multipartition: n = q*l + r gives r columns of
// height q+1 followed by l-r of height q.
Shape mu_max(int n, int l);

std::vector<Shape> multipartitions(int n, int l);
// One-column multipartitions of n with l components, lexicographic in the
// column heights, largest first.
std::vector<Shape> one_column_multipartitions(int n, int l);

// ------------------------------------------------------------- tableaux

class Tableau {
 public:
  Tableau() = default;
  Tableau(Shape shape, std::vector<Node> at);
  // Build from per-component row-major entry lists, e.g. {{1,4},{2,3}}.
  // Rows are filled to the shape's row lengths.
  static Tableau from_rows(const Shape& shape, const std::vector<std::vector<int>>& entries);
  // Convenience for one-column shapes: column entries per component.
  static Tableau from_columns(const std::vector<std::vector<int>>& columns);

  const Shape& shape() const { return shape_; }
  int size() const { return static_cast<int>(at_.size()); }
  // Node holding entry k (1-based).
  const Node& node(int k) const { return at_[k - 1]; }
  const std::vector<Node>& nodes() const { return at_; }
  int entry(const Node& g) const;
  bool is_standard() const;
  // Shape of the restriction to {1..k}; a multicomposition in general.
  Shape restricted_shape(int k) const;
  // Right action: (T w)(j) = T(w(j)).
  Tableau act(const Perm& w) const;
  // T s_k, swapping entries k and k+1.
  Tableau swapped(int k) const;
  std::vector<std::vector<int>> rows() const;
  std::string str() const;

  friend bool operator==(const Tableau& a, const Tableau& b) { return a.at_ == b.at_ && a.shape_ == b.shape_; }
  friend bool operator!=(const Tableau& a, const Tableau& b) { return !(a == b); }
  friend bool operator<(const Tableau& a, const Tableau& b) { return a.at_ < b.at_; }

 private:
  Shape shape_;
  std::vector<Node> at_;
};

// Greedy tableau adding, at each step, the largest addable node of the
// current sub-shape that lies in [shape].
Tableau t_lambda(const Shape& shape, const Weighting& theta);
// t <= s: shape(t|k) is dominated by shape(s|k) for every k.
bool tableau_leq(const Tableau& t, const Tableau& s, const Weighting& theta);
Cmp tableau_cmp(const Tableau& t, const Tableau& s, const Weighting& theta);
// Lexicographic order: first k where the restrictions differ decides.
Cmp lex_cmp(const Tableau& t, const Tableau& s, const Weighting& theta);
// Total order on one-column multipartitions, possibly of different sizes.
Cmp shape_lex_cmp(const Shape& a, const Shape& b, const Weighting& theta);

std::vector<Tableau> all_tableaux(const Shape& shape);
std::vector<Tableau> std_tableaux(const Shape& shape);

// Reachability by steps T -> T s_k with T s_k strictly above T.
class WeakOrder {
 public:
  WeakOrder(const Shape& shape, const Weighting& theta);
  // s is reachable from t by raising steps (s = t allowed).
  bool leq(const Tableau& t, const Tableau& s) const;
  const std::vector<Tableau>& tableaux() const { return tabs_; }
  int index(const Tableau& t) const;

 private:
  std::vector<Tableau> tabs_;
  std::map<std::vector<Node>, int> idx_;
  std::vector<std::vector<bool>> reach_;
};

// --------------------------------------------------------- permutations

Perm perm_identity(int n);
Perm perm_compose(const Perm& a, const Perm& b);  // a after b
Perm perm_inverse(const Perm& w);
int perm_length(const Perm& w);
Perm perm_from_word(int n, const std::vector<int>& word);  // s_{w1} s_{w2} ...
// Lexicographically smallest reduced word, letters 1..n-1.
std::vector<int> lexmin_reduced_word(const Perm& w);
std::vector<Perm> all_perms(int n);
// Bruhat order with the identity at the bottom, by the subword criterion
// against the lexmin reduced word of w.
bool bruhat_leq_subword(const Perm& u, const Perm& w);
// Same order by the rank-matrix (tableau) criterion.
bool bruhat_leq_rank(const Perm& u, const Perm& w);
// The identity is the largest element here, so u < w
// means w lies strictly below u in the usual Bruhat order.
inline bool bruhat_less_top_identity(const Perm& u, const Perm& w) {
  return u != w && bruhat_leq_subword(w, u);
}

// d(T) with T^lambda d(T) = T.
Perm d_perm(const Tableau& t, const Weighting& theta);

// ------------------------------------------------------------ residues

struct Multicharge {
  std::vector<long long> hat_kappa;
  int e = 2;
  std::vector<int> kappa() const;
};

int residue(const Node& g, const Multicharge& mc);
Residues residue_seq(const Tableau& t, const Multicharge& mc);
Residues act_residues(const Residues& i, int k);  // s_k . i
std::string residues_str(const Residues& i);
// Checks the four conditions; on failure, why names the first one violated
// ("i", "ii", "iii" or "iv") with a short explanation.
bool is_strongly_adjacency_free(const Multicharge& mc, int n, std::string* why = nullptr);

// Residue sequence as class key; two tableaux are equivalent when equal.
inline Residues residue_class(const Tableau& t, const Multicharge& mc) { return residue_seq(t, mc); }
inline bool same_class(const Tableau& s, const Tableau& t, const Multicharge& mc) {
  return residue_seq(s, mc) == residue_seq(t, mc);
}

// i and j are related by swapping adjacent entries whose residues differ
// by something other than 0 or +-1 mod e.  Decided by the projection test:
// the multisets agree and every pair of non-commuting letters occurs in the
// same relative order.
bool free_move_equivalent(const Residues& i, const Residues& j, int e);

// ------------------------------------------------------------- Garnir

struct GarnirDatum {
  Shape shape;
  Node gamma;
  Tableau tableau;
  std::vector<Node> snake;        // from gamma^+ down to gamma
  std::vector<int> snake_numbers;  // entries of t_lambda on the snake
};

// Garnir by definition: not standard, some T s_i standard, and s_i is the
// only simple reflection raising T.
bool is_garnir(const Tableau& t, const Weighting& theta);
// The three-condition characterization; returns gamma when it applies.
std::optional<Node> garnir_node(const Tableau& t, const Weighting& theta);
std::vector<Node> garnir_snake(const Shape& shape, const Node& gamma, const Weighting& theta);
std::vector<int> garnir_snake_numbers(const Shape& shape, const Node& gamma, const Weighting& theta);
// Both constructions use the zero weighting's row structure.
Tableau classical_garnir(const Shape& shape, const Node& gamma);
Tableau tilde_garnir(const Shape& shape, const Node& gamma);
// All Garnir tableaux of a one-column shape, found via the characterization.
std::vector<GarnirDatum> garnir_enumerate(const Shape& shape, const Weighting& theta);

}  // namespace blobcell
