// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The blobcell authors

// Symbolic rewriting of KLR words: the local diagram relations, the
// concatenation map, and the two straightening procedures (dots on e(i^lambda)
// and Garnir tableaux).  Every rewrite can be certified against the matrix
// images of the generators in the blob algebra.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "blobcell/blob.hpp"

namespace blobcell {

class PatternMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The straightening procedure reached a configuration it has no move for.
class ObstacleClassification : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// coef * word * e(bottom), with integer coefficients (reduced mod p only when
// evaluated).  E tokens inside the word are allowed.
struct DiagramWord {
  long long coef = 1;
  Word word;
  Residues bottom;

  int strands() const { return static_cast<int>(bottom.size()); }
  // Residue sequence directly below token t (t = size() gives the bottom).
  // nullopt when an inner e(i) token disagrees, i.e. the word is zero.
  std::optional<std::vector<Residues>> heights() const;
  std::string str() const;
  friend bool operator==(const DiagramWord&, const DiagramWord&) = default;
};
using LinComb = std::vector<DiagramWord>;

// Merge equal words and drop zero coefficients.
LinComb simplify(LinComb lc);
std::string lincomb_str(const LinComb& lc);

// Residues with dots and row bars, e.g. "(0,2,4,7 | 9*,1,3,6)".  dots[k-1]
// is the power of y_k; bars lists the positions after which a bar is drawn.
struct SymbolicSequence {
  Residues i;
  std::vector<int> dots;
  std::vector<int> bars;

  std::string str() const;
  static SymbolicSequence parse(const std::string& s);
  DiagramWord word() const;  // y^dots e(i)
  friend bool operator==(const SymbolicSequence&, const SymbolicSequence&) = default;
};
// Bars between the rows of T^lambda.
std::vector<int> row_bars(const Shape& shape, const Weighting& theta);

// ------------------------------------------------------------ local rules

// A rule applies at a token index (at) or at a height between tokens (at = 0
// is the top, at = size() the bottom); height rules also take a strand.
struct Position {
  int at = 0;
  int strand = 0;
};

struct RuleInfo {
  std::string name;
  bool height_rule = false;
};
const std::vector<RuleInfo>& local_rules();

// Rewrites t at position; throws PatternMismatch when the rule does not match.
LinComb local_rewrite(const DiagramWord& t, const std::string& rule, Position pos, const Multicharge& mc);
// All positions where the rule matches.
std::vector<Position> rule_positions(const DiagramWord& t, const std::string& rule, const Multicharge& mc);

// Adds a through strand of residue iota on the right.
DiagramWord concatenate(const DiagramWord& t, int iota);
LinComb concatenate(const LinComb& lc, int iota);

// ------------------------------------------------------------ oracle

// Matrix images of the KLR generators in B for fixed parameters.
class Oracle {
 public:
  explicit Oracle(const HeckeParams& hp);
  const HeckeParams& params() const { return hp_; }
  const BlobAlgebra& blob() const { return B_; }
  const KlrImages& klr() const { return K_; }
  Vec32 value(const DiagramWord& t) const;
  Vec32 value(const LinComb& lc) const;
  bool equal(const LinComb& a, const LinComb& b) const { return value(a) == value(b); }

 private:
  HeckeParams hp_;
  BlobAlgebra B_;
  KlrImages K_;
};

// ------------------------------------------------------------ straightening

struct TraceStep {
  std::string rule;   // free-move, dot-jump, double-i, trio, gap, bad-start, ...
  int position = 0;   // strand where the rule acts
  std::string before;
  std::vector<std::string> after;  // signed symbolic sequences
  DiagramWord lhs;    // the core before the step
  LinComb rhs;        // context * core * context after the step
  bool certified = false;
};

struct Straightening {
  DiagramWord input;
  std::vector<TraceStep> trace;
  LinComb terminal;             // each term factors through e(i^mu)
  std::vector<Shape> shapes;    // mu for each terminal term
  bool certified = false;       // every step and the total checked in the oracle
};

class Straightener {
 public:
  // bars: positions of the row separators used when rendering traces.
  Straightener(Multicharge mc, Weighting theta, int l, std::vector<int> bars = {});

  // y_k e(i^lambda) as a sum of terms through e(i^mu), mu > lambda.
  Straightening dot(const Shape& lambda, int k, const Oracle* oracle = nullptr);
  // e(j) as a sum of terms through e(i^mu).
  Straightening idempotent(const Residues& j, const Oracle* oracle = nullptr);

  // The one-column shape with i^mu = j, if any.
  std::optional<Shape> shape_of(const Residues& j);
  void set_step_limit(long long s) { limit_ = s; }

 private:
  struct Piece {
    long long coef;
    Word above, below;  // context around the core
    Residues core;
    int dot;            // 0 for an undotted core
  };
  struct Done {
    long long coef;
    Word above, below;
    Residues core;
    Shape mu;
  };
  using Result = std::vector<Done>;

  Result reduce(const Residues& j, int dot);
  Result reduce_dotted(const Residues& j, int d);
  Result reduce_undotted(const Residues& j);
  Result expand(const std::vector<Piece>& pieces);
  void record(const std::string& rule, int pos, const Residues& j, int dot, const std::vector<Piece>& out);
  std::string render(const Residues& j, int dot) const;
  bool in_kappa(int a) const;
  int mod(long long a) const;

  Multicharge mc_;
  Weighting theta_;
  int l_;
  std::vector<int> bars_;
  std::vector<int> kappa_;
  std::map<int, std::map<Residues, Shape>> shapes_;
  std::map<std::pair<Residues, int>, Result> memo_;
  std::set<std::pair<Residues, int>> active_;
  std::vector<TraceStep> trace_;
  const Oracle* oracle_ = nullptr;
  bool all_certified_ = true;
  long long steps_ = 0, limit_ = 200000;
};

// Convenience wrapper with the bars of lambda.
Straightening straighten_dot(const Multicharge& mc, const Weighting& theta, const Shape& lambda, int k,
                             const Oracle* oracle = nullptr);

// m_{S,G} expanded in the cellular basis.  Same-shape terms must be m_{S,T1}
// with T1 above G; other terms must come from shapes above lambda.
struct GarnirExpansion {
  bool passthrough = false;     // G standard: m_{S,G} is a basis element
  std::vector<std::pair<std::array<int, 3>, std::uint32_t>> terms;
  bool support_ok = true;       // T1 |> G at lambda, mu > lambda elsewhere
  bool dominance_ok = true;     // the sharper mu |> lambda
  std::vector<std::string> violations;
  std::optional<Straightening> idempotent;  // symbolic expansion of e(i^G)
};
GarnirExpansion straighten_garnir(const Oracle& oracle, const CellularBasis& cb, const Tableau& S, const Tableau& G);

// Reading sequence of the free moves taking i to j (positions r of the
// swaps, applied left to right), or nullopt if i and j are not equivalent.
std::optional<std::vector<int>> free_move_path(const Residues& i, const Residues& j, int e);

}  // namespace blobcell
