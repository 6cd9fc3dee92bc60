// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The blobcell authors

// The generalized blob algebra as the quotient of the specialized Hecke
// algebra by the ideal of the e_2^j, its KLR generators, and the graded
// cellular basis m_{S,T} with the checks that go with it.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "blobcell/hecke.hpp"

namespace blobcell {

using Vec32 = std::vector<std::uint32_t>;

class RelationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An algebra given by the left-multiplication matrices of its generators on
// a basis, with the anti-involution and the coordinates of 1.
struct OperatorAlgebra {
  std::uint32_t p = 2;
  int dim = 0;
  std::vector<FpMat> T;  // T[r-1]
  std::vector<FpMat> L;  // L[k-1]
  FpMat star;
  Vec32 unit;
};

OperatorAlgebra hecke_operators(const AKAlgebra<FpRing>& A);
// Span of H g H for the given generators: closure under left and right
// multiplication by T_r and L_1.
EchelonSpace two_sided_ideal(const OperatorAlgebra& A, const std::vector<Vec32>& gens);

// Span of {a g b} over normal-form basis elements a, b and generators g:
// the direct route to the ideal, quadratic in dim H.  Reports how many
// products were formed.
EchelonSpace ideal_by_products(const AKAlgebra<FpRing>& A, const std::vector<Vec32>& gens, long long* count = nullptr);
bool same_space(const EchelonSpace& a, const EchelonSpace& b);

// Sum of |Std(lambda)|^2 over one-column l-multipartitions of n.
long long expected_blob_dim(int n, int l);

class BlobAlgebra {
 public:
  // Throws DimensionMismatch when dim B disagrees with the tableau count.
  explicit BlobAlgebra(const HeckeParams& hp);

  const HeckeParams& params() const { return hp_; }
  const AKAlgebra<FpRing>& hecke() const { return A_; }
  const OperatorAlgebra& hecke_ops() const { return H_; }
  const OperatorAlgebra& ops() const { return B_; }
  const EchelonSpace& ideal() const { return I_; }
  const std::vector<Vec32>& e2() const { return e2_; }
  int hecke_dim() const { return H_.dim; }
  int dim() const { return B_.dim; }
  // Normal-form coordinates of H that index the basis of B.
  const std::vector<int>& kept() const { return kept_; }
  Vec32 project(Vec32 h) const;
  Vec32 lift(const Vec32& b) const;
  FpMat induce(const FpMat& op) const;

 private:
  HeckeParams hp_;
  AKAlgebra<FpRing> A_;
  OperatorAlgebra H_, B_;
  std::vector<Vec32> e2_;
  EchelonSpace I_;
  std::vector<int> kept_;
};

// ----------------------------------------------------------- KLR images

// Words in the KLR generators, read as products left to right.
struct Token {
  enum Kind { E, Y, Psi } kind = E;
  int a = 0;   // k for y_k, r for psi_r
  Residues i;  // for e(i)
  friend bool operator==(const Token&, const Token&) = default;
};
using Word = std::vector<Token>;
Token tok_e(Residues i);
Token tok_y(int k);
Token tok_psi(int r);
std::string word_str(const Word& w);

struct KlrImages {
  std::map<Residues, FpMat> e;  // nonzero e(i) only
  std::vector<FpMat> y, psi, jm;
  std::vector<std::vector<FpMat>> proj;  // proj[k-1][j]: L_k at eigenvalue q^j
  // The anti-involution fixing e(i), y_k, psi_r.  It differs from the one
  // inherited from H (fixing T_r, L_k) on psi_r, so it is built from a
  // spanning set of words w e(i) by reversing them.
  FpMat star;
  std::vector<Word> words;  // basis words for star, each ending in e(i)
  std::set<Residues> support() const;
};

// e(i) from simultaneous generalized eigenspaces of L_1..L_n, y_k from the
// nilpotent part of L_k, psi_r from the (T_r + P) Q^-1 e(i) lift.
KlrImages build_klr(const OperatorAlgebra& A, const HeckeParams& hp);

struct Term {
  long long coef = 1;
  Word word;
};
struct RelationInstance {
  std::string relation;  // orto1, eq12, eq13, ...
  Residues witness;
  std::string detail;
  std::vector<Term> terms;  // sum of terms is zero
};

// All instances of the defining relations; orto1 and sum1 range over the
// given support only (other idempotents vanish, so those instances hold
// trivially).  eq13 is included only on request.
std::vector<RelationInstance> klr_relation_instances(const HeckeParams& hp, bool include_eq13,
                                                     const std::set<Residues>& support);

// Degree of psi_r acting on residues i, and of a word (nullopt when the word
// is zero because of inconsistent idempotents).
int psi_degree(const Residues& i, int r, int e);
std::optional<int> word_degree(const Word& w, int e);

Vec32 evaluate(const OperatorAlgebra& A, const KlrImages& K, const Word& w);
// Left multiplication by a word applied to v.
Vec32 act(const OperatorAlgebra& A, const KlrImages& K, const Word& w, Vec32 v);

struct Report {
  std::string name;
  long long checked = 0;
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

std::vector<Report> check_klr_relations(const OperatorAlgebra& A, const KlrImages& K, const HeckeParams& hp,
                                        bool include_eq13);
// Every relation instance over all of I^n has all terms in one degree.
Report check_homogeneity(const HeckeParams& hp);
// star is an anti-automorphism fixing the generators with star^2 = 1;
// y_k nilpotent; JM_k = L_k, *-fixed, commuting.
std::vector<Report> check_klr_structure(const OperatorAlgebra& A, const KlrImages& K);

// i_1 not in kappa (eq12) or i_2 = i_1 + 1 with i_1 in kappa (eq13).
bool directly_killed(const Residues& i, const HeckeParams& hp);

// The quotient of H by the e(i) that eq13 kills, against H / I_n.  K_H are
// the KLR images in H itself.
struct Eq13Comparison {
  int dim_ideal_e2 = 0;     // dim I_n
  int dim_ideal_eq13 = 0;   // dim of the ideal generated by the eq13 e(i)
  bool same_ideal = false;
  std::set<Residues> vanish_e2, vanish_eq13, direct, one_column;
};
Eq13Comparison compare_eq13_quotient(const BlobAlgebra& B, const KlrImages& KH);

// --------------------------------------------------------- cellular basis

struct CellShape {
  Shape shape;
  Tableau t_lambda;
  Residues i_lambda;
  std::vector<Tableau> tabs;
  std::vector<std::vector<int>> words;  // official words of d(T)
  std::vector<int> degree;              // deg T
};

struct CellularBasis {
  std::vector<CellShape> shapes;
  std::vector<std::array<int, 3>> labels;  // (shape, s, t)
  std::vector<Vec32> vectors;
  std::vector<int> degree;
  std::vector<std::vector<std::vector<int>>> offset;  // offset[b][s][t] index
  int rank = 0;
  FpMat coords;  // basis-coordinates of a vector: coords * v

  int index(int b, int s, int t) const { return offset[b][s][t]; }
  Vec32 expand(const Vec32& v) const { return coords.apply(v); }
};

std::vector<int> official_word(const Perm& w);
// psi_{a_1} ... psi_{a_k} as a left-multiplication matrix.
FpMat psi_of(const OperatorAlgebra& A, const KlrImages& K, const std::vector<int>& word);

// Throws RelationFailure when the vectors are not a basis.
CellularBasis build_cellular_basis(const OperatorAlgebra& B, const KlrImages& K, const HeckeParams& hp);

Report check_star_symmetry(const KlrImages& K, const CellularBasis& cb);
// Condition (ii) with T-independence of the coefficients, for a in
// {e(i), y_k, psi_r}, plus homogeneity of every expansion.
std::vector<Report> check_cellularity(const OperatorAlgebra& B, const KlrImages& K, const CellularBasis& cb,
                                      const HeckeParams& hp);
// Right and left JM triangularity with content diagonal.
std::vector<Report> check_jm(const OperatorAlgebra& B, const KlrImages& K, const CellularBasis& cb,
                             const HeckeParams& hp);
// deg m_{S,T} - deg m_{S,T^lambda} does not depend on S.
Report check_degree_additivity(const CellularBasis& cb, const HeckeParams& hp);

struct CellModule {
  Shape shape;
  int dim = 0;
  FpMat gram;
  int gram_rank = 0;
  std::map<std::string, FpMat> action;  // generator name -> matrix on Std(lambda)
};
std::vector<CellModule> cell_modules(const OperatorAlgebra& B, const KlrImages& K, const CellularBasis& cb,
                                     const HeckeParams& hp);

}  // namespace blobcell
