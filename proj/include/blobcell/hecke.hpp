// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The blobcell authors

// The cyclotomic Hecke algebra of type G(l,1,n) in its Ariki-Koike normal
// form L^c T_w (0 <= c_i < l), generic or specialized, together with the
// seminormal model over the field of rational functions and the Murphy
// idempotents built from Jucys-Murphy contents.

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "blobcell/combinatorics.hpp"
#include "blobcell/field.hpp"
#include "blobcell/matrix.hpp"

namespace blobcell {

class RewriteNonTermination : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateContents : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct HeckeParams {
  int n = 2;
  int l = 2;
  std::uint32_t p = 11;
  std::uint32_t q = 3;  // primitive e-th root of unity mod p
  Multicharge mc;       // hat_kappa and e

  // Checks primality, e | p-1, e > 2l and strong adjacency-freeness.  A q of
  // zero means "pick the smallest primitive root".
  static HeckeParams make(int n, int l, int e, std::uint32_t p, std::vector<long long> hat_kappa,
                          std::uint32_t q = 0);
  // Reference parameters: e=5, p=11 for l=2 and e=7, p=29 for l=3, with
  // hat_kappa spaced by a multiple of e at least n apart.
  static HeckeParams preset(int n, int l);
  int e() const { return mc.e; }
  HeckeParams with_n(int m) const;
};

// Index set of the normal-form basis.  Index = cidx * n! + widx where cidx
// reads c in base l with c_1 least significant.
class AKBasis {
 public:
  AKBasis(int n, int l);
  int n() const { return n_; }
  int l() const { return l_; }
  int size() const { return nexp_ * nperm_; }
  int num_perms() const { return nperm_; }
  int num_exps() const { return nexp_; }
  int index(int cidx, int widx) const { return cidx * nperm_ + widx; }
  int cidx(int idx) const { return idx / nperm_; }
  int widx(int idx) const { return idx % nperm_; }
  std::vector<int> exps(int cidx) const;
  int exps_index(const std::vector<int>& c) const;
  const Perm& perm(int widx) const { return perms_[widx]; }
  int perm_index(const Perm& w) const;
  int left_s(int r, int widx) const { return left_[r - 1][widx]; }    // s_r w
  int right_s(int r, int widx) const { return right_[r - 1][widx]; }  // w s_r
  int length(int widx) const { return len_[widx]; }
  const std::vector<int>& word(int widx) const { return word_[widx]; }
  int inverse(int widx) const { return inv_[widx]; }
  std::string label(int idx) const;

 private:
  int n_, l_, nperm_, nexp_;
  std::vector<Perm> perms_;
  std::vector<std::vector<int>> left_, right_, word_;
  std::vector<int> len_, inv_;
};

// The algebra with coefficients in Ring: q and the cyclotomic roots Q_j are
// ring elements.  Products are computed by rewriting into normal form.
template <class Ring>
class AKAlgebra {
 public:
  using Elem = typename Ring::Elem;
  using Vec = std::vector<Elem>;
  using Column = std::vector<std::pair<int, Elem>>;
  using Op = std::vector<Column>;  // image of each basis vector

  AKAlgebra(int n, int l, Ring ring, Elem q, std::vector<Elem> roots);

  const AKBasis& basis() const { return basis_; }
  const Ring& ring() const { return ring_; }
  const Elem& q() const { return q_; }
  int n() const { return basis_.n(); }
  int dim() const { return basis_.size(); }

  Vec zero() const { return Vec(dim(), ring_.zero()); }
  Vec unit() const { return basis_vector(0); }
  Vec basis_vector(int idx) const;

  const Op& left_T_op(int r) const { return lT_[r - 1]; }
  const Op& left_L_op(int k) const { return lL_[k - 1]; }
  const Op& right_T_op(int r) const { return rT_[r - 1]; }
  const Op& star_op() const { return star_; }

  Vec apply(const Op& op, const Vec& v) const;
  Vec left_T(int r, const Vec& v) const { return apply(lT_[r - 1], v); }
  Vec left_L(int k, const Vec& v) const { return apply(lL_[k - 1], v); }
  Vec right_T(int r, const Vec& v) const { return apply(rT_[r - 1], v); }
  Vec right_L(int k, const Vec& v) const { return star(left_L(k, star(v))); }
  Vec star(const Vec& v) const { return apply(star_, v); }
  Vec mul(const Vec& a, const Vec& b) const;
  // Normal form of L^b for arbitrary exponents b >= 0.
  Vec monomial(const std::vector<int>& b) const;

 private:
  Vec right_perm(Vec v, int widx) const;
  Vec reduce(const std::vector<int>& b, int depth) const;
  void axpy(Vec& out, const Elem& s, const Vec& v) const;

  AKBasis basis_;
  Ring ring_;
  Elem q_, qinv_;
  std::vector<Elem> roots_;
  std::vector<Vec> R_;  // normal form of L_k^l
  std::vector<Op> lT_, lL_, rT_;
  Op star_;
  mutable std::map<std::vector<int>, Vec> memo_;
};

// Convenience constructors for the two modes.
AKAlgebra<FpRing> specialized_algebra(const HeckeParams& hp);
AKAlgebra<LaurentRing> generic_algebra(const HeckeParams& hp);
AKAlgebra<RatRing> rational_algebra(const HeckeParams& hp);
AKAlgebra<SeriesRing> series_algebra(const HeckeParams& hp, int prec);

FpMat to_fpmat(const AKAlgebra<FpRing>::Op& op, int dim, std::uint32_t p);

// Checks the defining relations on every basis vector; returns one line per
// failure (empty when all hold).
template <class Ring>
std::vector<std::string> check_hecke_relations(const AKAlgebra<Ring>& A);

// ------------------------------------------------------ seminormal model

// Generic content q^(hat_kappa_m + c - r) of the node holding k.
RatFun generic_content(const Tableau& t, int k, const HeckeParams& hp);
long long content_exponent(const Node& g, const HeckeParams& hp);

struct SeminormalBlock {
  Shape shape;
  std::vector<Tableau> tabs;
  std::vector<Matrix<RatFun>> T;               // T[r-1], left action
  std::vector<std::vector<RatFun>> contents;  // contents[k-1][tableau]
};

// One block per l-multipartition of n, basis the standard tableaux.
class SeminormalModel {
 public:
  explicit SeminormalModel(const HeckeParams& hp);
  const HeckeParams& params() const { return hp_; }
  const std::vector<SeminormalBlock>& blocks() const { return blocks_; }
  Matrix<RatFun> L(int b, int k) const;
  Matrix<RatFun> identity(int b) const;
  // Generator word: positive r for T_r, negative -k for L_k.
  Matrix<RatFun> word(int b, const std::vector<int>& w) const;
  // Murphy's product formula, one matrix per block.
  std::vector<Matrix<RatFun>> murphy_idempotent(const Tableau& s) const;
  std::vector<std::string> check_relations() const;
  // Block and position of a standard tableau.
  std::pair<int, int> locate(const Tableau& t) const;

 private:
  HeckeParams hp_;
  std::vector<SeminormalBlock> blocks_;
};

// Trace of a generator word on the left regular representation, generic mode.
LaurentPoly regular_trace(const AKAlgebra<LaurentRing>& A, const std::vector<int>& w);
// Same trace predicted from the seminormal blocks: sum of dim * block trace.
RatFun seminormal_regular_trace(const SeminormalModel& m, const std::vector<int>& w);

// Eigenvalue q_hat^exponent of L_k: its nullity in the generic regular
// representation against sum over blocks of dim * (number of tableaux with
// that content at k).  Matching multiplicities that add up to the dimension
// give equal characteristic polynomials, L_k being semisimple.
struct EigenMultiplicity {
  long long exponent = 0;
  int predicted = 0;
  int nullity = 0;
};
std::vector<EigenMultiplicity> jm_eigen_multiplicities(const HeckeParams& hp, int k);

// ------------------------------------------------ residue-class idempotents

// Every standard tableau of every l-multipartition of n, in trie order.
std::vector<Tableau> all_std_tableaux(int n, int l);

struct ClassIdempotent {
  Residues key;
  std::vector<Tableau> members;
  std::vector<std::uint32_t> value;  // specialized normal-form coordinates
  int valuation = 0;                 // t-adic valuation of the common denominator
  int pole_order = 0;                // 0 when every coordinate is integral
};

// Sum of F_T over each residue class, computed in the generic algebra over
// F_p[[t]] with q_hat = q + t and specialized at t = 0.  Throws
// PoleAtSpecialization if some coordinate has a pole, unless allow_poles.
std::vector<ClassIdempotent> class_idempotents(const HeckeParams& hp, bool allow_poles = false);
// Independent route over F_p(q_hat) for small cases; same output format.
std::vector<ClassIdempotent> class_idempotents_rational(const HeckeParams& hp);

// e_2^j for the 2-multipartition (0,..,(2),..,0) in component j (1-based),
// as a vector of the specialized H_2.
std::vector<std::uint32_t> e2_by_specialization(const HeckeParams& hp, int j);
std::vector<std::uint32_t> e2_by_linear_system(const HeckeParams& hp, int j);
// Inclusion H_2 -> H_n on normal-form coordinates.
std::vector<std::uint32_t> embed_h2(const std::vector<std::uint32_t>& v, const AKBasis& big);

}  // namespace blobcell
