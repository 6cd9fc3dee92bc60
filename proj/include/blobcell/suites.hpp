// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The blobcell authors

// Verification suites shared by the C API, the CLI and the acceptance run.
// Each suite returns one Report per checked property.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "blobcell/klrcalc.hpp"

namespace blobcell {

// Algebra data for one parameter set, built on first use.
class Workspace {
 public:
  explicit Workspace(HeckeParams hp) : hp_(std::move(hp)) {}
  const HeckeParams& params() const { return hp_; }
  const Oracle& oracle();
  const BlobAlgebra& blob() { return oracle().blob(); }
  const KlrImages& klr() { return oracle().klr(); }
  const KlrImages& klr_hecke();  // the same construction inside H
  const CellularBasis& basis();

 private:
  HeckeParams hp_;
  std::unique_ptr<Oracle> oracle_;
  std::optional<KlrImages> klr_hecke_;
  std::optional<CellularBasis> basis_;
};

bool all_pass(const std::vector<Report>& reps);

// Relations of both Hecke models, Murphy idempotents, integrality of the
// residue-class idempotents and the two routes to e_2^j.
std::vector<Report> suite_hecke(Workspace& ws);
// KLR relations in B (with eq13) and in H (without), structure, grading, and
// the comparison of the eq13 quotient with H / I_n.
std::vector<Report> suite_klr(Workspace& ws);
// Basis rank, symmetry, cellularity, degree additivity and cell modules.
std::vector<Report> suite_cellular(Workspace& ws);
std::vector<Report> suite_jm(Workspace& ws);
// Local rules and both straightening procedures.  Without the oracle only
// the symbolic statements are checked (no algebra is built).
std::vector<Report> suite_rewrite(Workspace& ws, bool oracle, unsigned seed = 20261016);

// Brute-force order and Garnir theorems up to the given sizes.
std::vector<Report> suite_combinatorics(int ehresmann_n = 4, int bijection_n = 5, int garnir_n = 6);

const std::vector<std::string>& suite_names();  // hecke, klr, cellular, jm, rewrite
// One named suite, or every suite for "all".
std::vector<Report> run_suite(Workspace& ws, const std::string& name, bool oracle);

// The n = 22, l = 4 example: kappa = (0,2,4,7), e = 10, lambda = mu_max.
// Checks the y_k e(i^lambda) traces against the documented rule sequences.
std::vector<Report> walkthrough_n22();

}  // namespace blobcell
