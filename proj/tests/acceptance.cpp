// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The blobcell authors

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.  The first violation of each failing check is printed
// below its criterion.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "blobcell/suites.hpp"

using namespace blobcell;

namespace {

struct Outcome {
  std::vector<Report> checks;
  std::string summary;
};

std::string tag(int n, int l) { return "(" + std::to_string(n) + "," + std::to_string(l) + ") "; }

Report named(const std::string& prefix, Report r) {
  r.name = prefix + r.name;
  return r;
}

void add(Outcome& o, const std::vector<Report>& reps, const std::string& prefix) {
  for (const auto& r : reps) o.checks.push_back(named(prefix, r));
}

Report from_strings(const std::string& name, const std::vector<std::string>& bad) { return Report{name, 1, bad}; }

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Sum over compositions a of n into l parts of (n! / prod a_i!)^2.
long long multinomial_square_sum(int n, int l) {
  std::function<long long(int, int, long long)> rec = [&](int left, int parts, long long denom) -> long long {
    if (parts == 1) {
      const long long m = factorial(n) / (denom * factorial(left));
      return m * m;
    }
    long long s = 0;
    for (int a = 0; a <= left; ++a) s += rec(left - a, parts - 1, denom * factorial(a));
    return s;
  };
  return rec(n, l, 1);
}

const std::vector<std::pair<int, int>> kSmall = {{2, 2}, {3, 2}, {2, 3}, {3, 3}};

// ------------------------------------------------------------ criteria

Outcome dimension_law() {
  struct Case {
    int n, l;
    long long listed;
  };
  Report law{"dim B = l^n n! - rank(I_n) = sum of squared multinomials", 0, {}};
  Report listed{"listed values 6, 20, 70, 18, 93", 0, {}};
  std::ostringstream mismatch;
  for (auto [n, l, want] : {Case{2, 2, 6}, Case{3, 2, 20}, Case{4, 2, 70}, Case{2, 3, 18}, Case{3, 3, 93}}) {
    const long long oracle = multinomial_square_sum(n, l);
    long long quotient = -1;
    try {
      const BlobAlgebra B(HeckeParams::preset(n, l));
      quotient = B.hecke_dim() - B.ideal().dim();
    } catch (const std::exception& ex) {
      law.violations.push_back(tag(n, l) + ex.what());
    }
    ++law.checked;
    if (quotient != oracle || expected_blob_dim(n, l) != oracle)
      law.violations.push_back(tag(n, l) + "quotient " + std::to_string(quotient) + ", multinomial oracle " +
                               std::to_string(oracle));
    ++listed.checked;
    if (quotient != want) {
      listed.violations.push_back(tag(n, l) + "listed " + std::to_string(want) + ", computed " +
                                  std::to_string(quotient));
      mismatch << " " << tag(n, l) << "listed " << want << ", computed " << quotient;
    }
  }
  Outcome o{{law, listed}, law.pass() ? "law holds at all five sizes" : "law fails"};
  if (!listed.pass()) o.summary += "; listed value differs:" + mismatch.str();
  return o;
}

Outcome relation_suites() {
  Outcome o{{}, "Hecke relations in the regular and seminormal models; KLR relations in B, and without eq13 in H"};
  for (auto [n, l] : kSmall) {
    const auto hp = HeckeParams::preset(n, l);
    const auto t = tag(n, l);
    Workspace ws(hp);
    o.checks.push_back(from_strings(t + "Hecke relations over F_p", check_hecke_relations(specialized_algebra(hp))));
    o.checks.push_back(from_strings(t + "Hecke relations in the seminormal model", SeminormalModel(hp).check_relations()));
    if (n * l <= 6)
      o.checks.push_back(
          from_strings(t + "Hecke relations over F_p[q^+-1]", check_hecke_relations(generic_algebra(hp))));
    add(o, check_klr_relations(ws.blob().ops(), ws.klr(), hp, true), t + "B: ");
    add(o, check_klr_relations(ws.blob().hecke_ops(), ws.klr_hecke(), hp, false), t + "H: ");
  }
  return o;
}

// Reports of suite_hecke whose names start with one of the prefixes.
Outcome from_hecke_suite(const std::vector<std::pair<int, int>>& cases, const std::vector<std::string>& prefixes,
                         const std::string& summary) {
  Outcome o{{}, summary};
  for (auto [n, l] : cases) {
    Workspace ws(HeckeParams::preset(n, l));
    for (const auto& r : suite_hecke(ws))
      for (const auto& p : prefixes)
        if (r.name.rfind(p, 0) == 0) o.checks.push_back(named(tag(n, l), r));
  }
  return o;
}

Outcome murphy() {
  return from_hecke_suite(kSmall, {"Murphy"},
                          "F_S are the seminormal matrix units, sum to 1 and are orthogonal for n <= 3");
}

Outcome integrality() {
  Outcome o{{}, "every residue-class idempotent is integral at q, n <= 3 with l <= 3 and n = 4 with l = 2"};
  std::vector<std::pair<int, int>> cases;
  for (int l = 1; l <= 3; ++l)
    for (int n = 1; n <= 3; ++n) cases.emplace_back(n, l);
  cases.emplace_back(4, 2);
  long long classes = 0;
  for (auto [n, l] : cases) {
    Report r{tag(n, l) + "no pole at q_hat = q", 0, {}};
    for (const auto& c : class_idempotents(HeckeParams::preset(n, l), true)) {
      ++r.checked;
      if (c.pole_order != 0)
        r.violations.push_back(residues_str(c.key) + ": pole of order " + std::to_string(c.pole_order));
    }
    classes += r.checked;
    o.checks.push_back(r);
  }
  o.summary += " (" + std::to_string(classes) + " classes)";
  return o;
}

Outcome cellular() {
  Workspace ws(HeckeParams::preset(3, 2));
  Outcome o{{}, "rank, *-symmetry, cellularity (ii) with T-independence at (3,2)"};
  add(o, suite_cellular(ws), tag(3, 2));
  return o;
}

Outcome jm() {
  Workspace ws(HeckeParams::preset(3, 2));
  Outcome o{{}, "JM triangularity with content diagonal, both sides, and JM_i = L_i at (3,2)"};
  add(o, suite_jm(ws), tag(3, 2));
  return o;
}

Outcome gradedness() {
  Outcome o{{}, "relations homogeneous; deg m_ST - deg m_{S,T^lambda} independent of S, n <= 3"};
  for (int l : {2, 3})
    for (int n = 1; n <= 3; ++n) {
      const auto hp = HeckeParams::preset(n, l);
      o.checks.push_back(named(tag(n, l), check_homogeneity(hp)));
      Workspace ws(hp);
      o.checks.push_back(named(tag(n, l), check_degree_additivity(ws.basis(), hp)));
    }
  return o;
}

Outcome combinatorics() {
  Outcome o{{}, "Ehresmann (n <= 4), raising bijections (n <= 5), Garnir characterization (n <= 6), displayed posets"};
  o.checks = suite_combinatorics(4, 5, 6);
  return o;
}

Outcome rewriting() {
  Outcome o{{}, "local rules and both straightenings oracle-certified for n <= 3; n = 22 walkthrough reproduced"};
  for (auto [n, l] : kSmall) {
    Workspace ws(HeckeParams::preset(n, l));
    add(o, suite_rewrite(ws, true), tag(n, l));
  }
  add(o, walkthrough_n22(), "");
  return o;
}

Outcome quotient_equivalence() {
  Outcome o{{}, "e_2^j by both routes; the eq13 quotient equals H / I_n with the same vanishing e(i)"};
  for (int l : {2, 3}) {
    const auto hp = HeckeParams::preset(3, l);
    Report r{tag(2, l) + "e_2^j: specialization equals the eigen-condition system", 0, {}};
    for (int j = 1; j <= l; ++j) {
      ++r.checked;
      if (e2_by_specialization(hp, j) != e2_by_linear_system(hp, j)) r.violations.push_back("j = " + std::to_string(j));
    }
    o.checks.push_back(r);
  }
  for (auto [n, l] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}}) {
    const auto hp = HeckeParams::preset(n, l);
    const BlobAlgebra B(hp);
    const auto c = compare_eq13_quotient(B, build_klr(B.hecke_ops(), hp));
    Report r{tag(n, l) + "B' = B", 1, {}};
    if (!c.same_ideal)
      r.violations.push_back("ideal dims " + std::to_string(c.dim_ideal_eq13) + " vs " + std::to_string(c.dim_ideal_e2));
    if (c.vanish_e2 != c.vanish_eq13) r.violations.push_back("vanishing sets differ");
    for (const auto& i : c.direct)
      if (!c.vanish_e2.count(i)) r.violations.push_back(residues_str(i) + " is killed by eq12/eq13 but survives");
    o.checks.push_back(r);
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    double budget;  // seconds
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "dimension law", 120, dimension_law},
      {2, "relation suites", 300, relation_suites},
      {3, "Murphy idempotents", 60, murphy},
      {4, "integrality at q", 300, integrality},
      {5, "cellular basis", 300, cellular},
      {6, "JM property", 180, jm},
      {7, "gradedness", 60, gradedness},
      {8, "combinatorial theorems", 120, combinatorics},
      {9, "rewrite soundness", 300, rewriting},
      {10, "B' = B and e_2 routes", 120, quotient_equivalence},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o.checks.push_back(Report{"exception", 1, {ex.what()}});
      o.summary = "aborted";
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    long long checked = 0;
    bool ok = !o.checks.empty();
    for (const auto& r : o.checks) {
      checked += r.checked;
      ok = ok && r.pass();
    }
    const bool in_time = dt <= c.budget;
    if (!ok || !in_time) ++failed;
    std::cout << "criterion " << std::setw(2) << c.id << ": " << (ok && in_time ? "PASS" : "FAIL") << "  " << c.title
              << " -- " << o.summary << " [" << o.checks.size() << " checks, " << checked << " instances, "
              << std::fixed << std::setprecision(1) << dt << " s of " << c.budget << " s]" << std::endl;
    for (const auto& r : o.checks)
      if (!r.pass()) std::cout << "    " << r.name << ": " << r.violations.front() << std::endl;
    if (!in_time) std::cout << "    over the time budget" << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << std::endl;
  return failed ? 1 : 0;
}
