// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The blobcell authors

#include "blobcell/suites.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace blobcell {

namespace {

bool is_zero(const Vec32& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

void note(Report& r, const std::string& msg) {
  if (r.violations.size() < 20) r.violations.push_back(msg);
}

Report from_strings(const std::string& name, const std::vector<std::string>& bad) {
  Report r{name, 1, {}};
  for (const auto& b : bad) note(r, b);
  return r;
}

void append(std::vector<Report>& out, std::vector<Report> more, const std::string& prefix = "") {
  for (auto& r : more) {
    r.name = prefix + r.name;
    out.push_back(std::move(r));
  }
}

std::vector<Residues> all_seqs(int n, int e) {
  std::vector<Residues> out{{}};
  for (int k = 0; k < n; ++k) {
    std::vector<Residues> next;
    for (const auto& r : out)
      for (int a = 0; a < e; ++a) {
        next.push_back(r);
        next.back().push_back(a);
      }
    out = std::move(next);
  }
  return out;
}

std::vector<Token> alphabet(int n) {
  std::vector<Token> a;
  for (int k = 1; k <= n; ++k) a.push_back(tok_y(k));
  for (int r = 1; r < n; ++r) a.push_back(tok_psi(r));
  return a;
}

std::vector<Word> all_words(int n, int max_len) {
  std::vector<Word> out{{}}, layer{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (const auto& t : alphabet(n)) {
        next.push_back(w);
        next.back().push_back(t);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

void check_all_rules(const Oracle& O, const DiagramWord& d, Report& r) {
  const auto& mc = O.params().mc;
  const Vec32 before = O.value(d);
  for (const auto& rule : local_rules())
    for (const auto& pos : rule_positions(d, rule.name, mc)) {
      const LinComb after = local_rewrite(d, rule.name, pos, mc);
      ++r.checked;
      if (O.value(after) != before) note(r, rule.name + " on " + d.str() + " -> " + lincomb_str(after));
    }
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

long long ipow(long long b, int k) {
  long long r = 1;
  while (k-- > 0) r *= b;
  return r;
}

std::vector<Weighting> weightings(int l, int n, unsigned seed) {
  std::vector<Weighting> out{theta_zero(l), theta_separated(l, n)};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-n - 1, n + 1);
  for (int k = 0; k < 2; ++k) {
    Weighting w(static_cast<std::size_t>(l));
    for (auto& x : w) x = d(rng);
    out.push_back(w);
  }
  return out;
}

using Edges = std::set<std::pair<std::vector<int>, std::vector<int>>>;

Edges hasse(const std::vector<Shape>& shapes, const Weighting& th) {
  Edges edges;
  for (const auto& a : shapes)
    for (const auto& b : shapes) {
      if (dominance_cmp(a, b, th) != Cmp::less) continue;
      bool cover = true;
      for (const auto& c : shapes)
        if (dominance_cmp(a, c, th) == Cmp::less && dominance_cmp(c, b, th) == Cmp::less) cover = false;
      if (cover) edges.insert({column_heights(a), column_heights(b)});
    }
  return edges;
}

}  // namespace

// ------------------------------------------------------------- workspace

const Oracle& Workspace::oracle() {
  if (!oracle_) oracle_ = std::make_unique<Oracle>(hp_);
  return *oracle_;
}

const KlrImages& Workspace::klr_hecke() {
  if (!klr_hecke_) klr_hecke_ = build_klr(blob().hecke_ops(), hp_);
  return *klr_hecke_;
}

const CellularBasis& Workspace::basis() {
  if (!basis_) basis_ = build_cellular_basis(blob().ops(), klr(), hp_);
  return *basis_;
}

bool all_pass(const std::vector<Report>& reps) {
  return std::all_of(reps.begin(), reps.end(), [](const Report& r) { return r.pass(); });
}

// ------------------------------------------------------------- hecke

std::vector<Report> suite_hecke(Workspace& ws) {
  const auto& hp = ws.params();
  std::vector<Report> out;
  out.push_back(from_strings("Hecke relations, regular representation over F_p",
                             check_hecke_relations(specialized_algebra(hp))));
  if (ipow(hp.l, hp.n) * factorial(hp.n) <= 48)
    out.push_back(from_strings("Hecke relations, regular representation over F_p[q^+-1]",
                               check_hecke_relations(generic_algebra(hp))));
  else
    out.push_back(Report{"Hecke relations, regular representation over F_p[q^+-1] (skipped: dim H > 48)", 0, {}});

  const SeminormalModel m(hp);
  out.push_back(from_strings("Hecke relations, seminormal model", m.check_relations()));

  // Murphy's product formula gives the seminormal matrix units.
  Report units{"Murphy idempotents are matrix units", 0, {}}, complete{"Murphy idempotents sum to 1", 0, {}},
      ortho{"Murphy idempotents are orthogonal", 0, {}};
  if (hp.n <= 3) {
    const RatFun zero(hp.p), one = RatFun::constant(hp.p, 1);
    const auto& blocks = m.blocks();
    std::vector<Matrix<RatFun>> total;
    for (const auto& b : blocks) {
      const int d = static_cast<int>(b.tabs.size());
      total.emplace_back(d, d, zero);
    }
    std::vector<std::pair<int, std::vector<Matrix<RatFun>>>> fs;
    for (std::size_t sb = 0; sb < blocks.size(); ++sb)
      for (std::size_t si = 0; si < blocks[sb].tabs.size(); ++si) {
        auto F = m.murphy_idempotent(blocks[sb].tabs[si]);
        ++units.checked;
        for (std::size_t b = 0; b < F.size(); ++b) {
          for (int i = 0; i < F[b].rows(); ++i)
            for (int j = 0; j < F[b].cols(); ++j)
              if (F[b](i, j) != (b == sb && i == j && i == static_cast<int>(si) ? one : zero))
                note(units, "F_" + blocks[sb].tabs[si].str() + " is not a matrix unit");
          total[b] = total[b] + F[b];
        }
        fs.emplace_back(static_cast<int>(sb), std::move(F));
      }
    for (std::size_t b = 0; b < total.size(); ++b) {
      ++complete.checked;
      if (total[b] != m.identity(static_cast<int>(b))) note(complete, "block " + shape_str(blocks[b].shape));
    }
    // F_S F_T = delta F_S, block by block.
    for (std::size_t a = 0; a < fs.size(); ++a)
      for (std::size_t c = 0; c < fs.size(); ++c) {
        ++ortho.checked;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
          const auto prod = fs[a].second[b] * fs[c].second[b];
          const int d = prod.rows();
          const auto want = a == c ? fs[a].second[b] : Matrix<RatFun>(d, d, zero);
          if (prod != want) {
            note(ortho, "pair " + std::to_string(a) + ", " + std::to_string(c));
            break;
          }
        }
      }
  } else {
    units.name += " (skipped: n > 3)";
    complete.name += " (skipped: n > 3)";
    ortho.name += " (skipped: n > 3)";
  }
  out.push_back(units);
  out.push_back(complete);
  out.push_back(ortho);

  // Residue-class idempotents: integral at q_hat = q, complete.
  Report integral{"class idempotents have no pole at q", 0, {}}, sum{"class idempotents sum to 1", 1, {}};
  const auto cls = class_idempotents(hp, true);
  const auto A = specialized_algebra(hp);
  auto total = A.zero();
  for (const auto& c : cls) {
    ++integral.checked;
    if (c.pole_order != 0)
      note(integral, "class " + residues_str(c.key) + " has a pole of order " + std::to_string(c.pole_order));
    for (int i = 0; i < A.dim(); ++i) total[i] += Fp(c.value[i], hp.p);
  }
  if (total != A.unit()) note(sum, "sum differs from 1");
  out.push_back(integral);
  out.push_back(sum);

  Report e2{"e_2^j by specialization equals the eigen-condition solution", 0, {}};
  if (hp.n >= 2)
    for (int j = 1; j <= hp.l; ++j) {
      ++e2.checked;
      if (e2_by_specialization(hp, j) != e2_by_linear_system(hp, j)) note(e2, "j = " + std::to_string(j));
    }
  out.push_back(e2);
  return out;
}

// ------------------------------------------------------------- klr

std::vector<Report> suite_klr(Workspace& ws) {
  const auto& hp = ws.params();
  const auto& B = ws.blob();
  const auto& K = ws.klr();
  std::vector<Report> out;
  append(out, check_klr_relations(B.ops(), K, hp, true), "B: ");
  append(out, check_klr_structure(B.ops(), K), "B: ");
  append(out, check_klr_relations(B.hecke_ops(), ws.klr_hecke(), hp, false), "H: ");
  out.push_back(check_homogeneity(hp));

  Report forced{"nonzero e(i) avoid the eq12/eq13 patterns", 0, {}};
  for (const auto& [i, E] : K.e) {
    ++forced.checked;
    if (directly_killed(i, hp)) note(forced, residues_str(i) + " is nonzero");
  }
  out.push_back(forced);

  const auto c = compare_eq13_quotient(B, ws.klr_hecke());
  Report ideal{"ideal of the eq13 idempotents equals I_n", 1, {}};
  if (!c.same_ideal)
    note(ideal, "dims " + std::to_string(c.dim_ideal_eq13) + " vs " + std::to_string(c.dim_ideal_e2));
  out.push_back(ideal);
  Report vanish{"vanishing e(i) agree in both quotients", 1, {}};
  if (c.vanish_e2 != c.vanish_eq13) note(vanish, "vanishing sets differ");
  for (const auto& i : c.direct)
    if (!c.vanish_e2.count(i)) note(vanish, residues_str(i) + " is killed by eq12/eq13 but survives in H / I_n");
  out.push_back(vanish);
  Report alive{"surviving e(i) are the one-column residue sequences", 1, {}};
  std::set<Residues> live;
  for (const auto& [i, E] : ws.klr_hecke().e)
    if (!c.vanish_e2.count(i)) live.insert(i);
  if (live != c.one_column) note(alive, "surviving set differs");
  out.push_back(alive);
  return out;
}

// ------------------------------------------------------------- cellular

std::vector<Report> suite_cellular(Workspace& ws) {
  const auto& hp = ws.params();
  const auto& B = ws.blob();
  const auto& K = ws.klr();
  const auto& cb = ws.basis();
  std::vector<Report> out;
  Report rank{"rank of {m_ST} equals dim B", 1, {}};
  if (cb.rank != B.dim() || static_cast<int>(cb.vectors.size()) != B.dim())
    note(rank, "rank " + std::to_string(cb.rank) + " of " + std::to_string(cb.vectors.size()) + ", dim B " +
                   std::to_string(B.dim()));
  out.push_back(rank);
  out.push_back(check_star_symmetry(K, cb));
  append(out, check_cellularity(B.ops(), K, cb, hp));
  out.push_back(check_degree_additivity(cb, hp));

  Report cells{"cell modules: sum of squared dimensions is dim B, Gram symmetric", 1, {}};
  long long sq = 0;
  for (const auto& m : cell_modules(B.ops(), K, cb, hp)) {
    sq += static_cast<long long>(m.dim) * m.dim;
    if (m.gram != m.gram.transpose()) note(cells, "Gram matrix of " + shape_str(m.shape) + " is not symmetric");
  }
  if (sq != B.dim()) note(cells, "sum of squares " + std::to_string(sq));
  out.push_back(cells);
  return out;
}

std::vector<Report> suite_jm(Workspace& ws) {
  const auto& hp = ws.params();
  const auto& B = ws.blob();
  const auto& K = ws.klr();
  std::vector<Report> out;
  append(out, check_jm(B.ops(), K, ws.basis(), hp));
  Report img{"JM_k is the image of L_k", 0, {}};
  for (int k = 0; k < hp.n; ++k) {
    ++img.checked;
    if (K.jm[k] != B.ops().L[k]) note(img, "k = " + std::to_string(k + 1));
  }
  out.push_back(img);
  return out;
}

// ------------------------------------------------------------- rewrite

std::vector<Report> suite_rewrite(Workspace& ws, bool oracle, unsigned seed) {
  const auto& hp = ws.params();
  const int n = hp.n, l = hp.l, e = hp.e();
  const auto theta = theta_zero(l);
  const Shape top = mu_max(n, l);
  std::vector<Report> out;
  const Oracle* O = oracle ? &ws.oracle() : nullptr;

  if (O) {
    const int len = ipow(e, n) <= 125 ? 3 : 2;
    Report ex{"local rules sound on all words of length <= " + std::to_string(len), 0, {}};
    for (const auto& i : all_seqs(n, e))
      for (const auto& w : all_words(n, len)) check_all_rules(*O, DiagramWord{1, w, i}, ex);
    out.push_back(ex);

    Report rnd{"local rules sound on 1000 random words", 0, {}};
    const auto supp = O->klr().support();
    const std::vector<Residues> bottoms(supp.begin(), supp.end());
    std::mt19937 rng(seed);
    const auto alpha = alphabet(n);
    if (!bottoms.empty() && !alpha.empty())
      for (int trial = 0; trial < 1000; ++trial) {
        DiagramWord d{1, {}, bottoms[rng() % bottoms.size()]};
        const int wl = 1 + static_cast<int>(rng() % 7);
        for (int k = 0; k < wl; ++k) d.word.push_back(alpha[rng() % alpha.size()]);
        if (rng() % 4 == 0) {
          const int at = static_cast<int>(rng() % (d.word.size() + 1));
          const auto hs = d.heights();
          d.word.insert(d.word.begin() + at, tok_e((*hs)[at]));
        }
        check_all_rules(*O, d, rnd);
      }
    out.push_back(rnd);

    // The double-i identity in H, where equal adjacent residues survive.
    Report dbl{"double-i identity in H", 0, {}};
    const auto& H = ws.blob().hecke_ops();
    const auto& KH = ws.klr_hecke();
    for (const auto& [i, E] : KH.e)
      for (int r = 1; r < n; ++r) {
        if (i[r - 1] != i[r]) continue;
        ++dbl.checked;
        const Vec32 lhs = evaluate(H, KH, {tok_e(i)});
        const Vec32 a = evaluate(H, KH, {tok_y(r), tok_psi(r), tok_y(r), tok_psi(r), tok_e(i)});
        const Vec32 b = evaluate(H, KH, {tok_psi(r), tok_y(r), tok_psi(r), tok_y(r + 1), tok_e(i)});
        Vec32 rhs(H.dim);
        for (int x = 0; x < H.dim; ++x) rhs[x] = (a[x] + H.p - b[x]) % H.p;
        if (lhs != rhs) note(dbl, residues_str(i) + " at r = " + std::to_string(r));
      }
    out.push_back(dbl);
  }

  // y_k e(i^lambda): certified and supported above lambda; zero at mu_max.
  const auto shapes = one_column_multipartitions(n, l);
  const bool every_shape = O || shapes.size() <= 200;
  Report dot{std::string("straighten_dot lands above lambda") + (O ? ", certified" : " (symbolic)"), 0, {}};
  Report dmax{"y_k e(i^max) = 0 for every k", 0, {}};
  Report dcell{"cellular expansion of y_k e(i^lambda) dominates lambda", 0, {}};
  for (const auto& lambda : shapes) {
    if (!every_shape && lambda != top) continue;
    for (int k = 1; k <= n; ++k) {
      const auto s = straighten_dot(hp.mc, theta, lambda, k, O);
      ++dot.checked;
      const std::string where = shape_str(lambda) + ", k = " + std::to_string(k);
      if (O && !s.certified) note(dot, "uncertified step at " + where);
      for (const auto& mu : s.shapes)
        if (shape_lex_cmp(mu, lambda, theta) != Cmp::greater) note(dot, shape_str(mu) + " at " + where);
      if (lambda == top) {
        ++dmax.checked;
        if (!s.terminal.empty() || (O && !is_zero(O->value(s.input)))) note(dmax, "k = " + std::to_string(k));
      }
      if (O) {
        const auto& cb = ws.basis();
        const Vec32 c = cb.expand(O->value(s.input));
        ++dcell.checked;
        for (int x = 0; x < static_cast<int>(c.size()); ++x)
          if (c[x] && dominance_cmp(cb.shapes[cb.labels[x][0]].shape, lambda, theta) != Cmp::greater)
            note(dcell, where);
      }
    }
  }
  if (!every_shape) dot.name += " (mu_max only)";
  out.push_back(dot);
  out.push_back(dmax);
  if (O) out.push_back(dcell);

  // e(i^max iota) at n from the maximal shape at n - 1.
  Report conc{std::string("e(i^max iota) = 0 unless it is some i^lambda") + (O ? "" : " (symbolic)"), 0, {}};
  if (n >= 2) {
    Straightener st(hp.mc, theta, l);
    const Residues imax = residue_seq(t_lambda(mu_max(n - 1, l), theta), hp.mc);
    for (int iota = 0; iota < e; ++iota) {
      Residues j = imax;
      j.push_back(iota);
      if (st.shape_of(j)) continue;
      ++conc.checked;
      const auto s = st.idempotent(j, O);
      if (!s.terminal.empty() || (O && (!s.certified || !is_zero(O->value(DiagramWord{1, {}, j})))))
        note(conc, "iota = " + std::to_string(iota));
    }
  }
  out.push_back(conc);

  if (!O) return out;

  Report idem{"every e(j) expands through e(i^mu), certified", 0, {}};
  {
    Straightener st(hp.mc, theta, l);
    for (const auto& j : all_seqs(n, e)) {
      ++idem.checked;
      if (!st.idempotent(j, O).certified) note(idem, residues_str(j));
    }
  }
  out.push_back(idem);

  Report gar{"straighten_garnir: T1 above G at lambda, higher shapes otherwise", 0, {}};
  Report gdom{"straighten_garnir: other shapes dominate lambda", 0, {}};
  Report gtop{"m_SG = 0 for Garnir G at mu_max", 0, {}};
  Report gpass{"standard G passes through", 0, {}};
  const auto& cb = ws.basis();
  for (const auto& cs : cb.shapes) {
    for (const auto& gd : garnir_enumerate(cs.shape, theta))
      for (const auto& S : cs.tabs) {
        const auto ge = straighten_garnir(*O, cb, S, gd.tableau);
        ++gar.checked;
        ++gdom.checked;
        const std::string where = S.str() + ", " + gd.tableau.str();
        if (ge.passthrough || !ge.support_ok || !ge.idempotent || !ge.idempotent->certified) note(gar, where);
        for (const auto& v : ge.violations) note(gar, v);
        if (!ge.dominance_ok) note(gdom, where);
        if (cs.shape == top) {
          ++gtop.checked;
          if (!ge.terms.empty()) note(gtop, where);
        }
      }
    ++gpass.checked;
    const auto ge = straighten_garnir(*O, cb, cs.t_lambda, cs.tabs.back());
    if (!ge.passthrough || ge.terms.size() != 1) note(gpass, shape_str(cs.shape));
  }
  out.push_back(gar);
  out.push_back(gdom);
  out.push_back(gtop);
  out.push_back(gpass);
  return out;
}

std::vector<Report> walkthrough_n22() {
  const Multicharge mc{{0, 2, 4, 7}, 10};
  const auto theta = theta_zero(4);
  const Shape lambda = mu_max(22, 4);
  auto rules = [](const Straightening& s) {
    std::vector<std::string> r;
    for (const auto& st : s.trace) r.push_back(st.rule);
    return r;
  };
  Report zero{"n = 22: y_k e(i^max) = 0 for k = 1..22", 0, {}};
  for (int k = 1; k <= 22; ++k) {
    ++zero.checked;
    if (!straighten_dot(mc, theta, lambda, k).terminal.empty()) note(zero, "k = " + std::to_string(k));
  }
  Report first{"n = 22: k <= 4 end with the dot on a kappa residue", 0, {}};
  for (int k = 1; k <= 4; ++k) {
    ++first.checked;
    const auto r = rules(straighten_dot(mc, theta, lambda, k));
    if (r.back() != "dot-at-start" || std::count(r.begin(), r.end(), "free-move") != k - 1)
      note(first, "k = " + std::to_string(k));
  }
  Report five{"n = 22: k = 5 jumps to (A+1)A and dies at the start", 1, {}};
  const auto s5 = straighten_dot(mc, theta, lambda, 5);
  if (rules(s5) !=
      std::vector<std::string>{"free-move", "free-move", "free-move", "dot-jump", "dot-at-start", "bad-start"})
    note(five, "rule sequence");
  else if (s5.trace[3].before != "(0,9•,2,4 | 7,1,3,6 | 8,0,2,5 | 7,9,1,4 | 6,8,0,3 | 5,7)")
    note(five, "sequence before the jump: " + s5.trace[3].before);
  Report nine{"n = 22: k = 9 jumps, then a gap kills the start", 1, {}};
  const auto s9 = straighten_dot(mc, theta, lambda, 9);
  const auto r9 = rules(s9);
  if (r9.size() < 4 ||
      std::vector<std::string>(r9.begin(), r9.begin() + 4) !=
          std::vector<std::string>{"free-move", "free-move", "free-move", "dot-jump"} ||
      r9.back() != "adjacent-start")
    note(nine, "rule sequence");
  else if (s9.trace[3].before != "(0,2,4,7 | 9,8•,1,3 | 6,0,2,5 | 7,9,1,4 | 6,8,0,3 | 5,7)")
    note(nine, "sequence before the jump: " + s9.trace[3].before);
  Report conc{"n = 22: e(i^max iota) survives exactly for iota in {2,4,6,9}", 0, {}};
  Straightener st(mc, theta, 4, row_bars(lambda, theta));
  const Residues imax = residue_seq(t_lambda(lambda, theta), mc);
  std::vector<int> survivors;
  for (int iota = 0; iota < 10; ++iota) {
    Residues j = imax;
    j.push_back(iota);
    ++conc.checked;
    if (st.shape_of(j))
      survivors.push_back(iota);
    else if (!st.idempotent(j).terminal.empty())
      note(conc, "iota = " + std::to_string(iota) + " does not vanish");
  }
  if (survivors != std::vector<int>{2, 4, 6, 9}) note(conc, "survivors differ");
  return {zero, first, five, nine, conc};
}

// ------------------------------------------------------------- combinatorics

std::vector<Report> suite_combinatorics(int ehresmann_n, int bijection_n, int garnir_n) {
  std::vector<Report> out;
  Report ehr{"Ehresmann: Bruhat order on d(T) is the tableau order", 0, {}};
  for (int l = 1; l <= 3; ++l)
    for (int n = 1; n <= ehresmann_n; ++n)
      for (const auto& th : weightings(l, n, 23 + n))
        for (const auto& lam : one_column_multipartitions(n, l)) {
          const auto tabs = all_tableaux(lam);
          std::vector<Perm> d;
          for (const auto& s : tabs) d.push_back(d_perm(s, th));
          for (std::size_t a = 0; a < tabs.size(); ++a)
            for (std::size_t b = 0; b < tabs.size(); ++b) {
              ++ehr.checked;
              if (bruhat_less_top_identity(d[a], d[b]) != (tableau_cmp(tabs[a], tabs[b], th) == Cmp::less))
                note(ehr, tabs[a].str() + " vs " + tabs[b].str());
            }
        }
  out.push_back(ehr);

  Report bij{"dominance equals existence of a raising bijection", 0, {}};
  for (int l = 1; l <= 3; ++l)
    for (int n = 0; n <= bijection_n; ++n)
      for (const auto& th : weightings(l, n, 7 + n)) {
        const auto shapes = one_column_multipartitions(n, l);
        for (const auto& a : shapes)
          for (const auto& b : shapes) {
            ++bij.checked;
            if (dominance_leq(a, b, th) != raising_bijection_exists(a, b, th))
              note(bij, shape_str(a) + " vs " + shape_str(b));
          }
      }
  out.push_back(bij);

  Report gar{"Garnir: weak-order maximality equals the characterization", 0, {}};
  for (int l = 1; l <= 3; ++l)
    for (int n = 2; n <= garnir_n; ++n) {
      const auto th = theta_zero(l);
      for (const auto& lam : one_column_multipartitions(n, l)) {
        const WeakOrder weak(lam, th);
        std::set<std::vector<Node>> by_char;
        for (const auto& d : garnir_enumerate(lam, th)) by_char.insert(d.tableau.nodes());
        std::vector<const Tableau*> nstd;
        for (const auto& t : weak.tableaux())
          if (!t.is_standard()) nstd.push_back(&t);
        for (const Tableau* t : nstd) {
          bool weak_max = true;
          for (const Tableau* s : nstd)
            if (s != t && weak.leq(*t, *s)) {
              weak_max = false;
              break;
            }
          ++gar.checked;
          const bool g = is_garnir(*t, th);
          if (weak_max != g || g != (by_char.count(t->nodes()) > 0)) note(gar, t->str());
        }
      }
    }
  out.push_back(gar);

  Report h33{"Hasse diagram of one-column shapes at n = l = 3", 1, {}};
  const auto shapes = one_column_multipartitions(3, 3);
  const Edges expected{{{2, 1, 0}, {1, 1, 1}}, {{1, 2, 0}, {2, 1, 0}}, {{2, 0, 1}, {2, 1, 0}},
                       {{1, 0, 2}, {1, 2, 0}}, {{0, 2, 1}, {1, 2, 0}}, {{1, 0, 2}, {2, 0, 1}},
                       {{0, 2, 1}, {2, 0, 1}}, {{0, 1, 2}, {0, 2, 1}}, {{3, 0, 0}, {1, 0, 2}},
                       {{0, 1, 2}, {1, 0, 2}}, {{0, 3, 0}, {0, 1, 2}}, {{0, 3, 0}, {3, 0, 0}},
                       {{0, 0, 3}, {0, 3, 0}}};
  if (shapes.size() != 10) note(h33, std::to_string(shapes.size()) + " shapes");
  if (hasse(shapes, theta_zero(3)) != expected) note(h33, "edge set differs");
  out.push_back(h33);

  Report chain{"n = 3, l = 2 dominance chain", 1, {}};
  const std::vector<Shape> c{one_column({0, 3}), one_column({3, 0}), one_column({1, 2}), one_column({2, 1})};
  const auto t0 = theta_zero(2);
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (dominance_cmp(c[i], c[i + 1], t0) != Cmp::less) note(chain, shape_str(c[i]) + " < " + shape_str(c[i + 1]));
  if (hasse(one_column_multipartitions(3, 2), t0).size() != 3) note(chain, "not a chain");
  out.push_back(chain);
  return out;
}

// ------------------------------------------------------------- dispatch

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"hecke", "klr", "cellular", "jm", "rewrite"};
  return names;
}

std::vector<Report> run_suite(Workspace& ws, const std::string& name, bool oracle) {
  if (name == "all") {
    std::vector<Report> out;
    for (const auto& s : suite_names()) append(out, run_suite(ws, s, oracle), s + ": ");
    return out;
  }
  if (name == "hecke") return suite_hecke(ws);
  if (name == "klr") return suite_klr(ws);
  if (name == "cellular") return suite_cellular(ws);
  if (name == "jm") return suite_jm(ws);
  if (name == "rewrite") return suite_rewrite(ws, oracle);
  throw std::invalid_argument("unknown suite '" + name + "' (hecke, klr, cellular, jm, rewrite, all)");
}

}  // namespace blobcell
