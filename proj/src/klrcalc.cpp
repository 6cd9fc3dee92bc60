// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The blobcell authors

#include "blobcell/klrcalc.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace blobcell {

namespace {

int modn(long long a, int e) { return static_cast<int>(((a % e) + e) % e); }

bool adjacent(int a, int b, int e) { return modn(a - b, e) == 1 || modn(b - a, e) == 1; }
// Distinct and not adjacent: strings with these residues cross freely.
bool free_pair(int a, int b, int e) { return a != b && !adjacent(a, b, e); }

Word cat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}
Word psi_word(std::initializer_list<int> rs) {
  Word w;
  for (int r : rs) w.push_back(tok_psi(r));
  return w;
}
Word reversed(const std::vector<int>& word) {
  Word w;
  for (auto it = word.rbegin(); it != word.rend(); ++it) w.push_back(tok_psi(*it));
  return w;
}
Word forward(const std::vector<int>& word) {
  Word w;
  for (int a : word) w.push_back(tok_psi(a));
  return w;
}

// Replace tokens [t, t+len) by each of the given (coef, tokens).
LinComb splice(const DiagramWord& d, int t, int len, const std::vector<std::pair<long long, Word>>& repl) {
  LinComb out;
  for (const auto& [c, mid] : repl) {
    if (c == 0) continue;
    DiagramWord x{d.coef * c, {}, d.bottom};
    x.word.assign(d.word.begin(), d.word.begin() + t);
    x.word.insert(x.word.end(), mid.begin(), mid.end());
    x.word.insert(x.word.end(), d.word.begin() + t + len, d.word.end());
    out.push_back(std::move(x));
  }
  return out;
}

bool is_kind(const Token& t, Token::Kind k) { return t.kind == k; }

}  // namespace

// ------------------------------------------------------------ DiagramWord

std::optional<std::vector<Residues>> DiagramWord::heights() const {
  const int m = static_cast<int>(word.size());
  std::vector<Residues> seq(m + 1);
  seq[m] = bottom;
  for (int t = m - 1; t >= 0; --t) {
    const auto& tk = word[t];
    switch (tk.kind) {
      case Token::E:
        if (tk.i != seq[t + 1]) return std::nullopt;
        seq[t] = seq[t + 1];
        break;
      case Token::Y:
        if (tk.a < 1 || tk.a > strands()) throw std::invalid_argument("y index out of range");
        seq[t] = seq[t + 1];
        break;
      case Token::Psi:
        if (tk.a < 1 || tk.a >= strands()) throw std::invalid_argument("psi index out of range");
        seq[t] = act_residues(seq[t + 1], tk.a);
        break;
    }
  }
  return seq;
}

std::string DiagramWord::str() const {
  std::ostringstream os;
  os << coef << " * ";
  if (!word.empty()) os << word_str(word) << " ";
  os << "e" << residues_str(bottom);
  return os.str();
}

LinComb simplify(LinComb lc) {
  std::map<std::pair<std::string, Residues>, std::size_t> seen;
  LinComb out;
  for (auto& d : lc) {
    if (d.coef == 0) continue;
    auto key = std::make_pair(word_str(d.word), d.bottom);
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(key, out.size());
      out.push_back(std::move(d));
    } else {
      out[it->second].coef += d.coef;
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const DiagramWord& d) { return d.coef == 0; }), out.end());
  return out;
}

std::string lincomb_str(const LinComb& lc) {
  if (lc.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < lc.size(); ++k) os << (k ? " + " : "") << lc[k].str();
  return os.str();
}

// ------------------------------------------------------------ symbolic

namespace {
const std::string kDot = "•";
}

std::string SymbolicSequence::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < i.size(); ++k) {
    if (k) os << (std::count(bars.begin(), bars.end(), static_cast<int>(k)) ? " | " : ",");
    os << i[k];
    const int d = k < dots.size() ? dots[k] : 0;
    for (int x = 0; x < d; ++x) os << kDot;
  }
  os << ")";
  return os.str();
}

SymbolicSequence SymbolicSequence::parse(const std::string& s) {
  SymbolicSequence q;
  std::size_t k = 0;
  auto skip = [&] {
    while (k < s.size() && s[k] == ' ') ++k;
  };
  skip();
  if (k >= s.size() || s[k] != '(') throw std::invalid_argument("symbolic sequence must start with '('");
  ++k;
  skip();
  if (k < s.size() && s[k] == ')') return q;
  while (true) {
    skip();
    std::size_t used = 0;
    const int v = std::stoi(s.substr(k), &used);
    k += used;
    q.i.push_back(v);
    q.dots.push_back(0);
    while (s.compare(k, kDot.size(), kDot) == 0) {
      ++q.dots.back();
      k += kDot.size();
    }
    skip();
    if (k >= s.size()) throw std::invalid_argument("unterminated symbolic sequence");
    if (s[k] == ')') break;
    if (s[k] == '|') q.bars.push_back(static_cast<int>(q.i.size()));
    else if (s[k] != ',') throw std::invalid_argument("unexpected character in symbolic sequence");
    ++k;
  }
  if (std::all_of(q.dots.begin(), q.dots.end(), [](int d) { return d == 0; })) q.dots.clear();
  return q;
}

DiagramWord SymbolicSequence::word() const {
  DiagramWord d{1, {}, i};
  for (std::size_t k = 0; k < dots.size(); ++k)
    for (int x = 0; x < dots[k]; ++x) d.word.push_back(tok_y(static_cast<int>(k) + 1));
  return d;
}

std::vector<int> row_bars(const Shape& shape, const Weighting& theta) {
  const auto t = t_lambda(shape, theta);
  std::vector<int> bars;
  for (int p = 1; p < t.size(); ++p)
    if (t.node(p).row != t.node(p + 1).row) bars.push_back(p);
  return bars;
}

// ------------------------------------------------------------ local rules

const std::vector<RuleInfo>& local_rules() {
  static const std::vector<RuleInfo> rules = {
      {"y-commute", false},          {"psi-commute", false},     {"psi-y-commute", false},
      {"dot-up", false},             {"dot-up-rev", false},      {"dot-down", false},
      {"dot-down-rev", false},       {"double-crossing", false}, {"braid", false},
      {"braid-rev", false},          {"crossing-by-dot", false}, {"dot-past-distant", false},
      {"dot-jump", false},           {"dot-at-start", false},    {"idempotent", false},
      {"bad-start", true},           {"adjacent-start", true},   {"double-i", true},
      {"trio", true},                {"free-move", true},
  };
  return rules;
}

LinComb local_rewrite(const DiagramWord& t, const std::string& rule, Position pos, const Multicharge& mc) {
  const int e = mc.e;
  const auto kv = mc.kappa();
  const auto in_kappa = [&](int a) { return std::find(kv.begin(), kv.end(), a) != kv.end(); };
  const int m = static_cast<int>(t.word.size());
  const auto hs = t.heights();
  auto fail = [&](const std::string& why) -> PatternMismatch {
    return PatternMismatch(rule + " at " + std::to_string(pos.at) + ": " + why);
  };
  if (!hs) {
    // An inconsistent idempotent makes the word zero; only the idempotent rule applies.
    if (rule != "idempotent") throw fail("word has inconsistent idempotents");
    if (pos.at < 0 || pos.at >= m || t.word[pos.at].kind != Token::E) throw fail("no idempotent here");
  }
  const int at = pos.at;
  auto tok = [&](int k) -> const Token& {
    if (at + k < 0 || at + k >= m) throw fail("position out of range");
    return t.word[at + k];
  };
  auto below = [&](int k) -> const Residues& { return (*hs)[at + k + 1]; };  // under token at+k

  if (rule == "idempotent") {
    if (tok(0).kind != Token::E) throw fail("not an idempotent");
    if (!hs) return {};
    return splice(t, at, 1, {{1, {}}});
  }
  if (rule == "y-commute") {
    const auto &a = tok(0), &b = tok(1);
    if (!is_kind(a, Token::Y) || !is_kind(b, Token::Y) || a.a == b.a) throw fail("needs y_r y_s with r != s");
    return splice(t, at, 2, {{1, {b, a}}});
  }
  if (rule == "psi-commute") {
    const auto &a = tok(0), &b = tok(1);
    if (!is_kind(a, Token::Psi) || !is_kind(b, Token::Psi) || std::abs(a.a - b.a) < 2)
      throw fail("needs psi_r psi_s with |r-s| > 1");
    return splice(t, at, 2, {{1, {b, a}}});
  }
  if (rule == "psi-y-commute") {
    const auto &a = tok(0), &b = tok(1);
    const Token* p = a.kind == Token::Psi ? &a : &b;
    const Token* y = a.kind == Token::Y ? &a : &b;
    if (p->kind != Token::Psi || y->kind != Token::Y || y->a == p->a || y->a == p->a + 1)
      throw fail("needs psi_r and y_s with s not in {r, r+1}");
    return splice(t, at, 2, {{1, {b, a}}});
  }
  if (rule == "dot-up" || rule == "dot-up-rev" || rule == "dot-down" || rule == "dot-down-rev") {
    const auto &a = tok(0), &b = tok(1);
    const Residues& i = below(1);
    // (first token, second token) patterns and their replacements.
    int r = 0;
    long long sign = 0;
    Word repl;
    if (rule == "dot-up" && a.kind == Token::Psi && b.kind == Token::Y && b.a == a.a + 1) {
      r = a.a, sign = -1, repl = {tok_y(r), tok_psi(r)};
    } else if (rule == "dot-up-rev" && a.kind == Token::Y && b.kind == Token::Psi && a.a == b.a) {
      r = b.a, sign = 1, repl = {tok_psi(r), tok_y(r + 1)};
    } else if (rule == "dot-down" && a.kind == Token::Y && b.kind == Token::Psi && a.a == b.a + 1) {
      r = b.a, sign = -1, repl = {tok_psi(r), tok_y(r)};
    } else if (rule == "dot-down-rev" && a.kind == Token::Psi && b.kind == Token::Y && b.a == a.a) {
      r = a.a, sign = 1, repl = {tok_y(r + 1), tok_psi(r)};
    } else {
      throw fail("token pattern does not match");
    }
    const long long delta = i[r - 1] == i[r] ? 1 : 0;
    return splice(t, at, 2, {{1, repl}, {sign * delta, {}}});
  }
  if (rule == "double-crossing") {
    const auto &a = tok(0), &b = tok(1);
    if (a.kind != Token::Psi || b.kind != Token::Psi || a.a != b.a) throw fail("needs psi_r psi_r");
    const int r = a.a;
    const Residues& i = below(1);
    const int x = i[r - 1], y = i[r];
    if (x == y) return {};
    if (y == modn(x + 1, e)) return splice(t, at, 2, {{1, {tok_y(r + 1)}}, {-1, {tok_y(r)}}});
    if (y == modn(x - 1, e)) return splice(t, at, 2, {{1, {tok_y(r)}}, {-1, {tok_y(r + 1)}}});
    return splice(t, at, 2, {{1, {}}});
  }
  if (rule == "braid" || rule == "braid-rev") {
    const auto &a = tok(0), &b = tok(1), &c = tok(2);
    if (a.kind != Token::Psi || b.kind != Token::Psi || c.kind != Token::Psi || a.a != c.a ||
        std::abs(a.a - b.a) != 1)
      throw fail("needs psi_r psi_{r+-1} psi_r");
    const bool fwd = b.a == a.a + 1;
    if ((rule == "braid") != fwd) throw fail("wrong braid orientation");
    const int r = std::min(a.a, b.a);
    const Residues& i = below(2);
    const int x = i[r - 1], y = i[r], z = i[r + 1];
    long long corr = 0;
    if (x == z && x == modn(y - 1, e)) corr = -1;
    if (x == z && x == modn(y + 1, e)) corr = 1;
    // psi_r psi_{r+1} psi_r = psi_{r+1} psi_r psi_{r+1} + corr
    if (!fwd) corr = -corr;
    return splice(t, at, 3, {{1, {b, a, b}}, {corr, {}}});
  }
  if (rule == "crossing-by-dot") {
    const auto& a = tok(0);
    if (a.kind != Token::Psi) throw fail("needs psi_r");
    const Residues& i = below(0);
    if (i[a.a - 1] != i[a.a]) throw fail("needs equal residues");
    return splice(t, at, 1, {{1, {tok_psi(a.a), tok_y(a.a), tok_psi(a.a)}}});
  }
  if (rule == "dot-past-distant" || rule == "dot-jump" || rule == "dot-at-start") {
    const auto& a = tok(0);
    if (a.kind != Token::Y) throw fail("needs y_k");
    const Residues& i = below(0);
    if (rule == "dot-at-start") {
      if (a.a != 1 || !in_kappa(i[0])) throw fail("needs y_1 on a residue in kappa");
      return {};
    }
    if (a.a < 2) throw fail("needs y_k with k > 1");
    const int r = a.a - 1, left = i[r - 1], right = i[r];
    if (rule == "dot-past-distant") {
      if (!free_pair(left, right, e)) throw fail("residues are not distant");
      return splice(t, at, 1, {{1, {tok_psi(r), tok_y(r), tok_psi(r)}}});
    }
    if (!adjacent(left, right, e)) throw fail("residues are not adjacent");
    const long long sign = left == modn(right - 1, e) ? 1 : -1;
    return splice(t, at, 1, {{1, {tok_y(r)}}, {sign, {tok_psi(r), tok_psi(r)}}});
  }

  // Height rules.
  if (!std::count_if(local_rules().begin(), local_rules().end(),
                     [&](const RuleInfo& ri) { return ri.name == rule && ri.height_rule; }))
    throw PatternMismatch("unknown rule " + rule);
  if (at < 0 || at > m) throw fail("height out of range");
  const Residues& i = (*hs)[at];
  const int n = t.strands(), r = pos.strand;
  if (rule == "bad-start") {
    if (n == 0 || in_kappa(i[0])) throw fail("first residue lies in kappa");
    return {};
  }
  if (rule == "adjacent-start") {
    if (n < 2 || !in_kappa(i[0]) || i[1] != modn(i[0] + 1, e)) throw fail("needs (k, k+1) with k in kappa");
    return {};
  }
  if (r < 1 || r >= n) throw fail("strand out of range");
  if (rule == "free-move") {
    if (!free_pair(i[r - 1], i[r], e)) throw fail("residues do not cross freely");
    return splice(t, at, 0, {{1, psi_word({r, r})}});
  }
  if (rule == "double-i") {
    if (i[r - 1] != i[r]) throw fail("needs equal residues");
    return splice(t, at, 0,
                  {{1, {tok_y(r), tok_psi(r), tok_y(r), tok_psi(r)}}, {-1, {tok_psi(r), tok_y(r), tok_psi(r), tok_y(r + 1)}}});
  }
  if (rule == "trio") {
    if (r + 2 > n) throw fail("needs three strands");
    const int x = i[r - 1], y = i[r], z = i[r + 1];
    if (x != z || !adjacent(x, y, e)) throw fail("needs (i, i+-1, i)");
    const long long s = y == modn(x + 1, e) ? 1 : -1;
    return splice(t, at, 0,
                  {{s, {tok_psi(r + 1), tok_psi(r), tok_y(r), tok_psi(r), tok_psi(r + 1)}},
                   {-s, psi_word({r, r + 1, r})}});
  }
  throw PatternMismatch("unknown rule " + rule);
}

std::vector<Position> rule_positions(const DiagramWord& t, const std::string& rule, const Multicharge& mc) {
  std::vector<Position> out;
  const int m = static_cast<int>(t.word.size()), n = t.strands();
  const bool height = std::count_if(local_rules().begin(), local_rules().end(),
                                    [&](const RuleInfo& ri) { return ri.name == rule && ri.height_rule; });
  auto ok = [&](Position p) {
    try {
      local_rewrite(t, rule, p, mc);
      return true;
    } catch (const PatternMismatch&) {
      return false;
    }
  };
  if (!height) {
    for (int a = 0; a < m; ++a)
      if (ok({a, 0})) out.push_back({a, 0});
  } else {
    for (int a = 0; a <= m; ++a)
      for (int r = 1; r <= std::max(1, n - 1); ++r)
        if (ok({a, r})) out.push_back({a, r});
  }
  return out;
}

DiagramWord concatenate(const DiagramWord& t, int iota) {
  DiagramWord out = t;
  for (auto& tk : out.word)
    if (tk.kind == Token::E) tk.i.push_back(iota);
  out.bottom.push_back(iota);
  return out;
}

LinComb concatenate(const LinComb& lc, int iota) {
  LinComb out;
  for (const auto& d : lc) out.push_back(concatenate(d, iota));
  return out;
}

// ------------------------------------------------------------ oracle

Oracle::Oracle(const HeckeParams& hp) : hp_(hp), B_(hp), K_(build_klr(B_.ops(), hp)) {}

Vec32 Oracle::value(const DiagramWord& t) const {
  if (t.strands() != hp_.n) throw std::invalid_argument("word has the wrong number of strands");
  const auto& A = B_.ops();
  Vec32 v = evaluate(A, K_, cat(t.word, {tok_e(t.bottom)}));
  const std::uint32_t c = static_cast<std::uint32_t>(modn(t.coef, static_cast<int>(A.p)));
  for (auto& x : v) x = static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * c) % A.p);
  return v;
}

Vec32 Oracle::value(const LinComb& lc) const {
  const auto& A = B_.ops();
  Vec32 acc(A.dim, 0);
  for (const auto& d : lc) {
    const Vec32 v = value(d);
    for (int k = 0; k < A.dim; ++k) acc[k] = (acc[k] + v[k]) % A.p;
  }
  return acc;
}

// ------------------------------------------------------------ straightening

Straightener::Straightener(Multicharge mc, Weighting theta, int l, std::vector<int> bars)
    : mc_(std::move(mc)), theta_(std::move(theta)), l_(l), bars_(std::move(bars)), kappa_(mc_.kappa()) {}

int Straightener::mod(long long a) const { return modn(a, mc_.e); }
bool Straightener::in_kappa(int a) const { return std::find(kappa_.begin(), kappa_.end(), a) != kappa_.end(); }

std::optional<Shape> Straightener::shape_of(const Residues& j) {
  const int m = static_cast<int>(j.size());
  auto it = shapes_.find(m);
  if (it == shapes_.end()) {
    std::map<Residues, Shape> table;
    if (m == 0) {
      table[{}] = Shape(l_);
    } else {
      for (const auto& nu : one_column_multipartitions(m, l_))
        table.emplace(residue_seq(t_lambda(nu, theta_), mc_), nu);
    }
    it = shapes_.emplace(m, std::move(table)).first;
  }
  auto f = it->second.find(j);
  if (f == it->second.end()) return std::nullopt;
  return f->second;
}

std::string Straightener::render(const Residues& j, int dot) const {
  SymbolicSequence s{j, {}, {}};
  if (dot) {
    s.dots.assign(j.size(), 0);
    s.dots[dot - 1] = 1;
  }
  for (int b : bars_)
    if (b < static_cast<int>(j.size())) s.bars.push_back(b);
  return s.str();
}

void Straightener::record(const std::string& rule, int pos, const Residues& j, int dot,
                          const std::vector<Piece>& out) {
  TraceStep st;
  st.rule = rule;
  st.position = pos;
  st.before = render(j, dot);
  st.lhs = DiagramWord{1, {}, j};
  if (dot) st.lhs.word.push_back(tok_y(dot));
  for (const auto& p : out) {
    std::string s = render(p.core, p.dot);
    st.after.push_back((p.coef < 0 ? "-" : "+") + (std::abs(p.coef) == 1 ? "" : std::to_string(std::abs(p.coef))) + s);
    Word w = p.above;
    if (p.dot) w.push_back(tok_y(p.dot));
    w.push_back(tok_e(p.core));
    w = cat(w, p.below);
    st.rhs.push_back(DiagramWord{p.coef, std::move(w), j});
  }
  if (oracle_) {
    st.certified = oracle_->value(st.lhs) == oracle_->value(st.rhs);
    all_certified_ = all_certified_ && st.certified;
  }
  trace_.push_back(std::move(st));
}

Straightener::Result Straightener::expand(const std::vector<Piece>& pieces) {
  Result out;
  for (const auto& p : pieces) {
    if (p.coef == 0) continue;
    for (const auto& d : reduce(p.core, p.dot))
      out.push_back(Done{p.coef * d.coef, cat(p.above, d.above), cat(d.below, p.below), d.core, d.mu});
  }
  return out;
}

Straightener::Result Straightener::reduce(const Residues& j, int dot) {
  const auto key = std::make_pair(j, dot);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (!active_.insert(key).second) throw ObstacleClassification("straightening revisits " + render(j, dot));
  if (++steps_ > limit_) throw ObstacleClassification("straightening exceeded its step limit");

  Result res;
  const int n = static_cast<int>(j.size());
  if (n > 0 && !in_kappa(j[0])) {
    record("bad-start", 1, j, dot, {});
  } else if (n > 1 && j[1] == mod(j[0] + 1)) {
    record("adjacent-start", 1, j, dot, {});
  } else {
    res = dot ? reduce_dotted(j, dot) : reduce_undotted(j);
  }
  active_.erase(key);
  memo_[key] = res;
  return res;
}

Straightener::Result Straightener::reduce_dotted(const Residues& j, int d) {
  if (d == 1) {
    record("dot-at-start", 1, j, d, {});
    return {};
  }
  const int r = d - 1, A = j[d - 1], B = j[d - 2];
  std::vector<Piece> out;
  if (free_pair(A, B, mc_.e)) {
    out.push_back({1, psi_word({r}), psi_word({r}), act_residues(j, r), r});
    record("free-move", r, j, d, out);
  } else if (adjacent(A, B, mc_.e)) {
    const long long sign = B == mod(A - 1) ? 1 : -1;
    out.push_back({1, {}, {}, j, r});
    out.push_back({sign, psi_word({r}), psi_word({r}), act_residues(j, r), 0});
    record("dot-jump", r, j, d, out);
  } else {
    // y_{r+1} e(..A,A..): insert the double-i identity under the dot.
    out.push_back({1, {tok_y(r + 1), tok_y(r), tok_psi(r)}, psi_word({r}), j, r});
    out.push_back({-1, {tok_y(r + 1), tok_psi(r)}, {tok_psi(r), tok_y(r + 1)}, j, r});
    record("double-i", r, j, d, out);
  }
  return expand(out);
}

Straightener::Result Straightener::reduce_undotted(const Residues& j) {
  if (auto mu = shape_of(j)) return {Done{1, {}, {}, j, *mu}};
  int m = 1;
  while (shape_of(Residues(j.begin(), j.begin() + m))) ++m;
  // j_1..j_{m-1} = i^nu and A = j_m cannot be added.  m > 1 here since the
  // first residue lies in kappa.
  const int p = m, A = j[p - 1], B = j[p - 2];
  std::vector<Piece> out;
  if (free_pair(A, B, mc_.e)) {
    const Residues k = act_residues(j, p - 1);
    out.push_back({1, psi_word({p - 1}), psi_word({p - 1}), k, 0});
    record(shape_of(Residues(k.begin(), k.begin() + p - 1)) ? "gap" : "free-move", p - 1, j, 0, out);
    return expand(out);
  }
  if (A == B) {
    const int r = p - 1;
    out.push_back({1, {tok_y(r), tok_psi(r)}, psi_word({r}), j, r});
    out.push_back({-1, psi_word({r}), {tok_psi(r), tok_y(r + 1)}, j, r});
    record("double-i", r, j, 0, out);
    return expand(out);
  }
  if (B == mod(A + 1)) throw ObstacleClassification("residue " + std::to_string(A) + " meets " + std::to_string(B) +
                                                    " without a gap in " + render(j, 0));
  // B = A-1: find the node of B in nu and the node above it.
  const Residues pre(j.begin(), j.begin() + p - 1);
  const Shape nu = *shape_of(pre);
  const Tableau T = t_lambda(nu, theta_);
  const Node gB = T.node(p - 1);
  Residues k = j;
  std::vector<int> swaps;
  auto move = [&](int from, int to) {  // move k[from-1] to position to, both 1-based
    const int step = to < from ? -1 : 1;
    for (int x = from; x != to; x += step) {
      const int y = x + step;
      if (!free_pair(k[x - 1], k[y - 1], mc_.e))
        throw ObstacleClassification("cannot move " + std::to_string(k[x - 1]) + " past " + std::to_string(k[y - 1]) +
                                     " in " + render(k, 0));
      const int r = std::min(x, y);
      k = act_residues(k, r);
      swaps.push_back(r);
    }
  };
  auto moved_piece = [&](long long coef, Word above, Residues core, int dot, Word below) {
    Word pre_w, post_w;
    for (int r : swaps) pre_w.push_back(tok_psi(r));
    for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) post_w.push_back(tok_psi(*it));
    return Piece{coef, cat(pre_w, above), cat(below, post_w), std::move(core), dot};
  };
  if (gB.row == 1) {
    // B lies in the first row: bring B, A to the front, where they vanish.
    move(p - 1, 1);
    move(p, 2);
    out.push_back(moved_piece(1, {}, k, 0, {}));
    record("free-move", 1, j, 0, out);
    return expand(out);
  }
  const Node above{gB.row - 1, gB.col, gB.comp};
  const int q = T.entry(above);
  if (j[q - 1] != A) throw ObstacleClassification("node above " + std::to_string(B) + " has the wrong residue");
  move(q, p - 2);
  const int r = p - 2;
  if (!swaps.empty()) {
    out.push_back(moved_piece(1, {}, k, 0, {}));
    record("free-move", r, j, 0, out);
    out.clear();
  }
  // Triple (A, A-1, A) at r: e = -psi_{r+1} psi_r y_r psi_r psi_{r+1} e + psi_r psi_{r+1} psi_r e.
  const Residues mid = act_residues(act_residues(k, r + 1), r);
  const Residues low = act_residues(k, r);
  const std::vector<int> saved = swaps;
  swaps.clear();
  std::vector<Piece> trio{{-1, psi_word({r + 1, r}), psi_word({r, r + 1}), mid, r},
                          {1, psi_word({r, r + 1}), psi_word({r}), low, 0}};
  record("trio", r, k, 0, trio);
  swaps = saved;
  for (auto& t : trio) out.push_back(moved_piece(t.coef, t.above, t.core, t.dot, t.below));
  return expand(out);
}

Straightening Straightener::dot(const Shape& lambda, int k, const Oracle* oracle) {
  const Residues i = residue_seq(t_lambda(lambda, theta_), mc_);
  if (k < 1 || k > static_cast<int>(i.size())) throw std::invalid_argument("dot position out of range");
  oracle_ = oracle;
  trace_.clear();
  memo_.clear();
  active_.clear();
  all_certified_ = true;
  steps_ = 0;
  Straightening s;
  s.input = DiagramWord{1, {tok_y(k)}, i};
  for (auto& d : reduce(i, k)) {
    s.terminal.push_back(DiagramWord{d.coef, cat(cat(d.above, {tok_e(d.core)}), d.below), i});
    s.shapes.push_back(d.mu);
  }
  s.trace = std::move(trace_);
  if (oracle) s.certified = all_certified_ && oracle->value(s.input) == oracle->value(s.terminal);
  oracle_ = nullptr;
  return s;
}

Straightening Straightener::idempotent(const Residues& j, const Oracle* oracle) {
  oracle_ = oracle;
  trace_.clear();
  memo_.clear();
  active_.clear();
  all_certified_ = true;
  steps_ = 0;
  Straightening s;
  s.input = DiagramWord{1, {}, j};
  for (auto& d : reduce(j, 0)) {
    s.terminal.push_back(DiagramWord{d.coef, cat(cat(d.above, {tok_e(d.core)}), d.below), j});
    s.shapes.push_back(d.mu);
  }
  s.trace = std::move(trace_);
  if (oracle) s.certified = all_certified_ && oracle->value(s.input) == oracle->value(s.terminal);
  oracle_ = nullptr;
  return s;
}

Straightening straighten_dot(const Multicharge& mc, const Weighting& theta, const Shape& lambda, int k,
                             const Oracle* oracle) {
  Straightener st(mc, theta, static_cast<int>(lambda.size()), row_bars(lambda, theta));
  return st.dot(lambda, k, oracle);
}

// ------------------------------------------------------------ Garnir

GarnirExpansion straighten_garnir(const Oracle& oracle, const CellularBasis& cb, const Tableau& S, const Tableau& G) {
  const auto& hp = oracle.params();
  const Weighting theta = theta_zero(hp.l);
  const Shape& lambda = G.shape();
  if (S.shape() != lambda) throw std::invalid_argument("S and G have different shapes");
  if (!S.is_standard()) throw std::invalid_argument("S must be standard");
  int b = -1;
  for (int x = 0; x < static_cast<int>(cb.shapes.size()); ++x)
    if (cb.shapes[x].shape == lambda) b = x;
  if (b < 0) throw std::invalid_argument("shape is not one-column");
  const auto& cs = cb.shapes[b];
  const int s = static_cast<int>(std::find(cs.tabs.begin(), cs.tabs.end(), S) - cs.tabs.begin());

  GarnirExpansion ge;
  if (G.is_standard()) {
    const int t = static_cast<int>(std::find(cs.tabs.begin(), cs.tabs.end(), G) - cs.tabs.begin());
    ge.passthrough = true;
    ge.terms.push_back({{b, s, t}, 1});
    return ge;
  }
  const Word w = cat(cat(reversed(official_word(d_perm(S, theta))), {tok_e(cs.i_lambda)}),
                     forward(official_word(d_perm(G, theta))));
  const Vec32 c = cb.expand(oracle.value(DiagramWord{1, w, cs.i_lambda}));
  for (int x = 0; x < static_cast<int>(c.size()); ++x) {
    if (c[x] == 0) continue;
    const auto lab = cb.labels[x];
    ge.terms.push_back({lab, c[x]});
    const auto& other = cb.shapes[lab[0]];
    if (lab[0] == b) {
      if (lab[1] != s || tableau_cmp(cs.tabs[lab[2]], G, theta) != Cmp::greater) {
        ge.support_ok = ge.dominance_ok = false;
        ge.violations.push_back("m_{" + cs.tabs[lab[1]].str() + "," + cs.tabs[lab[2]].str() + "} at the same shape");
      }
    } else {
      if (shape_lex_cmp(other.shape, lambda, theta) != Cmp::greater) {
        ge.support_ok = false;
        ge.violations.push_back("shape " + shape_str(other.shape) + " is not above " + shape_str(lambda));
      }
      if (dominance_cmp(other.shape, lambda, theta) != Cmp::greater) ge.dominance_ok = false;
    }
  }
  Straightener st(hp.mc, theta, hp.l, row_bars(lambda, theta));
  ge.idempotent = st.idempotent(residue_seq(G, hp.mc), &oracle);
  return ge;
}

std::optional<std::vector<int>> free_move_path(const Residues& i, const Residues& j, int e) {
  if (i.size() != j.size()) return std::nullopt;
  Residues cur = i;
  std::vector<int> path;
  const int n = static_cast<int>(i.size());
  for (int x = 0; x < n; ++x) {
    int y = x;
    while (y < n && cur[y] != j[x]) ++y;
    if (y == n) return std::nullopt;
    for (int z = x; z < y; ++z)
      if (!free_pair(cur[z], cur[y], e)) return std::nullopt;
    for (int z = y; z > x; --z) {
      cur = act_residues(cur, z);
      path.push_back(z);
    }
  }
  return path;
}

}  // namespace blobcell
