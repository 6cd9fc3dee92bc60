// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The blobcell authors

#include "blobcell.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>

#include "blobcell/suites.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;
using namespace blobcell;

namespace {

// Largest dim H = l^n n! for which the matrix algebra is built.
constexpr long long kMaxHeckeDim = 2000;

thread_local std::string g_error;

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_prime_u(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long hecke_dim(int n, int l) {
  long long d = 1;
  for (int k = 1; k <= n; ++k) {
    d *= static_cast<long long>(l) * k;
    if (d > (1LL << 40)) return d;
  }
  return d;
}

json shape_json(const Shape& s) { return column_heights(s); }

json tableau_json(const Tableau& t) { return t.rows(); }

json report_json(const Report& r) {
  return json{{"name", r.name}, {"checked", r.checked}, {"pass", r.pass()}, {"violations", r.violations}};
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  return j.at(key).get<T>();
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const json& j, char** out) { *out = dup(j.dump(2) + "\n"); }

template <class F>
bc_status guarded(F&& f) {
  g_error.clear();
  try {
    f();
    return BC_OK;
  } catch (const InvalidParameters& e) {
    g_error = e.what();
    return BC_ERR_CONFIG;
  } catch (const NoRoot& e) {
    g_error = e.what();
    return BC_ERR_CONFIG;
  } catch (const LimitExceeded& e) {
    g_error = e.what();
    return BC_ERR_LIMIT;
  } catch (const json::exception& e) {
    g_error = std::string("malformed JSON: ") + e.what();
    return BC_ERR_ARGUMENT;
  } catch (const std::invalid_argument& e) {
    g_error = e.what();
    return BC_ERR_ARGUMENT;
  } catch (const CheckFailure& e) {
    g_error = e.what();
    return BC_ERR_CHECK;
  } catch (const DimensionMismatch& e) {
    g_error = e.what();
    return BC_ERR_CHECK;
  } catch (const RelationFailure& e) {
    g_error = e.what();
    return BC_ERR_CHECK;
  } catch (const PoleAtSpecialization& e) {
    g_error = e.what();
    return BC_ERR_CHECK;
  } catch (const ObstacleClassification& e) {
    g_error = e.what();
    return BC_ERR_CHECK;
  } catch (const std::exception& e) {
    g_error = e.what();
    return BC_ERR_INTERNAL;
  } catch (...) {
    g_error = "unknown error";
    return BC_ERR_INTERNAL;
  }
}

}  // namespace

struct bc_context {
  int n = 2, l = 2, e = 5;
  std::uint32_t p = 11, q = 0;
  std::vector<long long> hat_kappa;
  Weighting theta;
  bool oracle = true;
  std::optional<HeckeParams> hp;  // absent for n = 0
  std::unique_ptr<Workspace> ws;

  json config() const {
    return json{{"n", n},         {"l", l},         {"e", e},     {"p", p}, {"q", q},
                {"kappa_hat", hat_kappa}, {"theta", theta}, {"oracle", oracle}};
  }
  const HeckeParams& params() const {
    if (!hp) throw std::invalid_argument("n must be positive for this command");
    return *hp;
  }
  // The algebraic pipeline orders tableaux by the zero weighting.
  void require_zero_theta() const {
    for (int t : theta)
      if (t != 0) throw std::invalid_argument("the cellular basis is built for theta = 0; got a nonzero weighting");
  }
  Workspace& workspace() {
    const auto& h = params();
    if (hecke_dim(n, l) > kMaxHeckeDim)
      throw LimitExceeded("dim H = l^n n! exceeds " + std::to_string(kMaxHeckeDim) +
                          "; the matrix algebra is out of reach (use oracle off for symbolic traces)");
    if (!ws) ws = std::make_unique<Workspace>(h);
    return *ws;
  }
};

namespace {

void resolve(bc_context& c, const json& cfg) {
  if (!cfg.is_object()) throw std::invalid_argument("configuration must be a JSON object");
  static const std::vector<std::string> known{"n", "l", "e", "p", "q", "kappa_hat", "theta", "oracle"};
  for (const auto& [key, value] : cfg.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw std::invalid_argument("unknown configuration key '" + key + "'");
  c.n = get_or(cfg, "n", 2);
  c.l = get_or(cfg, "l", 2);
  if (c.n < 0) throw InvalidParameters("n must be nonnegative");
  if (c.l < 1) throw InvalidParameters("l must be positive");
  c.e = get_or(cfg, "e", 2 * c.l + 1);
  if (c.e < 2) throw InvalidParameters("e must be at least 2");
  if (cfg.contains("p") && !cfg.at("p").is_null()) {
    const long long p = cfg.at("p").get<long long>();
    if (p < 2 || p > 0xFFFF) throw InvalidParameters("p must be a prime below 65536");
    c.p = static_cast<std::uint32_t>(p);
  } else {
    c.p = static_cast<std::uint32_t>(c.e) + 1;
    while (!is_prime_u(c.p)) c.p += static_cast<std::uint32_t>(c.e);
  }
  if (!is_prime_u(c.p)) throw InvalidParameters("p = " + std::to_string(c.p) + " is not prime");
  if ((c.p - 1) % static_cast<std::uint32_t>(c.e) != 0)
    throw InvalidParameters("e = " + std::to_string(c.e) + " does not divide p - 1 = " + std::to_string(c.p - 1));
  const long long q = get_or<long long>(cfg, "q", 0);
  if (q < 0) throw InvalidParameters("q must be nonnegative");
  c.q = static_cast<std::uint32_t>(q);
  if (cfg.contains("kappa_hat") && !cfg.at("kappa_hat").is_null()) {
    c.hat_kappa = cfg.at("kappa_hat").get<std::vector<long long>>();
  } else {
    // The preset spacing: hat_kappa_m = 2(m-1) mod e, at least n apart.
    c.hat_kappa = {0};
    for (int m = 1; m < c.l; ++m) {
      long long x = c.hat_kappa.back() + c.n;
      while (((x % c.e) + c.e) % c.e != (2 * m) % c.e) ++x;
      c.hat_kappa.push_back(x);
    }
  }
  if (static_cast<int>(c.hat_kappa.size()) != c.l)
    throw InvalidParameters("kappa_hat must have l = " + std::to_string(c.l) + " entries");
  c.theta = get_or(cfg, "theta", theta_zero(c.l));
  if (static_cast<int>(c.theta.size()) != c.l)
    throw InvalidParameters("theta must have l = " + std::to_string(c.l) + " entries");
  c.oracle = get_or(cfg, "oracle", true);
  // make() checks primality, e > 2l, q and the multicharge conditions.
  const HeckeParams h = HeckeParams::make(std::max(c.n, 1), c.l, c.e, c.p, c.hat_kappa, c.q);
  if (c.n == 0) {
    std::string why;
    if (!is_strongly_adjacency_free(h.mc, 0, &why))
      throw InvalidParameters("multicharge is not strongly adjacency-free: " + why);
  } else {
    c.hp = h;
  }
  c.q = h.q;
}

Shape parse_shape(const bc_context& c, const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "max") throw std::invalid_argument("shape must be \"max\" or a list of column heights");
    return mu_max(c.n, c.l);
  }
  const auto h = j.get<std::vector<int>>();
  int total = 0;
  for (int x : h) {
    if (x < 0) throw std::invalid_argument("column heights must be nonnegative");
    total += x;
  }
  if (static_cast<int>(h.size()) != c.l || total != c.n)
    throw std::invalid_argument("shape must have l columns with heights summing to n");
  return one_column(h);
}

json trace_json(const Straightening& s, bool oracle) {
  json steps = json::array();
  for (const auto& st : s.trace) {
    json step{{"rule", st.rule}, {"position", st.position}, {"before", st.before}, {"after", st.after}};
    if (oracle) step["certified"] = st.certified;
    steps.push_back(step);
  }
  json terminal = json::array();
  for (std::size_t x = 0; x < s.terminal.size(); ++x)
    terminal.push_back(json{{"term", s.terminal[x].str()}, {"shape", shape_json(s.shapes[x])}});
  json out{{"input", s.input.str()}, {"steps", steps}, {"terminal", terminal},
           {"result", s.terminal.empty() ? std::string("0") : lincomb_str(s.terminal)}};
  if (oracle) out["certified"] = s.certified;
  return out;
}

}  // namespace

extern "C" {

const char* bc_version(void) { return "1.0.0"; }

const char* bc_status_name(bc_status status) {
  switch (status) {
    case BC_OK: return "ok";
    case BC_ERR_NULL: return "null argument";
    case BC_ERR_CONFIG: return "invalid configuration";
    case BC_ERR_ARGUMENT: return "invalid argument";
    case BC_ERR_CHECK: return "consistency check failed";
    case BC_ERR_LIMIT: return "size limit exceeded";
    case BC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* bc_last_error(void) { return g_error.c_str(); }

void bc_string_free(char* s) { std::free(s); }

bc_status bc_context_new(const char* config_json, bc_context** out) {
  if (!out) {
    g_error = "out is null";
    return BC_ERR_NULL;
  }
  *out = nullptr;
  return guarded([&] {
    auto c = std::make_unique<bc_context>();
    const std::string text = config_json && *config_json ? config_json : "{}";
    resolve(*c, json::parse(text));
    *out = c.release();
  });
}

void bc_context_free(bc_context* ctx) { delete ctx; }

bc_status bc_context_config(const bc_context* ctx, char** out_json) {
  if (!ctx || !out_json) {
    g_error = "null argument";
    return BC_ERR_NULL;
  }
  return guarded([&] { emit(ctx->config(), out_json); });
}

bc_status bc_dims(bc_context* ctx, char** out_json) {
  if (!ctx || !out_json) {
    g_error = "null argument";
    return BC_ERR_NULL;
  }
  return guarded([&] {
    const auto shapes = one_column_multipartitions(ctx->n, ctx->l);
    json per = json::array();
    long long dim_b = 0;
    for (const auto& s : shapes) {
      const long long f = static_cast<long long>(std_tableaux(s).size());
      dim_b += f * f;
      per.push_back(json{{"shape", shape_json(s)}, {"std", f}});
    }
    emit(json{{"command", "dims"},
              {"config", ctx->config()},
              {"dim_H", hecke_dim(ctx->n, ctx->l)},
              {"dim_B", dim_b},
              {"num_shapes", shapes.size()},
              {"shapes", per}},
         out_json);
  });
}

bc_status bc_verify(bc_context* ctx, const char* suite, char** out_json, int* passed) {
  if (!ctx || !out_json) {
    g_error = "null argument";
    return BC_ERR_NULL;
  }
  if (passed) *passed = 0;
  return guarded([&] {
    const std::string name = suite ? suite : "all";
    if (name != "all" && std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
      throw std::invalid_argument("unknown suite '" + name + "' (hecke, klr, cellular, jm, rewrite, all)");
    ctx->require_zero_theta();
    // The symbolic rewrite suite needs no algebra.
    const bool symbolic = name == "rewrite" && !ctx->oracle;
    std::vector<Report> reps;
    if (symbolic) {
      Workspace ws(ctx->params());
      reps = run_suite(ws, name, false);
    } else {
      reps = run_suite(ctx->workspace(), name, ctx->oracle);
    }
    json arr = json::array();
    for (const auto& r : reps) arr.push_back(report_json(r));
    const bool ok = all_pass(reps);
    if (passed) *passed = ok ? 1 : 0;
    emit(json{{"command", "verify"}, {"config", ctx->config()}, {"suite", name}, {"pass", ok}, {"reports", arr}},
         out_json);
  });
}

bc_status bc_basis(bc_context* ctx, char** out_json) {
  if (!ctx || !out_json) {
    g_error = "null argument";
    return BC_ERR_NULL;
  }
  return guarded([&] {
    ctx->require_zero_theta();
    auto& ws = ctx->workspace();
    const auto& cb = ws.basis();
    json vecs = json::array();
    for (std::size_t x = 0; x < cb.vectors.size(); ++x) {
      const auto& lab = cb.labels[x];
      const auto& cs = cb.shapes[lab[0]];
      vecs.push_back(json{{"shape", shape_json(cs.shape)},
                          {"S", tableau_json(cs.tabs[lab[1]])},
                          {"T", tableau_json(cs.tabs[lab[2]])},
                          {"degree", cb.degree[x]},
                          {"coords", cb.vectors[x]}});
    }
    emit(json{{"command", "basis"},
              {"config", ctx->config()},
              {"dim_B", ws.blob().dim()},
              {"rank", cb.rank},
              {"quotient_basis", ws.blob().kept()},
              {"vectors", vecs}},
         out_json);
  });
}

bc_status bc_cell(bc_context* ctx, const char* shape_json_text, char** out_json) {
  if (!ctx || !out_json) {
    g_error = "null argument";
    return BC_ERR_NULL;
  }
  return guarded([&] {
    ctx->require_zero_theta();
    std::optional<Shape> only;
    if (shape_json_text && *shape_json_text) only = parse_shape(*ctx, json::parse(shape_json_text));
    auto& ws = ctx->workspace();
    const auto& cb = ws.basis();
    const auto mods = cell_modules(ws.blob().ops(), ws.klr(), cb, ctx->params());
    json cells = json::array();
    for (std::size_t b = 0; b < mods.size(); ++b) {
      const auto& m = mods[b];
      if (only && m.shape != *only) continue;
      json gram = json::array(), tabs = json::array();
      for (int i = 0; i < m.gram.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.gram.cols(); ++j) row.push_back(m.gram(i, j));
        gram.push_back(row);
      }
      for (const auto& t : cb.shapes[b].tabs) tabs.push_back(tableau_json(t));
      cells.push_back(json{{"shape", shape_json(m.shape)},
                           {"dim", m.dim},
                           {"gram_rank", m.gram_rank},
                           {"tableaux", tabs},
                           {"degrees", cb.shapes[b].degree},
                           {"gram", gram}});
    }
    emit(json{{"command", "cell"}, {"config", ctx->config()}, {"cells", cells}}, out_json);
  });
}

bc_status bc_trace(bc_context* ctx, const char* request_json, char** out_json) {
  if (!ctx || !request_json || !out_json) {
    g_error = "null argument";
    return BC_ERR_NULL;
  }
  return guarded([&] {
    const json req = json::parse(request_json);
    const auto& hp = ctx->params();
    const Oracle* O = ctx->oracle ? &ctx->workspace().oracle() : nullptr;
    const std::string kind = req.at("kind").get<std::string>();
    json request{{"kind", kind}};
    Straightening s;
    if (kind == "dot") {
      const Shape lambda = parse_shape(*ctx, req.at("shape"));
      const int k = req.at("k").get<int>();
      if (k < 1 || k > ctx->n) throw std::invalid_argument("k must lie in 1..n");
      request["shape"] = shape_json(lambda);
      request["k"] = k;
      s = straighten_dot(hp.mc, ctx->theta, lambda, k, O);
    } else if (kind == "idempotent") {
      const auto j = req.at("residues").get<Residues>();
      if (static_cast<int>(j.size()) != ctx->n) throw std::invalid_argument("residues must have n entries");
      for (int a : j)
        if (a < 0 || a >= ctx->e) throw std::invalid_argument("residues must lie in 0..e-1");
      request["residues"] = j;
      Straightener st(hp.mc, ctx->theta, ctx->l);
      s = st.idempotent(j, O);
    } else {
      throw std::invalid_argument("trace kind must be \"dot\" or \"idempotent\"");
    }
    json out{{"command", "trace"}, {"config", ctx->config()}, {"request", request}};
    const json body = trace_json(s, O != nullptr);
    for (const auto& [key, value] : body.items()) out[key] = value;
    emit(out, out_json);
  });
}

}  // extern "C"
