// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The blobcell authors

// Command-line front end over the C API.
//
//   blobcell dims   [params]
//   blobcell verify [params] --suite all
//   blobcell basis  [params] [--format csv]
//   blobcell cell   [params] [--shape max|h1,h2,..] [--format csv]
//   blobcell trace  [params] (--k K [--shape ..] | --residues i1,..,in)
//
// Parameters come from --config (key=value lines) and are overridden by the
// flags.  Exit codes: 0 success, 1 a verification check failed, otherwise
// the bc_status of the failing call.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "blobcell.h"
#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string config_file;
  std::optional<int> n, l, e;
  std::optional<long long> p, q;
  std::string kappa_hat, theta, oracle, suite = "all", out, shape, residues, format = "json";
  std::optional<int> k;
};

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<long long> parse_list(const std::string& key, const std::string& text) {
  std::vector<long long> out;
  std::string t = text;
  for (char& c : t)
    if (c == '(' || c == ')' || c == '[' || c == ']') c = ' ';
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw std::invalid_argument(key + ": '" + item + "' is not a decimal integer");
    out.push_back(v);
  }
  return out;
}

long long parse_int(const std::string& key, const std::string& text) {
  const auto v = parse_list(key, text);
  if (v.size() != 1) throw std::invalid_argument(key + " expects one integer");
  return v[0];
}

bool parse_switch(const std::string& key, const std::string& text) {
  if (text == "on" || text == "true" || text == "1") return true;
  if (text == "off" || text == "false" || text == "0") return false;
  throw std::invalid_argument(key + " must be on or off");
}

// key=value lines; '#' starts a comment.
void read_config(const std::string& path, json& cfg, Options& opt) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    for (char& c : key)
      if (c == '-') c = '_';
    if (key == "n" || key == "l" || key == "e" || key == "p" || key == "q")
      cfg[key] = parse_int(key, value);
    else if (key == "kappa_hat" || key == "theta")
      cfg[key] = parse_list(key, value);
    else if (key == "oracle")
      cfg[key] = parse_switch(key, value);
    else if (key == "suite")
      opt.suite = value;
    else if (key == "out")
      opt.out = value;
    else
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
}

json build_config(Options& opt) {
  json cfg = json::object();
  if (!opt.config_file.empty()) read_config(opt.config_file, cfg, opt);
  if (opt.n) cfg["n"] = *opt.n;
  if (opt.l) cfg["l"] = *opt.l;
  if (opt.e) cfg["e"] = *opt.e;
  if (opt.p) cfg["p"] = *opt.p;
  if (opt.q) cfg["q"] = *opt.q;
  if (!opt.kappa_hat.empty()) cfg["kappa_hat"] = parse_list("kappa-hat", opt.kappa_hat);
  if (!opt.theta.empty()) cfg["theta"] = parse_list("theta", opt.theta);
  if (!opt.oracle.empty()) cfg["oracle"] = parse_switch("oracle", opt.oracle);
  return cfg;
}

std::string shape_arg(const std::string& s) {
  if (s.empty()) return "";
  if (s == "max") return "\"max\"";
  return json(parse_list("shape", s)).dump();
}

std::string csv_row(const json& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + row[i].dump();
  return out + "\n";
}

// Matrices as CSV: basis vectors one per row, Gram matrices one block each.
std::string to_csv(const std::string& command, const json& doc) {
  std::string out;
  if (command == "basis") {
    for (const auto& v : doc["vectors"]) out += csv_row(v["coords"]);
  } else {
    for (const auto& c : doc["cells"]) {
      out += "# shape " + c["shape"].dump() + " dim " + c["dim"].dump() + " gram_rank " + c["gram_rank"].dump() + "\n";
      for (const auto& row : c["gram"]) out += csv_row(row);
    }
  }
  return out;
}

int fail(bc_status st) {
  std::cerr << "blobcell: " << bc_status_name(st) << ": " << bc_last_error() << "\n";
  return static_cast<int>(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blob algebras as quotients of cyclotomic Hecke algebras: dimensions, verification, cellular data"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", bc_version());
  Options opt;

  auto add_params = [&](CLI::App* c) {
    c->add_option("--config", opt.config_file, "key=value parameter file");
    c->add_option("--n", opt.n, "number of strands");
    c->add_option("--l", opt.l, "level (number of components)");
    c->add_option("--e", opt.e, "quantum characteristic");
    c->add_option("--p", opt.p, "prime with e | p-1");
    c->add_option("--q", opt.q, "primitive e-th root of unity mod p (default: smallest)");
    c->add_option("--kappa-hat", opt.kappa_hat, "multicharge, comma separated");
    c->add_option("--theta", opt.theta, "weighting, comma separated");
    c->add_option("--oracle", opt.oracle, "certify rewriting in the matrix algebra: on|off");
    c->add_option("--out", opt.out, "write the result here instead of stdout");
  };
  auto* dims = app.add_subcommand("dims", "dim H, dim B and the standard tableau counts per shape");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  auto* basis = app.add_subcommand("basis", "the cellular basis m_ST in quotient coordinates");
  auto* cell = app.add_subcommand("cell", "cell modules: dimensions, Gram matrices and ranks");
  auto* trace = app.add_subcommand("trace", "rewrite trace of y_k e(i^lambda) or of e(i)");
  for (auto* c : {dims, verify, basis, cell, trace}) add_params(c);
  verify->add_option("--suite", opt.suite, "hecke|klr|cellular|jm|rewrite|all");
  for (auto* c : {basis, cell}) c->add_option("--format", opt.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  cell->add_option("--shape", opt.shape, "max or column heights");
  trace->add_option("--shape", opt.shape, "max or column heights (default max)");
  trace->add_option("--k", opt.k, "dot position for y_k e(i^lambda)");
  trace->add_option("--residues", opt.residues, "residue sequence for e(i)");

  CLI11_PARSE(app, argc, argv);

  json cfg;
  try {
    cfg = build_config(opt);
  } catch (const std::exception& ex) {
    std::cerr << "blobcell: invalid configuration: " << ex.what() << "\n";
    return BC_ERR_ARGUMENT;
  }

  bc_context* ctx = nullptr;
  if (const bc_status st = bc_context_new(cfg.dump().c_str(), &ctx); st != BC_OK) return fail(st);

  char* text = nullptr;
  bc_status st = BC_OK;
  int passed = 1;
  std::string command;
  if (*dims) {
    command = "dims";
    st = bc_dims(ctx, &text);
  } else if (*verify) {
    command = "verify";
    st = bc_verify(ctx, opt.suite.c_str(), &text, &passed);
  } else if (*basis) {
    command = "basis";
    st = bc_basis(ctx, &text);
  } else if (*cell) {
    command = "cell";
    const std::string s = shape_arg(opt.shape);
    st = bc_cell(ctx, s.empty() ? nullptr : s.c_str(), &text);
  } else {
    command = "trace";
    json req;
    try {
      if (opt.k && !opt.residues.empty()) throw std::invalid_argument("give either --k or --residues");
      if (opt.k) {
        req = json{{"kind", "dot"}, {"shape", json::parse(opt.shape.empty() ? "\"max\"" : shape_arg(opt.shape))},
                   {"k", *opt.k}};
      } else if (!opt.residues.empty()) {
        req = json{{"kind", "idempotent"}, {"residues", parse_list("residues", opt.residues)}};
      } else {
        throw std::invalid_argument("trace needs --k or --residues");
      }
    } catch (const std::exception& ex) {
      bc_context_free(ctx);
      std::cerr << "blobcell: invalid argument: " << ex.what() << "\n";
      return BC_ERR_ARGUMENT;
    }
    st = bc_trace(ctx, req.dump().c_str(), &text);
  }
  bc_context_free(ctx);
  if (st != BC_OK) return fail(st);

  std::string result = text;
  bc_string_free(text);
  if (opt.format == "csv" && (command == "basis" || command == "cell")) result = to_csv(command, json::parse(result));

  if (opt.out.empty()) {
    std::cout << result;
  } else {
    std::ofstream f(opt.out);
    if (!(f << result)) {
      std::cerr << "blobcell: cannot write " << opt.out << "\n";
      return BC_ERR_INTERNAL;
    }
  }
  return passed ? 0 : 1;
}
