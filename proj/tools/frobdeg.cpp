// frobdeg: Frobenius problem for polynomials over Q, F_p and F_{p^k}.
//
// Subcommands: degree, bounds, solve, counterexample, denumerant, oracle,
// charp. Exit codes: 0 success, 1 internal verification failure, 2 invalid
// input, 3 capacity exceeded.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "frobdeg/certify.hpp"
#include "frobdeg/oracle.hpp"
#include "frobdeg/solver.hpp"

using nlohmann::json;
using namespace frobdeg;

namespace {

struct RunConfig {
  std::string field_spec = "Q";
  std::string modulus_text;
  std::string polys_text;
  std::string target_text;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::uint64_t permute_cap = 5040;
  std::uint64_t capacity_cap = 1ull << 24;
  bool json_out = false;
  bool verify = false;
  bool strict = false;
  bool certify = false;
  int min_degree = 1;
  std::optional<int> dmax;
};

Field make_field(const RunConfig& cfg) {
  const std::string& s = cfg.field_spec;
  if (s == "Q" || s == "q") return Field::rationals();
  if (s.size() >= 2 && (s[0] == 'F' || s[0] == 'f')) {
    const std::size_t caret = s.find('^');
    const std::string p_part = s.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    std::uint64_t p = 0;
    try {
      p = std::stoull(p_part);
    } catch (...) {
      fail(ErrorKind::invalid_input, "bad field spec: " + s);
    }
    if (caret == std::string::npos) {
      if (!cfg.modulus_text.empty())
        fail(ErrorKind::invalid_input, "--modulus needs an extension field");
      return Field::prime(p);
    }
    unsigned k = 0;
    try {
      k = (unsigned)std::stoul(s.substr(caret + 1));
    } catch (...) {
      fail(ErrorKind::invalid_input, "bad field spec: " + s);
    }
    if (cfg.modulus_text.empty()) return Field::extension(p, k);
    const Field fp = Field::prime(p);
    const Poly mod = parse_poly(cfg.modulus_text, fp, 'u');
    std::vector<std::uint64_t> coeffs;
    for (const auto& c : mod.coeffs()) coeffs.push_back(c.residues()[0]);
    if ((int)k != mod.degree())
      fail(ErrorKind::invalid_input, "modulus degree does not match the field spec");
    return Field::extension(p, coeffs);
  }
  fail(ErrorKind::invalid_input, "bad field spec: " + s + " (expected Q, F<p> or F<p>^<k>)");
}

std::uint64_t seed_from_env_or(const RunConfig& cfg) {
  if (cfg.seed_set) return cfg.seed;
  if (const char* env = std::getenv("FROBDEG_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      fail(ErrorKind::invalid_input, "FROBDEG_SEED is not an integer");
    }
  }
  return cfg.seed;
}

json report_json(const FrobeniusReport& r) {
  json out;
  out["g"] = r.g == kNegInf ? json(nullptr) : json(r.g);
  out["lower_bound"] = r.lower_bound == kNegInf ? json(nullptr) : json(r.lower_bound);
  out["upper_bound"] = r.upper_bound == kNegInf ? json(nullptr) : json(r.upper_bound);
  out["method"] = to_string(r.method);
  if (r.counterexample) out["counterexample"] = format_poly(*r.counterexample);
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

void print_report(const FrobeniusReport& r) {
  std::cout << "g = " << degree_str(r.g) << "\n";
  if (r.lower_bound != kNegInf) std::cout << "lower_bound = " << r.lower_bound << "\n";
  if (r.upper_bound != kNegInf) std::cout << "upper_bound = " << r.upper_bound << "\n";
  std::cout << "method = " << to_string(r.method) << "\n";
  if (r.counterexample)
    std::cout << "counterexample = " << format_poly(*r.counterexample) << "\n";
  if (!r.note.empty()) std::cout << "note = " << r.note << "\n";
}

json witness_json(const SolutionWitness& w) {
  json arr = json::array();
  for (const auto& x : w.x) arr.push_back(format_poly(x));
  return arr;
}

void verify_counterexample(const Poly& g, const std::vector<Poly>& a) {
  if (solve_for(g, a))
    fail(ErrorKind::verification_failed, "counter-example failed re-verification");
}

void verify_witness(const SolutionWitness& w, const Poly& f, const std::vector<Poly>& a) {
  Poly sum(f.field());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!w.x[i].in_nonneg_cone())
      fail(ErrorKind::verification_failed, "witness component outside the cone");
    sum = sum + w.x[i] * a[i];
  }
  if (!(sum == f)) fail(ErrorKind::verification_failed, "witness failed re-verification");
}

int run(const std::string& cmd, const RunConfig& cfg) {
  const Field field = make_field(cfg);
  const std::vector<Poly> a = parse_poly_list(cfg.polys_text, field);
  const std::uint64_t seed = seed_from_env_or(cfg);
  const SolverConfig solver_cfg{cfg.permute_cap, cfg.capacity_cap};
  const OracleConfig oracle_cfg{cfg.capacity_cap};
  json out;

  if (cmd == "degree" || cmd == "counterexample") {
    FrobeniusReport r = frobenius_degree(a, solver_cfg);
    if (cfg.strict && r.method == SolveMethod::degenerate)
      fail(ErrorKind::invalid_input, "degenerate input in strict mode: " + r.note);
    const bool want_cert = cmd == "counterexample" || cfg.certify;
    if (want_cert && r.g != kNegInf && !r.counterexample) {
      Rng rng(seed);
      r.counterexample = counter_example(a, r.g, rng);
    }
    if (want_cert && r.g == kNegInf)
      fail(ErrorKind::invalid_input, "no counter-example exists: g = -inf (" + r.note + ")");
    if (cfg.verify && r.counterexample) verify_counterexample(*r.counterexample, a);
    if (cfg.json_out) {
      out = report_json(r);
      if (cfg.verify) out["verified"] = true;
      std::cout << out.dump() << "\n";
    } else {
      print_report(r);
      if (cfg.verify) std::cout << "verified = true\n";
    }
    return 0;
  }

  if (cmd == "bounds") {
    std::vector<int> degrees;
    for (const auto& p : a) degrees.push_back(p.degree());
    const int up = upper_bound(a, cfg.permute_cap);
    const int lo = lower_bound(degrees);
    if (cfg.json_out) {
      out["lower_bound"] = lo;
      out["upper_bound"] = up;
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "lower_bound = " << lo << "\n";
      std::cout << "upper_bound = " << up << "\n";
    }
    return 0;
  }

  if (cmd == "solve") {
    if (cfg.target_text.empty()) fail(ErrorKind::invalid_input, "solve needs --target");
    const Poly f = parse_poly(cfg.target_text, field);
    const auto w = solve_for(f, a);
    if (w && cfg.verify) verify_witness(*w, f, a);
    if (cfg.json_out) {
      out["solvable"] = (bool)w;
      if (w) out["witness"] = witness_json(*w);
      if (cfg.verify && w) out["verified"] = true;
      std::cout << out.dump() << "\n";
    } else {
      if (!w) {
        std::cout << "no solution\n";
      } else {
        for (std::size_t i = 0; i < w->x.size(); ++i)
          std::cout << "x" << i + 1 << " = " << format_poly(w->x[i]) << "\n";
        if (cfg.verify) std::cout << "verified = true\n";
      }
    }
    return 0;
  }

  if (cmd == "denumerant") {
    if (cfg.target_text.empty()) fail(ErrorKind::invalid_input, "denumerant needs --target");
    const Poly f = parse_poly(cfg.target_text, field);
    const TypeDenumerant td = type_denumerant(f, a);
    if (cfg.json_out) {
      out["count"] = td.count;
      json types = json::array();
      for (const auto& t : td.types) {
        json tup = json::array();
        for (int e : t.entries) tup.push_back(e == kNegInf ? json(nullptr) : json(e));
        types.push_back(tup);
      }
      out["types"] = types;
      if (td.dim2) {
        out["C"] = td.dim2->c;
        out["chi_ab"] = td.dim2->chi_ab;
        out["chi_ba"] = td.dim2->chi_ba;
      }
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "count = " << td.count << "\n";
      for (const auto& t : td.types) std::cout << "type " << t.str() << "\n";
      if (td.dim2)
        std::cout << "C = " << td.dim2->c << ", chi_AB = " << td.dim2->chi_ab
                  << ", chi_BA = " << td.dim2->chi_ba << "\n";
    }
    return 0;
  }

  if (cmd == "oracle") {
    const int dmax = cfg.dmax ? *cfg.dmax : upper_bound(a, cfg.permute_cap);
    FrobeniusReport r = brute_g(a, dmax, oracle_cfg);
    if (cfg.verify && r.counterexample && !brute_solve(*r.counterexample, a, oracle_cfg)) {
      // fine: unsolvable as reported
    } else if (cfg.verify && r.counterexample) {
      fail(ErrorKind::verification_failed, "oracle counter-example is representable");
    }
    json census = json::array();
    for (int d : r.probed_degrees) {
      const DegreeCensus c = enumerate_reachable(d, a, oracle_cfg);
      census.push_back({{"d", d}, {"reachable", c.reachable_count}, {"total", c.total}});
    }
    if (cfg.json_out) {
      out = report_json(r);
      out["census"] = census;
      if (cfg.verify) out["verified"] = true;
      std::cout << out.dump() << "\n";
    } else {
      print_report(r);
      for (const auto& c : census)
        std::cout << "census d=" << c["d"] << ": " << c["reachable"] << "/" << c["total"]
                  << "\n";
      if (cfg.verify) std::cout << "verified = true\n";
    }
    return 0;
  }

  if (cmd == "charp") {
    const Poly f = cfg.target_text.empty() ? Poly::constant(field, field.one())
                                           : parse_poly(cfg.target_text, field);
    const SolutionWitness w = charp_unbounded(a, f, cfg.min_degree);
    if (cfg.verify) verify_witness(w, f, a);
    if (cfg.json_out) {
      out["witness"] = witness_json(w);
      if (cfg.verify) out["verified"] = true;
      std::cout << out.dump() << "\n";
    } else {
      for (std::size_t i = 0; i < w.x.size(); ++i)
        std::cout << "x" << i + 1 << " = " << format_poly(w.x[i]) << "\n";
      if (cfg.verify) std::cout << "verified = true\n";
    }
    return 0;
  }

  fail(ErrorKind::invalid_input, "unknown subcommand " + cmd);
}

int exit_code_for(const FrobError& e) {
  switch (e.kind()) {
    case ErrorKind::capacity_exceeded:
      return 3;
    case ErrorKind::verification_failed:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius problem for polynomials over a field"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string cmd;
  for (const char* name :
       {"degree", "bounds", "solve", "counterexample", "denumerant", "oracle", "charp"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--field", cfg.field_spec, "Q, F<p> or F<p>^<k>");
    sub->add_option("--modulus", cfg.modulus_text, "extension modulus, polynomial in u");
    sub->add_option("polys", cfg.polys_text, "comma-separated monic polynomials in t")
        ->required();
    sub->add_option("--seed", cfg.seed, "RNG seed (FROBDEG_SEED as fallback)")
        ->each([&cfg](const std::string&) { cfg.seed_set = true; });
    sub->add_option("--permute-cap", cfg.permute_cap, "ordering budget for the upper bound");
    sub->add_option("--cap", cfg.capacity_cap, "brute-force enumeration budget");
    sub->add_flag("--json", cfg.json_out, "emit a JSON object");
    sub->add_flag("--verify", cfg.verify, "re-check certificates and witnesses");
    sub->add_flag("--strict", cfg.strict, "treat degenerate inputs as errors");
    if (std::string(name) == "degree")
      sub->add_flag("--certify", cfg.certify, "append a certified counter-example");
    if (std::string(name) == "solve" || std::string(name) == "denumerant" ||
        std::string(name) == "charp")
      sub->add_option("--target", cfg.target_text, "monic target polynomial");
    if (std::string(name) == "oracle") {
      sub->add_option("--dmax", [&cfg](const CLI::results_t& res) {
        cfg.dmax = std::stoi(res[0]);
        return true;
      }, "largest degree to probe");
    }
    if (std::string(name) == "charp")
      sub->add_option("-m,--min-degree", cfg.min_degree, "minimum witness degree");
    sub->callback([&cmd, name]() { cmd = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    return run(cmd, cfg);
  } catch (const FrobError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
