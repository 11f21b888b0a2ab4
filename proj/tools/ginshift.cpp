#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ginshift/constructions.hpp"
#include "ginshift/errors.hpp"
#include "ginshift/io.hpp"
#include "ginshift/poly_io.hpp"
#include "ginshift/simplicial.hpp"
#include "ginshift/verify.hpp"

namespace {

using namespace ginshift;
using json = nlohmann::ordered_json;

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kUncertain = 3 };

struct Globals {
  std::optional<std::uint64_t> seed;
  std::uint64_t bound = 1000;
  unsigned trials = 2;
  std::string order = "rlex";
  bool json = false;
  std::optional<unsigned> max_n, max_m, max_deg, samples;
  std::optional<std::uint64_t> modp;
  unsigned jobs = 0;
};

std::uint64_t resolve_seed(const Globals& g) {
  if (g.seed) return *g.seed;
  if (const char* env = std::getenv("GINSHIFT_SEED")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError("GINSHIFT_SEED", std::string("not an unsigned integer: ") + env);
  }
  return 1;
}

TermOrder term_order(const Globals& g) { return g.order == "lex" ? TermOrder::Lex : TermOrder::RevLex; }

GinConfig gin_config(const Globals& g) {
  GinConfig c;
  c.seed = resolve_seed(g);
  c.bound = g.bound;
  c.trials = g.trials;
  c.modp = g.modp;
  return c;
}

json generator_list(const MonomialIdeal& m) {
  json a = json::array();
  for (const Monomial& x : m.generators()) a.push_back(to_string(x));
  return a;
}

json generator_list(const IdealPresentation& i) {
  json a = json::array();
  for (const Polynomial& p : i.generators()) a.push_back(to_string(p));
  return a;
}

template <class Ideal>
void print_ideal(const Globals& g, const char* command, const Ideal& ideal, json extra = json::object()) {
  if (g.json) {
    json out{{"schema", 1}, {"command", command}, {"nvars", ideal.nvars()}};
    out.update(extra);
    out["generators"] = generator_list(ideal);
    std::cout << out.dump(2) << '\n';
    return;
  }
  for (const auto& s : generator_list(ideal)) std::cout << s.template get<std::string>() << '\n';
}

void print_complex(const Globals& g, const char* command, const SimplicialComplex& c) {
  if (g.json) {
    json facets = json::array();
    for (Face f : c.facets()) {
      json face = json::array();
      for (std::size_t v = 0; v < c.nvertices(); ++v)
        if (f >> v & 1) face.push_back(v + 1);
      facets.push_back(face);
    }
    json out{{"schema", 1}, {"command", command}, {"vertices", c.nvertices()}, {"void", c.is_void()},
             {"facets", facets}};
    std::cout << out.dump(2) << '\n';
    return;
  }
  std::cout << to_string(c) << '\n';
}

int run_verify(const Globals& g, const std::string& target) {
  SuiteOptions o;
  o.seed = resolve_seed(g);
  o.samples = g.samples;
  o.max_n = g.max_n;
  o.max_m = g.max_m;
  o.max_deg = g.max_deg;
  o.gin.bound = g.bound;
  o.gin.trials = g.trials;
  o.gin.modp = g.modp;
  o.jobs = g.jobs;

  std::vector<Report> reports;
  if (target == "all") {
    reports = verify_all(o);
  } else if (target == "gin-idempotence") {
    std::vector<std::pair<MonomialIdeal, TermOrder>> gins;
    for (const Claim& c : claims()) {
      Report r = run_claim(c, o);
      gins.insert(gins.end(), r.gins.begin(), r.gins.end());
    }
    reports.push_back(verify_gin_idempotence(gins, o));
  } else if (const Claim* c = find_claim(target)) {
    reports.push_back(run_claim(*c, o));
  } else {
    std::cerr << "error: unknown claim id '" << target << "'\n";
    return kUsage;
  }

  bool failed = false, uncertain = false;
  json out = json::array();
  for (const Report& r : reports) {
    failed = failed || !r.pass;
    uncertain = uncertain || (!r.pass && r.witness.contains("error"));
    if (g.json) {
      json j = to_json(r);
      if (!r.notes.empty()) j["notes"] = r.notes;
      out.push_back(j);
      continue;
    }
    std::cout << r.claim_id << ": " << (r.pass ? "pass" : "fail") << "  " << r.params.dump() << '\n';
    if (!r.witness.is_null()) std::cout << "  witness: " << r.witness.dump() << '\n';
    if (!r.notes.empty()) std::cout << "  notes: " << r.notes.dump() << '\n';
  }
  if (g.json) std::cout << (out.size() == 1 ? out[0] : out).dump(2) << '\n';
  if (uncertain) return kUncertain;
  return failed ? kFail : kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generic initial ideals, fibre products and symmetric algebraic shifting"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Random seed (default: $GINSHIFT_SEED, else 1)");
  app.add_option("--bound", g.bound, "Entries of random changes are drawn from [-bound, bound]")->check(CLI::PositiveNumber);
  app.add_option("--trials", g.trials, "Independent changes that must agree")->check(CLI::PositiveNumber);
  app.add_option("--order", g.order, "Term order")->check(CLI::IsMember({"rlex", "lex"}));
  app.add_flag("--json", g.json, "Emit JSON");
  app.add_option("--max-n", g.max_n, "Largest first block size in suites")->check(CLI::PositiveNumber);
  app.add_option("--max-m", g.max_m, "Largest second block size in suites")->check(CLI::PositiveNumber);
  app.add_option("--max-deg", g.max_deg, "Largest generator degree in suites")->check(CLI::PositiveNumber);
  app.add_option("--samples", g.samples, "Random samples per suite")->check(CLI::PositiveNumber);
  app.add_option("--modp", g.modp, "Prime for the modular pre-check of later trials");
  app.add_option("--jobs", g.jobs, "Threads for 'verify all' (0: all cores)");
  app.fallthrough();

  std::string path, complex_path, monomial, target;

  auto* gin_cmd = app.add_subcommand("gin", "Certified generic initial ideal");
  gin_cmd->add_option("file", path, "Ideal file")->required();
  auto* ini_cmd = app.add_subcommand("ini", "Initial ideal");
  ini_cmd->add_option("file", path, "Ideal file")->required();
  auto* fibre_cmd = app.add_subcommand("fibre", "Fibre product ideal I + J + Q of a 'ring n+m' file");
  fibre_cmd->add_option("file", path, "Ideal file")->required();
  auto* shift_cmd = app.add_subcommand("shift", "Symmetric algebraic shifting");
  shift_cmd->add_option("file", complex_path, "Complex file")->required();
  auto* sr_cmd = app.add_subcommand("sr", "Stanley-Reisner ideal");
  sr_cmd->add_option("file", complex_path, "Complex file")->required();
  auto* fvector_cmd = app.add_subcommand("fvector", "f-vector");
  fvector_cmd->add_option("file", complex_path, "Complex file")->required();
  auto* dvalue_cmd = app.add_subcommand("dvalue", "d(a) for the gin of an ideal");
  dvalue_cmd->add_option("file", path, "Ideal file")->required();
  dvalue_cmd->add_option("monomial", monomial, "Monomial a, e.g. x1*x2^2")->required();
  auto* verify_cmd = app.add_subcommand("verify", "Run claim suites");
  verify_cmd->add_option("claim", target, "Claim id or 'all'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify_cmd) return run_verify(g, target);
    if (*gin_cmd) {
      const IdealFile f = parse_ideal_file(path);
      const GinResult r = gin(f.ideal, term_order(g), gin_config(g));
      print_ideal(g, "gin", r.gin, {{"order", to_string(term_order(g))}, {"seed", gin_config(g).seed}});
    } else if (*ini_cmd) {
      const IdealFile f = parse_ideal_file(path);
      print_ideal(g, "ini", initial_ideal(f.ideal, term_order(g)), {{"order", to_string(term_order(g))}});
    } else if (*fibre_cmd) {
      const IdealFile f = parse_ideal_file(path);
      if (!f.split) {
        std::cerr << "error: fibre needs a 'ring n+m' header\n";
        return kUsage;
      }
      print_ideal(g, "fibre", fibre_product_ideal(*f.first, *f.second, *f.split),
                  {{"n", f.split->n()}, {"m", f.split->m()}});
    } else if (*shift_cmd) {
      print_complex(g, "shift", delta_s(parse_complex_file(complex_path), gin_config(g)));
    } else if (*sr_cmd) {
      print_ideal(g, "sr", stanley_reisner(parse_complex_file(complex_path)));
    } else if (*fvector_cmd) {
      const FVector fv = f_vector(parse_complex_file(complex_path));
      if (g.json)
        std::cout << json{{"schema", 1}, {"command", "fvector"}, {"f", fv.entries}}.dump(2) << '\n';
      else
        std::cout << to_string(fv) << '\n';
    } else if (*dvalue_cmd) {
      const IdealFile f = parse_ideal_file(path);
      const Monomial a = parse_monomial(monomial, f.ideal.nvars());
      const std::size_t d = d_of(f.ideal, a, gin_config(g));
      if (g.json)
        std::cout << json{{"schema", 1}, {"command", "dvalue"}, {"a", to_string(a)}, {"d", d}}.dump(2) << '\n';
      else
        std::cout << d << '\n';
    }
    return kPass;
  } catch (const GinUncertain& e) {
    std::cerr << "error: " << e.what() << " (seed " << e.seed() << ")\n";
    return kUncertain;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InhomogeneousError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BlockViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
