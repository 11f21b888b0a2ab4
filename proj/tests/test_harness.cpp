#include <doctest.h>

#include "ginshift/errors.hpp"
#include "ginshift/io.hpp"
#include "ginshift/sampling.hpp"
#include "ginshift/verify.hpp"
#include "support.hpp"

using namespace ginshift;
using test::monomials;

TEST_CASE("ideal files") {
  const IdealFile f = parse_ideal("ring 2\nx1^2\nx1*x2\n");
  CHECK(f.ideal.nvars() == 2);
  CHECK(initial_ideal(f.ideal, TermOrder::RevLex) == monomials(2, {"x1^2", "x1*x2"}));
  CHECK(!f.split);

  const IdealFile g = parse_ideal("# comment\n\nring 2+3\nx1^2\n  x3*x4 - x5^2\n");
  REQUIRE(g.split);
  CHECK(g.split->n() == 2);
  CHECK(g.first->generators().size() == 1);
  CHECK(g.second->generators().size() == 1);
  CHECK(parse_ideal("ring 3\n").ideal.is_zero());

  CHECK_THROWS_AS(parse_ideal("ring 2\nx1 + x2^2\n"), InhomogeneousError);
  CHECK_THROWS_AS(parse_ideal("ring 1+1\nx1*x2\n"), BlockViolation);
  CHECK_THROWS_AS(parse_ideal("ring 2\n0\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal("x1^2\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal(""), ParseError);
  try {
    (void)parse_ideal("ring 2\nx1^2\nx1 * x3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 6);
  }
  try {
    (void)parse_ideal("ring 2 3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 8);
  }
  try {
    (void)parse_ideal("ring 2\nx1\nx1 + x2^2\n");
    FAIL("expected an inhomogeneity error");
  } catch (const InhomogeneousError& e) {
    CHECK(std::string(e.what()).starts_with("line 3:"));
  }
}

TEST_CASE("complex files") {
  const SimplicialComplex c = parse_complex("vertices 3\n1,2\n1,3\n2,3\n");
  CHECK(c == SimplicialComplex(3, {0b011, 0b101, 0b110}));
  CHECK(parse_complex("vertices 2\n").is_void());
  CHECK(parse_complex("vertices 2\n-\n") == SimplicialComplex(2, {0}));
  CHECK(parse_complex("vertices 4\n 1 , 4\n") == SimplicialComplex(4, {0b1001}));
  try {
    (void)parse_complex("vertices 3\n1,4\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_complex("vertices 3\n1;2\n"), ParseError);
  CHECK_THROWS_AS(parse_complex("vertices 0\n"), ParseError);
}

TEST_CASE("samplers are deterministic and respect their bounds") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const IdealPresentation a = random_ideal(3, 3, s), b = random_ideal(3, 3, s);
    CHECK(a.generators() == b.generators());
    CHECK(!a.is_zero());
    CHECK(a.generators().size() <= 3);
    CHECK(a.min_degree() >= 2);
    CHECK(a.max_degree() <= 3);
    for (const Polynomial& g : a.generators()) {
      CHECK(g.size() <= 3);
      for (const Term& t : g.terms()) CHECK(abs(t.coefficient) <= 18);
    }
    const SimplicialComplex c = random_complex(5, s);
    CHECK(c == random_complex(5, s));
    CHECK(!c.is_void());
    CHECK(c.facets().size() <= 6);
    const SimplicialComplex sub = random_subcomplex(c, s);
    CHECK(is_subcomplex(sub, c));
    CHECK(sub == random_subcomplex(c, s));
  }
}

TEST_CASE("report JSON") {
  Report r;
  r.claim_id = "thm-1.3";
  r.params["n"] = 2;
  r.pass = false;
  r.witness = {{"seed", 5}};
  const auto j = to_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"schema", "claim_id", "params", "verdict", "witness"});
  CHECK(j["schema"] == 1);
  CHECK(j["verdict"] == "fail");
}

TEST_CASE("claim registry") {
  std::vector<std::string> ids;
  for (const Claim& c : claims()) ids.push_back(c.id);
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  for (const char* id : {"thm-1.3", "example-1.2", "prop-computegin2-i", "remark-lex", "thm-4.2", "thm-5", "prop-kern1",
                         "prop-ker2", "lemma-helperker", "lemma-helper1", "lemma-easyhelper", "prop-mainprop",
                         "prop-mainhelper", "W-identity"})
    CHECK(find_claim(id) != nullptr);
  CHECK(find_claim("nope") == nullptr);
}

TEST_CASE("small suites pass and replay identically") {
  SuiteOptions o;
  o.seed = 9;
  o.samples = 3;
  o.max_n = 2;
  o.max_m = 2;
  o.max_deg = 2;
  for (const Claim& c : claims()) {
    INFO(c.id);
    const Report a = run_claim(c, o), b = run_claim(c, o);
    CHECK(a.pass);
    CHECK(to_json(a) == to_json(b));
    CHECK(a.notes == b.notes);
    CHECK(a.params["seed"] == 9);
  }
}

TEST_CASE("verify_all is independent of the thread count") {
  SuiteOptions o;
  o.seed = 4;
  o.samples = 2;
  o.max_n = 2;
  o.max_m = 2;
  o.max_deg = 2;
  o.jobs = 1;
  const auto serial = verify_all(o);
  o.jobs = 4;
  const auto parallel = verify_all(o);
  REQUIRE(serial.size() == claims().size() + 1);
  REQUIRE(parallel.size() == serial.size());
  for (std::size_t k = 0; k < serial.size(); ++k) {
    CHECK(to_json(serial[k]) == to_json(parallel[k]));
    CHECK(serial[k].pass);
  }
  CHECK(serial.back().claim_id == "thm-5");
  CHECK(std::is_sorted(serial.begin(), serial.end(),
                       [](const Report& a, const Report& b) { return a.claim_id < b.claim_id; }));
}

TEST_CASE("counterexample claims carry their evidence") {
  SuiteOptions o;
  o.seed = 2;
  const Report r = run_claim(*find_claim("remark-lex"), o);
  REQUIRE(r.pass);
  CHECK(r.witness.contains("monomial"));
  CHECK(r.witness == run_claim(*find_claim("remark-lex"), o).witness);
  CHECK(r.witness["in_gin_F(I,J)"] != r.witness["in_gin_F(gin I,gin J)"]);
  const Report e = run_claim(*find_claim("example-1.2"), o);
  REQUIRE(e.pass);
  CHECK(e.witness["in_gin(gin I + gin J)"] == true);
  CHECK(e.witness["in_gin(I + J)"] == false);
}

TEST_CASE("uncertain gins turn into failing reports with a seed") {
  SuiteOptions o;
  o.seed = 3;
  o.gin.bound = 1;
  o.gin.trials = 40;
  o.gin.max_retries = 0;
  const Report a = run_claim(*find_claim("example-1.2"), o);
  CHECK(!a.pass);
  REQUIRE(a.witness.contains("seed"));
  CHECK(a.witness.contains("error"));
  CHECK(to_json(a) == to_json(run_claim(*find_claim("example-1.2"), o)));
}
