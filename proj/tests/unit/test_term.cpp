#include <catch_amalgamated.hpp>

#include <sstream>

#include "skewlat/constructions.hpp"
#include "skewlat/errors.hpp"
#include "skewlat/library.hpp"
#include "skewlat/term.hpp"

using namespace skewlat;

TEST_CASE("parse identities and quasi-identities", "[term]") {
  auto const a = parse_formula("x ^ (x v y) = x");
  CHECK(a.is_identity());
  CHECK(a.variables() == std::vector<char>{'x', 'y'});

  auto const t = parse_formula("x = x");
  CHECK(t.is_identity());
  CHECK(t.conclusion.lhs == t.conclusion.rhs);

  auto const q = parse_formula("x v y = x v z, x ^ y = x ^ z => y = z");
  CHECK_FALSE(q.is_identity());
  CHECK(q.premises.size() == 2);
  CHECK(q.variables() == std::vector<char>{'x', 'y', 'z'});
}

TEST_CASE("meet binds tighter than join", "[term]") {
  CHECK(parse_term("x v y ^ z") == parse_term("x v (y ^ z)"));
  CHECK(parse_term("x ^ y ^ z") == parse_term("(x ^ y) ^ z"));
  CHECK(to_string(parse_term("(x v y) ^ z")) == "(x v y) ^ z");
  CHECK(to_string(parse_term("x ^ (y ^ z)")) == "x ^ (y ^ z)");
  CHECK(parse_formula("x^y=y^x").meet_only());
  CHECK_FALSE(parse_formula("x ^ y = x v y").meet_only());
}

TEST_CASE("parse errors carry a position", "[term]") {
  CHECK_THROWS_AS(parse_formula("x ^ = y"), ParseError);
  CHECK_THROWS_AS(parse_formula("x ^ y"), ParseError);
  CHECK_THROWS_AS(parse_formula("x = y, y = x"), ParseError);
  CHECK_THROWS_AS(parse_formula("v = v"), ParseError);
  CHECK_THROWS_AS(parse_formula("(x = x"), ParseError);
  try {
    parse_formula("x = y #");
    FAIL("expected ParseError");
  } catch (ParseError const& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("printing round trips", "[term][property]") {
  for (auto const& e : FormulaLibrary::bundled().entries()) {
    CHECK(parse_formula(to_string(e.formula)) == e.formula);
  }
}

TEST_CASE("evaluation on 3R0", "[term]") {
  auto const S  = fixed("3R0");
  auto const r8 = holds(S, parse_formula("(x^y) v ((x v y)^z) = (x v (y^z)) ^ (y v z)"));
  REQUIRE_FALSE(r8.holds);
  CHECK(r8.counterexample
        == std::vector<std::pair<char, element_type>>{{'x', 0}, {'y', 1}, {'z', 2}});
  CHECK(r8.lhs == 2);
  CHECK(r8.rhs == 1);
  CHECK(format_assignment(r8.counterexample) == "x=0, y=1, z=2");
  CHECK(holds(S, parse_formula("x = x")).holds);
}

TEST_CASE("quasi-identities only check the conclusion where premises hold", "[term]") {
  auto const S = fixed("NC5R");
  auto const r = holds(S, parse_formula("x = y => x = y"));
  CHECK(r.holds);
  CHECK(r.conclusion_checks == S.size());
}

TEST_CASE("library covers the named identities", "[term]") {
  auto const& lib = FormulaLibrary::bundled();
  for (auto name : {"D1", "D2", "C1", "C2", "strong1", "strong2", "strong3", "left-sol",
                    "right-sol", "weak-sol", "normal", "conormal"}) {
    CHECK(lib.contains(name));
  }
  CHECK_THROWS_AS(lib.at("no-such-identity"), InvalidArgument);
}

TEST_CASE("formula files", "[term]") {
  std::istringstream in("# comment\n\nabs: x ^ (x v y) = x\nx v x = x\n");
  auto const         fs = read_formula_file(in);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].name == "abs");
  CHECK(fs[1].name.empty());

  std::istringstream dup("a: x = x\na: y = y\n");
  CHECK_THROWS_AS(FormulaLibrary::parse(dup), Error);
  std::istringstream bad("a: x = x\nb: x ^\n");
  try {
    FormulaLibrary::parse(bad);
    FAIL("expected ParseError");
  } catch (ParseError const& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}
