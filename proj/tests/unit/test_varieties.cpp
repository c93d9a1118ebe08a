#include <catch_amalgamated.hpp>

#include "oracle.hpp"
#include "skewlat/constructions.hpp"
#include "skewlat/errors.hpp"
#include "skewlat/green.hpp"
#include "skewlat/search.hpp"
#include "skewlat/varieties.hpp"

using namespace skewlat;

TEST_CASE("3R0 and 3R1 strong distributivity", "[varieties]") {
  auto const a = classify(fixed("3R0"));
  CHECK(a.strongly_distributive.value);
  CHECK_FALSE(a.co_strongly_distributive.value);
  REQUIRE(a.co_strongly_distributive.witness);

  auto const b = classify(fixed("3R1"));
  CHECK(b.co_strongly_distributive.value);
  CHECK_FALSE(b.strongly_distributive.value);
  REQUIRE(b.strongly_distributive.witness);
  CHECK(b.strongly_distributive.witness->formula.rfind("sd", 0) == 0);
}

TEST_CASE("lattices collapse the distributive flags", "[varieties]") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto const& S : all_skew_lattices(n)) {
      if (!is_lattice(S)) {
        continue;
      }
      auto const r = classify(S);
      CHECK(r.lattice.value);
      CHECK(r.symmetric.value);
      CHECK(r.distributive.value == r.strongly_distributive.value);
      CHECK(r.distributive.value == r.co_strongly_distributive.value);
    }
  }
}

TEST_CASE("skew chains are distributive and cancellative", "[varieties]") {
  auto const r = classify(chain(ChainSpec{{2, 2, 1}}));
  CHECK(r.distributive.value);
  CHECK(r.cancellative.value);
}

TEST_CASE("named flags", "[varieties]") {
  auto const S = fixed("3R0");
  CHECK(variety_flag(S, "right_handed").value);
  CHECK(is_variety_flag("binormal"));
  CHECK_FALSE(is_variety_flag("nonsense"));
  CHECK_THROWS_AS(variety_flag(S, "nonsense"), InvalidArgument);
  auto const r = classify(S);
  CHECK_THROWS_AS(r["nonsense"], InvalidArgument);
  CHECK(VarietyReport::flag_names().size() == 18);
}

TEST_CASE("report formats have a stable order", "[varieties]") {
  auto const r   = classify(fixed("3R0"));
  auto const txt = format_variety_report(r, false, false);
  auto const tsv = format_variety_report(r, true, false);
  CHECK(txt.rfind("distributive: true\n", 0) == 0);
  CHECK(tsv.rfind("flag\tvalue\tformula\twitness\n", 0) == 0);
  CHECK(format_variety_report(r, true, false) == tsv);
}

TEST_CASE("NC5 detection", "[varieties]") {
  auto const R = fixed("NC5R");
  auto const r = nc5_free(R);
  CHECK_FALSE(r.free);
  CHECK(r.which == "NC5R");
  CHECK(r.embedding == std::vector<element_type>{0, 1, 2, 3, 4});
  CHECK_FALSE(classify(R).simply_cancellative.value);
  CHECK_FALSE(nc5_free(fixed("NC5L")).free);

  auto const S = fixed("3R0");
  CHECK(nc5_free(S).free);
  CHECK(classify(S).simply_cancellative.value);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& T : all_skew_lattices(n)) {
      CHECK(nc5_free(T).free);
    }
  }
}

TEST_CASE("flags agree with textbook loops", "[varieties][property]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto const& S : all_skew_lattices(n)) {
      auto const& t = S.tables();
      auto const  r = classify(S);
      CHECK(r.distributive.value == oracle::distributive(t));
      CHECK(r.left_cancellative.value == oracle::left_cancellative(t));
      CHECK(r.right_cancellative.value == oracle::right_cancellative(t));
      CHECK(r.simply_cancellative.value == oracle::simply_cancellative(t));
      CHECK(r.lower_symmetric.value == oracle::lower_symmetric(t));
      CHECK(r.upper_symmetric.value == oracle::upper_symmetric(t));
      CHECK(r.strongly_distributive.value == oracle::strongly_distributive(t));
      CHECK(r.co_strongly_distributive.value == oracle::co_strongly_distributive(t));
      CHECK(r.left_handed.value == is_left_handed(S));
      CHECK(r.right_handed.value == is_right_handed(S));
      CHECK(r.lattice.value == is_lattice(S));
      CHECK(r.rectangular.value == (d_relation(S).number_of_classes() == 1));
    }
  }
}

TEST_CASE("flag implications", "[varieties][property]") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto const& S : all_skew_lattices(n)) {
      auto const r = classify(S);
      CHECK(r.cancellative.value
            == (r.simply_cancellative.value && r.symmetric.value));
      if (r.strongly_distributive.value) {
        CHECK(r.distributive.value);
        CHECK(r.symmetric.value);
        CHECK(r.normal.value);
      }
      if (r.distributive.value) {
        CHECK(r.quasi_distributive.value);
      }
      CHECK(r.simply_cancellative.value
            == (r.quasi_distributive.value && nc5_free(S).free));
    }
  }
}

TEST_CASE("failing flags carry witnesses", "[varieties]") {
  auto const r = classify(fixed("NC5R"));
  REQUIRE(r.simply_cancellative.witness);
  CHECK(r.simply_cancellative.witness->formula == "simple-canc");
  CHECK_FALSE(r.simply_cancellative.witness->assignment.empty());
}
