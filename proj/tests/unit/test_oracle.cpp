// Sanity checks of the brute-force reference itself, so that agreement with
// it means something.

#include <catch_amalgamated.hpp>

#include "oracle.hpp"

using skewlat::CayleyPair;
using skewlat::element_type;

TEST_CASE("oracle recognises basic algebras", "[oracle]") {
  CHECK(oracle::is_skew_lattice(CayleyPair(1, {0}, {0})));
  // 2-chain
  CHECK(oracle::is_skew_lattice(CayleyPair::from_rows({{0, 0}, {0, 1}}, {{0, 1}, {1, 1}})));
  // right zero meet with left zero join
  CHECK(oracle::is_skew_lattice(CayleyPair::from_rows({{0, 1}, {0, 1}}, {{0, 0}, {1, 1}})));
  // both operations right zero: absorption fails
  CHECK_FALSE(
      oracle::is_skew_lattice(CayleyPair::from_rows({{0, 1}, {0, 1}}, {{0, 1}, {0, 1}})));
}

TEST_CASE("oracle census of order 2", "[oracle]") {
  auto const c = oracle::census(2);
  CHECK(c.size() == 3);
}

TEST_CASE("oracle braid check on classic maps", "[oracle]") {
  auto twist = [](element_type x, element_type y) { return std::make_pair(y, x); };
  CHECK_FALSE(oracle::braid_failure(3, twist));
  // (x, y) -> (x + 1, y) mod 3 is not a solution
  auto shift = [](element_type x, element_type y) {
    return std::make_pair((x + 1) % 3, y);
  };
  CHECK(oracle::braid_failure(3, shift));
}
