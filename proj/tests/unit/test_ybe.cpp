#include <catch_amalgamated.hpp>

#include "oracle.hpp"
#include "skewlat/constructions.hpp"
#include "skewlat/errors.hpp"
#include "skewlat/search.hpp"
#include "skewlat/varieties.hpp"
#include "skewlat/ybe.hpp"

using namespace skewlat;

namespace {
  // x ^ y = y, x v y = x
  SkewLattice right_zero(std::size_t n) {
    return rectangular(1, n);
  }
}  // namespace

TEST_CASE("maps on the right-zero algebra", "[ybe]") {
  auto const S = right_zero(3);
  CHECK(build_map(S, MapKind::strong) == PairMap::twist(3));
  auto const l = build_map(S, MapKind::left);
  for (element_type x = 0; x < 3; ++x) {
    for (element_type y = 0; y < 3; ++y) {
      CHECK(l(x, y) == PairMap::value_type{y, y});
    }
  }
  auto const rep = solution_report(S, MapKind::strong);
  CHECK(rep.braid.pass());
  CHECK(rep.power.involutive);
  CHECK(rep.power.name() == "involutive");
  CHECK(rep.degeneracy.left);
  CHECK(rep.degeneracy.right);
}

TEST_CASE("maps coincide on lattices", "[ybe]") {
  auto const S = direct_product(chain(ChainSpec{{1, 1}}), chain(ChainSpec{{1, 1, 1}}));
  auto const s = build_map(S, MapKind::strong);
  CHECK(build_map(S, MapKind::left) == s);
  CHECK(build_map(S, MapKind::right) == s);
  CHECK(build_map(S, MapKind::weak) == s);
  for (auto f : {SolutionFamily::strong, SolutionFamily::left, SolutionFamily::right,
                 SolutionFamily::weak}) {
    CHECK(solution_identity_check(S, f).pass());
  }
}

TEST_CASE("strong map on 3R0 fails at (0,1,2)", "[ybe]") {
  auto const S = fixed("3R0");
  auto const b = braid_check(build_map(S, MapKind::strong));
  REQUIRE_FALSE(b.pass());
  CHECK(b.witness->triple == std::array<element_type, 3>{0, 1, 2});
  auto const id = solution_identity_check(S, SolutionFamily::strong);
  CHECK(id.formula == "strong2");
  CHECK(id.lhs == 2);
  CHECK(id.rhs == 1);
}

TEST_CASE("twist and identity maps", "[ybe]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(braid_check(PairMap::twist(n)).pass());
    CHECK(braid_check(PairMap::identity(n)).pass());
    CHECK(power_class(PairMap::twist(n)).involutive);
  }
  CHECK_THROWS_AS(PairMap(2, {{0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(PairMap(1, {{0, 1}}), InvalidArgument);
}

TEST_CASE("map names", "[ybe]") {
  for (auto k : all_map_kinds()) {
    CHECK(map_kind_from_string(to_string(k)) == k);
  }
  CHECK(map_kind_from_string("lower-update") == MapKind::lower_update);
  CHECK_THROWS_AS(map_kind_from_string("sideways"), InvalidArgument);
  CHECK(all_map_kinds().size() == 8);
}

TEST_CASE("update operations on small algebras", "[ybe]") {
  // lattices: x|_y_| = x
  auto const L = chain(ChainSpec{{1, 1, 1}});
  for (element_type x = 0; x < 3; ++x) {
    for (element_type y = 0; y < 3; ++y) {
      CHECK(lower_update(L, x, y) == x);
      CHECK(upper_update(L, x, y) == x);
    }
  }
  // right handed: x|_y_| = (x ^ y) v x
  auto const S = fixed("3R0");
  CHECK(lower_update(S, 1, 0) == 1);
  CHECK(lower_update(S, 1, 0) == S.join(S.meet(1, 0), 1));
}

TEST_CASE("braid check agrees with the direct composition", "[ybe][property]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& S : all_skew_lattices(n)) {
      for (auto k : all_map_kinds()) {
        auto const r = build_map(S, k);
        auto const w = oracle::braid_failure(
            n, [&](element_type x, element_type y) { return r(x, y); });
        auto const b = braid_check(r);
        REQUIRE(b.pass() == !w.has_value());
        if (w) {
          CHECK(b.witness->triple == *w);
        }
      }
    }
  }
}

TEST_CASE("update maps are idempotent solutions", "[ybe][property]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto const& S : all_skew_lattices(n)) {
      for (auto k : {MapKind::update, MapKind::lower_update, MapKind::upper_update,
                     MapKind::co_update}) {
        auto const rep = solution_report(S, k);
        CHECK(rep.braid.pass());
        CHECK(rep.power.idempotent);
        CHECK(rep.power.cubic);
      }
      check_update_operations(S);
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          for (element_type z = 0; z < n; ++z) {
            auto const yz = lower_update(S, y, z);
            CHECK(lower_update(S, lower_update(S, x, y), yz) == lower_update(S, x, yz));
          }
        }
      }
    }
  }
}

TEST_CASE("family identities decide the braid relation", "[ybe][property]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto const& S : all_skew_lattices(n)) {
      for (auto f : {SolutionFamily::strong, SolutionFamily::left,
                     SolutionFamily::right, SolutionFamily::weak}) {
        auto const id = solution_identity_check(S, f);
        CHECK(id.pass() == braid_check(build_map(S, map_kind(f))).pass());
      }
    }
  }
}

TEST_CASE("powers of r", "[ybe][property]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto const& S : all_skew_lattices(n)) {
      for (auto k : all_map_kinds()) {
        auto const r  = build_map(S, k);
        auto const p  = power_class(r);
        auto const r2 = r.after(r);
        CHECK(p.involutive == (r2 == PairMap::identity(n)));
        CHECK(p.idempotent == (r2 == r));
        CHECK(p.cubic == (r.after(r2) == r));
        if (p.involutive || p.idempotent) {
          CHECK(p.cubic);
        }
      }
      auto const r = classify(S);
      if (r.strongly_distributive.value && r.co_strongly_distributive.value) {
        auto const rep = solution_report(S, MapKind::strong);
        CHECK(rep.braid.pass());
        CHECK(rep.power.cubic);
      }
      if (r.distributive.value && r.left_cancellative.value) {
        CHECK(power_class(build_map(S, MapKind::left)).idempotent);
      }
    }
  }
}

TEST_CASE("solution report formats", "[ybe]") {
  auto const S   = fixed("3R0");
  auto const rep = solution_report(S, MapKind::strong);
  auto const txt = format_solution_reports({rep}, false);
  CHECK(txt.find("braid: fail at (x,y,z)=(0,1,2)") != std::string::npos);
  auto const tsv = format_solution_reports({rep}, true);
  CHECK(tsv.rfind("map\tbraid\twitness\tlhs\trhs\tpower_class\tinvolutive\tidempotent\t"
                  "cubic\tleft_nondegenerate\tright_nondegenerate\n",
                  0)
        == 0);
}
