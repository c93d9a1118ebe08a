// Set-theoretic solutions r(x, y) = (lambda_x(y), rho_y(x)) of the
// Yang-Baxter equation built from skew lattice operations: the braid
// relation, powers of r, degeneracy, and the update operations.

#ifndef SKEWLAT_YBE_HPP_
#define SKEWLAT_YBE_HPP_

#include <array>        // for array
#include <cstddef>      // for size_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "cayley.hpp"

namespace skewlat {

  //! A map X x X -> X x X on X = {0, ..., n - 1}, stored as a full table.
  class PairMap {
   public:
    using value_type = std::pair<element_type, element_type>;

    //! Throws InvalidArgument unless table has n * n entries in range.
    PairMap(std::size_t n, std::vector<value_type> table);

    static PairMap identity(std::size_t n);
    static PairMap twist(std::size_t n);

    std::size_t size() const noexcept {
      return _n;
    }
    value_type operator()(element_type x, element_type y) const noexcept {
      return _table[x * _n + y];
    }
    //! lambda_x(y)
    element_type first(element_type x, element_type y) const noexcept {
      return _table[x * _n + y].first;
    }
    //! rho_y(x)
    element_type second(element_type x, element_type y) const noexcept {
      return _table[x * _n + y].second;
    }

    //! (*this) after that, i.e. (x, y) -> (*this)(that(x, y)).
    PairMap after(PairMap const& that) const;

    std::vector<value_type> const& table() const noexcept {
      return _table;
    }

    bool operator==(PairMap const&) const = default;

   private:
    std::size_t             _n;
    std::vector<value_type> _table;
  };

  enum class MapKind {
    update,        // ((x ^ y) v x, y)
    lower_update,  // (x|_y_|, y)
    upper_update,  // (x, y|^x^|)
    co_update,     // (x, (y v x) ^ y)
    strong,        // (x ^ y, x v y)
    left,          // (x ^ y, y v x)
    right,         // (y ^ x, x v y)
    weak           // (x ^ y ^ x, x v y v x)
  };

  std::string_view to_string(MapKind k);
  //! Accepts the names printed by to_string, with '-' or '_'; throws
  //! InvalidArgument otherwise.
  MapKind map_kind_from_string(std::string_view name);
  std::vector<MapKind> const& all_map_kinds();

  PairMap build_map(SkewLattice const& S, MapKind kind);

  //! x|_y_| = (y ^ x ^ y) v x v (y ^ x ^ y)
  inline element_type lower_update(SkewLattice const& S,
                                   element_type       x,
                                   element_type       y) {
    element_type m = S.meet(S.meet(y, x), y);
    return S.join(S.join(m, x), m);
  }

  //! x|^y^| = (y v x v y) ^ x ^ (y v x v y)
  inline element_type upper_update(SkewLattice const& S,
                                   element_type       x,
                                   element_type       y) {
    element_type j = S.join(S.join(y, x), y);
    return S.meet(S.meet(j, x), j);
  }

  //! Checks for all x, y that x|_y_| lies in the D-class of x, that it is
  //! the only element of the coset M v x v M (M the class of x ^ y) lying
  //! above y ^ x ^ y, that x|_y_| ^ y = y ^ x ^ y = y ^ x|_y_|, and the
  //! handed shortcuts x v (y ^ x) (left handed) and (x ^ y) v x (right
  //! handed). The dual statements are checked for x|^y^|. Throws
  //! InternalInconsistency on failure.
  void check_update_operations(SkewLattice const& S);

  struct BraidWitness {
    std::array<element_type, 3> triple;
    std::array<element_type, 3> lhs;  // (r x id)(id x r)(r x id)
    std::array<element_type, 3> rhs;  // (id x r)(r x id)(id x r)
  };

  struct BraidResult {
    std::optional<BraidWitness> witness;  // first failing triple

    bool pass() const noexcept {
      return !witness.has_value();
    }
    explicit operator bool() const noexcept {
      return pass();
    }
  };

  //! Exhaustive over all n^3 triples in lexicographic order.
  BraidResult braid_check(PairMap const& r);

  struct PowerClass {
    bool involutive = false;  // r^2 = id
    bool idempotent = false;  // r^2 = r
    bool cubic      = false;  // r^3 = r

    //! First of involutive, idempotent, cubic that holds, else "none".
    std::string_view name() const noexcept;
  };

  PowerClass power_class(PairMap const& r);

  struct Degeneracy {
    bool left  = false;  // every lambda_x is a bijection
    bool right = false;  // every rho_y is a bijection
  };

  Degeneracy degeneracy(PairMap const& r);

  enum class SolutionFamily { strong, left, right, weak };

  std::string_view to_string(SolutionFamily f);
  SolutionFamily   solution_family_from_string(std::string_view name);
  MapKind          map_kind(SolutionFamily f);
  //! Names of the bundled identities characterising the family.
  std::vector<std::string_view> const& family_identities(SolutionFamily f);

  struct IdentityCheck {
    //! Empty when every identity holds.
    std::string                                formula;
    std::vector<std::pair<char, element_type>> assignment;
    element_type                               lhs = 0;
    element_type                               rhs = 0;

    bool pass() const noexcept {
      return formula.empty();
    }
    explicit operator bool() const noexcept {
      return pass();
    }
  };

  //! Evaluates the characterising identities in order and reports the first
  //! failure. The verdict is compared with the braid check of the family's
  //! map; a disagreement throws InternalInconsistency.
  IdentityCheck solution_identity_check(SkewLattice const& S,
                                        SolutionFamily     family);

  struct SolutionReport {
    MapKind     kind;
    BraidResult braid;
    PowerClass  power;
    Degeneracy  degeneracy;
  };

  SolutionReport solution_report(SkewLattice const& S, MapKind kind);

  //! One block (or one TSV row) per report, in the given order.
  std::string format_solution_reports(std::vector<SolutionReport> const& rs,
                                      bool                               tsv);

}  // namespace skewlat

#endif  // SKEWLAT_YBE_HPP_
