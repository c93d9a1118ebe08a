// Green's relations of the two bands of a skew lattice, quotients by
// congruences, the left/right factor decomposition, cosets between comparable
// D-classes and skew diamonds.

#ifndef SKEWLAT_GREEN_HPP_
#define SKEWLAT_GREEN_HPP_

#include <cstddef>     // for size_t
#include <functional>  // for function
#include <string>      // for string
#include <utility>     // for pair
#include <vector>      // for vector

#include "cayley.hpp"

namespace skewlat {

  //! An equivalence relation on 0..n-1. Class ids are assigned in order of
  //! the smallest element of each class, so class 0 always contains 0.
  class Partition {
   public:
    //! label[x] is an arbitrary class label; it is renumbered canonically.
    explicit Partition(std::vector<std::size_t> const& label);

    static Partition identity(std::size_t n);
    static Partition
    from_relation(std::size_t                                          n,
                  std::function<bool(element_type, element_type)> const& rel);

    std::size_t size() const noexcept {
      return _class_of.size();
    }
    std::size_t number_of_classes() const noexcept {
      return _classes.size();
    }
    std::size_t class_of(element_type x) const {
      return _class_of[x];
    }
    std::vector<element_type> const& elements(std::size_t c) const {
      return _classes[c];
    }
    std::vector<std::vector<element_type>> const& classes() const noexcept {
      return _classes;
    }
    bool related(element_type x, element_type y) const {
      return _class_of[x] == _class_of[y];
    }

    //! Every class of *this is contained in a class of that.
    bool refines(Partition const& that) const;

    bool operator==(Partition const&) const = default;

   private:
    std::vector<std::size_t>               _class_of;
    std::vector<std::vector<element_type>> _classes;
  };

  struct GreenRelations {
    Partition L;
    Partition R;
    Partition D;
  };

  //! L, R from the meet band, D from x^y^x = x and y^x^y = y. Asserts that
  //! D of the join band equals D of the meet band, R_meet = L_join and
  //! R_join = L_meet (throws InternalInconsistency otherwise).
  GreenRelations green_relations(SkewLattice const& S);

  Partition d_relation(SkewLattice const& S);

  //! x ^ y ^ x = x ^ y for all x, y; cross-checked against L = D.
  bool is_left_handed(SkewLattice const& S);
  //! x ^ y ^ x = y ^ x for all x, y; cross-checked against R = D.
  bool is_right_handed(SkewLattice const& S);

  //! Quotient of a skew lattice by a congruence.
  struct QuotientAlgebra {
    SkewLattice base;
    Partition   partition;
    SkewLattice tables;  // on class ids 0..k-1

    element_type project(element_type x) const {
      return static_cast<element_type>(partition.class_of(x));
    }
  };

  //! Throws NotACongruence (with a related pair whose images are unrelated)
  //! if P is not compatible with both operations. For P = D the quotient is
  //! additionally checked to be a lattice.
  QuotientAlgebra quotient(SkewLattice const& S, Partition const& P);

  //! S/D, the maximal lattice image.
  QuotientAlgebra lattice_image(SkewLattice const& S);

  struct Factors {
    QuotientAlgebra left;   // S/R, left handed
    QuotientAlgebra right;  // S/L, right handed
  };

  //! Computes both factors and verifies that x -> ([x]_R, [x]_L) is a
  //! bijection onto the fibre product over S/D.
  Factors factors(SkewLattice const& S);

  // Class-level order in S/D: A >= B iff b =< a for some (any) a in A, b in B.
  bool class_geq(SkewLattice const& S,
                 Partition const&   D,
                 std::size_t        upper,
                 std::size_t        lower);

  enum class CosetDirection {
    upper_in_lower,  // coset of A in B:  A ^ b ^ A, a subset of B
    lower_in_upper   // coset of B in A:  B v a v B, a subset of A
  };

  struct Coset {
    std::size_t               upper_class;  // A
    std::size_t               lower_class;  // B
    CosetDirection            direction;
    std::vector<element_type> elements;  // sorted

    bool operator==(Coset const&) const = default;
  };

  //! All cosets in the given direction between D-classes A > B (class ids of
  //! d_relation(S)). Throws InvalidArgument unless A > B strictly. Cosets are
  //! sorted by smallest element and asserted to partition the target class.
  std::vector<Coset> cosets(SkewLattice const& S,
                            std::size_t        upper_class,
                            std::size_t        lower_class,
                            CosetDirection     direction);

  //! Maps each x in a coset of B in A to the unique y in a coset of A in B
  //! with y <= x. Bijectivity is asserted.
  std::vector<std::pair<element_type, element_type>>
  coset_bijection(SkewLattice const& S,
                  Coset const&       coset_in_upper,
                  Coset const&       coset_in_lower);

  //! Class ids of a skew diamond {J > A, B > M}, with A < B as ids.
  struct SkewDiamond {
    std::size_t top;     // J
    std::size_t left;    // A
    std::size_t right;   // B
    std::size_t bottom;  // M

    bool operator==(SkewDiamond const&) const = default;
  };

  //! Every pair of incomparable D-classes together with their meet and join
  //! classes.
  std::vector<SkewDiamond> skew_diamonds(SkewLattice const& S);

  //! Covering pairs (upper, lower) of S/D, sorted.
  std::vector<std::pair<std::size_t, std::size_t>>
  hasse_edges(SkewLattice const& S);

  //! Plain text (or TSV when tsv is true) structure report: D-classes with
  //! their eggbox dimensions, handedness, S/D Hasse edges and skew diamonds.
  std::string structure_report(SkewLattice const& S, bool tsv = false);

}  // namespace skewlat

#endif  // SKEWLAT_GREEN_HPP_
