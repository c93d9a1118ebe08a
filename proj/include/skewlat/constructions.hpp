// Generators of skew lattices: skew chains, rectangular algebras, a few
// named small examples, direct products, subalgebras and bands of
// idempotents in matrix rings over Z_p.

#ifndef SKEWLAT_CONSTRUCTIONS_HPP_
#define SKEWLAT_CONSTRUCTIONS_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint32_t, uint64_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "cayley.hpp"

namespace skewlat {

  //! sizes[i] is the size of the i-th D-class; the index order is the total
  //! order of the classes.
  struct ChainSpec {
    std::vector<std::size_t> sizes;
  };

  //! For x in A_i and y in A_j: x ^ y = x and x v y = y when i < j, and
  //! x ^ y = y and x v y = x when j <= i. Elements are numbered by
  //! concatenating A_0, A_1, ... Throws InvalidArgument for an empty spec or
  //! an empty class. The result is asserted to be distributive and
  //! cancellative with D-classes exactly the A_i.
  SkewLattice chain(ChainSpec const& spec);

  //! Pairs (a, b) numbered a * right + b with (a,b) ^ (c,d) = (a,d) and
  //! (a,b) v (c,d) = (c,b).
  SkewLattice rectangular(std::size_t left, std::size_t right);

  //! "3R0", "3R1", "NC5R" or "NC5L"; InvalidArgument otherwise.
  SkewLattice fixed(std::string_view name);
  std::vector<std::string_view> const& fixed_names();

  //! Componentwise operations on pairs numbered x * |T| + y.
  SkewLattice direct_product(SkewLattice const& S, SkewLattice const& T);

  struct Subalgebra {
    std::vector<element_type> elements;  // sorted; element i of algebra
    SkewLattice               algebra;
  };

  //! All non-empty subsets of at most max_size elements closed under both
  //! operations, ordered by size and then lexicographically. Throws
  //! LimitExceeded for more than 24 elements.
  std::vector<Subalgebra> subalgebras(SkewLattice const& S,
                                      std::size_t        max_size);

  enum class RingKind { full, upper_triangular };

  struct RingSpec {
    RingKind      kind    = RingKind::upper_triangular;
    std::size_t   dim     = 2;
    std::uint32_t modulus = 2;  // must be prime
    //! Largest number of ring elements that may be enumerated.
    std::uint64_t max_elements = std::uint64_t(1) << 20;
  };

  enum class JoinKind { quadratic, cubic };
  std::string_view to_string(JoinKind k);

  //! Row-major d x d matrix over Z_p.
  using Matrix = std::vector<std::uint32_t>;

  struct RingBand {
    JoinKind            join;
    std::vector<Matrix> elements;  // element i of algebra
    SkewLattice         algebra;
  };

  struct RingBandResult {
    std::vector<Matrix> idempotents;
    //! Multiplicative bands (as sorted indices into idempotents) that were
    //! considered: every band generated by at most two idempotents and every
    //! band obtained from one of those by greedy extension to a band that no
    //! further idempotent can be added to.
    std::vector<std::vector<std::size_t>> bands;
    std::vector<RingBand>                 algebras;
    //! Bands closed under the cubic join on which it is not associative.
    std::vector<std::vector<std::size_t>> non_associative_cubic;
  };

  //! x ^ y = xy, with the quadratic join x + y - xy or the cubic join
  //! x + y + yx - xyx - yxy. Every emitted algebra is validated and asserted
  //! distributive and cancellative. Throws InvalidArgument for a non-prime
  //! modulus or zero dimension and LimitExceeded when the ring is larger
  //! than spec.max_elements.
  RingBandResult ring_band(RingSpec const& spec);

  std::string format_matrix(Matrix const& m, std::size_t dim);

}  // namespace skewlat

#endif  // SKEWLAT_CONSTRUCTIONS_HPP_
