// Brute-force reference implementations used to cross-check the library.
// Everything here works straight from the definitions with plain loops and
// shares no code with skewlat beyond the table type.

#ifndef SKEWLAT_TESTS_ORACLE_HPP_
#define SKEWLAT_TESTS_ORACLE_HPP_

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "skewlat/cayley.hpp"

namespace oracle {

  using skewlat::CayleyPair;
  using skewlat::element_type;

  //! Idempotency, associativity and the four absorption laws.
  bool is_skew_lattice(CayleyPair const& t);

  //! Lex-least (meet, join) tables over all relabelings.
  std::pair<std::vector<element_type>, std::vector<element_type>>
  canonical(CayleyPair const& t);

  //! Every skew lattice of order n (n <= 3) up to isomorphism, by trying all
  //! table pairs with idempotent diagonals.
  std::vector<CayleyPair> census(std::size_t n);

  using Map = std::function<std::pair<element_type, element_type>(element_type,
                                                                   element_type)>;

  //! First (x, y, z) in lex order where the braid relation fails.
  std::optional<std::array<element_type, 3>> braid_failure(std::size_t n,
                                                           Map const&  r);

  //! Whether an identity in x, y, z holds on every assignment.
  bool holds3(CayleyPair const& t,
              std::function<bool(CayleyPair const&, element_type, element_type,
                                 element_type)> const& law);

  //! Textbook flags written directly as loops.
  bool distributive(CayleyPair const& t);
  bool left_cancellative(CayleyPair const& t);
  bool right_cancellative(CayleyPair const& t);
  bool simply_cancellative(CayleyPair const& t);
  bool lower_symmetric(CayleyPair const& t);
  bool upper_symmetric(CayleyPair const& t);
  bool strongly_distributive(CayleyPair const& t);
  bool co_strongly_distributive(CayleyPair const& t);

}  // namespace oracle

#endif  // SKEWLAT_TESTS_ORACLE_HPP_
