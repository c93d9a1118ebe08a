// Exhaustive verification of the structural theorems about skew lattices and
// the solutions they induce, over every skew lattice up to a given order.

#ifndef SKEWLAT_THEOREMS_HPP_
#define SKEWLAT_THEOREMS_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <string>   // for string
#include <vector>   // for vector

namespace skewlat {

  struct TheoremRow {
    std::string   name;
    std::string   statement;
    std::uint64_t checked  = 0;  // algebras (or objects) examined
    std::uint64_t failures = 0;
    std::string   first_failure;

    bool pass() const noexcept {
      return failures == 0;
    }
  };

  //! Runs every row over all skew lattices of order 1..max_n. Rows about
  //! constructions use generated algebras of comparable size; the formula
  //! round trip uses the bundled library.
  std::vector<TheoremRow> run_theorems(std::size_t max_n, unsigned jobs = 1);

  //! "name  checked  failures  PASS|FAIL" table, or TSV with a header.
  std::string format_theorem_table(std::vector<TheoremRow> const& rows,
                                   bool                           tsv);

}  // namespace skewlat

#endif  // SKEWLAT_THEOREMS_HPP_
