// Membership in the named varieties (and quasi-varieties) of skew lattices.

#ifndef SKEWLAT_VARIETIES_HPP_
#define SKEWLAT_VARIETIES_HPP_

#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "cayley.hpp"

namespace skewlat {

  //! Failing instance of a flag: which library formula failed and where.
  struct Witness {
    std::string                                formula;
    std::vector<std::pair<char, element_type>> assignment;
    //! Set when the assignment refers to another algebra (e.g. "S/D").
    std::string where;
  };

  struct Flag {
    bool                   value = false;
    std::optional<Witness> witness;

    explicit operator bool() const noexcept {
      return value;
    }
  };

  struct VarietyReport {
    Flag distributive;
    Flag quasi_distributive;
    Flag cancellative;
    Flag left_cancellative;
    Flag right_cancellative;
    Flag simply_cancellative;
    Flag symmetric;
    Flag upper_symmetric;
    Flag lower_symmetric;
    Flag normal;
    Flag conormal;
    Flag binormal;
    Flag strongly_distributive;
    Flag co_strongly_distributive;
    Flag left_handed;
    Flag right_handed;
    Flag rectangular;
    Flag lattice;

    //! Field names in the order above.
    static std::vector<std::string_view> const& flag_names();

    //! Throws InvalidArgument for unknown names.
    Flag const& operator[](std::string_view name) const;
  };

  //! Decides every flag exhaustively. The implications between flags that
  //! are theorems (strong distributivity implies distributive, symmetric,
  //! quasi-distributive and normal; cancellative iff simply cancellative and
  //! symmetric; cancellative implies quasi-distributive; binormal iff normal
  //! and conormal) are asserted, throwing InternalInconsistency.
  VarietyReport classify(SkewLattice const& S);

  //! A single flag, without the cross-assertions of classify.
  Flag variety_flag(SkewLattice const& S, std::string_view name);

  bool is_variety_flag(std::string_view name);

  //! Names of the bundled formulas whose conjunction defines the flag; empty
  //! for quasi_distributive, which is decided on S/D.
  std::vector<std::string_view> const& variety_formulas(std::string_view name);

  //! Stable-ordered "key: value" lines (or "key\tvalue" rows with a header
  //! when tsv is set), optionally followed by the witness of each false flag.
  std::string format_variety_report(VarietyReport const& r,
                                    bool                 tsv,
                                    bool                 with_witnesses);

  struct Nc5Result {
    bool                      free = true;
    std::string               which;      // "NC5R" or "NC5L" when embedded
    std::vector<element_type> embedding;  // image of NC5 element i
  };

  //! Looks for a 5-element subalgebra isomorphic to NC5^R or NC5^L. The
  //! answer is checked against the simply_cancellative flag.
  Nc5Result nc5_free(SkewLattice const& S);

}  // namespace skewlat

#endif  // SKEWLAT_VARIETIES_HPP_
