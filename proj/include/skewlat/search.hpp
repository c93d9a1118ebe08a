// Enumeration of skew lattices of a given order up to isomorphism, with
// identity and variety filters, node/time budgets and resumable
// checkpoints.

#ifndef SKEWLAT_SEARCH_HPP_
#define SKEWLAT_SEARCH_HPP_

#include <chrono>       // for duration
#include <cstddef>      // for size_t
#include <cstdint>      // for uint64_t
#include <filesystem>   // for path
#include <iosfwd>       // for istream, ostream
#include <limits>       // for numeric_limits
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "cayley.hpp"

namespace skewlat {

  //! Largest order the search accepts.
  constexpr std::size_t max_search_size = 8;

  //! Filters name formulas of the bundled library ("D1"), variety flags
  //! ("distributive"), solution properties ("strong_solution",
  //! "update_solution", ... one per map kind) or are formulas in the term
  //! syntax ("x ^ y = y ^ x").
  struct SearchSpec {
    std::size_t              n = 1;
    std::vector<std::string> satisfy;
    //! When non-empty, at least one of these must fail.
    std::vector<std::string> falsify;
    //! Stop after this many witnesses.
    std::size_t limit = std::numeric_limits<std::size_t>::max();
  };

  struct Budget {
    std::uint64_t             max_nodes   = 0;  // 0 means unlimited
    std::chrono::milliseconds max_time{0};      // 0 means unlimited
    unsigned                  jobs = 1;
  };

  //! Throws InvalidArgument if a name can be neither resolved nor parsed.
  void check_predicates(SearchSpec const& spec);

  //! Whether S meets the filters of spec (spec.n is ignored).
  bool passes_filters(SkewLattice const& S, SearchSpec const& spec);

  //! A branch of the search tree that has not been explored: the values of
  //! the first prefix.size() decision cells.
  using Prefix = std::vector<std::uint8_t>;

  struct EnumerationResult {
    //! Algebras passing the filters, up to isomorphism.
    std::uint64_t count = 0;
    //! Skew lattices of order n up to isomorphism, before filtering.
    std::uint64_t census = 0;
    //! Lex-least representatives in increasing order, at most spec.limit.
    std::vector<SkewLattice> witnesses;
    //! True when the whole tree was searched; counts are then exact.
    bool          exhausted = false;
    std::uint64_t nodes     = 0;
    //! Unexplored branches in search order, when not exhausted.
    std::vector<Prefix> frontier;
  };

  struct Checkpoint {
    std::uint64_t            spec_hash = 0;
    std::size_t              n         = 0;
    std::uint64_t            nodes     = 0;
    std::uint64_t            count     = 0;
    std::uint64_t            census    = 0;
    std::vector<CayleyPair>  witnesses;
    std::vector<Prefix>      frontier;
  };

  //! FNV-1a over a canonical text form of the search parameters.
  std::uint64_t spec_hash(SearchSpec const& spec);

  Checkpoint make_checkpoint(SearchSpec const&        spec,
                             EnumerationResult const& result);
  void       write_checkpoint(std::ostream& out, Checkpoint const& c);
  void       write_checkpoint(std::filesystem::path const& path,
                              Checkpoint const&            c);
  //! Throws MalformedInput.
  Checkpoint read_checkpoint(std::istream& in);
  Checkpoint read_checkpoint(std::filesystem::path const& path);

  //! Depth first search over the meet table and then the join table, cell
  //! by cell. Every emitted algebra is validated, is the lex-least table
  //! pair (meet then join) over all relabelings and meets the filters.
  //! Throws InvalidArgument for n = 0, n > max_search_size or bad filters.
  EnumerationResult enumerate(SearchSpec const& spec,
                              Budget const&     budget = {});

  //! Continues from a checkpoint written for the same spec (InvalidArgument
  //! otherwise). Counts, nodes and witnesses accumulate.
  EnumerationResult resume(SearchSpec const& spec,
                           Checkpoint const& from,
                           Budget const&     budget = {});

  struct CounterexampleResult {
    std::optional<SkewLattice> witness;
    //! Largest order searched completely without finding a witness.
    std::size_t   searched_up_to = 0;
    bool          exhausted      = false;
    std::uint64_t nodes          = 0;
  };

  //! Searches orders 1, 2, ..., spec.n for the first algebra meeting the
  //! filters. The budget applies to the whole run.
  CounterexampleResult find_counterexample(SearchSpec const& spec,
                                           Budget const&     budget = {});

  //! Lex-least table pair over all relabelings.
  CayleyPair canonical_form(CayleyPair const& T);
  bool       isomorphic(SkewLattice const& S, SkewLattice const& T);

  //! Every skew lattice of order n up to isomorphism.
  std::vector<SkewLattice> all_skew_lattices(std::size_t n, unsigned jobs = 1);

}  // namespace skewlat

#endif  // SKEWLAT_SEARCH_HPP_
