// Named formula collections and formula files.

#ifndef SKEWLAT_LIBRARY_HPP_
#define SKEWLAT_LIBRARY_HPP_

#include <filesystem>   // for path
#include <iosfwd>       // for istream
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "term.hpp"

namespace skewlat {

  //! One line of a formula file: an optional "name:" prefix and a formula.
  struct NamedFormula {
    std::string name;  // empty when the line carried no name
    std::string text;
    Formula     formula;
  };

  //! Reads one formula per line, skipping blank lines and '#' comments.
  //! ParseError positions are reported relative to the line, and the message
  //! names the line number.
  std::vector<NamedFormula> read_formula_file(std::istream& in);
  std::vector<NamedFormula>
  read_formula_file(std::filesystem::path const& path);

  class FormulaLibrary {
   public:
    //! Every line must be named; names must be unique.
    static FormulaLibrary parse(std::istream& in);
    static FormulaLibrary load(std::filesystem::path const& path);

    //! The identities shipped with skewlat (data/identities.txt, compiled in).
    static FormulaLibrary const& bundled();

    bool                contains(std::string_view name) const;
    NamedFormula const& at(std::string_view name) const;  // InvalidArgument
    Formula const&      formula(std::string_view name) const {
      return at(name).formula;
    }
    //! File order.
    std::vector<NamedFormula> const& entries() const noexcept {
      return _entries;
    }

   private:
    std::vector<NamedFormula> _entries;
  };

}  // namespace skewlat

#endif  // SKEWLAT_LIBRARY_HPP_
