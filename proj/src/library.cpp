#include "skewlat/library.hpp"

#include <fstream>  // for ifstream
#include <set>      // for set
#include <sstream>  // for istringstream

#include "skewlat/bundled_library.hpp"  // generated from data/identities.txt

namespace skewlat {

  namespace {
    bool is_name_char(char c) {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')
             || (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.';
    }

    std::string trim(std::string const& s) {
      auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) {
        return {};
      }
      auto e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    }
  }  // namespace

  std::vector<NamedFormula> read_formula_file(std::istream& in) {
    std::vector<NamedFormula> out;
    std::string               line;
    std::size_t               lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::string t = trim(line);
      if (t.empty() || t.front() == '#') {
        continue;
      }
      std::string name;
      auto        colon = t.find(':');
      if (colon != std::string::npos) {
        name = trim(t.substr(0, colon));
        for (char c : name) {
          if (!is_name_char(c)) {
            throw ParseError("line " + std::to_string(lineno)
                                 + ": invalid formula name '" + name + "'",
                             0);
          }
        }
        t = trim(t.substr(colon + 1));
      }
      try {
        out.push_back({name, t, parse_formula(t)});
      } catch (ParseError const& e) {
        throw ParseError("line " + std::to_string(lineno) + ": " + e.what(),
                         e.position());
      }
    }
    return out;
  }

  std::vector<NamedFormula>
  read_formula_file(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw MalformedInput("cannot open " + path.string());
    }
    return read_formula_file(in);
  }

  FormulaLibrary FormulaLibrary::parse(std::istream& in) {
    FormulaLibrary        lib;
    std::set<std::string> seen;
    for (auto& nf : read_formula_file(in)) {
      if (nf.name.empty()) {
        throw MalformedInput("library formula without a name: " + nf.text);
      }
      if (!seen.insert(nf.name).second) {
        throw MalformedInput("duplicate library name: " + nf.name);
      }
      lib._entries.push_back(std::move(nf));
    }
    return lib;
  }

  FormulaLibrary FormulaLibrary::load(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw MalformedInput("cannot open " + path.string());
    }
    return parse(in);
  }

  FormulaLibrary const& FormulaLibrary::bundled() {
    static FormulaLibrary const lib = [] {
      std::istringstream in(detail::bundled_library_text);
      return parse(in);
    }();
    return lib;
  }

  bool FormulaLibrary::contains(std::string_view name) const {
    for (auto const& e : _entries) {
      if (e.name == name) {
        return true;
      }
    }
    return false;
  }

  NamedFormula const& FormulaLibrary::at(std::string_view name) const {
    for (auto const& e : _entries) {
      if (e.name == name) {
        return e;
      }
    }
    throw InvalidArgument("no formula named '" + std::string(name)
                          + "' in the library");
  }

}  // namespace skewlat
