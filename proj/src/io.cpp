#include "skewlat/io.hpp"

#include <charconv>  // for from_chars
#include <fstream>   // for ifstream, ofstream
#include <sstream>   // for istringstream, ostringstream

#include "skewlat/errors.hpp"

namespace skewlat {

  namespace {
    bool is_blank(std::string const& line) {
      return line.find_first_not_of(" \t") == std::string::npos;
    }

    bool is_comment(std::string const& line) {
      return !line.empty() && line.front() == '#';
    }

    std::vector<element_type> parse_row(std::string const& line,
                                        std::size_t        lineno) {
      std::vector<element_type> row;
      std::istringstream        is(line);
      std::string               tok;
      while (is >> tok) {
        element_type v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
          throw MalformedInput("line " + std::to_string(lineno)
                               + ": not a non-negative integer: '" + tok + "'");
        }
        row.push_back(v);
      }
      return row;
    }

    struct Cursor {
      std::vector<std::string> const& lines;
      std::size_t                     pos = 0;

      bool at_end() const {
        return pos >= lines.size();
      }
      // 1-based line number of the current position
      std::size_t lineno() const {
        return pos + 1;
      }
      void skip_comments() {
        while (!at_end() && is_comment(lines[pos])) {
          ++pos;
        }
      }
    };

    std::vector<element_type>
    read_table(Cursor& c, std::size_t n, char const* name) {
      std::vector<element_type> table;
      table.reserve(n * n);
      for (std::size_t row = 0; row < n; ++row) {
        c.skip_comments();
        if (c.at_end()) {
          throw MalformedInput(std::string("unexpected end of input in ") + name
                               + " table (expected " + std::to_string(n)
                               + " rows)");
        }
        if (is_blank(c.lines[c.pos])) {
          throw MalformedInput("line " + std::to_string(c.lineno())
                               + ": blank line inside " + name + " table");
        }
        auto v = parse_row(c.lines[c.pos], c.lineno());
        if (v.size() != n) {
          throw MalformedInput("line " + std::to_string(c.lineno()) + ": "
                               + name + " row has " + std::to_string(v.size())
                               + " entries, expected " + std::to_string(n));
        }
        table.insert(table.end(), v.begin(), v.end());
        ++c.pos;
      }
      return table;
    }
  }  // namespace

  AlgebraFile read_algebra(std::istream& in) {
    std::vector<std::string> lines;
    std::string              line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') {
        line.pop_back();
      }
      lines.push_back(line);
    }
    Cursor                   c{lines};
    std::vector<std::string> comments;
    // Leading comments are kept verbatim, later ones are skipped.
    while (!c.at_end() && is_comment(lines[c.pos])) {
      comments.push_back(lines[c.pos++]);
    }
    while (!c.at_end() && (is_blank(lines[c.pos]) || is_comment(lines[c.pos]))) {
      ++c.pos;
    }
    if (c.at_end()) {
      throw MalformedInput("missing element count");
    }
    auto header = parse_row(lines[c.pos], c.lineno());
    if (header.size() != 1) {
      throw MalformedInput("line " + std::to_string(c.lineno())
                           + ": expected a single element count");
    }
    std::size_t const n = header.front();
    if (n == 0) {
      throw MalformedInput("line " + std::to_string(c.lineno())
                           + ": element count must be positive");
    }
    ++c.pos;
    auto meet = read_table(c, n, "meet");
    c.skip_comments();
    if (c.at_end() || !is_blank(lines[c.pos])) {
      throw MalformedInput("line " + std::to_string(c.lineno())
                           + ": expected a blank line between the tables");
    }
    while (!c.at_end() && (is_blank(lines[c.pos]) || is_comment(lines[c.pos]))) {
      ++c.pos;
    }
    auto join = read_table(c, n, "join");
    for (; !c.at_end(); ++c.pos) {
      if (!is_blank(lines[c.pos]) && !is_comment(lines[c.pos])) {
        throw MalformedInput("line " + std::to_string(c.lineno())
                             + ": trailing data after join table");
      }
    }
    return {std::move(comments), CayleyPair(n, std::move(meet), std::move(join))};
  }

  AlgebraFile read_algebra(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw MalformedInput("cannot open " + path.string());
    }
    return read_algebra(in);
  }

  AlgebraFile parse_algebra(std::string const& text) {
    std::istringstream in(text);
    return read_algebra(in);
  }

  void write_algebra(std::ostream&                   out,
                     CayleyPair const&               t,
                     std::vector<std::string> const& comments) {
    for (auto const& c : comments) {
      out << (is_comment(c) ? "" : "# ") << c << '\n';
    }
    std::size_t const n = t.size();
    out << n << '\n';
    auto row = [&out, n](std::span<element_type const> tab, std::size_t r) {
      for (std::size_t col = 0; col < n; ++col) {
        out << (col == 0 ? "" : " ") << tab[r * n + col];
      }
      out << '\n';
    };
    for (std::size_t r = 0; r < n; ++r) {
      row(t.meet_table(), r);
    }
    out << '\n';
    for (std::size_t r = 0; r < n; ++r) {
      row(t.join_table(), r);
    }
  }

  std::string to_skewlat_text(CayleyPair const&               tables,
                              std::vector<std::string> const& comments) {
    std::ostringstream os;
    write_algebra(os, tables, comments);
    return os.str();
  }

  void write_algebra(std::filesystem::path const&    path,
                     CayleyPair const&               tables,
                     std::vector<std::string> const& comments) {
    std::ofstream out(path);
    if (!out) {
      throw MalformedInput("cannot write " + path.string());
    }
    write_algebra(out, tables, comments);
  }

}  // namespace skewlat
