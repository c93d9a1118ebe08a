// Reading and writing "skewlat v1" algebra files.
//
// Format:
//
//   # optional comment lines
//   n
//   <n rows of n whitespace-separated 0-based meet entries>
//   <blank line>
//   <n rows of n join entries>
//
// write_algebra produces single-space separated rows and a trailing newline;
// reading such a file and writing it back reproduces it byte for byte,
// including the leading comment lines.

#ifndef SKEWLAT_IO_HPP_
#define SKEWLAT_IO_HPP_

#include <filesystem>  // for path
#include <iosfwd>      // for istream, ostream
#include <string>      // for string
#include <vector>      // for vector

#include "cayley.hpp"

namespace skewlat {

  struct AlgebraFile {
    std::vector<std::string> comments;  // full lines, each starting with '#'
    CayleyPair               tables;
  };

  //! Throws MalformedInput with a line number on any format error.
  AlgebraFile read_algebra(std::istream& in);
  AlgebraFile read_algebra(std::filesystem::path const& path);
  AlgebraFile parse_algebra(std::string const& text);

  void write_algebra(std::ostream&                   out,
                     CayleyPair const&               tables,
                     std::vector<std::string> const& comments = {});
  std::string to_skewlat_text(CayleyPair const&               tables,
                              std::vector<std::string> const& comments = {});
  void        write_algebra(std::filesystem::path const&    path,
                            CayleyPair const&               tables,
                            std::vector<std::string> const& comments = {});

}  // namespace skewlat

#endif  // SKEWLAT_IO_HPP_
