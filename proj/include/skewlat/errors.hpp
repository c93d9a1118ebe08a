// Exception types thrown by the skewlat library.

#ifndef SKEWLAT_ERRORS_HPP_
#define SKEWLAT_ERRORS_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <utility>    // for pair

namespace skewlat {

  //! Base class of every exception thrown by skewlat.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Input that is not even a well-formed candidate: out-of-range table
  //! entries, truncated files, wrong row lengths.
  class MalformedInput : public Error {
   public:
    using Error::Error;
  };

  //! Raised when a theorem of skew lattice theory fails on an algebra that
  //! passed the axioms. This always indicates a bug in skewlat itself.
  class InternalInconsistency : public Error {
   public:
    using Error::Error;
  };

  //! A well-formed algebra that fails the skew lattice axioms where a
  //! skew lattice was required.
  class AxiomViolation : public Error {
   public:
    using Error::Error;
  };

  class NotACongruence : public Error {
   public:
    NotACongruence(std::string const& msg, std::pair<std::size_t, std::size_t> w)
        : Error(msg), _witness(w) {}

    //! A pair of related elements whose images under some operation are not
    //! related.
    std::pair<std::size_t, std::size_t> witness() const noexcept {
      return _witness;
    }

   private:
    std::pair<std::size_t, std::size_t> _witness;
  };

  //! Syntax error in the identity language; position is a 0-based offset into
  //! the input text.
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), _position(pos) {}

    std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

  //! A configured hard limit was hit (variable count, matrix budget, size cap).
  class LimitExceeded : public Error {
   public:
    using Error::Error;
  };

  //! Lookup of a name (fixed algebra, map kind, predicate) that does not exist,
  //! or a precondition on arguments that does not hold.
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

}  // namespace skewlat

#endif  // SKEWLAT_ERRORS_HPP_
