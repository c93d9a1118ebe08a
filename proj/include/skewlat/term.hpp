// Terms, identities and quasi-identities over {^, v}, with a parser, a
// printer and exhaustive evaluation on finite algebras.
//
// Grammar (whitespace is ignored):
//
//   formula  := eqlist [ "=>" equation ]
//   eqlist   := equation { "," equation }
//   equation := term "=" term
//   term     := product { "v" product }      join, left associative
//   product  := atom { "^" atom }            meet, binds tighter than v
//   atom     := variable | "(" term ")"
//
// Variables are single lower case letters other than 'v', which is reserved
// for the join operator. Without "=>" the list must hold exactly one
// equation.

#ifndef SKEWLAT_TERM_HPP_
#define SKEWLAT_TERM_HPP_

#include <array>        // for array
#include <cstddef>      // for size_t
#include <cstdint>      // for uint64_t
#include <memory>       // for shared_ptr
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "cayley.hpp"
#include "errors.hpp"

namespace skewlat {

  //! Immutable expression tree; copies share structure.
  class Term {
   public:
    enum class Kind { variable, meet, join };

    static Term variable(char name);
    static Term meet(Term lhs, Term rhs);
    static Term join(Term lhs, Term rhs);

    Kind kind() const noexcept {
      return _node->kind;
    }
    //! Only for variables.
    char name() const noexcept {
      return _node->name;
    }
    Term const& left() const noexcept {
      return _node->children[0];
    }
    Term const& right() const noexcept {
      return _node->children[1];
    }

    bool operator==(Term const& that) const;

   private:
    struct Node {
      Kind              kind;
      char              name;
      std::vector<Term> children;
    };
    explicit Term(std::shared_ptr<Node const> n) : _node(std::move(n)) {}

    std::shared_ptr<Node const> _node;
  };

  struct Equation {
    Term lhs;
    Term rhs;

    bool operator==(Equation const&) const = default;
  };

  struct Formula {
    std::vector<Equation> premises;
    Equation              conclusion;

    bool is_identity() const noexcept {
      return premises.empty();
    }
    //! Distinct variables, sorted alphabetically.
    std::vector<char> variables() const;
    //! True if no join occurs anywhere.
    bool meet_only() const;

    bool operator==(Formula const&) const = default;
  };

  //! Throws ParseError carrying the offending position.
  Formula parse_formula(std::string_view text);
  Term    parse_term(std::string_view text);

  //! Minimal parenthesisation; parse_formula(to_string(f)) == f.
  std::string to_string(Term const& t);
  std::string to_string(Equation const& e);
  std::string to_string(Formula const& f);

  constexpr std::size_t max_formula_variables = 8;

  struct HoldsResult {
    bool holds = true;
    //! First failing assignment in lexicographic order of the values of the
    //! alphabetically sorted variables; empty when holds.
    std::vector<std::pair<char, element_type>> counterexample;
    element_type                               lhs = 0;  // conclusion values
    element_type                               rhs = 0;  // at counterexample
    std::uint64_t                              conclusion_checks = 0;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  namespace detail {
    // Postfix program. Operand codes: 0..7 variable slots, meet_op, join_op.
    inline constexpr std::uint8_t meet_op = 0xFE;
    inline constexpr std::uint8_t join_op = 0xFF;

    struct Program {
      std::vector<std::uint8_t> code;
    };

    Program compile(Term const& t, std::vector<char> const& vars);

    template <typename Alg>
    element_type run(Program const&     p,
                     Alg const&         alg,
                     element_type const* values) {
      std::array<element_type, 64> stack;
      std::size_t                  sp = 0;
      for (auto c : p.code) {
        if (c == meet_op) {
          --sp;
          stack[sp - 1] = alg.meet(stack[sp - 1], stack[sp]);
        } else if (c == join_op) {
          --sp;
          stack[sp - 1] = alg.join(stack[sp - 1], stack[sp]);
        } else {
          stack[sp++] = values[c];
        }
      }
      return stack[0];
    }

    std::size_t stack_depth(Term const& t);
  }  // namespace detail

  //! A formula compiled for repeated evaluation.
  class CompiledFormula {
   public:
    explicit CompiledFormula(Formula const& f);

    Formula const& formula() const noexcept {
      return _formula;
    }
    std::vector<char> const& variables() const noexcept {
      return _vars;
    }

    //! Exhaustive evaluation over all n^k assignments.
    template <BinaryAlgebra A>
    HoldsResult holds(A const& alg) const {
      HoldsResult       r;
      std::size_t const n = alg.size();
      std::size_t const k = _vars.size();
      std::array<element_type, max_formula_variables> val{};
      while (true) {
        bool premises_ok = true;
        for (auto const& [l, rr] : _premises) {
          if (detail::run(l, alg, val.data()) != detail::run(rr, alg, val.data())) {
            premises_ok = false;
            break;
          }
        }
        if (premises_ok) {
          ++r.conclusion_checks;
          element_type lv = detail::run(_lhs, alg, val.data());
          element_type rv = detail::run(_rhs, alg, val.data());
          if (lv != rv) {
            r.holds = false;
            r.lhs   = lv;
            r.rhs   = rv;
            for (std::size_t i = 0; i < k; ++i) {
              r.counterexample.emplace_back(_vars[i], val[i]);
            }
            return r;
          }
        }
        // odometer, last variable fastest
        std::size_t i = k;
        while (i > 0) {
          --i;
          if (++val[i] < n) {
            break;
          }
          val[i] = 0;
          if (i == 0) {
            return r;
          }
        }
        if (k == 0) {
          return r;
        }
      }
    }

   private:
    Formula                                                  _formula;
    std::vector<char>                                        _vars;
    std::vector<std::pair<detail::Program, detail::Program>> _premises;
    detail::Program                                          _lhs;
    detail::Program                                          _rhs;
  };

  //! Throws LimitExceeded when the formula has more than 8 variables.
  template <BinaryAlgebra A>
  HoldsResult holds(A const& alg, Formula const& f) {
    return CompiledFormula(f).holds(alg);
  }

  //! "x=0, y=1, z=2"
  std::string format_assignment(
      std::vector<std::pair<char, element_type>> const& assignment);

}  // namespace skewlat

#endif  // SKEWLAT_TERM_HPP_
