#include "skewlat/term.hpp"

#include <algorithm>  // for sort, unique, find
#include <set>        // for set

namespace skewlat {

  Term Term::variable(char name) {
    return Term(std::make_shared<Node const>(Node{Kind::variable, name, {}}));
  }

  Term Term::meet(Term lhs, Term rhs) {
    return Term(std::make_shared<Node const>(
        Node{Kind::meet, 0, {std::move(lhs), std::move(rhs)}}));
  }

  Term Term::join(Term lhs, Term rhs) {
    return Term(std::make_shared<Node const>(
        Node{Kind::join, 0, {std::move(lhs), std::move(rhs)}}));
  }

  bool Term::operator==(Term const& that) const {
    if (_node == that._node) {
      return true;
    }
    if (kind() != that.kind()) {
      return false;
    }
    if (kind() == Kind::variable) {
      return name() == that.name();
    }
    return left() == that.left() && right() == that.right();
  }

  namespace {
    void collect_vars(Term const& t, std::set<char>& out) {
      if (t.kind() == Term::Kind::variable) {
        out.insert(t.name());
      } else {
        collect_vars(t.left(), out);
        collect_vars(t.right(), out);
      }
    }

    bool has_join(Term const& t) {
      if (t.kind() == Term::Kind::variable) {
        return false;
      }
      return t.kind() == Term::Kind::join || has_join(t.left())
             || has_join(t.right());
    }

    ////////////////////////////////////////////////////////////////////////
    // Parser
    ////////////////////////////////////////////////////////////////////////

    class Parser {
     public:
      explicit Parser(std::string_view s) : _s(s) {}

      Formula formula() {
        std::vector<Equation> eqs;
        eqs.push_back(equation());
        skip_ws();
        while (peek() == ',') {
          ++_pos;
          eqs.push_back(equation());
          skip_ws();
        }
        if (peek() == '=' && peek(1) == '>') {
          _pos += 2;
          Equation concl = equation();
          expect_end();
          return Formula{std::move(eqs), std::move(concl)};
        }
        expect_end();
        if (eqs.size() != 1) {
          throw ParseError("several equations need '=>' before the conclusion",
                           _pos);
        }
        return Formula{{}, std::move(eqs.front())};
      }

      Term term_only() {
        Term t = term();
        expect_end();
        return t;
      }

     private:
      void skip_ws() {
        while (_pos < _s.size()
               && (_s[_pos] == ' ' || _s[_pos] == '\t' || _s[_pos] == '\n'
                   || _s[_pos] == '\r')) {
          ++_pos;
        }
      }

      char peek(std::size_t ahead = 0) const {
        return _pos + ahead < _s.size() ? _s[_pos + ahead] : '\0';
      }

      [[noreturn]] void unexpected() {
        skip_ws();
        if (_pos >= _s.size()) {
          throw ParseError("unexpected end of input", _pos);
        }
        char c = _s[_pos];
        if (c == ')') {
          throw ParseError("unbalanced ')'", _pos);
        }
        bool known = c == '^' || c == 'v' || c == '(' || c == '=' || c == ','
                     || (c >= 'a' && c <= 'z');
        if (!known) {
          throw ParseError(std::string("unknown symbol '") + c + "'", _pos);
        }
        throw ParseError(std::string("unexpected '") + c + "'", _pos);
      }

      void expect_end() {
        skip_ws();
        if (_pos < _s.size()) {
          unexpected();
        }
      }

      Equation equation() {
        Term lhs = term();
        skip_ws();
        if (peek() != '=' || peek(1) == '>') {
          if (_pos >= _s.size() || peek() == ',' || peek() == '=') {
            throw ParseError("expected '=' after term", _pos);
          }
          unexpected();
        }
        ++_pos;
        skip_ws();
        if (_pos >= _s.size() || peek() == ',' || peek() == '=') {
          throw ParseError("missing right-hand side", _pos);
        }
        Term rhs = term();
        return Equation{std::move(lhs), std::move(rhs)};
      }

      Term term() {
        Term t = product();
        skip_ws();
        while (peek() == 'v') {
          ++_pos;
          t = Term::join(std::move(t), product());
          skip_ws();
        }
        return t;
      }

      Term product() {
        Term t = atom();
        skip_ws();
        while (peek() == '^') {
          ++_pos;
          t = Term::meet(std::move(t), atom());
          skip_ws();
        }
        return t;
      }

      Term atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
          std::size_t open = _pos++;
          Term        t    = term();
          skip_ws();
          if (peek() != ')') {
            if (_pos >= _s.size()) {
              throw ParseError("unbalanced '(' opened", open);
            }
            unexpected();
          }
          ++_pos;
          return t;
        }
        if (c >= 'a' && c <= 'z' && c != 'v') {
          ++_pos;
          return Term::variable(c);
        }
        unexpected();
      }

      std::string_view _s;
      std::size_t      _pos = 0;
    };

    std::string wrap(Term const& t, bool paren) {
      return paren ? "(" + to_string(t) + ")" : to_string(t);
    }

    std::size_t depth(Term const& t) {
      if (t.kind() == Term::Kind::variable) {
        return 1;
      }
      return std::max(depth(t.left()), depth(t.right()) + 1);
    }

    void emit(Term const&                   t,
              std::vector<char> const&      vars,
              std::vector<std::uint8_t>&    code) {
      switch (t.kind()) {
        case Term::Kind::variable: {
          auto it = std::find(vars.begin(), vars.end(), t.name());
          code.push_back(static_cast<std::uint8_t>(it - vars.begin()));
          break;
        }
        case Term::Kind::meet:
          emit(t.left(), vars, code);
          emit(t.right(), vars, code);
          code.push_back(detail::meet_op);
          break;
        case Term::Kind::join:
          emit(t.left(), vars, code);
          emit(t.right(), vars, code);
          code.push_back(detail::join_op);
          break;
      }
    }
  }  // namespace

  std::vector<char> Formula::variables() const {
    std::set<char> vs;
    for (auto const& e : premises) {
      collect_vars(e.lhs, vs);
      collect_vars(e.rhs, vs);
    }
    collect_vars(conclusion.lhs, vs);
    collect_vars(conclusion.rhs, vs);
    return {vs.begin(), vs.end()};
  }

  bool Formula::meet_only() const {
    for (auto const& e : premises) {
      if (has_join(e.lhs) || has_join(e.rhs)) {
        return false;
      }
    }
    return !has_join(conclusion.lhs) && !has_join(conclusion.rhs);
  }

  Formula parse_formula(std::string_view text) {
    return Parser(text).formula();
  }

  Term parse_term(std::string_view text) {
    return Parser(text).term_only();
  }

  std::string to_string(Term const& t) {
    switch (t.kind()) {
      case Term::Kind::variable:
        return std::string(1, t.name());
      case Term::Kind::meet:
        return wrap(t.left(), t.left().kind() == Term::Kind::join) + " ^ "
               + wrap(t.right(), t.right().kind() != Term::Kind::variable);
      case Term::Kind::join:
        return to_string(t.left()) + " v "
               + wrap(t.right(), t.right().kind() == Term::Kind::join);
    }
    return {};
  }

  std::string to_string(Equation const& e) {
    return to_string(e.lhs) + " = " + to_string(e.rhs);
  }

  std::string to_string(Formula const& f) {
    std::string s;
    for (std::size_t i = 0; i < f.premises.size(); ++i) {
      s += (i ? ", " : "") + to_string(f.premises[i]);
    }
    if (!f.premises.empty()) {
      s += " => ";
    }
    return s + to_string(f.conclusion);
  }

  namespace detail {
    std::size_t stack_depth(Term const& t) {
      return depth(t);
    }

    Program compile(Term const& t, std::vector<char> const& vars) {
      if (depth(t) > 64) {
        throw LimitExceeded("term is nested too deeply to evaluate");
      }
      Program p;
      emit(t, vars, p.code);
      return p;
    }
  }  // namespace detail

  CompiledFormula::CompiledFormula(Formula const& f)
      : _formula(f),
        _vars(f.variables()),
        _lhs(),
        _rhs() {
    if (_vars.size() > max_formula_variables) {
      throw LimitExceeded("formula has " + std::to_string(_vars.size())
                          + " variables, the limit is "
                          + std::to_string(max_formula_variables));
    }
    for (auto const& e : f.premises) {
      _premises.emplace_back(detail::compile(e.lhs, _vars),
                             detail::compile(e.rhs, _vars));
    }
    _lhs = detail::compile(f.conclusion.lhs, _vars);
    _rhs = detail::compile(f.conclusion.rhs, _vars);
  }

  std::string format_assignment(
      std::vector<std::pair<char, element_type>> const& assignment) {
    std::string s;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
      s += (i ? ", " : "") + std::string(1, assignment[i].first) + "="
           + std::to_string(assignment[i].second);
    }
    return s;
  }

}  // namespace skewlat
