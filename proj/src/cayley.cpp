#include "skewlat/cayley.hpp"

#include <sstream>  // for ostringstream
#include <utility>  // for move

#include "skewlat/errors.hpp"

namespace skewlat {

  CayleyPair::CayleyPair(std::size_t                n,
                         std::vector<element_type> meet,
                         std::vector<element_type> join)
      : _n(n), _meet(std::move(meet)), _join(std::move(join)) {
    if (_n == 0) {
      throw MalformedInput("an algebra must have at least one element");
    }
    if (_meet.size() != _n * _n || _join.size() != _n * _n) {
      throw MalformedInput("expected two tables with " + std::to_string(_n * _n)
                           + " entries");
    }
    for (std::size_t i = 0; i < _n * _n; ++i) {
      if (_meet[i] >= _n) {
        throw MalformedInput("meet entry at row " + std::to_string(i / _n)
                             + ", column " + std::to_string(i % _n)
                             + " is out of range: " + std::to_string(_meet[i]));
      }
      if (_join[i] >= _n) {
        throw MalformedInput("join entry at row " + std::to_string(i / _n)
                             + ", column " + std::to_string(i % _n)
                             + " is out of range: " + std::to_string(_join[i]));
      }
    }
  }

  CayleyPair
  CayleyPair::from_rows(std::vector<std::vector<element_type>> const& meet,
                        std::vector<std::vector<element_type>> const& join) {
    std::size_t const n = meet.size();
    if (join.size() != n) {
      throw MalformedInput("meet and join tables have different row counts");
    }
    std::vector<element_type> m, j;
    m.reserve(n * n);
    j.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      if (meet[r].size() != n || join[r].size() != n) {
        throw MalformedInput("row " + std::to_string(r) + " does not have "
                             + std::to_string(n) + " entries");
      }
      m.insert(m.end(), meet[r].begin(), meet[r].end());
      j.insert(j.end(), join[r].begin(), join[r].end());
    }
    return CayleyPair(n, std::move(m), std::move(j));
  }

  std::string Violation::describe() const {
    static constexpr char names[] = {'x', 'y', 'z'};
    std::ostringstream    os;
    os << axiom << " at ";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      os << (i == 0 ? "" : ", ") << names[i] << "=" << witness[i];
    }
    return os.str();
  }

  element_type SkewLattice::meet_at(element_type x, element_type y) const {
    if (x >= size() || y >= size()) {
      throw InvalidArgument("element index out of range");
    }
    return meet(x, y);
  }

  element_type SkewLattice::join_at(element_type x, element_type y) const {
    if (x >= size() || y >= size()) {
      throw InvalidArgument("element index out of range");
    }
    return join(x, y);
  }

  SkewLattice const& ValidationResult::lattice() const {
    if (!ok()) {
      std::string msg = "not a skew lattice: " + _violations.front().describe();
      if (_violations.size() > 1) {
        msg += " (and " + std::to_string(_violations.size() - 1)
               + " more violations)";
      }
      throw AxiomViolation(msg);
    }
    return _lattice.front();
  }

  namespace {
    void check_theorems(CayleyPair const& t) {
      std::size_t const n = t.size();
      auto              m = [&t](element_type a, element_type b) {
        return t.meet(a, b);
      };
      auto j = [&t](element_type a, element_type b) {
        return t.join(a, b);
      };
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          if ((m(x, y) == x) != (j(x, y) == y)
              || (m(x, y) == y) != (j(x, y) == x)) {
            throw InternalInconsistency(
                "duality failed on a validated algebra at x="
                + std::to_string(x) + ", y=" + std::to_string(y));
          }
        }
      }
      for (element_type a = 0; a < n; ++a) {
        for (element_type x = 0; x < n; ++x) {
          for (element_type y = 0; y < n; ++y) {
            // a x a y a = a x y a, in both bands
            if (m(m(m(m(a, x), a), y), a) != m(m(m(a, x), y), a)
                || j(j(j(j(a, x), a), y), a) != j(j(j(a, x), y), a)) {
              throw InternalInconsistency(
                  "regularity failed on a validated algebra at a="
                  + std::to_string(a) + ", x=" + std::to_string(x)
                  + ", y=" + std::to_string(y));
            }
          }
        }
      }
    }
  }  // namespace

  ValidationResult validate(CayleyPair const& t) {
    ValidationResult  result;
    auto&             v = result._violations;
    std::size_t const n = t.size();

    for (element_type x = 0; x < n; ++x) {
      if (t.meet(x, x) != x) {
        v.push_back({"idempotency of meet", {x}});
      }
      if (t.join(x, x) != x) {
        v.push_back({"idempotency of join", {x}});
      }
    }
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        for (element_type z = 0; z < n; ++z) {
          if (t.meet(t.meet(x, y), z) != t.meet(x, t.meet(y, z))) {
            v.push_back({"associativity of meet", {x, y, z}});
          }
        }
      }
    }
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        for (element_type z = 0; z < n; ++z) {
          if (t.join(t.join(x, y), z) != t.join(x, t.join(y, z))) {
            v.push_back({"associativity of join", {x, y, z}});
          }
        }
      }
    }
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        if (t.meet(x, t.join(x, y)) != x) {
          v.push_back({"absorption x^(xvy)=x", {x, y}});
        }
        if (t.join(x, t.meet(x, y)) != x) {
          v.push_back({"absorption xv(x^y)=x", {x, y}});
        }
        if (t.join(t.meet(x, y), y) != y) {
          v.push_back({"absorption (x^y)vy=y", {x, y}});
        }
        if (t.meet(t.join(x, y), y) != y) {
          v.push_back({"absorption (xvy)^y=y", {x, y}});
        }
      }
    }
    if (v.empty()) {
      check_theorems(t);
      result._lattice.push_back(SkewLattice(t));
    }
    return result;
  }

  SkewLattice make_skew_lattice(CayleyPair const& tables) {
    return validate(tables).lattice();
  }

  ElementPairOrder orders(SkewLattice const& S) {
    std::size_t const n = S.size();
    ElementPairOrder  o;
    o.n = n;
    o.preceq.assign(n * n, 0);
    o.leq.assign(n * n, 0);
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        bool const pre = S.meet(S.meet(x, y), x) == x;
        bool const le  = S.meet(x, y) == x && S.meet(y, x) == x;
        if (pre != (S.join(S.join(y, x), y) == y)
            || le != (S.join(x, y) == y && S.join(y, x) == y)) {
          throw InternalInconsistency(
              "meet and join formulations of the natural orders disagree at x="
              + std::to_string(x) + ", y=" + std::to_string(y));
        }
        o.preceq[x * n + y] = pre;
        o.leq[x * n + y]    = le;
      }
    }
    return o;
  }

  SkewLattice opposite(SkewLattice const& S) {
    std::size_t const         n = S.size();
    std::vector<element_type> m(n * n), j(n * n);
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        m[x * n + y] = S.meet(y, x);
        j[x * n + y] = S.join(y, x);
      }
    }
    return make_skew_lattice(CayleyPair(n, std::move(m), std::move(j)));
  }

  SkewLattice dual(SkewLattice const& S) {
    auto const& t = S.tables();
    return make_skew_lattice(CayleyPair(
        t.size(),
        std::vector<element_type>(t.join_table().begin(), t.join_table().end()),
        std::vector<element_type>(t.meet_table().begin(),
                                  t.meet_table().end())));
  }

  bool is_lattice(SkewLattice const& S) {
    for (element_type x = 0; x < S.size(); ++x) {
      for (element_type y = x + 1; y < S.size(); ++y) {
        if (S.meet(x, y) != S.meet(y, x) || S.join(x, y) != S.join(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace skewlat
