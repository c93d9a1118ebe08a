#include "skewlat/ybe.hpp"

#include <algorithm>  // for replace
#include <sstream>    // for ostringstream

#include "skewlat/errors.hpp"
#include "skewlat/green.hpp"
#include "skewlat/library.hpp"
#include "skewlat/term.hpp"

namespace skewlat {

  PairMap::PairMap(std::size_t n, std::vector<value_type> table)
      : _n(n), _table(std::move(table)) {
    if (_table.size() != n * n) {
      throw InvalidArgument("pair map table has " + std::to_string(_table.size())
                            + " entries, expected " + std::to_string(n * n));
    }
    for (auto [a, b] : _table) {
      if (a >= n || b >= n) {
        throw InvalidArgument("pair map value out of range");
      }
    }
  }

  PairMap PairMap::identity(std::size_t n) {
    std::vector<value_type> t;
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        t.emplace_back(x, y);
      }
    }
    return PairMap(n, std::move(t));
  }

  PairMap PairMap::twist(std::size_t n) {
    std::vector<value_type> t;
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        t.emplace_back(y, x);
      }
    }
    return PairMap(n, std::move(t));
  }

  PairMap PairMap::after(PairMap const& that) const {
    if (that._n != _n) {
      throw InvalidArgument("composing pair maps on different sets");
    }
    std::vector<value_type> t;
    t.reserve(_table.size());
    for (auto [a, b] : that._table) {
      t.push_back((*this)(a, b));
    }
    return PairMap(_n, std::move(t));
  }

  ////////////////////////////////////////////////////////////////////////
  // Map kinds
  ////////////////////////////////////////////////////////////////////////

  std::string_view to_string(MapKind k) {
    switch (k) {
      case MapKind::update:
        return "update";
      case MapKind::lower_update:
        return "lower_update";
      case MapKind::upper_update:
        return "upper_update";
      case MapKind::co_update:
        return "co_update";
      case MapKind::strong:
        return "strong";
      case MapKind::left:
        return "left";
      case MapKind::right:
        return "right";
      case MapKind::weak:
        return "weak";
    }
    return "";
  }

  std::vector<MapKind> const& all_map_kinds() {
    static std::vector<MapKind> const kinds = {MapKind::update,
                                               MapKind::lower_update,
                                               MapKind::upper_update,
                                               MapKind::co_update,
                                               MapKind::strong,
                                               MapKind::left,
                                               MapKind::right,
                                               MapKind::weak};
    return kinds;
  }

  MapKind map_kind_from_string(std::string_view name) {
    std::string s(name);
    std::replace(s.begin(), s.end(), '-', '_');
    for (auto k : all_map_kinds()) {
      if (to_string(k) == s) {
        return k;
      }
    }
    throw InvalidArgument("unknown map kind '" + std::string(name) + "'");
  }

  PairMap build_map(SkewLattice const& S, MapKind kind) {
    std::size_t const                n = S.size();
    std::vector<PairMap::value_type> t;
    t.reserve(n * n);
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        switch (kind) {
          case MapKind::update:
            t.emplace_back(S.join(S.meet(x, y), x), y);
            break;
          case MapKind::lower_update:
            t.emplace_back(lower_update(S, x, y), y);
            break;
          case MapKind::upper_update:
            t.emplace_back(x, upper_update(S, y, x));
            break;
          case MapKind::co_update:
            t.emplace_back(x, S.meet(S.join(y, x), y));
            break;
          case MapKind::strong:
            t.emplace_back(S.meet(x, y), S.join(x, y));
            break;
          case MapKind::left:
            t.emplace_back(S.meet(x, y), S.join(y, x));
            break;
          case MapKind::right:
            t.emplace_back(S.meet(y, x), S.join(x, y));
            break;
          case MapKind::weak:
            t.emplace_back(S.meet(S.meet(x, y), x), S.join(S.join(x, y), x));
            break;
        }
      }
    }
    return PairMap(n, std::move(t));
  }

  ////////////////////////////////////////////////////////////////////////
  // Update operations
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void require(bool cond, std::string const& msg) {
      if (!cond) {
        throw InternalInconsistency(msg);
      }
    }

    std::string pair_text(element_type x, element_type y) {
      return " at x=" + std::to_string(x) + ", y=" + std::to_string(y);
    }

    // Shared by the lower update of S and (through the dual) the upper one.
    void check_lower(SkewLattice const& S, std::string const& name) {
      std::size_t const n     = S.size();
      Partition const   D     = d_relation(S);
      bool const        lefth = is_left_handed(S);
      bool const        righth = is_right_handed(S);
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          element_type const u   = lower_update(S, x, y);
          element_type const yxy = S.meet(S.meet(y, x), y);
          std::string const  at  = pair_text(x, y);
          require(D.related(u, x), name + " leaves the class of x" + at);
          require(S.meet(u, y) == yxy && S.meet(y, u) == yxy,
                  name + " fails u ^ y = y ^ x ^ y = y ^ u" + at);
          // the coset M v x v M, M the class of x ^ y
          auto const& M = D.elements(D.class_of(S.meet(x, y)));
          std::vector<element_type> above;
          for (auto m : M) {
            for (auto m2 : M) {
              element_type a = S.join(S.join(m, x), m2);
              if (leq(S, yxy, a)
                  && std::find(above.begin(), above.end(), a) == above.end()) {
                above.push_back(a);
              }
            }
          }
          require(above.size() == 1 && above.front() == u,
                  name + " is not the unique coset element above y ^ x ^ y"
                      + at);
          if (lefth) {
            require(u == S.join(x, S.meet(y, x)),
                    name + " differs from x v (y ^ x) on a left handed algebra"
                        + at);
          }
          if (righth) {
            require(u == S.join(S.meet(x, y), x),
                    name
                        + " differs from (x ^ y) v x on a right handed algebra"
                        + at);
          }
        }
      }
    }
  }  // namespace

  void check_update_operations(SkewLattice const& S) {
    check_lower(S, "lower update");
    SkewLattice const T = dual(S);
    for (element_type x = 0; x < S.size(); ++x) {
      for (element_type y = 0; y < S.size(); ++y) {
        require(upper_update(S, x, y) == lower_update(T, x, y),
                "upper update is not the lower update of the dual"
                    + pair_text(x, y));
      }
    }
    check_lower(T, "upper update");
  }

  ////////////////////////////////////////////////////////////////////////
  // Braid relation, powers, degeneracy
  ////////////////////////////////////////////////////////////////////////

  BraidResult braid_check(PairMap const& r) {
    std::size_t const n = r.size();
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        auto const [a, b] = r(x, y);
        for (element_type z = 0; z < n; ++z) {
          auto const [c, d] = r(b, z);
          auto const [e, f] = r(a, c);
          auto const [p, q] = r(y, z);
          auto const [s, t] = r(x, p);
          auto const [u, w] = r(t, q);
          if (e != s || f != u || d != w) {
            return {BraidWitness{{x, y, z}, {e, f, d}, {s, u, w}}};
          }
        }
      }
    }
    return {};
  }

  std::string_view PowerClass::name() const noexcept {
    if (involutive) {
      return "involutive";
    }
    if (idempotent) {
      return "idempotent";
    }
    if (cubic) {
      return "cubic";
    }
    return "none";
  }

  PowerClass power_class(PairMap const& r) {
    PairMap const r2 = r.after(r);
    PairMap const r3 = r.after(r2);
    PowerClass    pc;
    pc.involutive = r2 == PairMap::identity(r.size());
    pc.idempotent = r2 == r;
    pc.cubic      = r3 == r;
    if ((pc.involutive || pc.idempotent) && !pc.cubic) {
      throw InternalInconsistency(
          "involutive or idempotent pair map that is not cubic");
    }
    return pc;
  }

  Degeneracy degeneracy(PairMap const& r) {
    std::size_t const n = r.size();
    Degeneracy        dg{true, true};
    std::vector<char> seen(n);
    for (element_type x = 0; x < n && dg.left; ++x) {
      std::fill(seen.begin(), seen.end(), 0);
      for (element_type y = 0; y < n; ++y) {
        if (seen[r.first(x, y)]++) {
          dg.left = false;
          break;
        }
      }
    }
    for (element_type y = 0; y < n && dg.right; ++y) {
      std::fill(seen.begin(), seen.end(), 0);
      for (element_type x = 0; x < n; ++x) {
        if (seen[r.second(x, y)]++) {
          dg.right = false;
          break;
        }
      }
    }
    return dg;
  }

  ////////////////////////////////////////////////////////////////////////
  // Solution families
  ////////////////////////////////////////////////////////////////////////

  std::string_view to_string(SolutionFamily f) {
    switch (f) {
      case SolutionFamily::strong:
        return "strong";
      case SolutionFamily::left:
        return "left";
      case SolutionFamily::right:
        return "right";
      case SolutionFamily::weak:
        return "weak";
    }
    return "";
  }

  SolutionFamily solution_family_from_string(std::string_view name) {
    for (auto f : {SolutionFamily::strong,
                   SolutionFamily::left,
                   SolutionFamily::right,
                   SolutionFamily::weak}) {
      if (to_string(f) == name) {
        return f;
      }
    }
    throw InvalidArgument("unknown solution family '" + std::string(name)
                          + "'");
  }

  MapKind map_kind(SolutionFamily f) {
    switch (f) {
      case SolutionFamily::strong:
        return MapKind::strong;
      case SolutionFamily::left:
        return MapKind::left;
      case SolutionFamily::right:
        return MapKind::right;
      case SolutionFamily::weak:
        return MapKind::weak;
    }
    return MapKind::strong;
  }

  std::vector<std::string_view> const& family_identities(SolutionFamily f) {
    static std::vector<std::string_view> const strong
        = {"strong1", "strong2", "strong3"};
    static std::vector<std::string_view> const left  = {"left-sol"};
    static std::vector<std::string_view> const right = {"right-sol"};
    static std::vector<std::string_view> const weak  = {"weak-sol"};
    switch (f) {
      case SolutionFamily::strong:
        return strong;
      case SolutionFamily::left:
        return left;
      case SolutionFamily::right:
        return right;
      case SolutionFamily::weak:
        return weak;
    }
    return strong;
  }

  IdentityCheck solution_identity_check(SkewLattice const& S,
                                        SolutionFamily     family) {
    static std::vector<std::pair<std::string, CompiledFormula>> const
        compiled = [] {
          std::vector<std::pair<std::string, CompiledFormula>> v;
          auto const& lib = FormulaLibrary::bundled();
          for (auto f : {SolutionFamily::strong,
                         SolutionFamily::left,
                         SolutionFamily::right,
                         SolutionFamily::weak}) {
            for (auto name : family_identities(f)) {
              v.emplace_back(std::string(name),
                             CompiledFormula(lib.formula(name)));
            }
          }
          return v;
        }();
    IdentityCheck result;
    for (auto name : family_identities(family)) {
      auto it = std::find_if(compiled.begin(),
                             compiled.end(),
                             [&](auto const& p) { return p.first == name; });
      auto r = it->second.holds(S);
      if (!r) {
        result.formula    = it->first;
        result.assignment = r.counterexample;
        result.lhs        = r.lhs;
        result.rhs        = r.rhs;
        break;
      }
    }
    bool const braid = braid_check(build_map(S, map_kind(family))).pass();
    if (braid != result.pass()) {
      throw InternalInconsistency(
          "identities of the " + std::string(to_string(family))
          + " family disagree with the braid check of its map");
    }
    return result;
  }

  SolutionReport solution_report(SkewLattice const& S, MapKind kind) {
    PairMap const r = build_map(S, kind);
    return {kind, braid_check(r), power_class(r), degeneracy(r)};
  }

  namespace {
    std::string triple_text(std::array<element_type, 3> const& t) {
      return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + ","
             + std::to_string(t[2]) + ")";
    }
  }  // namespace

  std::string format_solution_reports(std::vector<SolutionReport> const& rs,
                                      bool                               tsv) {
    std::ostringstream os;
    if (tsv) {
      os << "map\tbraid\twitness\tlhs\trhs\tpower_class\tinvolutive\t"
            "idempotent\tcubic\tleft_nondegenerate\tright_nondegenerate\n";
    }
    auto yn = [](bool b) { return b ? "true" : "false"; };
    for (auto const& r : rs) {
      auto const& w = r.braid.witness;
      if (tsv) {
        os << to_string(r.kind) << '\t' << (w ? "fail" : "pass") << '\t'
           << (w ? triple_text(w->triple) : "") << '\t'
           << (w ? triple_text(w->lhs) : "") << '\t'
           << (w ? triple_text(w->rhs) : "") << '\t' << r.power.name() << '\t'
           << yn(r.power.involutive) << '\t' << yn(r.power.idempotent) << '\t'
           << yn(r.power.cubic) << '\t' << yn(r.degeneracy.left) << '\t'
           << yn(r.degeneracy.right) << '\n';
        continue;
      }
      os << "map: " << to_string(r.kind) << '\n';
      if (w) {
        os << "braid: fail at (x,y,z)=" << triple_text(w->triple)
           << " lhs=" << triple_text(w->lhs) << " rhs=" << triple_text(w->rhs)
           << '\n';
      } else {
        os << "braid: pass\n";
      }
      os << "power_class: " << r.power.name() << " (involutive "
         << yn(r.power.involutive) << ", idempotent " << yn(r.power.idempotent)
         << ", cubic " << yn(r.power.cubic) << ")\n"
         << "left_nondegenerate: " << yn(r.degeneracy.left) << '\n'
         << "right_nondegenerate: " << yn(r.degeneracy.right) << '\n';
    }
    return os.str();
  }

}  // namespace skewlat
