#include "skewlat/theorems.hpp"

#include <algorithm>   // for find, sort
#include <functional>  // for function
#include <map>         // for map
#include <optional>    // for optional
#include <set>         // for set
#include <sstream>     // for ostringstream

#include "skewlat/constructions.hpp"
#include "skewlat/errors.hpp"
#include "skewlat/green.hpp"
#include "skewlat/library.hpp"
#include "skewlat/search.hpp"
#include "skewlat/term.hpp"
#include "skewlat/varieties.hpp"
#include "skewlat/ybe.hpp"

namespace skewlat {

  namespace {
    // Everything the per-algebra rows share.
    struct Context {
      SkewLattice          S;
      std::string          label;
      VarietyReport        report;
      std::vector<PairMap> maps;
      std::vector<bool>    braid;

      explicit Context(SkewLattice s, std::string l)
          : S(std::move(s)), label(std::move(l)), report(classify(S)) {
        for (auto k : all_map_kinds()) {
          maps.push_back(build_map(S, k));
          braid.push_back(braid_check(maps.back()).pass());
        }
      }

      PairMap const& map(MapKind k) const {
        return maps[static_cast<std::size_t>(k)];
      }
      bool solution(MapKind k) const {
        return braid[static_cast<std::size_t>(k)];
      }
      bool flag(char const* name) const {
        return report[name].value;
      }
    };

    // A failure message, or nullopt.
    using Check = std::function<std::optional<std::string>(Context const&)>;

    struct AlgebraRow {
      std::string name;
      std::string statement;
      Check       check;
    };

    std::optional<std::string> fail_if(bool bad, std::string msg) {
      if (bad) {
        return msg;
      }
      return std::nullopt;
    }

    std::string at(element_type x, element_type y) {
      return "at x=" + std::to_string(x) + ", y=" + std::to_string(y);
    }

    std::string at(element_type x, element_type y, element_type z) {
      return at(x, y) + ", z=" + std::to_string(z);
    }

    std::optional<std::string> check_orders(Context const& c) {
      auto const&       S = c.S;
      std::size_t const n = S.size();
      auto const        o = orders(S);
      auto const        D = d_relation(S);
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          if (o.leq_at(x, y) && !o.preceq_at(x, y)) {
            return "x <= y without x =< y " + at(x, y);
          }
          if (o.leq_at(x, y) && o.leq_at(y, x) && x != y) {
            return "<= is not antisymmetric " + at(x, y);
          }
          if ((o.preceq_at(x, y) && o.preceq_at(y, x)) != D.related(x, y)) {
            return "mutual =< differs from D " + at(x, y);
          }
          for (element_type z = 0; z < n; ++z) {
            if (o.leq_at(x, y) && o.leq_at(y, z) && !o.leq_at(x, z)) {
              return "<= is not transitive " + at(x, y, z);
            }
          }
        }
        if (!o.leq_at(x, x)) {
          return "<= is not reflexive at x=" + std::to_string(x);
        }
      }
      return std::nullopt;
    }

    std::optional<std::string> check_green(Context const& c) {
      auto const&       S = c.S;
      std::size_t const n = S.size();
      auto const        g = green_relations(S);
      // D is the join of L and R: x D y iff x L z R y for some z
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          bool via = false;
          for (element_type z = 0; z < n && !via; ++z) {
            via = g.L.related(x, z) && g.R.related(z, y);
          }
          if (via != g.D.related(x, y)) {
            return "D differs from the join of L and R " + at(x, y);
          }
        }
      }
      return std::nullopt;
    }

    std::optional<std::string> check_rectangular_classes(Context const& c) {
      auto const& S = c.S;
      auto const  g = green_relations(S);
      for (auto const& cls : g.D.classes()) {
        for (auto x : cls) {
          for (auto y : cls) {
            if (S.join(x, y) != S.meet(y, x)) {
              return "x v y != y ^ x inside a D-class " + at(x, y);
            }
            for (auto z : cls) {
              if (S.meet(S.meet(x, y), z) != S.meet(x, z)) {
                return "x ^ y ^ z != x ^ z inside a D-class " + at(x, y, z);
              }
            }
          }
        }
        std::set<std::size_t> ls, rs;
        std::map<std::pair<std::size_t, std::size_t>, int> cells;
        for (auto x : cls) {
          ls.insert(g.L.class_of(x));
          rs.insert(g.R.class_of(x));
          ++cells[{g.L.class_of(x), g.R.class_of(x)}];
        }
        if (ls.size() * rs.size() != cls.size() || cells.size() != cls.size()) {
          return "D-class of " + std::to_string(cls.front())
                 + " is not an eggbox of singletons";
        }
      }
      return std::nullopt;
    }

    std::optional<std::string> check_decomposition(Context const& c) {
      auto const q = lattice_image(c.S);
      if (!is_lattice(q.tables)) {
        return "S/D is not a lattice";
      }
      factors(c.S);
      return std::nullopt;
    }

    std::optional<std::string> check_cosets(Context const& c) {
      auto const&       S = c.S;
      auto const        D = d_relation(S);
      std::size_t const k = D.number_of_classes();
      for (std::size_t A = 0; A < k; ++A) {
        for (std::size_t B = 0; B < k; ++B) {
          if (A == B || !class_geq(S, D, A, B)) {
            continue;
          }
          auto up   = cosets(S, A, B, CosetDirection::lower_in_upper);
          auto down = cosets(S, A, B, CosetDirection::upper_in_lower);
          for (auto const& cu : up) {
            for (auto const& cd : down) {
              coset_bijection(S, cu, cd);
            }
          }
          // membership criterion for cosets of B in A
          auto const& As = D.elements(A);
          auto const& Bs = D.elements(B);
          auto        same_coset = [&](auto const& cs, element_type a, element_type b) {
            for (auto const& co : cs) {
              bool ha = std::find(co.elements.begin(), co.elements.end(), a)
                        != co.elements.end();
              bool hb = std::find(co.elements.begin(), co.elements.end(), b)
                        != co.elements.end();
              if (ha || hb) {
                return ha && hb;
              }
            }
            return false;
          };
          for (auto a : As) {
            for (auto a2 : As) {
              std::size_t agree = 0;
              for (auto b : Bs) {
                agree += S.join(S.join(b, a), b) == S.join(S.join(b, a2), b);
              }
              bool same = same_coset(up, a, a2);
              if ((agree == Bs.size()) != same || (agree > 0) != same) {
                return "coset membership criterion fails in the upper class "
                       + at(a, a2);
              }
            }
          }
          for (auto b : Bs) {
            for (auto b2 : Bs) {
              std::size_t agree = 0;
              for (auto a : As) {
                agree += S.meet(S.meet(a, b), a) == S.meet(S.meet(a, b2), a);
              }
              bool same = same_coset(down, b, b2);
              if ((agree == As.size()) != same || (agree > 0) != same) {
                return "coset membership criterion fails in the lower class "
                       + at(b, b2);
              }
            }
          }
        }
      }
      return std::nullopt;
    }

    std::optional<std::string> check_factor_transfer(Context const& c) {
      static std::vector<std::pair<std::string, CompiledFormula>> const lib = [] {
        std::vector<std::pair<std::string, CompiledFormula>> v;
        for (auto const& e : FormulaLibrary::bundled().entries()) {
          v.emplace_back(e.name, CompiledFormula(e.formula));
        }
        return v;
      }();
      auto const f = factors(c.S);
      for (auto const& [name, cf] : lib) {
        bool whole = cf.holds(c.S).holds;
        bool parts = cf.holds(f.left.tables).holds && cf.holds(f.right.tables).holds;
        if (whole != parts) {
          return name + " holds in " + (whole ? "S but not in both factors"
                                              : "both factors but not in S");
        }
      }
      return std::nullopt;
    }

    std::optional<std::string> check_update_maps(Context const& c) {
      for (auto k : {MapKind::update, MapKind::lower_update}) {
        if (!c.solution(k)) {
          return std::string(to_string(k)) + " map fails the braid relation";
        }
        if (!power_class(c.map(k)).idempotent) {
          return std::string(to_string(k)) + " map is not idempotent";
        }
      }
      auto const&       S = c.S;
      std::size_t const n = S.size();
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          element_type u = lower_update(S, x, y);
          if (lower_update(S, u, y) != u) {
            return "(x|_y_|)|_y_| != x|_y_| " + at(x, y);
          }
        }
      }
      return std::nullopt;
    }

    std::optional<std::string> check_update_composition(Context const& c) {
      auto const&       S = c.S;
      std::size_t const n = S.size();
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          for (element_type z = 0; z < n; ++z) {
            element_type yz = lower_update(S, y, z);
            if (lower_update(S, lower_update(S, x, y), yz)
                != lower_update(S, x, yz)) {
              return "(x|_y_|)|_y|_z_|_| != x|_y|_z_|_| " + at(x, y, z);
            }
          }
        }
      }
      return std::nullopt;
    }

    std::optional<std::string> check_upper_maps(Context const& c) {
      for (auto k : {MapKind::upper_update, MapKind::co_update}) {
        if (!c.solution(k)) {
          return std::string(to_string(k)) + " map fails the braid relation";
        }
        if (!power_class(c.map(k)).idempotent) {
          return std::string(to_string(k)) + " map is not idempotent";
        }
      }
      return std::nullopt;
    }

    std::optional<std::string> check_family_identities(Context const& c) {
      for (auto f : {SolutionFamily::strong,
                     SolutionFamily::left,
                     SolutionFamily::right,
                     SolutionFamily::weak}) {
        solution_identity_check(c.S, f);
      }
      return std::nullopt;
    }

    std::optional<std::string> check_coset_law(Context const& c) {
      auto const& S = c.S;
      if (!c.flag("simply_cancellative")) {
        return std::nullopt;
      }
      bool const  upper = c.flag("upper_symmetric");
      bool const  lower = c.flag("lower_symmetric");
      auto const  D     = d_relation(S);
      // x1, x2 in the same coset of the given direction
      auto same = [&](std::size_t hi, std::size_t lo, CosetDirection dir,
                      element_type x1, element_type x2) {
        for (auto const& co : cosets(S, hi, lo, dir)) {
          bool h1 = std::find(co.elements.begin(), co.elements.end(), x1)
                    != co.elements.end();
          if (h1) {
            return std::find(co.elements.begin(), co.elements.end(), x2)
                   != co.elements.end();
          }
        }
        return false;
      };
      auto sandwich = [&](auto op, element_type x, std::size_t cls) {
        std::set<element_type> out;
        for (auto b : D.elements(cls)) {
          for (auto b2 : D.elements(cls)) {
            out.insert(op(op(b, x), b2));
          }
        }
        return out;
      };
      auto join = [&](element_type a, element_type b) { return S.join(a, b); };
      auto meet = [&](element_type a, element_type b) { return S.meet(a, b); };
      for (auto const& d : skew_diamonds(S)) {
        for (auto [A, B] : {std::pair{d.left, d.right}, std::pair{d.right, d.left}}) {
          for (auto x1 : D.elements(A)) {
            for (auto x2 : D.elements(A)) {
              if (upper && sandwich(join, x1, B) == sandwich(join, x2, B)
                  && !same(A, d.bottom, CosetDirection::lower_in_upper, x1, x2)) {
                return "coset law (upper symmetric) fails " + at(x1, x2);
              }
              if (lower && sandwich(meet, x1, B) == sandwich(meet, x2, B)
                  && !same(d.top, A, CosetDirection::upper_in_lower, x1, x2)) {
                return "coset law (lower symmetric) fails " + at(x1, x2);
              }
            }
          }
        }
      }
      return std::nullopt;
    }

    bool is_example_algebra(SkewLattice const& S) {
      for (element_type x = 0; x < S.size(); ++x) {
        for (element_type y = 0; y < S.size(); ++y) {
          if (S.meet(x, y) != y || S.join(x, y) != x) {
            return false;
          }
        }
      }
      return true;
    }

    std::vector<AlgebraRow> algebra_rows() {
      std::vector<AlgebraRow> rows;
      rows.push_back({"dualities_and_regularity",
                      "the axioms imply both dualities and regularity",
                      [](Context const& c) {
                        validate(c.S.tables());
                        return fail_if(!validate(c.S.tables()).ok(),
                                       "tables rejected by validate");
                      }});
      rows.push_back({"natural_orders",
                      "<= is a partial order inside =<, and x =< y =< x iff x D y",
                      check_orders});
      rows.push_back({"green_relations",
                      "D, R, L of the meet band match D, L, R of the join band, "
                      "and D is the join of L and R",
                      check_green});
      rows.push_back({"rectangular_d_classes",
                      "each D-class is rectangular and an eggbox of its L- and "
                      "R-classes",
                      check_rectangular_classes});
      rows.push_back({"lattice_image_and_factors",
                      "D is a congruence with S/D a lattice, and S is the fibre "
                      "product of S/R and S/L over S/D",
                      check_decomposition});
      rows.push_back({"cosets",
                      "cosets partition their class, order bijections exist "
                      "between cosets, and the sandwich criterion decides "
                      "coset membership",
                      check_cosets});
      rows.push_back({"factor_transfer",
                      "a bundled formula holds in S iff it holds in S/R and S/L",
                      check_factor_transfer});
      rows.push_back({"variety_implications",
                      "classify: strong distributivity implications, cancellative "
                      "iff simply cancellative and symmetric, binormal",
                      [](Context const&) { return std::optional<std::string>(); }});
      rows.push_back({"simple_cancellation_nc5",
                      "simply cancellative iff quasi-distributive with no NC5 "
                      "subalgebra",
                      [](Context const& c) {
                        nc5_free(c.S);
                        return std::optional<std::string>();
                      }});
      rows.push_back({"left_handed_cancellation",
                      "for left handed S: left cancellative iff simply "
                      "cancellative and lower symmetric",
                      [](Context const& c) {
                        bool lh = c.flag("left_handed");
                        return fail_if(
                            lh
                                && c.flag("left_cancellative")
                                       != (c.flag("simply_cancellative")
                                           && c.flag("lower_symmetric")),
                            "left handed cancellation mismatch");
                      }});
      rows.push_back({"strong_implies_distributive",
                      "strongly or co-strongly distributive implies distributive",
                      [](Context const& c) {
                        return fail_if(
                            (c.flag("strongly_distributive")
                             || c.flag("co_strongly_distributive"))
                                && !c.flag("distributive"),
                            "strongly distributive but not distributive");
                      }});
      rows.push_back({"symmetric_distributive_laws",
                      "for symmetric S the two distributive identities agree",
                      [](Context const& c) {
                        auto const& lib = FormulaLibrary::bundled();
                        bool d1 = holds(c.S, lib.formula("D1")).holds;
                        bool d2 = holds(c.S, lib.formula("D2")).holds;
                        return fail_if(c.flag("symmetric") && d1 != d2,
                                       "D1 and D2 disagree on a symmetric algebra");
                      }});
      rows.push_back({"update_solutions",
                      "((x ^ y) v x, y) and (x|_y_|, y) are idempotent solutions, "
                      "and (x|_y_|)|_y_| = x|_y_|",
                      check_update_maps});
      rows.push_back({"update_operations",
                      "x|_y_| is the coset element of D_x above y ^ x ^ y with the "
                      "handed shortcuts, and dually for x|^y^|",
                      [](Context const& c) {
                        check_update_operations(c.S);
                        return std::optional<std::string>();
                      }});
      rows.push_back({"update_composition",
                      "(x|_y_|)|_y|_z_|_| = x|_y|_z_|_|",
                      check_update_composition});
      rows.push_back({"upper_update_solutions",
                      "(x, y|^x^|) and (x, (y v x) ^ y) are idempotent solutions",
                      check_upper_maps});
      rows.push_back({"family_identities_iff_braid",
                      "each family's identities hold iff its map satisfies the "
                      "braid relation",
                      check_family_identities});
      rows.push_back({"left_solutions",
                      "distributive and left cancellative iff r_L is a solution",
                      [](Context const& c) {
                        return fail_if(
                            (c.flag("distributive") && c.flag("left_cancellative"))
                                != c.solution(MapKind::left),
                            "left solution mismatch");
                      }});
      rows.push_back({"right_solutions",
                      "distributive and right cancellative iff r_R is a solution",
                      [](Context const& c) {
                        return fail_if(
                            (c.flag("distributive") && c.flag("right_cancellative"))
                                != c.solution(MapKind::right),
                            "right solution mismatch");
                      }});
      rows.push_back({"weak_solutions",
                      "distributive, simply cancellative and lower symmetric iff "
                      "r_W is a solution",
                      [](Context const& c) {
                        return fail_if(
                            (c.flag("distributive") && c.flag("simply_cancellative")
                             && c.flag("lower_symmetric"))
                                != c.solution(MapKind::weak),
                            "weak solution mismatch");
                      }});
      rows.push_back({"symmetric_solutions_agree",
                      "for symmetric S the left, right and weak maps are all "
                      "solutions or all not",
                      [](Context const& c) {
                        bool l = c.solution(MapKind::left);
                        return fail_if(c.flag("symmetric")
                                           && (l != c.solution(MapKind::right)
                                               || l != c.solution(MapKind::weak)),
                                       "verdicts differ on a symmetric algebra");
                      }});
      rows.push_back({"strong_cubic",
                      "strongly and co-strongly distributive S give a cubic "
                      "strong solution",
                      [](Context const& c) {
                        if (!c.flag("strongly_distributive")
                            || !c.flag("co_strongly_distributive")) {
                          return std::optional<std::string>();
                        }
                        return fail_if(!c.solution(MapKind::strong)
                                           || !power_class(c.map(MapKind::strong)).cubic,
                                       "strong map is not a cubic solution");
                      }});
      rows.push_back({"nondegenerate_strong_solutions",
                      "a strong solution that is left or right non-degenerate "
                      "has x ^ y = y and x v y = x",
                      [](Context const& c) {
                        if (!c.solution(MapKind::strong)) {
                          return std::optional<std::string>();
                        }
                        auto dg = degeneracy(c.map(MapKind::strong));
                        return fail_if((dg.left || dg.right) && !is_example_algebra(c.S),
                                       "non-degenerate strong solution of another kind");
                      }});
      rows.push_back({"coset_law",
                      "skew diamonds of simply cancellative S: B v x1 v B = "
                      "B v x2 v B gives M v x1 v M = M v x2 v M (upper "
                      "symmetric), B ^ x1 ^ B = B ^ x2 ^ B gives J ^ x1 ^ J = "
                      "J ^ x2 ^ J (lower symmetric)",
                      check_coset_law});
      rows.push_back({"weak_equals_handed_map",
                      "r_W = r_L on left handed S and r_W = r_R on right handed S",
                      [](Context const& c) {
                        auto const& w = c.map(MapKind::weak);
                        if (c.flag("left_handed") && w != c.map(MapKind::left)) {
                          return std::optional<std::string>("r_W != r_L");
                        }
                        return fail_if(c.flag("right_handed")
                                           && w != c.map(MapKind::right),
                                       "r_W != r_R");
                      }});
      rows.push_back({"lattice_solutions",
                      "on a lattice the strong, left, right and weak maps "
                      "coincide, and they are solutions iff it is distributive",
                      [](Context const& c) {
                        if (!c.flag("lattice")) {
                          return std::optional<std::string>();
                        }
                        auto const& s = c.map(MapKind::strong);
                        if (s != c.map(MapKind::left) || s != c.map(MapKind::right)
                            || s != c.map(MapKind::weak)) {
                          return std::optional<std::string>("maps differ on a lattice");
                        }
                        return fail_if(c.solution(MapKind::strong) != c.flag("distributive"),
                                       "lattice solution differs from distributivity");
                      }});
      return rows;
    }

    struct Tally {
      TheoremRow row;

      void record(std::string const& where, std::optional<std::string> const& f) {
        ++row.checked;
        if (f) {
          if (row.failures++ == 0) {
            row.first_failure = where + ": " + *f;
          }
        }
      }

      template <typename Fn>
      void run(std::string const& where, Fn&& fn) {
        try {
          record(where, fn());
        } catch (Error const& e) {
          record(where, std::string(e.what()));
        }
      }
    };

    // Checks shared by every generated algebra that should be a distributive
    // and cancellative source of left, right and weak solutions.
    std::optional<std::string> distributive_solution_checks(SkewLattice const& S) {
      if (!variety_flag(S, "distributive").value) {
        return "not distributive";
      }
      if (!variety_flag(S, "cancellative").value) {
        return "not cancellative";
      }
      for (auto k : {MapKind::left, MapKind::right, MapKind::weak}) {
        if (!braid_check(build_map(S, k)).pass()) {
          return std::string(to_string(k)) + " map is not a solution";
        }
      }
      return std::nullopt;
    }

    std::optional<std::string> chain_checks(ChainSpec const& spec) {
      SkewLattice const S = chain(spec);
      if (auto f = distributive_solution_checks(S)) {
        return f;
      }
      std::vector<std::size_t> cls;
      for (std::size_t i = 0; i < spec.sizes.size(); ++i) {
        cls.insert(cls.end(), spec.sizes[i], i);
      }
      for (element_type x = 0; x < S.size(); ++x) {
        for (element_type y = 0; y < S.size(); ++y) {
          if (cls[x] == cls[y] && (S.meet(x, y) != y || S.join(x, y) != x)) {
            return "class is not x ^ y = y, x v y = x " + at(x, y);
          }
          if (cls[x] != cls[y]
              && (S.meet(x, y) != S.meet(y, x) || S.join(x, y) != S.join(y, x))) {
            return "elements of different classes do not commute " + at(x, y);
          }
        }
      }
      auto const q = lattice_image(S);
      for (element_type a = 0; a < q.tables.size(); ++a) {
        for (element_type b = 0; b < q.tables.size(); ++b) {
          auto m = q.tables.meet(a, b);
          if (m != a && m != b) {
            return std::optional<std::string>("S/D is not a chain");
          }
        }
      }
      return std::nullopt;
    }

    std::string spec_text(ChainSpec const& spec) {
      std::string s = "chain ";
      for (std::size_t i = 0; i < spec.sizes.size(); ++i) {
        s += (i ? "," : "") + std::to_string(spec.sizes[i]);
      }
      return s;
    }
  }  // namespace

  std::vector<TheoremRow> run_theorems(std::size_t max_n, unsigned jobs) {
    auto const         rows = algebra_rows();
    std::vector<Tally> tallies(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      tallies[i].row.name      = rows[i].name;
      tallies[i].row.statement = rows[i].statement;
    }
    Tally census{{"census_canonical",
                  "enumerated algebras are lex-least in their isomorphism class, "
                  "pairwise non-isomorphic, and closed under opposite and dual",
                  0, 0, ""}};

    for (std::size_t n = 1; n <= max_n; ++n) {
      auto const                  all = all_skew_lattices(n, jobs);
      std::set<CayleyPair>        seen;
      for (auto const& S : all) {
        seen.insert(S.tables());
      }
      for (std::size_t i = 0; i < all.size(); ++i) {
        std::string const where = "n=" + std::to_string(n) + " #" + std::to_string(i);
        census.run(where, [&]() -> std::optional<std::string> {
          if (canonical_form(all[i].tables()) != all[i].tables()) {
            return "not in canonical form";
          }
          if (!seen.count(canonical_form(opposite(all[i]).tables()))
              || !seen.count(canonical_form(dual(all[i]).tables()))) {
            return "opposite or dual missing from the census";
          }
          return std::nullopt;
        });
        std::optional<Context> ctx;
        std::string            ctx_error;
        try {
          ctx.emplace(all[i], where);
        } catch (Error const& e) {
          ctx_error = e.what();
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
          if (!ctx) {
            tallies[r].record(where, ctx_error);
            continue;
          }
          tallies[r].run(where, [&] { return rows[r].check(*ctx); });
        }
      }
      if (seen.size() != all.size()) {
        census.record("n=" + std::to_string(n), "duplicate algebras");
      }
    }

    std::vector<TheoremRow> out;
    for (auto& t : tallies) {
      out.push_back(std::move(t.row));
    }
    out.push_back(std::move(census.row));

    Tally rt{{"formula_round_trip",
              "printing and re-parsing every bundled formula is the identity",
              0, 0, ""}};
    for (auto const& e : FormulaLibrary::bundled().entries()) {
      rt.run(e.name, [&] {
        return fail_if(!(parse_formula(to_string(e.formula)) == e.formula),
                       "round trip changes the formula");
      });
    }
    out.push_back(std::move(rt.row));

    Tally chains{{"chain_construction",
                  "skew chains are distributive, cancellative, rectangular with "
                  "x ^ y = y inside classes, commuting across classes, with S/D a "
                  "chain, and give left, right and weak solutions",
                  0, 0, ""}};
    // every composition of 1..max(max_n, 4)
    std::size_t const top = std::max<std::size_t>(max_n, 4);
    for (std::size_t total = 1; total <= top; ++total) {
      for (std::uint32_t cuts = 0; cuts < (1u << (total - 1)); ++cuts) {
        ChainSpec   spec;
        std::size_t run = 1;
        for (std::size_t i = 0; i + 1 < total; ++i) {
          if (cuts >> i & 1) {
            spec.sizes.push_back(run);
            run = 1;
          } else {
            ++run;
          }
        }
        spec.sizes.push_back(run);
        chains.run(spec_text(spec), [&] { return chain_checks(spec); });
      }
    }
    out.push_back(std::move(chains.row));

    Tally rect{{"rectangular_construction",
                "rectangular(a, b) has one D-class with factors of sizes a and b",
                0, 0, ""}};
    for (std::size_t a = 1; a <= 3; ++a) {
      for (std::size_t b = 1; b <= 3; ++b) {
        rect.run("rect " + std::to_string(a) + "x" + std::to_string(b), [&] {
          auto S = rectangular(a, b);
          auto f = factors(S);
          return fail_if(d_relation(S).number_of_classes() != 1
                             || f.left.tables.size() != a
                             || f.right.tables.size() != b,
                         "wrong class structure");
        });
      }
    }
    out.push_back(std::move(rect.row));

    Tally ring{{"ring_bands",
                "bands of idempotent 2x2 matrices over Z_2 closed under a join "
                "are distributive, cancellative and give left, right and weak "
                "solutions",
                0, 0, ""}};
    for (auto kind : {RingKind::upper_triangular, RingKind::full}) {
      RingSpec spec;
      spec.kind = kind;
      std::string const name = kind == RingKind::full ? "full" : "ut";
      RingBandResult     res;
      try {
        res = ring_band(spec);
      } catch (Error const& e) {
        ring.record(name, std::string(e.what()));
        continue;
      }
      for (std::size_t i = 0; i < res.algebras.size(); ++i) {
        ring.run(name + " #" + std::to_string(i), [&] {
          return distributive_solution_checks(res.algebras[i].algebra);
        });
      }
    }
    out.push_back(std::move(ring.row));
    return out;
  }

  std::string format_theorem_table(std::vector<TheoremRow> const& rows,
                                   bool                           tsv) {
    std::ostringstream os;
    if (tsv) {
      os << "theorem\tchecked\tfailures\tresult\tfirst_failure\n";
      for (auto const& r : rows) {
        os << r.name << '\t' << r.checked << '\t' << r.failures << '\t'
           << (r.pass() ? "PASS" : "FAIL") << '\t' << r.first_failure << '\n';
      }
      return os.str();
    }
    std::size_t width = 0;
    for (auto const& r : rows) {
      width = std::max(width, r.name.size());
    }
    for (auto const& r : rows) {
      os << r.name << std::string(width + 2 - r.name.size(), ' ')
         << (r.pass() ? "PASS" : "FAIL") << "  checked " << r.checked
         << "  failures " << r.failures;
      if (!r.pass()) {
        os << "  first: " << r.first_failure;
      }
      os << '\n';
    }
    return os.str();
  }

}  // namespace skewlat
