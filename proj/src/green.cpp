#include "skewlat/green.hpp"

#include <algorithm>  // for sort, unique
#include <map>        // for map
#include <set>        // for set
#include <sstream>    // for ostringstream

#include "skewlat/errors.hpp"

namespace skewlat {

  ////////////////////////////////////////////////////////////////////////
  // Partition
  ////////////////////////////////////////////////////////////////////////

  Partition::Partition(std::vector<std::size_t> const& label)
      : _class_of(label.size()) {
    std::map<std::size_t, std::size_t> renumber;
    for (std::size_t x = 0; x < label.size(); ++x) {
      auto [it, inserted] = renumber.emplace(label[x], _classes.size());
      if (inserted) {
        _classes.emplace_back();
      }
      _class_of[x] = it->second;
      _classes[it->second].push_back(static_cast<element_type>(x));
    }
  }

  Partition Partition::identity(std::size_t n) {
    std::vector<std::size_t> label(n);
    for (std::size_t i = 0; i < n; ++i) {
      label[i] = i;
    }
    return Partition(label);
  }

  Partition Partition::from_relation(
      std::size_t                                            n,
      std::function<bool(element_type, element_type)> const& rel) {
    std::vector<std::size_t> label(n, n);
    for (element_type x = 0; x < n; ++x) {
      if (label[x] != n) {
        continue;
      }
      label[x] = x;
      for (element_type y = x + 1; y < n; ++y) {
        if (label[y] == n && rel(x, y)) {
          label[y] = x;
        }
      }
    }
    return Partition(label);
  }

  bool Partition::refines(Partition const& that) const {
    for (auto const& cls : _classes) {
      for (auto x : cls) {
        if (!that.related(cls.front(), x)) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Green's relations
  ////////////////////////////////////////////////////////////////////////

  namespace {
    template <typename Op>
    Partition band_L(std::size_t n, Op op) {
      return Partition::from_relation(n, [&](element_type x, element_type y) {
        return op(x, y) == x && op(y, x) == y;
      });
    }

    template <typename Op>
    Partition band_R(std::size_t n, Op op) {
      return Partition::from_relation(n, [&](element_type x, element_type y) {
        return op(x, y) == y && op(y, x) == x;
      });
    }

    template <typename Op>
    Partition band_D(std::size_t n, Op op) {
      return Partition::from_relation(n, [&](element_type x, element_type y) {
        return op(op(x, y), x) == x && op(op(y, x), y) == y;
      });
    }
  }  // namespace

  Partition d_relation(SkewLattice const& S) {
    return band_D(S.size(), [&S](element_type a, element_type b) {
      return S.meet(a, b);
    });
  }

  GreenRelations green_relations(SkewLattice const& S) {
    std::size_t const n  = S.size();
    auto              mt = [&S](element_type a, element_type b) {
      return S.meet(a, b);
    };
    auto jn = [&S](element_type a, element_type b) {
      return S.join(a, b);
    };
    GreenRelations g{band_L(n, mt), band_R(n, mt), band_D(n, mt)};
    if (band_D(n, jn) != g.D) {
      throw InternalInconsistency("D of the meet band differs from D of the "
                                  "join band");
    }
    if (band_L(n, jn) != g.R || band_R(n, jn) != g.L) {
      throw InternalInconsistency("R_meet = L_join or R_join = L_meet failed");
    }
    return g;
  }

  bool is_left_handed(SkewLattice const& S) {
    bool ok = true;
    for (element_type x = 0; x < S.size() && ok; ++x) {
      for (element_type y = 0; y < S.size() && ok; ++y) {
        ok = S.meet(S.meet(x, y), x) == S.meet(x, y);
      }
    }
    auto g = green_relations(S);
    if (ok != (g.L == g.D)) {
      throw InternalInconsistency("left handedness identity disagrees with L = D");
    }
    return ok;
  }

  bool is_right_handed(SkewLattice const& S) {
    bool ok = true;
    for (element_type x = 0; x < S.size() && ok; ++x) {
      for (element_type y = 0; y < S.size() && ok; ++y) {
        ok = S.meet(S.meet(x, y), x) == S.meet(y, x);
      }
    }
    auto g = green_relations(S);
    if (ok != (g.R == g.D)) {
      throw InternalInconsistency(
          "right handedness identity disagrees with R = D");
    }
    return ok;
  }

  ////////////////////////////////////////////////////////////////////////
  // Quotients and factors
  ////////////////////////////////////////////////////////////////////////

  QuotientAlgebra quotient(SkewLattice const& S, Partition const& P) {
    std::size_t const n = S.size();
    if (P.size() != n) {
      throw InvalidArgument("partition is on " + std::to_string(P.size())
                            + " elements, algebra has " + std::to_string(n));
    }
    // Exhaustive compatibility check: x ~ x' implies x*y ~ x'*y, y*x ~ y*x'.
    for (auto const& cls : P.classes()) {
      element_type const x = cls.front();
      for (auto xp : cls) {
        for (element_type y = 0; y < n; ++y) {
          if (!P.related(S.meet(x, y), S.meet(xp, y))
              || !P.related(S.meet(y, x), S.meet(y, xp))
              || !P.related(S.join(x, y), S.join(xp, y))
              || !P.related(S.join(y, x), S.join(y, xp))) {
            throw NotACongruence("partition is not a congruence: "
                                     + std::to_string(x) + " ~ "
                                     + std::to_string(xp)
                                     + " but their products with "
                                     + std::to_string(y) + " are unrelated",
                                 {x, xp});
          }
        }
      }
    }
    std::size_t const         k = P.number_of_classes();
    std::vector<element_type> m(k * k), j(k * k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        element_type x = P.elements(a).front(), y = P.elements(b).front();
        m[a * k + b]   = static_cast<element_type>(P.class_of(S.meet(x, y)));
        j[a * k + b]   = static_cast<element_type>(P.class_of(S.join(x, y)));
      }
    }
    QuotientAlgebra q{S, P, make_skew_lattice(CayleyPair(k, m, j))};
    if (P == d_relation(S) && !is_lattice(q.tables)) {
      throw InternalInconsistency("S/D is not a lattice");
    }
    return q;
  }

  QuotientAlgebra lattice_image(SkewLattice const& S) {
    return quotient(S, d_relation(S));
  }

  Factors factors(SkewLattice const& S) {
    auto            g = green_relations(S);
    QuotientAlgebra left  = quotient(S, g.R);
    QuotientAlgebra right = quotient(S, g.L);
    if (!is_left_handed(left.tables)) {
      throw InternalInconsistency("S/R is not left handed");
    }
    if (!is_right_handed(right.tables)) {
      throw InternalInconsistency("S/L is not right handed");
    }
    // x -> ([x]_R, [x]_L) must be a bijection onto
    // {(p, q) : p and q lie over the same D-class}.
    std::set<std::pair<std::size_t, std::size_t>> image;
    for (element_type x = 0; x < S.size(); ++x) {
      image.emplace(g.R.class_of(x), g.L.class_of(x));
    }
    if (image.size() != S.size()) {
      throw InternalInconsistency("x -> ([x]_R, [x]_L) is not injective");
    }
    std::size_t fibre = 0;
    for (auto const& rc : g.R.classes()) {
      for (auto const& lc : g.L.classes()) {
        if (g.D.related(rc.front(), lc.front())) {
          ++fibre;
          if (!image.count({g.R.class_of(rc.front()),
                            g.L.class_of(lc.front())})) {
            throw InternalInconsistency(
                "fibre product element not in the image of S");
          }
        }
      }
    }
    if (fibre != image.size()) {
      throw InternalInconsistency("image of S is not the fibre product");
    }
    return {std::move(left), std::move(right)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Cosets and diamonds
  ////////////////////////////////////////////////////////////////////////

  bool class_geq(SkewLattice const& S,
                 Partition const&   D,
                 std::size_t        upper,
                 std::size_t        lower) {
    element_type a = D.elements(upper).front();
    element_type b = D.elements(lower).front();
    return preceq(S, b, a);
  }

  std::vector<Coset> cosets(SkewLattice const& S,
                            std::size_t        A,
                            std::size_t        B,
                            CosetDirection     direction) {
    auto D = d_relation(S);
    if (A >= D.number_of_classes() || B >= D.number_of_classes()) {
      throw InvalidArgument("class id out of range");
    }
    if (A == B || !class_geq(S, D, A, B)) {
      throw InvalidArgument("cosets need D-classes A > B; classes "
                            + std::to_string(A) + " and " + std::to_string(B)
                            + " are not comparable that way");
    }
    auto const& upper = D.elements(A);
    auto const& lower = D.elements(B);

    std::set<std::vector<element_type>> found;
    if (direction == CosetDirection::upper_in_lower) {
      for (auto b : lower) {
        std::set<element_type> c;
        for (auto a : upper) {
          for (auto ap : upper) {
            c.insert(S.meet(S.meet(a, b), ap));
          }
        }
        found.emplace(c.begin(), c.end());
      }
    } else {
      for (auto a : upper) {
        std::set<element_type> c;
        for (auto b : lower) {
          for (auto bp : lower) {
            c.insert(S.join(S.join(b, a), bp));
          }
        }
        found.emplace(c.begin(), c.end());
      }
    }
    std::vector<Coset> result;
    std::size_t        total = 0;
    for (auto const& c : found) {
      total += c.size();
      result.push_back({A, B, direction, c});
    }
    std::sort(result.begin(), result.end(), [](Coset const& x, Coset const& y) {
      return x.elements.front() < y.elements.front();
    });
    auto const& target
        = direction == CosetDirection::upper_in_lower ? lower : upper;
    if (total != target.size()) {
      throw InternalInconsistency("cosets do not partition the target class");
    }
    return result;
  }

  std::vector<std::pair<element_type, element_type>>
  coset_bijection(SkewLattice const& S,
                  Coset const&       in_upper,
                  Coset const&       in_lower) {
    if (in_upper.direction != CosetDirection::lower_in_upper
        || in_lower.direction != CosetDirection::upper_in_lower) {
      throw InvalidArgument("coset_bijection expects a coset of B in A and a "
                            "coset of A in B");
    }
    std::vector<std::pair<element_type, element_type>> phi;
    std::set<element_type>                             used;
    for (auto x : in_upper.elements) {
      std::vector<element_type> below;
      for (auto y : in_lower.elements) {
        if (leq(S, y, x)) {
          below.push_back(y);
        }
      }
      if (below.size() != 1) {
        throw InternalInconsistency("element " + std::to_string(x) + " lies above "
                                    + std::to_string(below.size())
                                    + " elements of the lower coset");
      }
      if (!used.insert(below.front()).second) {
        throw InternalInconsistency("coset map is not injective");
      }
      phi.emplace_back(x, below.front());
    }
    if (used.size() != in_lower.elements.size()) {
      throw InternalInconsistency("coset map is not surjective");
    }
    return phi;
  }

  std::vector<SkewDiamond> skew_diamonds(SkewLattice const& S) {
    auto                     D = d_relation(S);
    std::size_t const        k = D.number_of_classes();
    std::vector<SkewDiamond> result;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        if (class_geq(S, D, a, b) || class_geq(S, D, b, a)) {
          continue;
        }
        element_type x = D.elements(a).front(), y = D.elements(b).front();
        result.push_back({D.class_of(S.join(x, y)), a, b,
                          D.class_of(S.meet(x, y))});
      }
    }
    return result;
  }

  std::vector<std::pair<std::size_t, std::size_t>>
  hasse_edges(SkewLattice const& S) {
    auto              D = d_relation(S);
    std::size_t const k = D.number_of_classes();
    auto              gt = [&](std::size_t u, std::size_t l) {
      return u != l && class_geq(S, D, u, l);
    };
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < k; ++u) {
      for (std::size_t l = 0; l < k; ++l) {
        if (!gt(u, l)) {
          continue;
        }
        bool covers = true;
        for (std::size_t m = 0; m < k && covers; ++m) {
          covers = !(gt(u, m) && gt(m, l));
        }
        if (covers) {
          edges.emplace_back(u, l);
        }
      }
    }
    return edges;
  }

  std::string structure_report(SkewLattice const& S, bool tsv) {
    auto               g     = green_relations(S);
    auto               edges = hasse_edges(S);
    auto               dia   = skew_diamonds(S);
    bool const         lh    = is_left_handed(S);
    bool const         rh    = is_right_handed(S);
    std::ostringstream os;

    auto count_in = [](Partition const& P, std::vector<element_type> const& cls) {
      std::set<std::size_t> ids;
      for (auto x : cls) {
        ids.insert(P.class_of(x));
      }
      return ids.size();
    };
    auto join_elems = [](std::vector<element_type> const& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
      }
      return s;
    };

    if (tsv) {
      os << "key\tvalue\n";
      os << "size\t" << S.size() << "\n";
      os << "d_classes\t" << g.D.number_of_classes() << "\n";
      for (std::size_t c = 0; c < g.D.number_of_classes(); ++c) {
        auto const& cls = g.D.elements(c);
        os << "class_" << c << "\t" << join_elems(cls) << "\t"
           << count_in(g.R, cls) << "x" << count_in(g.L, cls) << "\n";
      }
      os << "left_handed\t" << (lh ? "true" : "false") << "\n";
      os << "right_handed\t" << (rh ? "true" : "false") << "\n";
      for (auto [u, l] : edges) {
        os << "edge\t" << u << "\t" << l << "\n";
      }
      for (auto const& d : dia) {
        os << "diamond\t" << d.top << "\t" << d.left << "\t" << d.right << "\t"
           << d.bottom << "\n";
      }
      return os.str();
    }

    os << "size: " << S.size() << "\n";
    os << "D-classes: " << g.D.number_of_classes() << "\n";
    for (std::size_t c = 0; c < g.D.number_of_classes(); ++c) {
      auto const& cls = g.D.elements(c);
      os << "  D" << c << " = {" << join_elems(cls) << "}  eggbox "
         << count_in(g.R, cls) << " R-classes x " << count_in(g.L, cls)
         << " L-classes\n";
    }
    os << "left handed: " << (lh ? "yes" : "no") << "\n";
    os << "right handed: " << (rh ? "yes" : "no") << "\n";
    os << "S/D Hasse edges (upper > lower):";
    if (edges.empty()) {
      os << " none";
    }
    os << "\n";
    for (auto [u, l] : edges) {
      os << "  D" << u << " > D" << l << "\n";
    }
    os << "skew diamonds: " << dia.size() << "\n";
    for (auto const& d : dia) {
      os << "  {D" << d.top << " > D" << d.left << ", D" << d.right << " > D"
         << d.bottom << "}\n";
    }
    return os.str();
  }

}  // namespace skewlat
