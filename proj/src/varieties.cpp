#include "skewlat/varieties.hpp"

#include <algorithm>  // for next_permutation
#include <map>        // for map
#include <numeric>    // for iota
#include <sstream>    // for ostringstream

#include "skewlat/constructions.hpp"
#include "skewlat/errors.hpp"
#include "skewlat/green.hpp"
#include "skewlat/library.hpp"
#include "skewlat/term.hpp"

namespace skewlat {

  namespace {
    // Each flag that is a plain conjunction of library formulas.
    std::vector<std::pair<std::string_view, std::vector<std::string_view>>> const&
    conjunctions() {
      static std::vector<std::pair<std::string_view, std::vector<std::string_view>>> const t = {
          {"distributive", {"D1", "D2"}},
          {"cancellative", {"C1", "C2"}},
          {"left_cancellative", {"C1"}},
          {"right_cancellative", {"C2"}},
          {"simply_cancellative", {"simple-canc"}},
          {"symmetric", {"upper-sym", "lower-sym"}},
          {"upper_symmetric", {"upper-sym"}},
          {"lower_symmetric", {"lower-sym"}},
          {"normal", {"normal"}},
          {"conormal", {"conormal"}},
          {"binormal", {"normal", "conormal"}},
          {"strongly_distributive", {"sd1", "sd2"}},
          {"co_strongly_distributive", {"csd1", "csd2"}},
          {"left_handed", {"left-handed"}},
          {"right_handed", {"right-handed"}},
          {"rectangular", {"rect-meet", "rect-join"}},
          {"lattice", {"meet-comm", "join-comm"}},
      };
      return t;
    }

    CompiledFormula const& compiled(std::string_view name) {
      static std::map<std::string, CompiledFormula, std::less<>> const cache = [] {
        std::map<std::string, CompiledFormula, std::less<>> m;
        for (auto const& e : FormulaLibrary::bundled().entries()) {
          m.emplace(e.name, CompiledFormula(e.formula));
        }
        return m;
      }();
      auto it = cache.find(name);
      if (it == cache.end()) {
        throw InvalidArgument("bundled library lacks formula " + std::string(name));
      }
      return it->second;
    }

    template <BinaryAlgebra A>
    Flag conjunction(A const&                              alg,
                     std::vector<std::string_view> const& names,
                     std::string const&                   where = "") {
      Flag f;
      f.value = true;
      for (auto name : names) {
        auto r = compiled(name).holds(alg);
        if (!r) {
          f.value   = false;
          f.witness = Witness{std::string(name), r.counterexample, where};
          return f;
        }
      }
      return f;
    }

    Flag quasi_distributive(SkewLattice const& S) {
      auto q = lattice_image(S);
      // one distributive law suffices for lattices
      return conjunction(q.tables, {"sd2"}, "S/D");
    }

    template <typename T>
    void require(bool cond, T const& msg) {
      if (!cond) {
        throw InternalInconsistency(msg);
      }
    }
  }  // namespace

  std::vector<std::string_view> const& VarietyReport::flag_names() {
    static std::vector<std::string_view> const names = {
        "distributive",          "quasi_distributive",
        "cancellative",          "left_cancellative",
        "right_cancellative",    "simply_cancellative",
        "symmetric",             "upper_symmetric",
        "lower_symmetric",       "normal",
        "conormal",              "binormal",
        "strongly_distributive", "co_strongly_distributive",
        "left_handed",           "right_handed",
        "rectangular",           "lattice"};
    return names;
  }

  Flag const& VarietyReport::operator[](std::string_view name) const {
    Flag const* fields[] = {&distributive,
                            &quasi_distributive,
                            &cancellative,
                            &left_cancellative,
                            &right_cancellative,
                            &simply_cancellative,
                            &symmetric,
                            &upper_symmetric,
                            &lower_symmetric,
                            &normal,
                            &conormal,
                            &binormal,
                            &strongly_distributive,
                            &co_strongly_distributive,
                            &left_handed,
                            &right_handed,
                            &rectangular,
                            &lattice};
    auto const& names = flag_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) {
        return *fields[i];
      }
    }
    throw InvalidArgument("unknown variety flag '" + std::string(name) + "'");
  }

  bool is_variety_flag(std::string_view name) {
    auto const& names = VarietyReport::flag_names();
    return std::find(names.begin(), names.end(), name) != names.end();
  }

  std::vector<std::string_view> const& variety_formulas(std::string_view name) {
    static std::vector<std::string_view> const none;
    if (name == "quasi_distributive") {
      return none;
    }
    for (auto const& [flag, formulas] : conjunctions()) {
      if (flag == name) {
        return formulas;
      }
    }
    throw InvalidArgument("unknown variety flag '" + std::string(name) + "'");
  }

  Flag variety_flag(SkewLattice const& S, std::string_view name) {
    if (name == "quasi_distributive") {
      return quasi_distributive(S);
    }
    for (auto const& [flag, formulas] : conjunctions()) {
      if (flag == name) {
        return conjunction(S, formulas);
      }
    }
    throw InvalidArgument("unknown variety flag '" + std::string(name) + "'");
  }

  VarietyReport classify(SkewLattice const& S) {
    VarietyReport r;
    for (auto name : VarietyReport::flag_names()) {
      const_cast<Flag&>(r[name]) = variety_flag(S, name);
    }
    bool const sd  = r.strongly_distributive.value;
    bool const csd = r.co_strongly_distributive.value;
    require(!sd || r.distributive.value,
            "strongly distributive but not distributive");
    require(!csd || r.distributive.value,
            "co-strongly distributive but not distributive");
    require(!sd
                || (r.symmetric.value && r.quasi_distributive.value
                    && r.normal.value),
            "strongly distributive but not symmetric, quasi-distributive and "
            "normal");
    require(r.cancellative.value
                == (r.simply_cancellative.value && r.symmetric.value),
            "cancellative differs from simply cancellative and symmetric");
    require(!r.cancellative.value || r.quasi_distributive.value,
            "cancellative but not quasi-distributive");
    require(r.binormal.value == (r.normal.value && r.conormal.value),
            "binormal differs from normal and conormal");
    require(r.symmetric.value
                == (r.upper_symmetric.value && r.lower_symmetric.value),
            "symmetric differs from upper and lower symmetric");
    require(!r.distributive.value || r.quasi_distributive.value,
            "distributive but not quasi-distributive");
    return r;
  }

  std::string format_variety_report(VarietyReport const& r,
                                    bool                 tsv,
                                    bool                 with_witnesses) {
    std::ostringstream os;
    if (tsv) {
      os << "flag\tvalue\tformula\twitness\n";
    }
    for (auto name : VarietyReport::flag_names()) {
      Flag const& f = r[name];
      if (tsv) {
        os << name << '\t' << (f.value ? "true" : "false") << '\t';
        if (with_witnesses && f.witness) {
          os << f.witness->formula << '\t'
             << (f.witness->where.empty() ? "" : f.witness->where + ": ")
             << format_assignment(f.witness->assignment);
        } else {
          os << '\t';
        }
        os << '\n';
        continue;
      }
      os << name << ": " << (f.value ? "true" : "false");
      if (with_witnesses && f.witness) {
        os << "  [" << f.witness->formula << " fails at "
           << (f.witness->where.empty() ? "" : f.witness->where + " ")
           << format_assignment(f.witness->assignment) << "]";
      }
      os << '\n';
    }
    return os.str();
  }

  namespace {
    // Returns perm with sub[perm[i]] playing the role of pattern element i.
    std::optional<std::vector<std::size_t>>
    find_isomorphism(SkewLattice const&               S,
                     std::vector<element_type> const& sub,
                     SkewLattice const&               pattern) {
      std::size_t const        k = sub.size();
      std::vector<std::size_t> perm(k);
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<std::size_t> pos(S.size(), k);
      do {
        for (std::size_t i = 0; i < k; ++i) {
          pos[sub[perm[i]]] = i;
        }
        bool ok = true;
        for (element_type a = 0; a < k && ok; ++a) {
          for (element_type b = 0; b < k && ok; ++b) {
            element_type x = sub[perm[a]], y = sub[perm[b]];
            ok = pos[S.meet(x, y)] == pattern.meet(a, b)
                 && pos[S.join(x, y)] == pattern.join(a, b);
          }
        }
        if (ok) {
          return perm;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      return std::nullopt;
    }
  }  // namespace

  Nc5Result nc5_free(SkewLattice const& S) {
    static SkewLattice const nc5r = fixed("NC5R");
    static SkewLattice const nc5l = fixed("NC5L");

    Nc5Result         result;
    std::size_t const n = S.size();
    if (n >= 5) {
      std::vector<element_type> sub(5);
      // lexicographic 5-subsets
      std::vector<std::size_t> idx = {0, 1, 2, 3, 4};
      while (result.free) {
        for (std::size_t i = 0; i < 5; ++i) {
          sub[i] = static_cast<element_type>(idx[i]);
        }
        bool closed = true;
        for (auto x : sub) {
          for (auto y : sub) {
            auto in = [&sub](element_type e) {
              return std::find(sub.begin(), sub.end(), e) != sub.end();
            };
            if (!in(S.meet(x, y)) || !in(S.join(x, y))) {
              closed = false;
              break;
            }
          }
          if (!closed) {
            break;
          }
        }
        if (closed) {
          for (auto const* pat : {&nc5r, &nc5l}) {
            if (auto perm = find_isomorphism(S, sub, *pat)) {
              result.free  = false;
              result.which = pat == &nc5r ? "NC5R" : "NC5L";
              for (auto p : *perm) {
                result.embedding.push_back(sub[p]);
              }
              break;
            }
          }
        }
        // next combination
        int i = 4;
        while (i >= 0 && idx[i] == n - 5 + i) {
          --i;
        }
        if (i < 0) {
          break;
        }
        ++idx[i];
        for (std::size_t j = i + 1; j < 5; ++j) {
          idx[j] = idx[j - 1] + 1;
        }
      }
    }
    bool const sc = variety_flag(S, "simply_cancellative").value;
    if (sc != (result.free && variety_flag(S, "quasi_distributive").value)) {
      throw InternalInconsistency(
          "NC5 subalgebra search disagrees with simple cancellativity");
    }
    return result;
  }

}  // namespace skewlat
