#include "oracle.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

  namespace {
    using Law = std::function<bool(CayleyPair const&, element_type, element_type,
                                   element_type)>;

    element_type m(CayleyPair const& t, element_type a, element_type b) {
      return t.meet(a, b);
    }
    element_type j(CayleyPair const& t, element_type a, element_type b) {
      return t.join(a, b);
    }
  }  // namespace

  bool is_skew_lattice(CayleyPair const& t) {
    std::size_t const n = t.size();
    for (element_type x = 0; x < n; ++x) {
      if (m(t, x, x) != x || j(t, x, x) != x) {
        return false;
      }
      for (element_type y = 0; y < n; ++y) {
        if (m(t, x, j(t, x, y)) != x || m(t, j(t, y, x), x) != x
            || j(t, x, m(t, x, y)) != x || j(t, m(t, y, x), x) != x) {
          return false;
        }
        for (element_type z = 0; z < n; ++z) {
          if (m(t, m(t, x, y), z) != m(t, x, m(t, y, z))
              || j(t, j(t, x, y), z) != j(t, x, j(t, y, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::pair<std::vector<element_type>, std::vector<element_type>>
  canonical(CayleyPair const& t) {
    std::size_t const         n = t.size();
    std::vector<element_type> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::pair<std::vector<element_type>, std::vector<element_type>> best;
    bool first = true;
    do {
      // relabel x -> p[x]
      std::vector<element_type> mt(n * n), jt(n * n);
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          mt[p[x] * n + p[y]] = p[t.meet(x, y)];
          jt[p[x] * n + p[y]] = p[t.join(x, y)];
        }
      }
      auto cand = std::make_pair(mt, jt);
      if (first || cand < best) {
        best  = cand;
        first = false;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
  }

  std::vector<CayleyPair> census(std::size_t n) {
    std::size_t const free_cells = n * n - n;
    std::size_t       total      = 1;
    for (std::size_t i = 0; i < free_cells; ++i) {
      total *= n;
    }
    auto fill = [&](std::size_t code) {
      std::vector<element_type> t(n * n);
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          if (x == y) {
            t[x * n + y] = x;
          } else {
            t[x * n + y] = static_cast<element_type>(code % n);
            code /= n;
          }
        }
      }
      return t;
    };
    std::set<std::pair<std::vector<element_type>, std::vector<element_type>>> seen;
    for (std::size_t a = 0; a < total; ++a) {
      auto mt = fill(a);
      for (std::size_t b = 0; b < total; ++b) {
        CayleyPair t(n, mt, fill(b));
        if (is_skew_lattice(t)) {
          seen.insert(canonical(t));
        }
      }
    }
    std::vector<CayleyPair> out;
    for (auto const& [mt, jt] : seen) {
      out.emplace_back(n, mt, jt);
    }
    return out;
  }

  std::optional<std::array<element_type, 3>> braid_failure(std::size_t n,
                                                           Map const&  r) {
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        for (element_type z = 0; z < n; ++z) {
          // (r x id)(id x r)(r x id)
          auto [a, b]  = r(x, y);
          auto [c, d]  = r(b, z);
          auto [e, f]  = r(a, c);
          // (id x r)(r x id)(id x r)
          auto [p, q]  = r(y, z);
          auto [s, tt] = r(x, p);
          auto [u, w]  = r(tt, q);
          if (e != s || f != u || d != w) {
            return std::array<element_type, 3>{x, y, z};
          }
        }
      }
    }
    return std::nullopt;
  }

  bool holds3(CayleyPair const& t, Law const& law) {
    std::size_t const n = t.size();
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        for (element_type z = 0; z < n; ++z) {
          if (!law(t, x, y, z)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool distributive(CayleyPair const& t) {
    return holds3(t, [](CayleyPair const& s, element_type x, element_type y,
                        element_type z) {
      return m(s, m(s, x, j(s, y, z)), x)
                 == j(s, m(s, m(s, x, y), x), m(s, m(s, x, z), x))
             && j(s, j(s, x, m(s, y, z)), x)
                    == m(s, j(s, j(s, x, y), x), j(s, j(s, x, z), x));
    });
  }

  bool left_cancellative(CayleyPair const& t) {
    return holds3(t, [](CayleyPair const& s, element_type x, element_type y,
                        element_type z) {
      return !(j(s, x, y) == j(s, x, z) && m(s, x, y) == m(s, x, z)) || y == z;
    });
  }

  bool right_cancellative(CayleyPair const& t) {
    return holds3(t, [](CayleyPair const& s, element_type x, element_type y,
                        element_type z) {
      return !(j(s, x, z) == j(s, y, z) && m(s, x, z) == m(s, y, z)) || x == y;
    });
  }

  bool simply_cancellative(CayleyPair const& t) {
    return holds3(t, [](CayleyPair const& s, element_type x, element_type y,
                        element_type z) {
      return !(j(s, j(s, x, z), x) == j(s, j(s, y, z), y)
               && m(s, m(s, x, z), x) == m(s, m(s, y, z), y))
             || x == y;
    });
  }

  bool lower_symmetric(CayleyPair const& t) {
    return holds3(t, [](CayleyPair const& s, element_type x, element_type y,
                        element_type) {
      return j(s, x, y) != j(s, y, x) || m(s, x, y) == m(s, y, x);
    });
  }

  bool upper_symmetric(CayleyPair const& t) {
    return holds3(t, [](CayleyPair const& s, element_type x, element_type y,
                        element_type) {
      return m(s, x, y) != m(s, y, x) || j(s, x, y) == j(s, y, x);
    });
  }

  bool strongly_distributive(CayleyPair const& t) {
    return holds3(t, [](CayleyPair const& s, element_type x, element_type y,
                        element_type z) {
      return m(s, j(s, x, y), z) == j(s, m(s, x, z), m(s, y, z))
             && m(s, x, j(s, y, z)) == j(s, m(s, x, y), m(s, x, z));
    });
  }

  bool co_strongly_distributive(CayleyPair const& t) {
    return holds3(t, [](CayleyPair const& s, element_type x, element_type y,
                        element_type z) {
      return j(s, m(s, x, y), z) == m(s, j(s, x, z), j(s, y, z))
             && j(s, x, m(s, y, z)) == m(s, j(s, x, y), j(s, x, z));
    });
  }

}  // namespace oracle
