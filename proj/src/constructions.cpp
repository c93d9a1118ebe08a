#include "skewlat/constructions.hpp"

#include <algorithm>  // for sort, find
#include <deque>      // for deque
#include <map>        // for map
#include <set>        // for set
#include <sstream>    // for ostringstream

#include "skewlat/errors.hpp"
#include "skewlat/green.hpp"
#include "skewlat/varieties.hpp"

namespace skewlat {

  namespace {
    void require(bool cond, std::string const& msg) {
      if (!cond) {
        throw InternalInconsistency(msg);
      }
    }

    void require_distributive_cancellative(SkewLattice const& S,
                                           std::string const& what) {
      require(variety_flag(S, "distributive").value,
              what + " is not distributive");
      require(variety_flag(S, "cancellative").value,
              what + " is not cancellative");
    }
  }  // namespace

  SkewLattice chain(ChainSpec const& spec) {
    if (spec.sizes.empty()) {
      throw InvalidArgument("chain needs at least one class");
    }
    std::vector<std::size_t> cls;
    for (std::size_t i = 0; i < spec.sizes.size(); ++i) {
      if (spec.sizes[i] == 0) {
        throw InvalidArgument("chain class " + std::to_string(i)
                              + " is empty");
      }
      cls.insert(cls.end(), spec.sizes[i], i);
    }
    std::size_t const         n = cls.size();
    std::vector<element_type> meet(n * n), join(n * n);
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        bool below           = cls[x] < cls[y];
        meet[x * n + y]      = below ? x : y;
        join[x * n + y]      = below ? y : x;
      }
    }
    SkewLattice S = make_skew_lattice(CayleyPair(n, meet, join));
    require(d_relation(S) == Partition(cls),
            "chain D-classes differ from the given classes");
    require_distributive_cancellative(S, "chain");
    return S;
  }

  SkewLattice rectangular(std::size_t left, std::size_t right) {
    if (left == 0 || right == 0) {
      throw InvalidArgument("rectangular factors must be non-empty");
    }
    std::size_t const         n = left * right;
    std::vector<element_type> meet(n * n), join(n * n);
    for (std::size_t a = 0; a < left; ++a) {
      for (std::size_t b = 0; b < right; ++b) {
        for (std::size_t c = 0; c < left; ++c) {
          for (std::size_t d = 0; d < right; ++d) {
            std::size_t x = a * right + b, y = c * right + d;
            meet[x * n + y] = static_cast<element_type>(a * right + d);
            join[x * n + y] = static_cast<element_type>(c * right + b);
          }
        }
      }
    }
    return make_skew_lattice(CayleyPair(n, meet, join));
  }

  std::vector<std::string_view> const& fixed_names() {
    static std::vector<std::string_view> const names
        = {"3R0", "3R1", "NC5R", "NC5L"};
    return names;
  }

  SkewLattice fixed(std::string_view name) {
    if (name == "3R0") {
      return make_skew_lattice(CayleyPair::from_rows(
          {{0, 0, 0}, {0, 1, 2}, {0, 1, 2}}, {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}));
    }
    if (name == "3R1") {
      return make_skew_lattice(CayleyPair::from_rows(
          {{0, 0, 2}, {0, 1, 2}, {0, 2, 2}}, {{0, 1, 0}, {1, 1, 1}, {2, 1, 2}}));
    }
    if (name == "NC5R" || name == "NC5L") {
      // m = 0, a1 = 1, a2 = 2, b = 3, j = 4
      SkewLattice nc5r = make_skew_lattice(
          CayleyPair::from_rows({{0, 0, 0, 0, 0},
                                 {0, 1, 2, 0, 1},
                                 {0, 1, 2, 0, 2},
                                 {0, 0, 0, 3, 3},
                                 {0, 1, 2, 3, 4}},
                                {{0, 1, 2, 3, 4},
                                 {1, 1, 1, 4, 4},
                                 {2, 2, 2, 4, 4},
                                 {3, 4, 4, 3, 4},
                                 {4, 4, 4, 4, 4}}));
      return name == "NC5R" ? nc5r : opposite(nc5r);
    }
    throw InvalidArgument("unknown fixed algebra '" + std::string(name)
                          + "', expected one of 3R0, 3R1, NC5R, NC5L");
  }

  SkewLattice direct_product(SkewLattice const& S, SkewLattice const& T) {
    std::size_t const         s = S.size(), t = T.size(), n = s * t;
    std::vector<element_type> meet(n * n), join(n * n);
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        element_type x1 = x / t, x2 = x % t, y1 = y / t, y2 = y % t;
        meet[x * n + y] = S.meet(x1, y1) * t + T.meet(x2, y2);
        join[x * n + y] = S.join(x1, y1) * t + T.join(x2, y2);
      }
    }
    return make_skew_lattice(CayleyPair(n, meet, join));
  }

  std::vector<Subalgebra> subalgebras(SkewLattice const& S,
                                      std::size_t        max_size) {
    std::size_t const n = S.size();
    if (n > 24) {
      throw LimitExceeded("subalgebras supports at most 24 elements");
    }
    std::vector<std::vector<element_type>> found;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) > max_size) {
        continue;
      }
      std::vector<element_type> elts;
      for (element_type x = 0; x < n; ++x) {
        if (mask >> x & 1) {
          elts.push_back(x);
        }
      }
      bool closed = true;
      for (auto x : elts) {
        for (auto y : elts) {
          if (!(mask >> S.meet(x, y) & 1) || !(mask >> S.join(x, y) & 1)) {
            closed = false;
            break;
          }
        }
        if (!closed) {
          break;
        }
      }
      if (closed) {
        found.push_back(std::move(elts));
      }
    }
    std::sort(found.begin(), found.end(), [](auto const& a, auto const& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<Subalgebra> out;
    for (auto& elts : found) {
      std::size_t const         k = elts.size();
      std::vector<element_type> pos(n, 0);
      for (std::size_t i = 0; i < k; ++i) {
        pos[elts[i]] = static_cast<element_type>(i);
      }
      std::vector<element_type> meet(k * k), join(k * k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          meet[i * k + j] = pos[S.meet(elts[i], elts[j])];
          join[i * k + j] = pos[S.join(elts[i], elts[j])];
        }
      }
      out.push_back({elts, make_skew_lattice(CayleyPair(k, meet, join))});
    }
    return out;
  }

  std::string_view to_string(JoinKind k) {
    return k == JoinKind::quadratic ? "quadratic" : "cubic";
  }

  std::string format_matrix(Matrix const& m, std::size_t dim) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < dim; ++i) {
      os << (i == 0 ? "[" : " [");
      for (std::size_t j = 0; j < dim; ++j) {
        os << (j == 0 ? "" : " ") << m[i * dim + j];
      }
      os << ']';
    }
    os << ']';
    return os.str();
  }

  namespace {
    bool is_prime(std::uint32_t p) {
      if (p < 2) {
        return false;
      }
      for (std::uint32_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
          return false;
        }
      }
      return true;
    }

    class MatrixRing {
     public:
      MatrixRing(std::size_t d, std::uint32_t p) : _d(d), _p(p) {}

      Matrix mul(Matrix const& a, Matrix const& b) const {
        Matrix c(_d * _d, 0);
        for (std::size_t i = 0; i < _d; ++i) {
          for (std::size_t k = 0; k < _d; ++k) {
            for (std::size_t j = 0; j < _d; ++j) {
              c[i * _d + j] = (c[i * _d + j] + a[i * _d + k] * b[k * _d + j]) % _p;
            }
          }
        }
        return c;
      }

      Matrix add(Matrix const& a, Matrix const& b) const {
        Matrix c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
          c[i] = (a[i] + b[i]) % _p;
        }
        return c;
      }

      Matrix sub(Matrix const& a, Matrix const& b) const {
        Matrix c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
          c[i] = (a[i] + _p - b[i]) % _p;
        }
        return c;
      }

      // x + y - xy
      Matrix quadratic(Matrix const& x, Matrix const& y) const {
        return sub(add(x, y), mul(x, y));
      }

      // x + y + yx - xyx - yxy
      Matrix cubic(Matrix const& x, Matrix const& y) const {
        Matrix yx = mul(y, x);
        return sub(sub(add(add(x, y), yx), mul(x, yx)), mul(yx, y));
      }

      Matrix join(JoinKind k, Matrix const& x, Matrix const& y) const {
        return k == JoinKind::quadratic ? quadratic(x, y) : cubic(x, y);
      }

     private:
      std::size_t   _d;
      std::uint32_t _p;
    };

    // Closure of seed under multiplication inside the idempotents; empty if
    // some product leaves them.
    std::vector<std::size_t>
    band_closure(std::vector<std::size_t> const& seed,
                 std::vector<Matrix> const&      E,
                 std::map<Matrix, std::size_t> const& index,
                 MatrixRing const&                    R) {
      std::set<std::size_t>   band(seed.begin(), seed.end());
      std::deque<std::size_t> todo(seed.begin(), seed.end());
      while (!todo.empty()) {
        std::size_t a = todo.front();
        todo.pop_front();
        std::vector<std::size_t> current(band.begin(), band.end());
        for (std::size_t b : current) {
          for (auto const& prod : {R.mul(E[a], E[b]), R.mul(E[b], E[a])}) {
            auto it = index.find(prod);
            if (it == index.end()) {
              return {};
            }
            if (band.insert(it->second).second) {
              todo.push_back(it->second);
            }
          }
        }
      }
      return {band.begin(), band.end()};
    }
  }  // namespace

  RingBandResult ring_band(RingSpec const& spec) {
    if (spec.dim == 0) {
      throw InvalidArgument("matrix dimension must be positive");
    }
    if (!is_prime(spec.modulus)) {
      throw InvalidArgument("modulus " + std::to_string(spec.modulus)
                            + " is not prime");
    }
    std::size_t const d = spec.dim;
    std::uint32_t const p = spec.modulus;
    std::vector<std::pair<std::size_t, std::size_t>> free_cells;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if (spec.kind == RingKind::full || i <= j) {
          free_cells.emplace_back(i, j);
        }
      }
    }
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free_cells.size(); ++i) {
      total *= p;
      if (total > spec.max_elements) {
        throw LimitExceeded("matrix ring has more than "
                            + std::to_string(spec.max_elements)
                            + " elements");
      }
    }

    MatrixRing     R(d, p);
    RingBandResult result;
    for (std::uint64_t code = 0; code < total; ++code) {
      Matrix        m(d * d, 0);
      std::uint64_t c = code;
      for (auto [i, j] : free_cells) {
        m[i * d + j] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      if (R.mul(m, m) == m) {
        result.idempotents.push_back(std::move(m));
      }
    }
    std::sort(result.idempotents.begin(), result.idempotents.end());
    auto const&                   E = result.idempotents;
    std::map<Matrix, std::size_t> index;
    for (std::size_t i = 0; i < E.size(); ++i) {
      index.emplace(E[i], i);
    }

    // for x, y with xy idempotent, x o y in E implies x V y = x o y
    for (auto const& x : E) {
      for (auto const& y : E) {
        if (index.count(R.mul(x, y)) == 0) {
          continue;
        }
        Matrix q = R.quadratic(x, y);
        require(index.count(q) == 0 || R.cubic(x, y) == q,
                "cubic and quadratic joins differ on an idempotent");
      }
    }

    std::set<std::vector<std::size_t>> bands;
    for (std::size_t a = 0; a < E.size(); ++a) {
      for (std::size_t b = a; b < E.size(); ++b) {
        auto band = band_closure({a, b}, E, index, R);
        if (band.empty()) {
          continue;
        }
        bands.insert(band);
        for (std::size_t c = 0; c < E.size(); ++c) {
          if (std::find(band.begin(), band.end(), c) != band.end()) {
            continue;
          }
          auto seed = band;
          seed.push_back(c);
          auto bigger = band_closure(seed, E, index, R);
          if (!bigger.empty()) {
            band = std::move(bigger);
          }
        }
        bands.insert(band);
      }
    }
    result.bands.assign(bands.begin(), bands.end());

    for (auto const& band : result.bands) {
      std::size_t const k = band.size();
      std::vector<std::size_t> pos(E.size(), k);
      for (std::size_t i = 0; i < k; ++i) {
        pos[band[i]] = i;
      }
      for (JoinKind kind : {JoinKind::quadratic, JoinKind::cubic}) {
        std::vector<element_type> meet(k * k), join(k * k);
        bool                      closed = true;
        for (std::size_t i = 0; i < k && closed; ++i) {
          for (std::size_t j = 0; j < k && closed; ++j) {
            meet[i * k + j] = static_cast<element_type>(
                pos[index.at(R.mul(E[band[i]], E[band[j]]))]);
            auto it = index.find(R.join(kind, E[band[i]], E[band[j]]));
            if (it == index.end() || pos[it->second] == k) {
              closed = false;
            } else {
              join[i * k + j] = static_cast<element_type>(pos[it->second]);
            }
          }
        }
        if (!closed) {
          continue;
        }
        if (kind == JoinKind::cubic) {
          bool assoc = true;
          for (std::size_t x = 0; x < k && assoc; ++x) {
            for (std::size_t y = 0; y < k && assoc; ++y) {
              for (std::size_t z = 0; z < k && assoc; ++z) {
                assoc = join[join[x * k + y] * k + z]
                        == join[x * k + join[y * k + z]];
              }
            }
          }
          if (!assoc) {
            result.non_associative_cubic.push_back(band);
            continue;
          }
        }
        auto v = validate(CayleyPair(k, meet, join));
        if (!v) {
          throw InternalInconsistency(
              "band of idempotents closed under the " + std::string(to_string(kind))
              + " join is not a skew lattice: " + v.violations().front().describe());
        }
        std::vector<Matrix> elements;
        for (auto i : band) {
          elements.push_back(E[i]);
        }
        require_distributive_cancellative(v.lattice(), "ring band");
        result.algebras.push_back({kind, std::move(elements), v.lattice()});
      }
    }
    return result;
  }

}  // namespace skewlat
