#include "skewlat/search.hpp"

#include <algorithm>  // for next_permutation, replace, sort
#include <array>      // for array
#include <atomic>     // for atomic
#include <fstream>    // for ifstream, ofstream
#include <map>        // for map
#include <memory>     // for unique_ptr
#include <mutex>      // for mutex, lock_guard
#include <numeric>    // for iota
#include <sstream>    // for istringstream, ostringstream
#include <thread>     // for thread

#include "skewlat/errors.hpp"
#include "skewlat/library.hpp"
#include "skewlat/term.hpp"
#include "skewlat/varieties.hpp"
#include "skewlat/ybe.hpp"

namespace skewlat {

  ////////////////////////////////////////////////////////////////////////
  // Filters
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string normalize(std::string_view name) {
      std::string s(name);
      std::replace(s.begin(), s.end(), '-', '_');
      return s;
    }

    // A resolved filter name: a conjunction of formulas, optionally with a
    // variety flag or a braid check that needs the whole algebra.
    struct Predicate {
      std::string                  name;
      std::vector<CompiledFormula> formulas;
      std::string                  flag;  // only quasi_distributive
      std::optional<MapKind>       solution;

      bool meet_only() const {
        if (!flag.empty() || solution || formulas.empty()) {
          return false;
        }
        return std::all_of(formulas.begin(), formulas.end(), [](auto const& f) {
          return f.formula().meet_only();
        });
      }

      template <BinaryAlgebra A>
      bool formulas_hold(A const& alg) const {
        return std::all_of(formulas.begin(), formulas.end(), [&](auto const& f) {
          return f.holds(alg).holds;
        });
      }

      bool eval(SkewLattice const& S) const {
        if (!formulas_hold(S)) {
          return false;
        }
        if (!flag.empty() && !variety_flag(S, flag).value) {
          return false;
        }
        if (solution && !braid_check(build_map(S, *solution)).pass()) {
          return false;
        }
        return true;
      }
    };

    Predicate resolve(std::string const& name) {
      Predicate   p;
      p.name          = name;
      auto const& lib = FormulaLibrary::bundled();
      if (lib.contains(name)) {
        p.formulas.emplace_back(lib.formula(name));
        return p;
      }
      std::string const key = normalize(name);
      if (is_variety_flag(key)) {
        for (auto f : variety_formulas(key)) {
          p.formulas.emplace_back(lib.formula(f));
        }
        if (p.formulas.empty()) {
          p.flag = key;
        }
        return p;
      }
      std::string const suffix = "_solution";
      if (key.size() > suffix.size()
          && key.compare(key.size() - suffix.size(), suffix.size(), suffix) == 0) {
        try {
          p.solution = map_kind_from_string(key.substr(0, key.size() - suffix.size()));
          return p;
        } catch (InvalidArgument const&) {
          // fall through to the formula parser
        }
      }
      try {
        p.formulas.emplace_back(parse_formula(name));
      } catch (ParseError const& e) {
        throw InvalidArgument("filter '" + name
                              + "' is neither a known name nor a formula ("
                              + e.what() + ")");
      }
      return p;
    }

    struct Filters {
      std::vector<Predicate> satisfy;
      std::vector<Predicate> falsify;

      explicit Filters(SearchSpec const& spec) {
        for (auto const& s : spec.satisfy) {
          satisfy.push_back(resolve(s));
        }
        for (auto const& s : spec.falsify) {
          falsify.push_back(resolve(s));
        }
      }

      bool pass(SkewLattice const& S) const {
        for (auto const& p : satisfy) {
          if (!p.eval(S)) {
            return false;
          }
        }
        if (falsify.empty()) {
          return true;
        }
        for (auto const& p : falsify) {
          if (!p.eval(S)) {
            return true;
          }
        }
        return false;
      }
    };
  }  // namespace

  void check_predicates(SearchSpec const& spec) {
    Filters{spec};
  }

  bool passes_filters(SkewLattice const& S, SearchSpec const& spec) {
    return Filters(spec).pass(S);
  }

  ////////////////////////////////////////////////////////////////////////
  // Search engine
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr std::uint8_t unset    = 0xFF;
    constexpr std::size_t  max_cells = max_search_size * max_search_size;
    constexpr std::size_t  max_decisions = 2 * max_cells;

    struct Perm {
      std::array<std::uint8_t, max_search_size> fwd;
      std::array<std::uint8_t, max_search_size> inv;
    };

    std::vector<Perm> all_perms(std::size_t n) {
      std::vector<Perm>         out;
      std::vector<std::uint8_t> p(n);
      std::iota(p.begin(), p.end(), 0);
      do {
        Perm q{};
        for (std::size_t i = 0; i < n; ++i) {
          q.fwd[i]    = p[i];
          q.inv[p[i]] = static_cast<std::uint8_t>(i);
        }
        out.push_back(q);
      } while (std::next_permutation(p.begin(), p.end()));
      return out;
    }

    // Meet band seen as an algebra; joins are never evaluated by meet-only
    // formulas.
    struct MeetView {
      std::size_t         n;
      std::uint8_t const* meet_table;

      std::size_t size() const noexcept {
        return n;
      }
      element_type meet(element_type x, element_type y) const noexcept {
        return meet_table[x * n + y];
      }
      element_type join(element_type, element_type) const noexcept {
        return 0;
      }
    };

    struct Shared {
      std::size_t             n;
      Filters const*          filters;
      std::vector<Perm> const* perms;
      std::size_t             limit;
      std::uint64_t           max_nodes;
      std::chrono::steady_clock::time_point deadline;
      bool                    has_deadline;
      std::atomic<std::uint64_t> nodes{0};
      std::atomic<bool>          stop{false};
      bool                       budget_hit() {
        if (max_nodes != 0 && nodes.load() >= max_nodes) {
          return true;
        }
        return has_deadline && std::chrono::steady_clock::now() >= deadline;
      }
    };

    struct TaskResult {
      std::uint64_t            count  = 0;
      std::uint64_t            census = 0;
      std::vector<SkewLattice> witnesses;
      std::vector<Prefix>      frontier;
      bool                     stopped = false;
    };

    class Engine {
     public:
      explicit Engine(Shared& sh) : _sh(sh), _n(sh.n) {
        for (std::size_t x = 0; x < _n; ++x) {
          for (std::size_t y = 0; y < _n; ++y) {
            if (x != y) {
              _cells.push_back({false, std::uint8_t(x), std::uint8_t(y)});
            }
          }
        }
        _meet_cells = _cells.size();
        for (std::size_t x = 0; x < _n; ++x) {
          for (std::size_t y = 0; y < _n; ++y) {
            if (x != y) {
              _cells.push_back({true, std::uint8_t(x), std::uint8_t(y)});
            }
          }
        }
        for (auto const& p : _sh.filters->satisfy) {
          if (p.meet_only()) {
            _meet_satisfy.push_back(&p);
          }
        }
        auto const& fals = _sh.filters->falsify;
        _meet_falsify = !fals.empty()
                        && std::all_of(fals.begin(), fals.end(), [](auto const& p) {
                             return p.meet_only();
                           });
        reset();
      }

      std::size_t total_cells() const noexcept {
        return _cells.size();
      }

      void reset() {
        _meet.fill(unset);
        _join.fill(unset);
        for (std::size_t x = 0; x < _n; ++x) {
          _meet[x * _n + x] = _join[x * _n + x] = static_cast<std::uint8_t>(x);
        }
        _path.clear();
        _autos.clear();
      }

      // Assigns the next decision cell; false (and no change) if a
      // constraint fails.
      bool push(std::uint8_t v) {
        Cell const  c   = _cells[_path.size()];
        auto&       T   = c.join ? _join : _meet;
        std::size_t idx = c.x * _n + c.y;
        if (c.join && !join_domain(c.x, c.y, v)) {
          return false;
        }
        T[idx] = v;
        _path.push_back(v);
        bool ok = assoc_ok(T.data(), c.x, c.y, v);
        if (ok && row_complete()) {
          ok = c.join ? join_rows_canonical(c.x) : meet_rows_canonical(c.x);
        }
        if (ok && !c.join && _path.size() == _meet_cells) {
          ok = meet_complete();
        }
        if (!ok) {
          pop();
        }
        return ok;
      }

      void pop() {
        Cell const c = _cells[_path.size() - 1];
        (c.join ? _join : _meet)[c.x * _n + c.y] = unset;
        if (!c.join && _path.size() == _meet_cells) {
          _autos.clear();
        }
        _path.pop_back();
      }

      // Explores the subtree below prefix.
      void run(Prefix const& prefix, TaskResult& out) {
        reset();
        if (_meet_cells == 0 && !meet_complete()) {
          return;
        }
        for (auto v : prefix) {
          if (_path.size() >= _cells.size() || v >= _n || !push(v)) {
            return;
          }
        }
        std::size_t const         base  = _path.size();
        std::size_t const         total = _cells.size();
        std::array<std::uint8_t, max_decisions + 1> next{};
        next[base] = 0;
        std::uint64_t local = 0;
        while (true) {
          std::size_t const d = _path.size();
          if (d == total) {
            leaf(out);
            if (_sh.stop.load()) {
              record_frontier(base, next, out);
              return;
            }
            if (d == base) {
              return;
            }
            pop();
            continue;
          }
          if (next[d] >= _n) {
            if (d == base) {
              return;
            }
            pop();
            continue;
          }
          if (_sh.stop.load() || ((++local & 255) == 0 && _sh.budget_hit())
              || (_sh.max_nodes != 0 && _sh.nodes.load() >= _sh.max_nodes)) {
            _sh.stop = true;
            record_frontier(base, next, out);
            return;
          }
          std::uint8_t v = next[d]++;
          if (push(v)) {
            _sh.nodes.fetch_add(1, std::memory_order_relaxed);
            next[d + 1] = 0;
          }
        }
      }

      // Valid prefixes of the given length (or complete assignments).
      void collect(std::size_t depth, std::vector<Prefix>& out) {
        if (_path.size() == depth || _path.size() == _cells.size()) {
          out.push_back(_path);
          return;
        }
        for (std::uint8_t v = 0; v < _n; ++v) {
          if (push(v)) {
            collect(depth, out);
            pop();
          }
        }
      }

     private:
      struct Cell {
        bool         join;
        std::uint8_t x;
        std::uint8_t y;
      };

      bool row_complete() const {
        std::size_t const k = _path.size();
        if (k == _meet_cells || k == _cells.size()) {
          return true;
        }
        return _cells[k].x != _cells[k - 1].x;
      }

      bool join_domain(std::size_t x, std::size_t y, std::uint8_t v) const {
        std::uint8_t const m = _meet[x * _n + y];
        if (m == x) {
          if (v != y) {
            return false;
          }
        } else if (m == y) {
          if (v != x) {
            return false;
          }
        } else if (v == x || v == y) {
          return false;
        }
        // x ^ (x v y) = x and (x v y) ^ y = y
        return _meet[x * _n + v] == x && _meet[v * _n + y] == y;
      }

      bool assoc_ok(std::uint8_t const* T,
                    std::size_t         x,
                    std::size_t         y,
                    std::uint8_t        v) const {
        std::size_t const n = _n;
        for (std::size_t c = 0; c < n; ++c) {
          // (x y) c = x (y c)
          std::uint8_t l = T[v * n + c], yc = T[y * n + c];
          if (l != unset && yc != unset) {
            std::uint8_t r = T[x * n + yc];
            if (r != unset && r != l) {
              return false;
            }
          }
        }
        for (std::size_t a = 0; a < n; ++a) {
          // a (x y) = (a x) y
          std::uint8_t l = T[a * n + v], ax = T[a * n + x];
          if (l != unset && ax != unset) {
            std::uint8_t r = T[ax * n + y];
            if (r != unset && r != l) {
              return false;
            }
          }
        }
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            // (a b) y = a (b y) with a b = x
            if (T[a * n + b] == x) {
              std::uint8_t by = T[b * n + y];
              if (by != unset) {
                std::uint8_t r = T[a * n + by];
                if (r != unset && r != v) {
                  return false;
                }
              }
            }
            // x (a b) = (x a) b with a b = y
            if (T[a * n + b] == y) {
              std::uint8_t xa = T[x * n + a];
              if (xa != unset) {
                std::uint8_t r = T[xa * n + b];
                if (r != unset && r != v) {
                  return false;
                }
              }
            }
          }
        }
        return true;
      }

      // -1 if the relabeled table is smaller on the defined prefix, 0 if
      // equal or undecided, 1 if larger.
      int compare_relabeled(std::uint8_t const* T,
                            Perm const&         p,
                            std::size_t         rows) const {
        std::size_t const n = _n;
        for (std::size_t i = 0; i < rows; ++i) {
          std::size_t const pi = p.inv[i];
          for (std::size_t j = 0; j < n; ++j) {
            std::uint8_t const src = T[pi * n + p.inv[j]];
            if (src == unset) {
              return 0;
            }
            std::uint8_t const a = p.fwd[src];
            std::uint8_t const b = T[i * n + j];
            if (a != b) {
              return a < b ? -1 : 1;
            }
          }
        }
        return 0;
      }

      bool meet_rows_canonical(std::size_t last_row) const {
        for (auto const& p : *_sh.perms) {
          if (compare_relabeled(_meet.data(), p, last_row + 1) < 0) {
            return false;
          }
        }
        return true;
      }

      bool join_rows_canonical(std::size_t last_row) const {
        for (auto a : _autos) {
          if (compare_relabeled(_join.data(), (*_sh.perms)[a], last_row + 1)
              < 0) {
            return false;
          }
        }
        return true;
      }

      bool meet_complete() {
        std::size_t const n = _n;
        auto const*       M = _meet.data();
        // regularity: a x a y a = a x y a
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t x = 0; x < n; ++x) {
            std::size_t const axa = M[M[a * n + x] * n + a];
            for (std::size_t y = 0; y < n; ++y) {
              std::size_t const l = M[M[axa * n + y] * n + a];
              std::size_t const r = M[M[M[a * n + x] * n + y] * n + a];
              if (l != r) {
                return false;
              }
            }
          }
        }
        MeetView const view{n, M};
        for (auto const* p : _meet_satisfy) {
          if (!p->formulas_hold(view)) {
            return false;
          }
        }
        if (_meet_falsify) {
          bool all_hold = true;
          for (auto const& p : _sh.filters->falsify) {
            all_hold = all_hold && p.formulas_hold(view);
          }
          if (all_hold) {
            return false;
          }
        }
        _autos.clear();
        auto const& perms = *_sh.perms;
        for (std::size_t k = 0; k < perms.size(); ++k) {
          bool same = true;
          for (std::size_t i = 0; i < n && same; ++i) {
            for (std::size_t j = 0; j < n && same; ++j) {
              same = perms[k].fwd[M[perms[k].inv[i] * n + perms[k].inv[j]]]
                     == M[i * n + j];
            }
          }
          if (same) {
            _autos.push_back(k);
          }
        }
        return true;
      }

      void leaf(TaskResult& out) {
        std::size_t const         n = _n;
        std::vector<element_type> meet(n * n), join(n * n);
        for (std::size_t i = 0; i < n * n; ++i) {
          meet[i] = _meet[i];
          join[i] = _join[i];
        }
        auto v = validate(CayleyPair(n, std::move(meet), std::move(join)));
        if (!v) {
          throw InternalInconsistency("search produced invalid tables: "
                                      + v.violations().front().describe());
        }
        ++out.census;
        if (!_sh.filters->pass(v.lattice())) {
          return;
        }
        ++out.count;
        if (out.witnesses.size() < _sh.limit) {
          out.witnesses.push_back(v.lattice());
        }
        if (out.count >= _sh.limit) {
          _sh.stop = true;
        }
      }

      void record_frontier(std::size_t                                    base,
                           std::array<std::uint8_t, max_decisions + 1> const& next,
                           TaskResult&                                    out) {
        out.stopped = true;
        while (true) {
          std::size_t const d = _path.size();
          if (d < _cells.size()) {
            for (std::size_t v = next[d]; v < _n; ++v) {
              if (push(static_cast<std::uint8_t>(v))) {
                out.frontier.push_back(_path);
                pop();
              }
            }
          }
          if (d == base) {
            return;
          }
          pop();
        }
      }

      Shared&                           _sh;
      std::size_t                       _n;
      std::vector<Cell>                 _cells;
      std::size_t                       _meet_cells;
      std::array<std::uint8_t, max_cells> _meet;
      std::array<std::uint8_t, max_cells> _join;
      Prefix                            _path;
      std::vector<std::size_t>          _autos;  // indices into perms
      std::vector<Predicate const*>     _meet_satisfy;
      bool                              _meet_falsify = false;
    };

    std::vector<Perm> const& perms_for(std::size_t n) {
      static std::mutex                              mtx;
      static std::map<std::size_t, std::vector<Perm>> cache;
      std::lock_guard<std::mutex>                    lock(mtx);
      auto                                           it = cache.find(n);
      if (it == cache.end()) {
        it = cache.emplace(n, all_perms(n)).first;
      }
      return it->second;
    }

    void check_size(std::size_t n) {
      if (n == 0 || n > max_search_size) {
        throw InvalidArgument("search order must be between 1 and "
                              + std::to_string(max_search_size) + ", got "
                              + std::to_string(n));
      }
    }

    EnumerationResult run_tasks(SearchSpec const&   spec,
                                Budget const&       budget,
                                std::vector<Prefix> tasks,
                                bool                split) {
      check_size(spec.n);
      Filters const filters(spec);
      Shared        sh;
      sh.n            = spec.n;
      sh.filters      = &filters;
      sh.perms        = &perms_for(spec.n);
      sh.limit        = spec.limit;
      sh.max_nodes    = budget.max_nodes;
      sh.has_deadline = budget.max_time.count() > 0;
      sh.deadline     = std::chrono::steady_clock::now() + budget.max_time;

      unsigned const jobs
          = spec.limit == std::numeric_limits<std::size_t>::max()
                ? std::max(1u, budget.jobs)
                : 1u;
      if (split && jobs > 1) {
        Engine              e(sh);
        std::vector<Prefix> split_tasks;
        for (auto const& t : tasks) {
          e.reset();
          bool ok = true;
          for (auto v : t) {
            ok = ok && e.push(v);
          }
          if (ok) {
            e.collect(std::min(e.total_cells(), t.size() + spec.n + 1),
                      split_tasks);
          }
        }
        tasks = std::move(split_tasks);
      }

      std::vector<TaskResult> results(tasks.size());
      std::vector<char>       started(tasks.size(), 0);
      std::atomic<std::size_t> next{0};
      auto                     worker = [&] {
        Engine e(sh);
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= tasks.size() || sh.stop.load()) {
            return;
          }
          started[i] = 1;
          e.run(tasks[i], results[i]);
        }
      };
      if (jobs == 1) {
        worker();
      } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) {
          pool.emplace_back(worker);
        }
        for (auto& t : pool) {
          t.join();
        }
      }

      EnumerationResult r;
      r.nodes = sh.nodes.load();
      for (std::size_t i = 0; i < tasks.size(); ++i) {
        r.count += results[i].count;
        r.census += results[i].census;
        for (auto& w : results[i].witnesses) {
          if (r.witnesses.size() < spec.limit) {
            r.witnesses.push_back(std::move(w));
          }
        }
        if (!started[i]) {
          r.frontier.push_back(tasks[i]);
        } else {
          for (auto& f : results[i].frontier) {
            r.frontier.push_back(std::move(f));
          }
        }
      }
      r.exhausted = !sh.stop.load() && r.frontier.empty();
      return r;
    }
  }  // namespace

  EnumerationResult enumerate(SearchSpec const& spec, Budget const& budget) {
    return run_tasks(spec, budget, {Prefix{}}, true);
  }

  EnumerationResult resume(SearchSpec const& spec,
                           Checkpoint const& from,
                           Budget const&     budget) {
    if (from.spec_hash != spec_hash(spec) || from.n != spec.n) {
      throw InvalidArgument("checkpoint was written for a different search");
    }
    auto r = run_tasks(spec, budget, from.frontier, false);
    std::vector<SkewLattice> witnesses;
    for (auto const& t : from.witnesses) {
      witnesses.push_back(make_skew_lattice(t));
    }
    for (auto& w : r.witnesses) {
      if (witnesses.size() < spec.limit) {
        witnesses.push_back(std::move(w));
      }
    }
    r.witnesses = std::move(witnesses);
    r.count += from.count;
    r.census += from.census;
    r.nodes += from.nodes;
    return r;
  }

  CounterexampleResult find_counterexample(SearchSpec const& spec,
                                           Budget const&     budget) {
    check_size(spec.n);
    CounterexampleResult out;
    auto const           start = std::chrono::steady_clock::now();
    for (std::size_t k = 1; k <= spec.n; ++k) {
      SearchSpec s = spec;
      s.n          = k;
      s.limit      = 1;
      Budget b     = budget;
      if (budget.max_nodes != 0) {
        if (out.nodes >= budget.max_nodes) {
          return out;
        }
        b.max_nodes = budget.max_nodes - out.nodes;
      }
      if (budget.max_time.count() > 0) {
        auto spent = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start);
        if (spent >= budget.max_time) {
          return out;
        }
        b.max_time = budget.max_time - spent;
      }
      auto r = enumerate(s, b);
      out.nodes += r.nodes;
      if (!r.witnesses.empty()) {
        out.witness = r.witnesses.front();
        return out;
      }
      if (!r.exhausted) {
        return out;
      }
      out.searched_up_to = k;
    }
    out.exhausted = true;
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism
  ////////////////////////////////////////////////////////////////////////

  CayleyPair canonical_form(CayleyPair const& T) {
    std::size_t const n = T.size();
    check_size(n);
    std::vector<element_type> best_meet(T.meet_table().begin(),
                                        T.meet_table().end());
    std::vector<element_type> best_join(T.join_table().begin(),
                                        T.join_table().end());
    for (auto const& p : perms_for(n)) {
      // compare lazily, meet then join, row-major
      int cmp = 0;
      for (std::size_t t = 0; t < 2 && cmp == 0; ++t) {
        auto const& best = t == 0 ? best_meet : best_join;
        for (std::size_t i = 0; i < n && cmp == 0; ++i) {
          for (std::size_t j = 0; j < n && cmp == 0; ++j) {
            element_type src = t == 0 ? T.meet(p.inv[i], p.inv[j])
                                      : T.join(p.inv[i], p.inv[j]);
            element_type a   = p.fwd[src];
            if (a != best[i * n + j]) {
              cmp = a < best[i * n + j] ? -1 : 1;
            }
          }
        }
      }
      if (cmp < 0) {
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            best_meet[i * n + j] = p.fwd[T.meet(p.inv[i], p.inv[j])];
            best_join[i * n + j] = p.fwd[T.join(p.inv[i], p.inv[j])];
          }
        }
      }
    }
    return CayleyPair(n, std::move(best_meet), std::move(best_join));
  }

  bool isomorphic(SkewLattice const& S, SkewLattice const& T) {
    return S.size() == T.size()
           && canonical_form(S.tables()) == canonical_form(T.tables());
  }

  std::vector<SkewLattice> all_skew_lattices(std::size_t n, unsigned jobs) {
    static std::mutex                                     mtx;
    static std::map<std::size_t, std::vector<SkewLattice>> cache;
    {
      std::lock_guard<std::mutex> lock(mtx);
      if (auto it = cache.find(n); it != cache.end()) {
        return it->second;
      }
    }
    SearchSpec spec;
    spec.n = n;
    Budget b;
    b.jobs = jobs;
    auto r = enumerate(spec, b);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(n, std::move(r.witnesses)).first->second;
  }

  ////////////////////////////////////////////////////////////////////////
  // Checkpoints
  ////////////////////////////////////////////////////////////////////////

  std::uint64_t spec_hash(SearchSpec const& spec) {
    std::ostringstream os;
    os << "n=" << spec.n << "\nsatisfy=";
    for (auto const& s : spec.satisfy) {
      os << s << '\x1f';
    }
    os << "\nfalsify=";
    for (auto const& s : spec.falsify) {
      os << s << '\x1f';
    }
    os << "\nlimit=" << spec.limit << '\n';
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : os.str()) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return h;
  }

  Checkpoint make_checkpoint(SearchSpec const&        spec,
                             EnumerationResult const& result) {
    Checkpoint c;
    c.spec_hash = spec_hash(spec);
    c.n         = spec.n;
    c.nodes     = result.nodes;
    c.count     = result.count;
    c.census    = result.census;
    for (auto const& w : result.witnesses) {
      c.witnesses.push_back(w.tables());
    }
    c.frontier = result.frontier;
    return c;
  }

  namespace {
    constexpr std::string_view checkpoint_header = "skewlat-checkpoint v1";
  }

  void write_checkpoint(std::ostream& out, Checkpoint const& c) {
    out << checkpoint_header << '\n'
        << "spec_hash " << std::hex << c.spec_hash << std::dec << '\n'
        << "n " << c.n << '\n'
        << "nodes " << c.nodes << '\n'
        << "count " << c.count << '\n'
        << "census " << c.census << '\n'
        << "witnesses " << c.witnesses.size() << '\n';
    for (auto const& w : c.witnesses) {
      out << "witness";
      for (auto x : w.meet_table()) {
        out << ' ' << x;
      }
      out << " /";
      for (auto x : w.join_table()) {
        out << ' ' << x;
      }
      out << '\n';
    }
    out << "frontier " << c.frontier.size() << '\n';
    for (auto const& p : c.frontier) {
      out << "prefix";
      for (auto v : p) {
        out << ' ' << static_cast<unsigned>(v);
      }
      out << '\n';
    }
  }

  void write_checkpoint(std::filesystem::path const& path,
                        Checkpoint const&            c) {
    std::ofstream out(path);
    if (!out) {
      throw MalformedInput("cannot write " + path.string());
    }
    write_checkpoint(out, c);
  }

  Checkpoint read_checkpoint(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    auto        fail   = [&](std::string const& what) -> MalformedInput {
      return MalformedInput("checkpoint line " + std::to_string(lineno) + ": "
                            + what);
    };
    auto next_line = [&]() -> std::istringstream {
      if (!std::getline(in, line)) {
        ++lineno;
        throw fail("unexpected end of file");
      }
      ++lineno;
      return std::istringstream(line);
    };
    auto field = [&](std::string_view key, bool hex = false) {
      auto        is = next_line();
      std::string k;
      std::uint64_t v = 0;
      is >> k;
      if (hex) {
        is >> std::hex;
      }
      if (k != key || !(is >> v)) {
        throw fail("expected '" + std::string(key) + " <number>'");
      }
      return v;
    };

    if (!std::getline(in, line) || line != checkpoint_header) {
      ++lineno;
      throw fail("missing header '" + std::string(checkpoint_header) + "'");
    }
    ++lineno;
    Checkpoint c;
    c.spec_hash = field("spec_hash", true);
    c.n         = field("n");
    if (c.n == 0 || c.n > max_search_size) {
      throw fail("order out of range");
    }
    c.nodes               = field("nodes");
    c.count               = field("count");
    c.census              = field("census");
    std::uint64_t const w = field("witnesses");
    std::size_t const   n = c.n;
    for (std::uint64_t i = 0; i < w; ++i) {
      auto        is = next_line();
      std::string tok;
      is >> tok;
      if (tok != "witness") {
        throw fail("expected 'witness'");
      }
      std::vector<element_type> meet, join;
      auto*                     cur = &meet;
      while (is >> tok) {
        if (tok == "/") {
          cur = &join;
          continue;
        }
        try {
          cur->push_back(static_cast<element_type>(std::stoul(tok)));
        } catch (std::exception const&) {
          throw fail("bad table entry '" + tok + "'");
        }
      }
      if (meet.size() != n * n || join.size() != n * n) {
        throw fail("witness tables have the wrong size");
      }
      c.witnesses.emplace_back(n, std::move(meet), std::move(join));
    }
    std::uint64_t const f = field("frontier");
    for (std::uint64_t i = 0; i < f; ++i) {
      auto        is = next_line();
      std::string tok;
      is >> tok;
      if (tok != "prefix") {
        throw fail("expected 'prefix'");
      }
      Prefix   p;
      unsigned v;
      while (is >> v) {
        if (v >= n) {
          throw fail("prefix value out of range");
        }
        p.push_back(static_cast<std::uint8_t>(v));
      }
      if (!is.eof()) {
        throw fail("bad prefix value");
      }
      c.frontier.push_back(std::move(p));
    }
    return c;
  }

  Checkpoint read_checkpoint(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw MalformedInput("cannot open " + path.string());
    }
    return read_checkpoint(in);
  }

}  // namespace skewlat
