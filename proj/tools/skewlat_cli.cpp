// skewlat: validate, classify and enumerate finite skew lattices and check
// the set-theoretic solutions they induce.
//
// Exit codes: 0 success, 1 a check failed (the witness is printed), 2 usage
// or input error.

#include <CLI11.hpp>

#include <chrono>      // for milliseconds
#include <filesystem>  // for path, create_directories
#include <iomanip>     // for setfill, setw
#include <iostream>    // for cout, cerr
#include <sstream>     // for ostringstream
#include <string>      // for string
#include <vector>      // for vector

#include "skewlat/cayley.hpp"
#include "skewlat/constructions.hpp"
#include "skewlat/errors.hpp"
#include "skewlat/green.hpp"
#include "skewlat/io.hpp"
#include "skewlat/library.hpp"
#include "skewlat/search.hpp"
#include "skewlat/term.hpp"
#include "skewlat/theorems.hpp"
#include "skewlat/varieties.hpp"
#include "skewlat/ybe.hpp"

namespace fs = std::filesystem;
using namespace skewlat;

namespace {

  constexpr int exit_ok    = 0;
  constexpr int exit_check = 1;
  constexpr int exit_usage = 2;

  // Options shared by several verbs.
  struct Common {
    std::string format = "text";
    unsigned    jobs   = 1;

    bool tsv() const {
      return format == "tsv";
    }
  };

  SkewLattice load(std::string const& path) {
    return make_skew_lattice(read_algebra(fs::path(path)).tables);
  }

  int cmd_validate(std::string const& path, Common const& c) {
    auto const file = read_algebra(fs::path(path));
    auto const res  = validate(file.tables);
    if (c.tsv()) {
      std::cout << "axiom\twitness\n";
      for (auto const& v : res.violations()) {
        std::cout << v.axiom << '\t';
        for (std::size_t i = 0; i < v.witness.size(); ++i) {
          std::cout << (i ? "," : "") << v.witness[i];
        }
        std::cout << '\n';
      }
    } else if (res.ok()) {
      std::cout << "valid skew lattice of order " << file.tables.size() << '\n';
    } else {
      std::cout << res.violations().size() << " violation(s)\n";
      for (auto const& v : res.violations()) {
        std::cout << v.describe() << '\n';
      }
    }
    return res.ok() ? exit_ok : exit_check;
  }

  int cmd_structure(std::string const& path, Common const& c) {
    std::cout << structure_report(load(path), c.tsv());
    return exit_ok;
  }

  int cmd_props(std::string const&              path,
                std::vector<std::string> const& require,
                std::vector<std::string> const& formulas,
                bool                            witnesses,
                Common const&                   c) {
    auto const S = load(path);
    auto const r = classify(S);
    std::cout << format_variety_report(r, c.tsv(), witnesses);
    int status = exit_ok;
    for (auto const& name : require) {
      auto const& f = r[name];
      if (!f.value) {
        status = exit_check;
        std::cerr << "required property fails: " << name;
        if (f.witness) {
          std::cerr << " (" << f.witness->formula << " at "
                    << format_assignment(f.witness->assignment);
          if (!f.witness->where.empty()) {
            std::cerr << " in " << f.witness->where;
          }
          std::cerr << ")";
        }
        std::cerr << '\n';
      }
    }
    auto const& lib = FormulaLibrary::bundled();
    for (auto const& text : formulas) {
      Formula const f   = lib.contains(text) ? lib.formula(text) : parse_formula(text);
      auto const    res = holds(S, f);
      std::cout << (c.tsv() ? "formula\t" : "formula: ") << to_string(f)
                << (c.tsv() ? "\t" : " ") << (res.holds ? "holds" : "fails");
      if (!res.holds) {
        std::cout << (c.tsv() ? "\t" : " at ") << format_assignment(res.counterexample);
        status = exit_check;
      }
      std::cout << '\n';
    }
    return status;
  }

  int cmd_ybe(std::string const&              path,
              std::vector<std::string> const& maps,
              bool                            all_maps,
              Common const&                   c) {
    auto const           S = load(path);
    std::vector<MapKind> kinds;
    if (all_maps || maps.empty()) {
      kinds = all_map_kinds();
    } else {
      for (auto const& m : maps) {
        kinds.push_back(map_kind_from_string(m));
      }
    }
    std::vector<SolutionReport> reports;
    for (auto k : kinds) {
      reports.push_back(solution_report(S, k));
    }
    std::cout << format_solution_reports(reports, c.tsv());
    for (auto const& r : reports) {
      if (!r.braid.pass()) {
        return exit_check;
      }
    }
    return exit_ok;
  }

  std::string tables_text(CayleyPair const& t, std::vector<std::string> comments) {
    return to_skewlat_text(t, comments);
  }

  void emit(SkewLattice const&              S,
            std::string const&              out,
            std::vector<std::string> const& comments) {
    if (out.empty() || out == "-") {
      std::cout << tables_text(S.tables(), comments);
    } else {
      write_algebra(fs::path(out), S.tables(), comments);
    }
  }

  std::string witness_name(std::size_t i) {
    std::ostringstream os;
    os << "witness_" << std::setw(4) << std::setfill('0') << i << ".skl";
    return os.str();
  }

  void write_witnesses(std::vector<SkewLattice> const& ws, std::string const& dir) {
    if (dir.empty()) {
      return;
    }
    fs::create_directories(dir);
    for (std::size_t i = 0; i < ws.size(); ++i) {
      write_algebra(fs::path(dir) / witness_name(i), ws[i].tables());
    }
  }

  void print_enumeration(EnumerationResult const& r, SearchSpec const& spec,
                         std::string const& dir, Common const& c) {
    if (c.tsv()) {
      std::cout << "n\tcensus\tcount\tnodes\texhausted\tfrontier\n"
                << spec.n << '\t' << r.census << '\t' << r.count << '\t' << r.nodes
                << '\t' << (r.exhausted ? "true" : "false") << '\t'
                << r.frontier.size() << '\n';
    } else {
      std::cout << "n: " << spec.n << "\ncensus: " << r.census
                << "\ncount: " << r.count << "\nnodes: " << r.nodes
                << "\nexhausted: " << (r.exhausted ? "true" : "false") << '\n';
      if (!r.exhausted) {
        std::cout << "frontier: " << r.frontier.size() << '\n';
      }
      if (dir.empty()) {
        for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
          std::cout << "\n# " << witness_name(i) << '\n'
                    << tables_text(r.witnesses[i].tables(), {});
        }
      }
    }
    write_witnesses(r.witnesses, dir);
  }

  Budget make_budget(std::uint64_t max_nodes, std::uint64_t max_ms, Common const& c) {
    Budget b;
    b.max_nodes = max_nodes;
    b.max_time  = std::chrono::milliseconds(max_ms);
    b.jobs      = c.jobs;
    return b;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite skew lattices and the set-theoretic solutions they induce"};
  app.require_subcommand(1, 1);
  Common common;
  app.add_option("--format", common.format, "Report format")
      ->check(CLI::IsMember({"text", "tsv"}));
  app.add_option("--jobs,-j", common.jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  std::string path;

  auto* validate_cmd = app.add_subcommand("validate", "Check the axioms on an algebra file");
  validate_cmd->add_option("file", path)->required();

  auto* structure_cmd = app.add_subcommand(
      "structure", "Green's relations, eggboxes, S/D and skew diamonds");
  structure_cmd->add_option("file", path)->required();

  std::vector<std::string> require, formulas;
  bool                     witnesses = false;
  auto* props_cmd = app.add_subcommand("props", "Variety membership flags");
  props_cmd->add_option("file", path)->required();
  props_cmd->add_option("--require", require, "Fail unless this flag holds");
  props_cmd->add_option("--formula", formulas,
                        "Library name or formula to check as well");
  props_cmd->add_flag("--witnesses", witnesses, "Print failing assignments");

  std::vector<std::string> maps;
  bool                     all_maps = false;
  auto* ybe_cmd = app.add_subcommand("ybe", "Braid relation and map properties");
  ybe_cmd->add_option("file", path)->required();
  ybe_cmd->add_option("--map", maps, "Map kind (default: all)");
  ybe_cmd->add_flag("--all-maps", all_maps, "Every map kind");

  auto*       construct_cmd = app.add_subcommand("construct", "Generate an algebra");
  std::string out;
  construct_cmd->add_option("--output,-o", out, "Output file (default stdout)");
  construct_cmd->require_subcommand(1, 1);
  std::vector<std::size_t> sizes;
  auto* chain_cmd = construct_cmd->add_subcommand("chain", "Skew chain of classes");
  chain_cmd->add_option("--sizes", sizes, "Class sizes, top first")
      ->required()
      ->delimiter(',');
  std::size_t rect_left = 1, rect_right = 1;
  auto* rect_cmd = construct_cmd->add_subcommand("rect", "Rectangular skew lattice");
  rect_cmd->add_option("--left", rect_left)->check(CLI::PositiveNumber);
  rect_cmd->add_option("--right", rect_right)->check(CLI::PositiveNumber);
  std::string fixed_name;
  auto* fixed_cmd = construct_cmd->add_subcommand("fixed", "A named small algebra");
  fixed_cmd->add_option("name", fixed_name)->required();
  std::string   ring_kind = "ut";
  std::size_t   ring_dim  = 2;
  std::uint32_t ring_mod  = 2;
  std::string   ring_dir;
  auto* ring_cmd = construct_cmd->add_subcommand(
      "ring", "Skew lattices of idempotent matrices");
  ring_cmd->add_option("--kind", ring_kind)->check(CLI::IsMember({"ut", "full"}));
  ring_cmd->add_option("--dim", ring_dim)->check(CLI::PositiveNumber);
  ring_cmd->add_option("--mod", ring_mod);
  ring_cmd->add_option("--out-dir", ring_dir, "Write each algebra to a file here");

  SearchSpec    spec;
  std::string   witness_dir, checkpoint_path, resume_path;
  std::uint64_t max_nodes = 0, max_ms = 0;
  std::size_t   limit     = 0;
  auto          add_search_options = [&](CLI::App* cmd) {
    cmd->add_option("-n,--size", spec.n, "Order")->required()->check(
        CLI::Range(std::size_t(1), max_search_size));
    cmd->add_option("--satisfy", spec.satisfy, "Predicate that must hold");
    cmd->add_option("--falsify", spec.falsify,
                    "Predicates of which at least one must fail");
    cmd->add_option("--max-nodes", max_nodes, "Node budget (0: none)");
    cmd->add_option("--max-time-ms", max_ms, "Time budget (0: none)");
  };
  auto* enumerate_cmd = app.add_subcommand(
      "enumerate", "All skew lattices of an order up to isomorphism");
  add_search_options(enumerate_cmd);
  enumerate_cmd->add_option("--limit", limit, "Stop after this many witnesses");
  enumerate_cmd->add_option("--out-dir", witness_dir, "Write witnesses here");
  enumerate_cmd->add_option("--checkpoint", checkpoint_path,
                            "Write a checkpoint here if the budget runs out");
  enumerate_cmd->add_option("--resume", resume_path, "Continue from a checkpoint");

  auto* search_cmd = app.add_subcommand(
      "search", "Smallest algebra meeting the filters, orders 1 to n");
  add_search_options(search_cmd);
  search_cmd->add_option("--out-dir", witness_dir, "Write the witness here");

  std::size_t max_n = 4;
  auto* theorems_cmd = app.add_subcommand(
      "theorems", "Check the theorem battery on every algebra up to an order");
  theorems_cmd->add_option("--max-n", max_n)->check(
      CLI::Range(std::size_t(1), std::size_t(7)));

  // Global options are accepted after the verb too.
  for (auto* cmd : app.get_subcommands({})) {
    cmd->fallthrough();
  }
  for (auto* cmd : construct_cmd->get_subcommands({})) {
    cmd->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*validate_cmd) {
      return cmd_validate(path, common);
    }
    if (*structure_cmd) {
      return cmd_structure(path, common);
    }
    if (*props_cmd) {
      return cmd_props(path, require, formulas, witnesses, common);
    }
    if (*ybe_cmd) {
      return cmd_ybe(path, maps, all_maps, common);
    }
    if (*construct_cmd) {
      if (*chain_cmd) {
        emit(chain(ChainSpec{sizes}), out, {});
      } else if (*rect_cmd) {
        emit(rectangular(rect_left, rect_right), out, {});
      } else if (*fixed_cmd) {
        emit(fixed(fixed_name), out, {"# " + fixed_name});
      } else if (*ring_cmd) {
        RingSpec rs;
        rs.kind    = ring_kind == "full" ? RingKind::full : RingKind::upper_triangular;
        rs.dim     = ring_dim;
        rs.modulus = ring_mod;
        auto const res = ring_band(rs);
        if (!ring_dir.empty()) {
          fs::create_directories(ring_dir);
        }
        for (std::size_t i = 0; i < res.algebras.size(); ++i) {
          auto const&              a = res.algebras[i];
          std::vector<std::string> comments{"# join " + std::string(to_string(a.join))};
          for (std::size_t e = 0; e < a.elements.size(); ++e) {
            comments.push_back("# " + std::to_string(e) + " = "
                               + format_matrix(a.elements[e], ring_dim));
          }
          if (ring_dir.empty()) {
            std::cout << (i ? "\n" : "") << tables_text(a.algebra.tables(), comments);
          } else {
            std::ostringstream name;
            name << "ring_" << std::setw(4) << std::setfill('0') << i << ".skl";
            write_algebra(fs::path(ring_dir) / name.str(), a.algebra.tables(), comments);
          }
        }
        std::cerr << res.idempotents.size() << " idempotents, " << res.bands.size()
                  << " bands, " << res.algebras.size() << " algebras, "
                  << res.non_associative_cubic.size()
                  << " bands with a non-associative cubic join\n";
      }
      return exit_ok;
    }
    if (*enumerate_cmd) {
      if (limit > 0) {
        spec.limit = limit;
      }
      Budget const      budget = make_budget(max_nodes, max_ms, common);
      EnumerationResult r      = resume_path.empty()
                                     ? enumerate(spec, budget)
                                     : resume(spec, read_checkpoint(fs::path(resume_path)), budget);
      print_enumeration(r, spec, witness_dir, common);
      if (!r.exhausted && !checkpoint_path.empty()) {
        write_checkpoint(fs::path(checkpoint_path), make_checkpoint(spec, r));
        std::cerr << "checkpoint written to " << checkpoint_path << '\n';
      }
      return exit_ok;
    }
    if (*search_cmd) {
      auto const r = find_counterexample(spec, make_budget(max_nodes, max_ms, common));
      if (common.tsv()) {
        std::cout << "found\tsearched_up_to\texhausted\tnodes\n"
                  << (r.witness ? "true" : "false") << '\t' << r.searched_up_to
                  << '\t' << (r.exhausted ? "true" : "false") << '\t' << r.nodes
                  << '\n';
      } else {
        std::cout << "found: " << (r.witness ? "true" : "false")
                  << "\nsearched_up_to: " << r.searched_up_to
                  << "\nexhausted: " << (r.exhausted ? "true" : "false")
                  << "\nnodes: " << r.nodes << '\n';
      }
      if (r.witness) {
        if (witness_dir.empty()) {
          std::cout << '\n' << tables_text(r.witness->tables(), {});
        } else {
          write_witnesses({*r.witness}, witness_dir);
        }
        return exit_check;
      }
      return exit_ok;
    }
    if (*theorems_cmd) {
      auto const rows = run_theorems(max_n, common.jobs);
      std::cout << format_theorem_table(rows, common.tsv());
      for (auto const& r : rows) {
        if (!r.pass()) {
          return exit_check;
        }
      }
      return exit_ok;
    }
  } catch (InternalInconsistency const& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return exit_check;
  } catch (AxiomViolation const& e) {
    std::cerr << "not a skew lattice: " << e.what() << '\n';
    return exit_check;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
