#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "skewlat/io.hpp"
#include "skewlat/search.hpp"

namespace fs = std::filesystem;

namespace {
  struct Run {
    int         status;
    std::string out;
  };

  Run run(std::string const& args) {
    std::string const cmd = std::string(SKEWLAT_CLI) + " " + args + " 2>/dev/null";
    FILE*             p   = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string           out;
    std::array<char, 4096> buf;
    std::size_t           got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) {
      out.append(buf.data(), got);
    }
    int const st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
  }

  std::string data(std::string const& name) {
    return std::string(SKEWLAT_TEST_DATA_DIR) + "/" + name;
  }

  fs::path scratch(std::string const& name) {
    char const* env  = std::getenv("SKEWLAT_TMP");
    fs::path    base = env ? fs::path(env) : fs::temp_directory_path() / "skewlat_cli";
    fs::create_directories(base);
    auto p = base / name;
    fs::remove_all(p);
    return p;
  }
}  // namespace

TEST_CASE("validate", "[cli]") {
  CHECK(run("validate " + data("one.skl")).status == 0);
  CHECK(run("validate " + data("3R0.skl")).status == 0);
  auto const bad = run("validate " + data("bad_idempotent.skl"));
  CHECK(bad.status == 1);
  CHECK(bad.out.find("idempotency of meet at x=0") != std::string::npos);
  CHECK(run("validate " + data("truncated.skl")).status == 2);
  CHECK(run("validate " + data("missing.skl")).status == 2);
}

TEST_CASE("usage errors", "[cli]") {
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("ybe --map sideways " + data("3R0.skl")).status == 2);
  CHECK(run("--help").status == 0);
}

TEST_CASE("ybe on 3R0", "[cli]") {
  auto const r = run("ybe --map strong " + data("3R0.skl"));
  CHECK(r.status == 1);
  CHECK(r.out.find("(0,1,2)") != std::string::npos);
  CHECK(run("ybe --map update --map lower_update " + data("3R0.skl")).status == 0);
  auto const tsv = run("--format tsv ybe --all-maps " + data("3R0.skl"));
  CHECK(tsv.status == 1);
  CHECK(tsv.out.rfind("map\tbraid\t", 0) == 0);
}

TEST_CASE("structure and props", "[cli]") {
  auto const s = run("structure " + data("3R0.skl"));
  CHECK(s.status == 0);
  CHECK_FALSE(s.out.empty());
  auto const p = run("props " + data("3R0.skl"));
  CHECK(p.status == 0);
  CHECK(p.out.find("strongly_distributive: true") != std::string::npos);
  CHECK(p.out.find("co_strongly_distributive: false") != std::string::npos);
  CHECK(run("props --require co_strongly_distributive " + data("3R0.skl")).status == 1);
  CHECK(run("props --formula strong2 " + data("3R0.skl")).status == 1);
  CHECK(run("props --formula 'x ^ x = x' " + data("3R0.skl")).status == 0);
}

TEST_CASE("construct", "[cli]") {
  auto const f = run("construct fixed 3R0");
  CHECK(f.status == 0);
  auto const parsed = skewlat::parse_algebra(f.out);
  auto const file   = skewlat::read_algebra(fs::path(data("3R0.skl")));
  CHECK(parsed.tables == file.tables);

  auto const c = run("construct chain --sizes 2,3,1");
  CHECK(c.status == 0);
  CHECK(skewlat::parse_algebra(c.out).tables.size() == 6);
  auto const r = run("construct rect --left 2 --right 3");
  CHECK(skewlat::parse_algebra(r.out).tables.size() == 6);

  auto const dir = scratch("ring");
  CHECK(run("construct ring --kind ut --dim 2 --mod 2 --out-dir " + dir.string()).status
        == 0);
  std::size_t files = 0;
  for (auto const& e : fs::directory_iterator(dir)) {
    auto const a = skewlat::read_algebra(e.path());
    CHECK(skewlat::validate(a.tables).ok());
    ++files;
  }
  CHECK(files > 0);
  CHECK(run("construct fixed nothing").status == 2);
}

TEST_CASE("enumerate and search", "[cli]") {
  auto const e = run("--format tsv enumerate -n 4");
  CHECK(e.status == 0);
  CHECK(e.out.rfind("n\tcensus\tcount\tnodes\texhausted\tfrontier\n4\t21\t21\t", 0) == 0);
  CHECK(e.out.ends_with("\ttrue\t0\n"));

  auto const dir = scratch("witnesses");
  CHECK(run("enumerate -n 3 --satisfy strongly_distributive --falsify "
            "co_strongly_distributive --out-dir " + dir.string())
            .status
        == 0);
  CHECK(fs::exists(dir / "witness_0000.skl"));

  auto const s = run("search -n 3 --satisfy strongly_distributive --falsify strong_solution");
  CHECK(s.status == 1);
  CHECK(s.out.find("found: true") != std::string::npos);
  CHECK(run("search -n 4 --falsify update_solution").status == 0);
}

TEST_CASE("checkpointed enumeration", "[cli]") {
  auto const cp = scratch("run.ckpt");
  auto const a  = run("enumerate -n 5 --max-nodes 40 --checkpoint " + cp.string());
  CHECK(a.status == 0);
  CHECK(a.out.find("exhausted: false") != std::string::npos);
  REQUIRE(fs::exists(cp));
  auto const b = run("enumerate -n 5 --resume " + cp.string());
  CHECK(b.status == 0);
  CHECK(b.out.find("census: 53") != std::string::npos);
  CHECK(b.out.find("exhausted: true") != std::string::npos);
  CHECK(run("enumerate -n 4 --resume " + cp.string()).status == 2);
}

TEST_CASE("theorems", "[cli]") {
  auto const t = run("theorems --max-n 4");
  CHECK(t.status == 0);
  CHECK(t.out.find("FAIL") == std::string::npos);
  auto const tsv = run("--format tsv theorems --max-n 3");
  CHECK(tsv.out.rfind("theorem\tchecked\tfailures\tresult\tfirst_failure\n", 0) == 0);
}

TEST_CASE("output is deterministic", "[cli]") {
  for (auto const& args : {std::string("structure ") + data("3R0.skl"),
                           std::string("--format tsv props --witnesses ") + data("3R0.skl"),
                           std::string("ybe --all-maps ") + data("3R0.skl"),
                           std::string("enumerate -n 4")}) {
    CHECK(run(args).out == run(args).out);
  }
}
