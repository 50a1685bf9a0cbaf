// End-to-end checks of the command-line tool: exit codes, file outputs, and
// the JSON it prints. The binary path comes in through STARPROD_CLI_PATH.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "catch_amalgamated.hpp"
#include "starprod/bank.hpp"
#include "starprod/io.hpp"
#include "starprod/pattern.hpp"

namespace fs = std::filesystem;
using namespace starprod;

namespace {

struct Run {
  int exit_code;
  std::string output;
};

Run run_cli(const std::string& args) {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "starprod_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  fs::path out_file = dir / "out.txt";
  std::string cmd = std::string(STARPROD_CLI_PATH) + " " + args + " > " + out_file.string() +
                    " 2> " + (dir / "err.txt").string();
  int status = std::system(cmd.c_str());
  Run r;
  r.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_file);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  return r;
}

fs::path scratch() {
  fs::path d = fs::temp_directory_path() / "starprod_cli_scratch";
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("verify exits 0 on a star coloring given as a pattern") {
  fs::path csv = scratch() / "c3xc4.csv";
  {
    std::ofstream out(csv, std::ios::binary);
    write_pattern_csv(out, bank_pattern(builtin_bank(), "C3xC4"));
  }
  REQUIRE(run_cli("verify C3xC4 " + csv.string()).exit_code == 0);
  // graph omitted: derived from the pattern header
  REQUIRE(run_cli("verify \"\" " + csv.string()).exit_code == 0);
}

TEST_CASE("verify exits 1 on a violation and prints the witness") {
  fs::path json = scratch() / "bad.json";
  {
    std::ofstream out(json);
    out << "{\"k\": 2, \"colors\": [1, 2, 1, 2]}\n";
  }
  auto r = run_cli("verify P4 " + json.string());
  REQUIRE(r.exit_code == 1);
  REQUIRE(r.output.find("star_violation") != std::string::npos);
}

TEST_CASE("verify exits 2 on malformed input") {
  fs::path csv = scratch() / "broken.csv";
  {
    std::ofstream out(csv);
    out << "# rows=2 cols=2 wrap_rows=0 wrap_cols=0\n1,2\n";
  }
  REQUIRE(run_cli("verify P4 " + csv.string()).exit_code == 2);
  REQUIRE(run_cli("verify C2 " + csv.string()).exit_code == 2);
}

TEST_CASE("chi formula and exact modes print the expected values") {
  auto f = run_cli("chi --formula C6xP4");
  REQUIRE(f.exit_code == 0);
  REQUIRE(f.output.find("\"exact\": 4") != std::string::npos);

  auto open = run_cli("chi --formula C8xP5");
  REQUIRE(open.exit_code == 0);
  REQUIRE(open.output.find("\"range\"") != std::string::npos);

  auto e = run_cli("chi --exact C3xC3 --max-nodes 1e8");
  REQUIRE(e.exit_code == 0);
  REQUIRE(e.output.find("\"exact\": 6") != std::string::npos);

  auto d = run_cli("chi exact --graph C5 --k 3");
  REQUIRE(d.exit_code == 0);
  REQUIRE(d.output.find("\"decide\": \"no\"") != std::string::npos);
}

TEST_CASE("chi exits 3 when the budget trips") {
  auto r = run_cli("chi --exact C3xC3 --max-nodes 10");
  REQUIRE(r.exit_code == 3);
  REQUIRE(r.output.find("\"range\"") != std::string::npos);
}

TEST_CASE("chi --construct writes a verifiable witness file") {
  fs::path out = scratch() / "c14xc19.csv";
  auto r = run_cli("chi --construct C14xC19 --out " + out.string());
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output.find("\"exact\": 5") != std::string::npos);
  REQUIRE(fs::exists(out));
  REQUIRE(run_cli("verify C14xC19 " + out.string()).exit_code == 0);

  // path-first spelling constructs through the transposed route
  fs::path out2 = scratch() / "p4xc6.csv";
  auto mixed = run_cli("chi --construct P4xC6 --out " + out2.string());
  REQUIRE(mixed.exit_code == 0);
  REQUIRE(run_cli("verify P4xC6 " + out2.string()).exit_code == 0);
}

TEST_CASE("table emits the open cp band") {
  auto r = run_cli("table cp --m-max 8 --n-max 5");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output.find("8,4,4..5,5,1,") != std::string::npos);
  REQUIRE(r.output.find("6,4,4,4,1,") != std::string::npos);

  auto md = run_cli("table cc --m-max 4 --n-max 5 --format md");
  REQUIRE(md.exit_code == 0);
  REQUIRE(md.output.find("| 3 | 5 | 6 | 6 | 1 |") != std::string::npos);
}

TEST_CASE("regen-derived produces a byte-stable cache with a manifest") {
  fs::path dir1 = scratch() / "derived1";
  fs::path dir2 = scratch() / "derived2";
  REQUIRE(run_cli("regen-derived --out-dir " + dir1.string()).exit_code == 0);
  REQUIRE(run_cli("regen-derived --out-dir " + dir2.string()).exit_code == 0);
  REQUIRE(fs::exists(dir1 / "manifest.json"));
  for (const char* id : {"C3xC3", "C3xC5", "P6xP6", "P6xP7"}) {
    auto a = read_file_bytes(dir1 / (std::string(id) + ".csv"));
    auto b = read_file_bytes(dir2 / (std::string(id) + ".csv"));
    REQUIRE(!a.empty());
    REQUIRE(a == b);
    REQUIRE(run_cli("verify " + std::string(id) + " " + (dir1 / (std::string(id) + ".csv")).string())
                .exit_code == 0);
  }
  auto starved = run_cli("regen-derived --out-dir " + (scratch() / "derived3").string() +
                         " --max-nodes 10");
  REQUIRE(starved.exit_code == 3);
  REQUIRE(starved.output.find("incomplete") != std::string::npos);
}

TEST_CASE("dump-bank emits loadable files honored by STARPROD_BANK") {
  fs::path dir = scratch() / "bankdump";
  REQUIRE(run_cli("dump-bank --out-dir " + dir.string()).exit_code == 0);
  auto loaded = load_bank(dir);
  REQUIRE(loaded.size() == builtin_bank().size());
  // a bank override is honored (and a broken one rejected)
  std::string env = "STARPROD_BANK=" + dir.string() + " ";
  fs::path out = fs::temp_directory_path() / "starprod_cli_test" / "envout.txt";
  int status = std::system((env + STARPROD_CLI_PATH + " chi --construct C3xC4 > " +
                            out.string() + " 2>/dev/null").c_str());
  REQUIRE(WEXITSTATUS(status) == 0);
}
