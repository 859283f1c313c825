#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "catch_amalgamated.hpp"
#include "dmv/catalog.hpp"
#include "dmv/io.hpp"

using namespace dmv;

namespace {

struct Run {
  int status;
  std::string out;
};

// Runs the CLI with stderr discarded.
Run cli(const std::string& args) {
  const std::string command = std::string(DMV_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string data(const std::string& name) { return std::string(DMV_DATA_DIR) + "/" + name; }

std::string canonical_text(const SetSystem& s) { return format_set_system(canonical_form(s).to_system()); }

std::filesystem::path scratch(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("dmv_cli_test_" + name);
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("ss check") {
  const Run s12 = cli("ss check " + data("s12.ss"));
  CHECK(s12.status == 0);
  CHECK(s12.out == "proper true\ndelta-matroid true\neven false\nbinary true\nempty-feasible true\n");

  const std::string slid = cli("ss slide -a 0 -b 1 --raw " + data("slide_example.ss")).out;
  CHECK(slid == "setsystem n=3\nphi 0x0 0x3 0x6 0x7\n");
  const Run after = cli("ss check " + scratch("slid.ss", slid).string());
  CHECK(after.out.find("delta-matroid false\n") != std::string::npos);

  CHECK(cli("ss check " + data("unit.ss")).out.find("proper true\n") == 0);
}

TEST_CASE("ss transforms") {
  const Run slid = cli("ss slide -a 0 -b 1 " + data("s23.ss"));
  CHECK(slid.status == 0);
  CHECK(slid.out == canonical_text(product(named("s11"), named("s12"))));

  const Run ft = cli("ss fourterm -a 0 -b 1 " + data("s23.ss"));
  CHECK(ft.status == 0);
  CHECK(ft.out == "+1\n" + canonical_text(named("s23")) + "-1\n" + canonical_text(product(named("s12"), named("s12"))) +
                      "-1\n" + canonical_text(product(named("s11"), named("s12"))) + "+1\n" + canonical_text(named("s22")));

  const Run canon = cli("ss canon " + data("slide_example.ss"));
  CHECK(canon.status == 0);
  CHECK(cli("ss canon " + scratch("canon.ss", canon.out).string()).out == canon.out);

  CHECK(cli("ss twist --set 0x1 --raw " + data("s12.ss")).out == "setsystem n=1\nphi 0x0 0x1\n");
  CHECK(cli("ss product --raw " + data("s12.ss") + " " + data("s21.ss")).out ==
        format_set_system(product(named("s12"), named("s21"))));
  CHECK(cli("ss exchange -a 0 -b 1 --raw " + data("s21.ss")).out ==
        format_set_system(product(named("s11"), named("s11"))));
  CHECK(cli("ss restrict --set 0x1 --raw " + data("s23.ss")).out == format_set_system(named("s12")));
  CHECK(cli("ss delete -e 0 --raw " + data("s21.ss")).out == format_set_system(named("s11")));
  CHECK(cli("ss contract -e 0 --raw " + data("s21.ss")).out == format_set_system(named("s13")));

  // Every emitted system re-parses.
  CHECK_NOTHROW(parse_set_system(slid.out));
  CHECK(parse_set_system(canon.out) == canonical_form(parse_set_system(canon.out)).to_system());
}

TEST_CASE("graph and ribbon pipelines") {
  CHECK(cli("ribbon dm " + data("plus_loop.rib")).out == format_set_system(named("s11")));
  CHECK(cli("ribbon dm " + data("minus_loop.rib")).out == format_set_system(named("s12")));
  CHECK(cli("ribbon boundary --edges 0x1 " + data("minus_loop.rib")).out == "1\n");
  CHECK(cli("ribbon boundary --edges 0x1 " + data("plus_loop.rib")).out == "2\n");
  CHECK(cli("ribbon boundary --edges 0x0 " + data("plus_loop.rib")).out == "1\n");
  CHECK(cli("chord igraph " + data("crossing.chords")).out == "f2matrix n=2\n01\n10\n");
  CHECK(cli("chord dm " + data("crossing.chords")).out == format_set_system(named("s21")));
  CHECK(cli("graph dm " + data("path3.f2")).out == "setsystem n=3\nphi 0x0 0x3 0x6\n");
  CHECK(cli("graph slide -a 0 -b 1 " + data("path3.f2")).out == "f2matrix n=3\n011\n101\n110\n");
  CHECK(cli("graph binary " + data("s23.ss")).out == "binary true\ntwist 0x0\nf2matrix n=2\n11\n11\n");
}

TEST_CASE("exit codes") {
  CHECK(cli("--help").status == 0);
  CHECK(cli("ss --help").status == 0);
  CHECK(cli("ss check " + data("unsorted.ss")).status == 2);
  CHECK(cli("ss check /nonexistent/file.ss").status == 2);
  CHECK(cli("ss check --bogus " + data("s12.ss")).status == 2);
  CHECK(cli("ss slide -a 0 -b 0 " + data("s23.ss")).status == 3);
  CHECK(cli("ss slide -a 0 -b 5 " + data("s23.ss")).status == 3);
  CHECK(cli("ss fourterm -a 0 -b 1 --require-binary " + scratch("nb.ss", "setsystem n=3\nphi 0x0 0x7\n").string())
            .status == 3);
  CHECK(cli("ribbon dm " + data("two_points.rib")).status == 3);

  const Run table = cli("hopf table1");
  CHECK(table.status == 4);
  CHECK(table.out.find("FAIL") != std::string::npos);
}
