#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string &args) {
  std::string cmd = std::string(BISETFUN_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

} // namespace

TEST_CASE("eval examples through the CLI") {
  auto r = run_cli("eval S5 A5 sign --field Q --verify");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("dim = 0") != std::string::npos);
  CHECK(r.out.find("vanishes = yes") != std::string::npos);

  auto r2 = run_cli("eval 'SL(2,5)' A5 sign --field Q");
  CHECK(r2.exit_code == 0);
  CHECK(r2.out.find("dim = 1") != std::string::npos);

  auto r3 = run_cli("eval F21 C7 trivial --field Q --verify");
  CHECK(r3.exit_code == 0);
  CHECK(r3.out.find("dim = 1") != std::string::npos);
}

TEST_CASE("out and sections commands") {
  auto r = run_cli("out C7");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("order 6") != std::string::npos);

  auto r2 = run_cli("sections C4 C2");
  CHECK(r2.exit_code == 0);
  CHECK(r2.out.find("section orbits = 2") != std::string::npos);

  auto r3 = run_cli("subgroups S4");
  CHECK(r3.exit_code == 0);
  CHECK(r3.out.find("30 subgroups") != std::string::npos);
}

TEST_CASE("repeated invocations are byte-identical") {
  for (const char *args :
       {"eval S4 V4 trivial --field F3 --json", "sections S5 A5 --json",
        "out A5", "subgroups A4 --json"}) {
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("JSON output round-trips the numeric fields of text mode") {
  auto text = run_cli("eval S4 V4 trivial --field F2 --verify");
  auto js = run_cli("eval S4 V4 trivial --field F2 --verify --json");
  REQUIRE(text.exit_code == 0);
  REQUIRE(js.exit_code == 0);

  auto j = nlohmann::json::parse(js.out);
  auto expect_line = [&](const std::string &line) {
    CAPTURE(line);
    CHECK(text.out.find(line) != std::string::npos);
  };
  expect_line("dim = " + std::to_string(j["dim"].get<std::size_t>()));
  expect_line("lower_bound = " +
              std::to_string(j["lower_bound"].get<std::size_t>()));
  expect_line("method = " + j["method"].get<std::string>());
  expect_line("orbits = " + std::to_string(j["orbits"].size()));
  expect_line("certificates = " + std::to_string(j["certificates"].size()));
  CHECK(j["vanishes"].get<bool>() == (j["dim"].get<std::size_t>() == 0));
  for (const auto &o : j["orbits"]) {
    expect_line("|T| = " + std::to_string(o["t_order"].get<std::size_t>()));
    expect_line("|N_G(T,S)| = " +
                std::to_string(o["normalizer_order"].get<std::size_t>()));
  }
  for (const auto &t : j["per_orbit_traces"])
    expect_line("trace " + std::to_string(t["orbit"].get<std::size_t>()) +
                ": dim = " + std::to_string(t["trace_dim"].get<std::size_t>()));
}

TEST_CASE("certify command") {
  auto r = run_cli("certify S5 A5 trivial --field Q");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("unique-section") != std::string::npos);

  auto j = run_cli("certify C4 C2 trivial --json");
  CHECK(j.exit_code == 0);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["dim"].get<std::size_t>() == 2);
  CHECK(!parsed["certificates"].empty());
}

TEST_CASE("error exit codes") {
  CHECK(run_cli("eval X9 A5 sign").exit_code == 1);          // bad group spec
  CHECK(run_cli("eval S5 A5 sign --limit 10").exit_code == 2); // lattice limit
  CHECK(run_cli("eval S5 A5 sign --field F2").exit_code == 1); // sign in char 2
  CHECK(run_cli("eval S5 A5 nosuchfile.mod").exit_code == 1);  // missing module
  CHECK(run_cli("eval S5 A5 sign --field F4").exit_code == 1); // 4 not prime
  CHECK(run_cli("nosuchcommand").exit_code == 1);
}
