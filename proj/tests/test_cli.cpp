#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#ifndef FPKNOT_CLI_PATH
#define FPKNOT_CLI_PATH "fpknot"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string command =
      (env.empty() ? std::string() : env + " ") + FPKNOT_CLI_PATH + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("build subcommand") {
  RunResult klein = run_cli("build klein 2 3 3");
  CHECK(klein.exit_code == 0);
  CHECK(contains(klein.output, "(a*b)^2*a^-2"));

  RunResult dyck = run_cli("build dyck 2 3 5");
  CHECK(dyck.exit_code == 0);
  CHECK(dyck.output == "< u, v | u^2, v^3, (u*v)^5 >\n");

  RunResult bad = run_cli("build wirtinger -- -2 3 3");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("order subcommand") {
  RunResult klein = run_cli("order --klein 2 3 3");
  CHECK(klein.exit_code == 0);
  CHECK(klein.output == "48\n");

  RunResult infinite = run_cli("--max-cosets 20000 order --dyck 2 3 7");
  CHECK(infinite.exit_code == 3);
  CHECK(contains(infinite.output, "exceeds limit 20000"));

  RunResult inline_pres = run_cli("order \"< a | a^4 >\"");
  CHECK(inline_pres.exit_code == 0);
  CHECK(inline_pres.output == "4\n");

  RunResult parse_fail = run_cli("order \"< a | a^4\"");
  CHECK(parse_fail.exit_code == 2);

  RunResult builder_spec = run_cli("order dyck:2,3,5");
  CHECK(builder_spec.exit_code == 0);
  CHECK(builder_spec.output == "60\n");

  RunResult negative = run_cli("order --klein -2 3 3");
  CHECK(negative.exit_code == 0);
  CHECK(negative.output == "48\n");

  RunResult bad_spec = run_cli("order klein:9999999999999999999999");
  CHECK(bad_spec.exit_code == 2);
  CHECK(contains(bad_spec.output, "bad builder parameter"));
}

TEST_CASE("element-order subcommand") {
  RunResult a = run_cli("element-order --klein 2 3 3 --word a");
  CHECK(a.exit_code == 0);
  CHECK(a.output == "4\n");

  RunResult uv = run_cli("element-order --dyck 2 3 5 --word 'u*v'");
  CHECK(uv.exit_code == 0);
  CHECK(uv.output == "5\n");
}

TEST_CASE("meridian-order subcommand") {
  RunResult direct = run_cli("meridian-order 2 3 3");
  CHECK(direct.exit_code == 0);
  CHECK(contains(direct.output, "4 (direct, group order 48)"));

  RunResult quotient = run_cli("--max-cosets 8192 meridian-order 2 9 3");
  CHECK(quotient.exit_code == 0);
  CHECK(contains(quotient.output, "4 certified via quotient (2,3,3)"));

  RunResult none = run_cli("--max-cosets 8192 meridian-order 2 7 7");
  CHECK(none.exit_code == 0);
  CHECK(contains(none.output, "no certificate"));

  // l divisible by 4: the generator-fixing assignment is not a homomorphism
  RunResult l4 = run_cli("--max-cosets 8192 meridian-order 4 9 3");
  CHECK(l4.exit_code == 0);
  CHECK(contains(l4.output, "no certificate"));

  RunResult bad = run_cli("meridian-order 2 4 4");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("hom-check subcommand") {
  RunResult holds = run_cli(
      "hom-check --from klein:2,9,3 --to klein:2,3,3 --send a=a --send b=b --send c=c");
  CHECK(holds.exit_code == 0);
  CHECK(contains(holds.output, "holds (surjective: true)"));

  RunResult fails = run_cli(
      "hom-check --from klein:2,3,3 --to klein:2,3,3 --send a=a --send b=a --send c=a");
  CHECK(fails.exit_code == 1);
  CHECK(contains(fails.output, "fails at relator 3"));

  RunResult missing = run_cli("hom-check --from klein:2,3,3 --to klein:2,3,3 --send a=a");
  CHECK(missing.exit_code == 2);
  CHECK(contains(missing.output, "missing image"));
}

TEST_CASE("ses subcommand") {
  RunResult r5 = run_cli("--json ses 5");
  CHECK(r5.exit_code == 0);
  auto j = nlohmann::json::parse(r5.output);
  CHECK(j["result"]["kernel_order"] == 120);
  CHECK(j["result"]["split"] == true);
  CHECK(j["result"]["quotient_ok"] == true);
}

TEST_CASE("dbc subcommand") {
  RunResult d33 = run_cli("--json dbc 2 3 3");
  CHECK(d33.exit_code == 0);
  auto j = nlohmann::json::parse(d33.output);
  CHECK(j["result"]["order"] == 12);
  CHECK(j["result"]["abelian_invariants"] == nlohmann::json::array({3}));
  CHECK(j["result"]["triangle"]["kind"] == "spherical");
  CHECK(j["result"]["dyck_cross_check"] == "certified");
  CHECK(j["result"]["trace"]["transversal"] == nlohmann::json::array({"1", "a"}));

  RunResult d37 = run_cli("dbc 2 3 7");
  CHECK(d37.exit_code == 0);
  CHECK(contains(d37.output, "hyperbolic"));
}

TEST_CASE("abelianize subcommand") {
  RunResult klein = run_cli("abelianize --klein 2 3 3");
  CHECK(klein.exit_code == 0);
  CHECK(klein.output == "[2]\n");

  RunResult free2 = run_cli("abelianize \"< a, b | >\"");
  CHECK(free2.exit_code == 0);
  CHECK(free2.output == "[0,0]\n");
}

TEST_CASE("groups can be read from files") {
  const std::string path = "/tmp/fpknot_test_presentation.txt";
  {
    std::FILE* f = std::fopen(path.c_str(), "w");
    REQUIRE(f != nullptr);
    std::fputs("# the (2,3,5) von Dyck group\n< u, v | u^2, v^3, (u*v)^5 >\n", f);
    std::fclose(f);
  }
  RunResult from_file = run_cli("order " + path);
  CHECK(from_file.exit_code == 0);
  CHECK(from_file.output == "60\n");
  std::remove(path.c_str());

  RunResult missing = run_cli("order /tmp/fpknot_no_such_file.txt");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("every builder flag resolves") {
  CHECK(run_cli("order --coxeter 2 3 3").output == "24\n");
  CHECK(run_cli("order --wirtinger-klein 2 3 3").output == "48\n");
  CHECK(run_cli("abelianize --paper-dbc 2 3 3").exit_code == 0);
  RunResult wirt = run_cli("order --wirtinger 2 3 3 --max-cosets 4096");
  // knot groups are infinite; the enumeration must hit the limit
  CHECK(wirt.exit_code == 3);
}

TEST_CASE("classify subcommand") {
  RunResult euclid = run_cli("classify 2 3 6");
  CHECK(euclid.exit_code == 0);
  CHECK(contains(euclid.output, "euclidean"));

  RunResult sph = run_cli("--json classify 2 3 5");
  auto j = nlohmann::json::parse(sph.output);
  CHECK(j["result"]["kind"] == "spherical");
  CHECK(j["result"]["dyck_order"] == 60);
  CHECK(j["result"]["coxeter_order"] == 120);

  RunResult hyp = run_cli("--json classify 2 3 7");
  auto h = nlohmann::json::parse(hyp.output);
  CHECK(h["result"]["dyck_order"] == "infinite");
}

TEST_CASE("cayley-cut subcommand") {
  RunResult cut = run_cli("cayley-cut --dyck 2 3 3");
  CHECK(cut.exit_code == 0);
  CHECK(contains(cut.output, "no cut vertices"));

  RunResult json_cut = run_cli("--json cayley-cut --dyck 2 3 3 --gens u,v");
  auto j = nlohmann::json::parse(json_cut.output);
  CHECK(j["result"]["cut_vertices"] == nlohmann::json::array());
  CHECK(j["result"]["graph"]["n"] == 12);
}

TEST_CASE("json reports are deterministic apart from the wall clock") {
  for (const std::string& args :
       {std::string("--json order --klein 2 3 3"), std::string("--json ses 5"),
        std::string("--json dbc 2 3 3"), std::string("--json cayley-cut --dyck 2 3 3")}) {
    RunResult first = run_cli(args);
    RunResult second = run_cli(args);
    CHECK(first.exit_code == 0);
    auto j1 = nlohmann::json::parse(first.output);
    auto j2 = nlohmann::json::parse(second.output);
    j1["stats"].erase("wall_ms");
    j2["stats"].erase("wall_ms");
    CHECK(j1.dump() == j2.dump());
  }
  RunResult order = run_cli("--json order --klein 2 3 3");
  auto j = nlohmann::json::parse(order.output);
  CHECK(j["result"]["index"] == 48);
  CHECK(j["stats"].contains("cosets_defined"));
  CHECK(j["stats"].contains("coincidences"));
}

TEST_CASE("environment variable sets the default limit") {
  RunResult limited = run_cli("order --dyck 2 3 7", "FPKNOT_MAX_COSETS=5000");
  CHECK(limited.exit_code == 3);
  CHECK(contains(limited.output, "exceeds limit 5000"));
}

TEST_CASE("paper-suite reports the known red checks and nothing else") {
  RunResult suite = run_cli("--max-cosets 16384 --json paper-suite");
  CHECK(suite.exit_code == 1);
  auto j = nlohmann::json::parse(suite.output);
  CHECK(j["result"]["all_pass"] == false);
  std::vector<std::string> failing;
  for (const auto& check : j["result"]["checks"]) {
    CHECK(check.contains("name"));
    CHECK(check.contains("expected"));
    CHECK(check.contains("computed"));
    CHECK(check["pass"].is_boolean());
    if (!check["pass"].get<bool>()) failing.push_back(check["name"].get<std::string>());
  }
  // The six-lift filled presentations are infinite (they surject onto the
  // integers), so those two enumerations can never reach the recorded
  // orders; everything else holds.
  CHECK(failing == std::vector<std::string>{"lifted_cover_filled_order_2_3_3",
                                            "lifted_cover_filled_order_2_3_5"});
}

TEST_CASE("paper-suite fault injection is reported by name") {
  RunResult suite = run_cli("--max-cosets 16384 paper-suite --inject-fault");
  CHECK(suite.exit_code == 1);
  CHECK(contains(suite.output, "FAIL klein_2_3_3_order"));
}

TEST_SUITE_END();
