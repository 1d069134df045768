#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;

namespace {

  std::string const fixtures = GP_FIXTURES;

  struct Run {
    int         code = -1;
    std::string out;
  };

  Run run(std::string const& args) {
    std::string cmd = std::string("\"") + GP_CLI + "\" " + args + " 2>/dev/null";
    Run         r;
    FILE*       pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t            n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
      r.out.append(buf.data(), n);
    }
    int status = pclose(pipe);
    r.code     = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  json run_json(std::string const& args) {
    auto r = run(args);
    REQUIRE_MESSAGE(r.code == 0, args);
    return json::parse(r.out);
  }

  std::string fixture(char const* name) {
    return "\"" + fixtures + "/" + name + "\"";
  }

}  // namespace

TEST_CASE("hyperbolic subcommand") {
  auto c4 = run_json("hyperbolic " + fixture("c4_z2.json"));
  CHECK(c4["verdict"] == false);
  CHECK(c4["cond_iv"] == false);
  CHECK(c4["witness"] == json::array({"u1", "u2", "u3", "u4"}));

  auto c5 = run_json("hyperbolic " + fixture("c5_z2.json"));
  CHECK(c5["verdict"] == true);
  CHECK(c5["witness"].is_null());

  auto z2 = run_json("hyperbolic " + fixture("z2_edge.json"));
  CHECK(z2["cond_ii"] == false);
  CHECK(z2["witness"] == json::array({"x", "y"}));

  auto center = run_json("hyperbolic " + fixture("p3_z_center.json"));
  CHECK(center["cond_iii"] == false);
  CHECK(center["witness"] == json::array({"b", "a", "c"}));
}

TEST_CASE("surface subcommand") {
  auto s = run_json("surface 5");
  CHECK(s["euler"] == -8);
  CHECK(s["genus"] == 5);
  CHECK(s["closed_surface"] == true);
  CHECK(s["orientable"] == "pass");
  CHECK(s["counts"]["squares"] == 40);
  CHECK(run("surface 2").code == 2);
  CHECK(run("surface 21").code == 2);
}

TEST_CASE("word subcommands") {
  auto p3 = fixture("p3.json");
  CHECK(run_json("equal " + p3 + " --w1 \"a b a^-1\" --w2 \"b\"")["equal"] == true);
  CHECK(run_json("equal " + p3 + " --w1 \"a c\" --w2 \"c a\"")["equal"] == false);
  auto n = run_json("normalize " + p3 + " --word \"c a b c\"");
  CHECK(n["normal_form"] == "b c a c");
  CHECK(n["geodesic_length"] == 4);

  auto g = run_json("geodesic " + p3 + " --word \"a b a c\"");
  CHECK(g["input_length"] == 4);
  CHECK(g["is_geodesic"] == false);
  CHECK(g["length"] == 2);

  auto k = run_json("kernel-test " + p3 + " --word \"a c a c\"");
  CHECK(k["in_kernel"] == true);
  CHECK(run_json("kernel-test " + p3 + " --word \"a\"")["in_kernel"] == false);

  auto f = run_json("free-kernel " + fixture("c4_z2.json"));
  CHECK(f["free"] == false);
  CHECK(f["genus_if_cycle"] == 1);
  CHECK(run_json("free-kernel " + fixture("k3_z2.json"))["free"] == true);
}

TEST_CASE("series subcommands") {
  auto s = run_json("series " + fixture("p3.json"));
  CHECK(s["pass"] == true);
  REQUIRE(s["levels"].size() == 2);
  CHECK(s["levels"][0]["dead"] == json::array({"a", "c"}));
  CHECK(s["levels"][1]["dead"] == json::array({"b"}));
  auto v = run_json("verify-hs " + fixture("c5_z2.json"));
  CHECK(v["pass"] == true);
}

TEST_CASE("scan subcommands") {
  auto b = run_json("ball " + fixture("p3.json") + " --radius 2");
  CHECK(b["size"].get<int>() > 0);
  auto scan = run_json("bigon-scan " + fixture("p4_z3.json") + " --radius 3");
  CHECK(scan["max_width"].get<int>() >= 0);
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("hyperbolic /nonexistent.json").code == 2);
  CHECK(run("equal " + fixture("p3.json") + " --w1 \"q\" --w2 a").code == 2);
  CHECK(run("equal " + fixture("p3.json") + " --w1 a").code == 2);
  CHECK(run("ball " + fixture("c5_z2.json") + " --radius 9").code == 3);
  CHECK(run("ball " + fixture("c5_z2.json") + " --radius 5 --max-elements 10").code == 3);
  CHECK(run("bigon-scan " + fixture("p3.json") + " --radius 2 --threads 0").code == 2);

  auto dir = std::filesystem::temp_directory_path() / "gp_cli_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "bad.json") << R"({"vertices": [{"id": "a"}], "groups": {"a": {"type": "cyclic", "order": 1}}})";
  CHECK(run("hyperbolic \"" + (dir / "bad.json").string() + "\"").code == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("output is deterministic") {
  std::vector<std::string> commands{
      "series " + fixture("p4_z3.json"),
      "ball " + fixture("c5_z2.json") + " --radius 3 --elements",
      "normalize " + fixture("p4_z3.json") + " --word \"d c b a d^2 a\"",
  };
  for (auto const& c : commands) {
    CHECK(run(c).out == run(c).out);
  }
  auto base = run("bigon-scan " + fixture("p4_z3.json") + " --radius 3 --threads 1");
  CHECK(base.code == 0);
  for (int t : {2, 4, 7}) {
    auto other = run("bigon-scan " + fixture("p4_z3.json") + " --radius 3 --threads "
                     + std::to_string(t));
    CHECK(other.out == base.out);
  }
}
