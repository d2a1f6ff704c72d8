#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ladders/io.hpp"

using namespace ladders;
namespace fs = std::filesystem;

namespace {

struct Run {
    int status;
    std::string out;
};

// Runs the CLI with stderr discarded.
Run run(const std::string& args) {
    const std::string cmd = std::string(LADDERS_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string data(const std::string& name) { return std::string(LADDERS_DATA_DIR) + "/" + name; }

fs::path scratch() {
    fs::path p = fs::temp_directory_path() / "ladders_cli_test";
    fs::create_directories(p);
    return p;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("check separates verdict and status") {
    Run ok = run("check " + data("m3.json") + " --ladder 3 --breadth");
    CHECK(ok.status == 0);
    CHECK(ok.out == "3-ladder: pass, breadth: 2\n");

    Run fail = run("check " + data("m3.json") + " --ladder 2");
    CHECK(fail.status == 0);
    CHECK(fail.out.rfind("2-ladder: fail\n", 0) == 0);
    CHECK(run("check " + data("m3.json") + " --ladder 2 --strict").status == 1);
    CHECK(run("check " + data("m3.json") + " --ladder 3 --strict").status == 0);

    Run js = run("check " + data("m3.json") + " --lattice --format json");
    CHECK(parse_json(js.out)[0]["passed"] == true);
}

TEST_CASE("exit statuses") {
    const fs::path dir = scratch();
    write(dir / "bad.json", "{nope");
    CHECK(run("check " + (dir / "bad.json").string()).status == 2);
    CHECK(run("check /nonexistent/poset.json").status == 2);
    CHECK(run("check").status == 2);
    CHECK(run("frobnicate").status == 2);
    write(dir / "unknown.json", R"({"elements":["a"],"relation_kind":"covers","pairs":[["a","b"]]})");
    CHECK(run("check " + (dir / "unknown.json").string()).status == 2);

    // Not cofinal: a precondition of the extension.
    CHECK(run("extend " + data("m3.json") + " --subset a0 --n 3").status == 3);
    CHECK(run("club build --stages 3 --width-schedule 4,4,4 --no-widen").status == 3);
    CHECK(run("cohen filter " + data("chain_family.json") + " " + data("incompatible.json")).status == 3);
}

TEST_CASE("rho build then check") {
    const fs::path t = scratch() / "rho.json";
    CHECK(run("rho build --levels 3 --window 3 --seed 7 -o " + t.string()).status == 0);
    Run c = run("rho check " + t.string());
    CHECK(c.status == 0);
    CHECK(c.out.rfind("rho-axioms: pass", 0) == 0);
    CHECK(run("rho witness " + t.string() + " --f 9,9,9 --strict").status == 0);
    CHECK(run("rho witness " + t.string() + " --f 3,2,1").status == 3);

    Run box = run("rho export-box " + t.string() + " --A 2 --N 2 --M 2");
    CHECK(box.status == 0);
    CHECK(parse_json(box.out)["elements"].size() == 1 + 2 * 2 * 2);
    CHECK(run("rho export-box " + t.string() + " --A 5").status == 3);
}

TEST_CASE("identical inputs and seed give identical bytes") {
    const std::string club = "club build --stages 3 --width-schedule 4,2 --seed 99";
    Run a = run(club), b = run(club);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(run("rho build --levels 4 --window 3 --seed 5").out == run("rho build --levels 4 --window 3 --seed 5").out);
    CHECK(run("diamond build --stages 2 --width 4 --format dot").out ==
          run("diamond build --stages 2 --width 4 --format dot").out);
}

TEST_CASE("export and re-import") {
    const fs::path dir = scratch();
    Run e = run("export " + data("m3.json") + " -o " + (dir / "m3c.json").string());
    CHECK(e.status == 0);
    Run again = run("export " + (dir / "m3c.json").string());
    std::ifstream in(dir / "m3c.json");
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(again.out == ss.str());

    Run dot = run("export " + data("m3.json") + " --format dot");
    CHECK(dot.out.find("\"a2\" -> \"top\";") != std::string::npos);

    Run ext = run("extend " + data("m3.json") + " --subset top --n 3");
    CHECK(ext.status == 0);
    Json doc = parse_json(ext.out);
    CHECK(doc["new_elements"] == Json({"top'"}));
    CHECK(doc["extended"]["elements"].size() == 6);
}

TEST_CASE("staged builds") {
    Run club = run("club build --stages 2 --width-schedule 3 --seed 4 --target-parity 1");
    CHECK(club.status == 0);
    CHECK(parse_json(club.out)["relation_kind"] == "covers");

    Run check = run("diamond check --stages 2 --width 5 --strict");
    CHECK(check.status == 0);
    Run branch = run("diamond branch --stages 2 --width 5 --leaf t2.0");
    CHECK(branch.status == 0);
    CHECK(!parse_json(branch.out)["subset"].empty());
    CHECK(run("diamond branch --stages 2 --width 5 --leaf x").status == 2);
    CHECK(run("diamond branch --stages 2 --width 5 --leaf t9.0").status == 3);
    Run tree = run("diamond build --stages 2 --width 3 --format tree-dot");
    CHECK(tree.out.find("\"t0.0\" -> \"t1.0\";") != std::string::npos);
}

TEST_CASE("cohen commands") {
    const std::string fam = data("chain_family.json");
    Run v = run("cohen validate " + fam + " --strict");
    CHECK(v.status == 0);
    Run cp = run("cohen cp " + fam + " " + data("condition.json"));
    CHECK(parse_json(cp.out)["c"] == Json({"c1", "c2"}));
    Run d = run("cohen density " + fam + " " + data("condition.json") + " --x c4");
    CHECK(parse_json(d.out)["y"] == "c4");
    Run d0 = run("cohen density " + fam + " --x c0");
    CHECK(parse_json(d0.out)["y"] == "c0");
    CHECK(run("cohen density " + fam + " --x nope").status == 2);
    Run f = run("cohen filter " + fam + " " + data("conditions.json") + " --format json --strict");
    CHECK(f.status == 0);
    CHECK(parse_json(f.out)["passed"] == true);
}
