#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "mteam/io.hpp"

using namespace mteam;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + "'" MTEAM_CLI "' " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const char* name) { return "'" + (fs::path(MTEAM_TEST_DATA) / name).string() + "'"; }

fs::path scratch() {
    fs::path dir = fs::temp_directory_path() / "mteam_cli_test";
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("check reports truth through the exit code") {
    Run r = run("check " + data("binary.struct") + " " + data("skewed_pair.csv") + " 'pind(x ; y)'");
    CHECK(r.code == 1);
    CHECK(r.out == "false\n");
    r = run("check " + data("binary.struct") + " " + data("skewed_pair.csv") + " 'ind(; x ; y)'");
    CHECK(r.code == 0);
    CHECK(r.out == "true\n");
    CHECK(run("check " + data("binary.struct") + " " + data("empty.csv") + " 'x != x'").code == 0);
    CHECK(run("check " + data("binary.struct") + " - 'E x. A y. x = y | x != y'").code == 0);
}

TEST_CASE("modes come from flags or the environment") {
    const std::string args = "check " + data("ternary.struct") + " " + data("cover.csv") + " 'dep(x ; y) | dep(x ; z)'";
    Run lax = run(args);
    Run strict = run(args + " --strictness strict");
    CHECK(lax.code == 0);
    CHECK(strict.code == run(args, "MTEAM_STRICTNESS=strict").code);
    CHECK(run(args + " --team-kind set").code == run(args, "MTEAM_TEAM_KIND=set").code);
    CHECK(run(args + " --strictness sloppy").code == 2);
}

TEST_CASE("input errors exit with 2") {
    CHECK(run("check " + data("binary.struct") + " " + data("skewed_pair.csv") + " 'dep(x ; '").code == 2);
    CHECK(run("check " + data("binary.struct") + " /nonexistent.csv 'x = y'").code == 2);
    CHECK(run("check " + data("skewed_pair.csv") + " - 'x = x'").code == 2);
    CHECK(run("gen 3sat " + data("mixed_width.cnf") + " --out " + scratch().string()).code == 2);
    CHECK(run("gen max2sat " + data("all_pairs.cnf") + " --out " + scratch().string()).code == 2);
    CHECK(run("props nosuch").code == 2);
}

TEST_CASE("witness output re-checks") {
    Run r = run("check " + data("binary.struct") + " " + data("skewed_pair.csv") + " 'x = y | x != y' --witness");
    REQUIRE(r.code == 0);
    const auto p1 = r.out.find("part 1:\n"), p2 = r.out.find("part 2:\n");
    REQUIRE(p1 != std::string::npos);
    REQUIRE(p2 != std::string::npos);
    const std::string left = r.out.substr(p1 + 8, p2 - p1 - 8);
    std::string right = r.out.substr(p2 + 8);
    if (auto next = right.find("step "); next != std::string::npos) right.resize(next);
    const Multistructure A = load_structure(read_file(fs::path(MTEAM_TEST_DATA) / "binary.struct"));
    const Multiteam l = load_multiteam(left), rt = load_multiteam(right);
    CHECK(evaluate(A, l, parse("x = y")));
    CHECK(evaluate(A, rt, parse("x != y")));
    CHECK(disjoint_union(l, rt) == load_multiteam(read_file(fs::path(MTEAM_TEST_DATA) / "skewed_pair.csv")));
}

TEST_CASE("gen writes instances that check against the oracle") {
    const fs::path dir = scratch();
    Run r = run("gen 3sat " + data("two_clauses.cnf") + " --out " + dir.string());
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string s, t, f;
    std::getline(lines, s);
    std::getline(lines, t);
    std::getline(lines, f);
    CHECK(load_multiteam(read_file(t)).row_count() == 6);
    CHECK(run("check '" + s + "' '" + t + "' '" + f + "'").code == 0);

    r = run("gen max2sat " + data("all_pairs.cnf") + " --frac 7/10 --stem pairs --out " + dir.string());
    REQUIRE(r.code == 0);
    CHECK(read_file(dir / "pairs.formula").find("<7/10>") != std::string::npos);
    const std::string base = "check '" + (dir / "pairs.struct").string() + "' '" + (dir / "pairs.csv").string() + "' ";
    CHECK(run(base + "'" + (dir / "pairs.formula").string() + "'").code == 0);
    REQUIRE(run("gen max2sat " + data("all_pairs.cnf") + " --frac 4/5 --stem pairs --out " + dir.string()).code == 0);
    CHECK(run(base + "'" + (dir / "pairs.formula").string() + "'").code == 1);
    fs::remove_all(dir);
}

TEST_CASE("props runs a suite") {
    Run r = run("props pci-ci --seed 7 --samples 50");
    CHECK(r.code == 0);
    CHECK(r.out.find("ok") != std::string::npos);
    r = run("suites");
    CHECK(r.code == 0);
    CHECK(r.out.find("approx-laws") != std::string::npos);
}

}
