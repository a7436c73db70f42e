#include <doctest.h>

#include <filesystem>

#include "mteam/error.hpp"
#include "mteam/io.hpp"
#include "mteam/random.hpp"

using namespace mteam;

TEST_SUITE("io") {

TEST_CASE("the skewed pair CSV") {
    Multiteam t = load_multiteam(read_file(std::filesystem::path(MTEAM_TEST_DATA) / "skewed_pair.csv"));
    CHECK(t.vars() == std::vector<Var>{Var("x"), Var("y")});
    CHECK(t.size() == 5);
    CHECK(t.multiplicity(Row{Value("0"), Value("0")}) == 2);
    CHECK(t.multiplicity(Row{Value("1"), Value("1")}) == 1);
}

TEST_CASE("rows without a count column count once and repeats add up") {
    Multiteam t = load_multiteam("y,x\n1,0\n1,0\n0,0\n");
    CHECK(t.size() == 3);
    CHECK(t == load_multiteam("x,y,#count\n0,1,2\n0,0,1\n"));
    CHECK(dump_multiteam(t) == "x,y,#count\n0,0,1\n0,1,2\n");
}

TEST_CASE("header-only input is the empty team") {
    Multiteam t = load_multiteam("x,y,#count\n");
    CHECK(t.empty());
    CHECK(t.vars().size() == 2);
    CHECK(load_multiteam(dump_multiteam(t)) == t);
    CHECK(load_multiteam("x,#count\n0,0\n").empty());
}

TEST_CASE("malformed CSV is rejected") {
    CHECK_THROWS_AS(load_multiteam(""), ParseError);
    CHECK_THROWS_AS(load_multiteam("x,y\n0\n"), ParseError);
    CHECK_THROWS_AS(load_multiteam("x,y\n0,1,2\n"), ParseError);
    CHECK_THROWS_AS(load_multiteam("x,#count\n0,-1\n"), ParseError);
    CHECK_THROWS_AS(load_multiteam("x,#count\n0,two\n"), ParseError);
    CHECK_THROWS_AS(load_multiteam("x,x\n0,1\n"), ParseError);
    CHECK_THROWS_AS(load_multiteam("#count,x\n1,0\n"), ParseError);
    try {
        load_multiteam("x,y\n0,1\n0\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("structures") {
    Multistructure A = load_structure("# comment\ndomain: a*2 b\n\nrel R/2: (a,b) (b,b)\nrel C/1: (a)\n");
    CHECK(A.domain().multiplicity(Value("a")) == 2);
    CHECK(A.domain().size() == 3);
    CHECK(A.holds("R", Row{Value("a"), Value("b")}));
    CHECK_FALSE(A.holds("R", Row{Value("b"), Value("a")}));
    CHECK(load_structure(dump_structure(A)) == A);
    Multistructure C = load_structure(read_file(std::filesystem::path(MTEAM_TEST_DATA) / "constant.struct"));
    CHECK(C.holds("C", Row{Value("0")}));
}

TEST_CASE("malformed structures are rejected") {
    CHECK_THROWS_AS(load_structure("rel R/1: (a)\n"), InputError);
    CHECK_THROWS_AS(load_structure("domain: a\ndomain: b\n"), ParseError);
    CHECK_THROWS_AS(load_structure("domain: a a\n"), ParseError);
    CHECK_THROWS_AS(load_structure("domain: a\nrel R/2: (a)\n"), ParseError);
    CHECK_THROWS_AS(load_structure("domain: a\nrel R/1: (a)\nrel R/1: (a)\n"), ParseError);
    CHECK_THROWS_AS(load_structure("domain: a\nrel R/1: (b)\n"), InputError);
    CHECK_THROWS_AS(load_structure("domain: a\nfoo: b\n"), ParseError);
}

TEST_CASE("random teams and structures round-trip") {
    Rng rng(4);
    for (int i = 0; i < 200; ++i) {
        Multistructure A = random_structure(rng, {3, 2, true});
        Multiteam t = random_team(rng, A, team_vars(pick(rng, 1, 3)), {5, 4, true});
        CHECK(load_multiteam(dump_multiteam(t)) == t);
        CHECK(load_structure(dump_structure(A)) == A);
    }
}

TEST_CASE("instance files") {
    auto dir = std::filesystem::temp_directory_path() / "mteam_io_test";
    std::filesystem::create_directories(dir);
    Instance inst{load_structure("domain: 0 1\n"), load_multiteam("x,y\n0,1\n"), parse("dep(x ; y) | x = y"), {}};
    InstanceFiles files = write_instance(inst, dir, "sample");
    CHECK(files.team == dir / "sample.csv");
    Instance back = read_instance(files);
    CHECK(back.structure == inst.structure);
    CHECK(back.team == inst.team);
    CHECK(back.formula == inst.formula);
    CHECK_THROWS_AS(read_file(dir / "missing.csv"), InputError);
    std::filesystem::remove_all(dir);
}

}
