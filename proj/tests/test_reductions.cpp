#include <doctest.h>

#include "mteam/error.hpp"
#include "mteam/io.hpp"
#include "mteam/random.hpp"
#include "mteam/reductions.hpp"
#include "oracles.hpp"

using namespace mteam;

namespace {

std::vector<std::vector<std::pair<std::string, bool>>> plain(const CnfFormula& phi) {
    std::vector<std::vector<std::pair<std::string, bool>>> out;
    for (const auto& c : phi.clauses) {
        out.emplace_back();
        for (const auto& l : c) out.back().emplace_back(l.var.name(), l.parity == 1);
    }
    return out;
}

CnfFormula random_cnf(Rng& rng, std::size_t vars, std::size_t width, std::size_t clauses) {
    CnfFormula phi;
    for (std::size_t i = 0; i < clauses; ++i) {
        Clause c;
        for (std::size_t j = 0; j < width; ++j)
            c.push_back({Var("x" + std::to_string(pick(rng, 1, vars))), static_cast<int>(pick(rng, 0, 1))});
        phi.clauses.push_back(c);
    }
    return phi;
}

}  // namespace

TEST_SUITE("reductions") {

TEST_CASE("DIMACS parsing") {
    CnfFormula phi = parse_dimacs("c comment\np cnf 3 2\n1 -2 3 0\n-1 -2\n-3 0\n");
    REQUIRE(phi.clauses.size() == 2);
    CHECK(phi.clauses[0][1].var == Var("x2"));
    CHECK(phi.clauses[0][1].parity == 1);
    CHECK(phi.clauses[1].size() == 3);
    CHECK(phi.has_width(3));
    CHECK(phi.variables() == std::vector<Var>{Var("x1"), Var("x2"), Var("x3")});
    CHECK_THROWS_AS(parse_dimacs("1 2 0\n"), InputError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 2 0\n"), InputError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 3 0\n"), InputError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 a 0\n"), InputError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2\n"), InputError);
}

TEST_CASE("the two-clause 3CNF encodes to six rows") {
    CnfFormula phi = parse_dimacs("p cnf 3 2\n1 -2 3 0\n-1 -2 -3 0\n");
    Instance inst = encode_3sat(phi);
    CHECK(inst.team.vars() == std::vector<Var>{Var("clause"), Var("literal"), Var("parity"), Var("variable")});
    CHECK(load_multiteam(dump_multiteam(inst.team)) ==
          load_multiteam("clause,literal,variable,parity\n"
                         "1,1,x1,0\n1,2,x2,1\n1,3,x3,0\n2,1,x1,1\n2,2,x2,1\n2,3,x3,1\n"));
    CHECK(print(inst.formula) == "<1/3> (dep(clause ; literal) & dep(variable ; parity))");
    CHECK(evaluate(inst.structure, inst.team, inst.formula));
}

TEST_CASE("a single clause gives three rows") {
    Instance inst = encode_3sat(parse_dimacs("p cnf 3 1\n1 2 3 0\n"));
    CHECK(inst.team.size() == 3);
    CHECK(evaluate(inst.structure, inst.team, inst.formula));
}

TEST_CASE("unsatisfiable padding is rejected by the encoding") {
    CnfFormula phi = parse_dimacs("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n");
    CHECK_FALSE(sat_oracle(phi));
    Instance inst = encode_3sat(phi);
    CHECK(inst.team.row_count() == 6);
    CHECK_FALSE(evaluate(inst.structure, inst.team, inst.formula));
}

TEST_CASE("max2sat encoding carries the fraction") {
    CnfFormula phi = parse_dimacs("p cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0\n");
    CHECK(maxsat_oracle(phi) == 3);
    Instance inst = encode_maxsat(phi, Rational(7, 10));
    CHECK(print(inst.formula).find("<7/10>") != std::string::npos);
    CHECK(evaluate(inst.structure, inst.team, encode_maxsat(phi, Rational(3, 4)).formula));
    CHECK_FALSE(evaluate(inst.structure, inst.team, encode_maxsat(phi, Rational(1)).formula));
}

TEST_CASE("encoders check clause width") {
    CnfFormula mixed = parse_dimacs("p cnf 3 2\n1 2 0\n3 0\n");
    CHECK_THROWS_AS(encode_3sat(mixed), InputError);
    CHECK_THROWS_AS(encode_maxsat(mixed, Rational(1, 2)), InputError);
    CHECK_THROWS_AS(encode_3sat(parse_dimacs("p cnf 2 1\n1 2 0\n")), InputError);
    CHECK_THROWS_AS(encode_maxsat(parse_dimacs("p cnf 2 1\n1 2 0\n"), Rational(3, 2)), InputError);
}

TEST_CASE("oracles") {
    CHECK(maxsat_oracle(parse_dimacs("p cnf 1 2\n1 1 0\n-1 -1 0\n")) == 1);
    CnfFormula sat = parse_dimacs("p cnf 3 2\n1 2 0\n-1 3 0\n");
    CHECK(sat_oracle(sat));
    CHECK(maxsat_oracle(sat) == 2);
    CnfFormula big;
    for (int i = 1; i <= 21; ++i) big.clauses.push_back({{Var("x" + std::to_string(i)), 0}});
    CHECK_THROWS_AS(sat_oracle(big), InputError);
}

TEST_CASE("oracles agree with an independent truth table") {
    Rng rng(8);
    for (int i = 0; i < 300; ++i) {
        CnfFormula phi = random_cnf(rng, 3, pick(rng, 1, 3), pick(rng, 1, 5));
        CHECK(sat_oracle(phi) == oracle::cnf_satisfiable(plain(phi)));
        CHECK(maxsat_oracle(phi) == oracle::cnf_max_satisfied(plain(phi)));
    }
}

TEST_CASE("random small encodings agree with the oracles in every mode") {
    Rng rng(12);
    for (int i = 0; i < 40; ++i) {
        CnfFormula three = random_cnf(rng, 3, 3, pick(rng, 1, 3));
        CnfFormula two = random_cnf(rng, 3, 2, pick(rng, 1, 4));
        const bool sat = oracle::cnf_satisfiable(plain(three));
        const std::size_t best = oracle::cnf_max_satisfied(plain(two));
        for (auto kind : {TeamKind::Set, TeamKind::Multi})
            for (auto strict : {Strictness::Lax, Strictness::Strict}) {
                SemanticsConfig cfg{kind, strict, ApproxKind::Ratio};
                Instance a = encode_3sat(three);
                CHECK(evaluate(a.structure, a.team, a.formula, cfg) == sat);
                std::size_t k = pick(rng, 0, two.clauses.size());
                Instance b = encode_maxsat(two, Rational(k, two.clauses.size()));
                CHECK(evaluate(b.structure, b.team, b.formula, cfg) == (best >= k));
            }
    }
}

}
