#include <doctest.h>

#include <set>

#include "mteam/approx.hpp"
#include "mteam/error.hpp"
#include "mteam/io.hpp"
#include "mteam/random.hpp"

using namespace mteam;

namespace {

Multistructure digits(int n) {
    std::vector<Value> vals;
    for (int i = 0; i < n; ++i) vals.emplace_back(std::to_string(i));
    return Multistructure::plain(vals);
}

Threshold ratio(int n, int d) { return Threshold::ratio(Rational(n, d)); }

// x,y,z: (0,0,1) (0,1,0) (0,1,2)
const char* kThree = "x,y,z\n0,0,1\n0,1,0\n0,1,2\n";
// x,y over rows (0,1) (1,0) (0,0) with four count vectors
const char* kZm = "x,y\n0,1\n1,0\n0,0\n";
const char* kZn = "x,y\n1,0\n0,0\n";
const char* kZk = "x,y\n0,1\n1,0\n";
const char* kZl = "x,y\n0,0\n";

}  // namespace

TEST_SUITE("approx") {

TEST_CASE("threshold arithmetic is exact") {
    CHECK(min_subteam_size(3, ratio(2, 3), ApproxKind::Ratio) == 2);
    CHECK(min_subteam_size(4, ratio(2, 3), ApproxKind::Ratio) == 3);
    CHECK(min_subteam_size(0, ratio(1, 2), ApproxKind::Ratio) == 0);
    CHECK(min_subteam_size(7, ratio(0, 1), ApproxKind::Ratio) == 0);
    CHECK(min_subteam_size(7, ratio(1, 1), ApproxKind::Ratio) == 7);
    CHECK(min_subteam_size(Count("1000000000000000000000"), ratio(1, 3), ApproxKind::Ratio) ==
          Count("333333333333333333334"));
    CHECK(min_subteam_size(10, Threshold::count(4), ApproxKind::Absolute) == 4);
    CHECK(meets_threshold(2, 3, ratio(2, 3), ApproxKind::Ratio));
    CHECK_FALSE(meets_threshold(1, 2, ratio(2, 3), ApproxKind::Ratio));
    CHECK(meets_threshold(4, 1, Threshold::count(4), ApproxKind::Absolute));
    CHECK_THROWS_AS(min_subteam_size(3, Threshold::count(2), ApproxKind::Ratio), InputError);
    CHECK_THROWS_AS(min_subteam_size(3, ratio(1, 2), ApproxKind::Absolute), InputError);
    CHECK_THROWS_AS(meets_threshold(1, 3, ratio(4, 3), ApproxKind::Ratio), InputError);
}

TEST_CASE("bounded submultiset enumeration") {
    Multiteam t = load_multiteam("x,#count\n0,2\n1,1\n2,3\n");
    for (int min = 0; min <= 7; ++min) {
        std::size_t expected = 0;
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 1; ++b)
                for (int c = 0; c <= 3; ++c) expected += a + b + c >= min;
        std::set<std::string> seen;
        std::size_t n = 0;
        enum_bounded_submultisets(t, min, [&](const Multiteam& s) {
            CHECK(s.size() >= min);
            CHECK(submset_leq(s, t));
            seen.insert(dump_multiteam(s));
            ++n;
            return true;
        });
        CAPTURE(min);
        CHECK(n == expected);
        CHECK(seen.size() == n);
    }
    std::size_t n = 0;
    CHECK(enum_bounded_submultisets(t, 0, [&](const Multiteam&) { return ++n < 3; }));
    CHECK(n == 3);
    CHECK_FALSE(enum_bounded_submultisets(t, 8, [](const Multiteam&) { return true; }));
}

TEST_CASE("F_p does not distribute over disjunction") {
    Multistructure A = digits(3);
    Multiteam X = load_multiteam(kThree);
    CHECK(eval_exists_frac(A, X, ratio(2, 3), parse("x = y | x = z")));
    CHECK_FALSE(evaluate(A, X, parse("<2/3> x = y | <2/3> x = z")));
}

TEST_CASE("F_p is not downward closed") {
    Multistructure A = digits(3);
    CHECK(eval_exists_frac(A, load_multiteam(kThree), ratio(1, 3), parse("x = y")));
    CHECK_FALSE(eval_exists_frac(A, load_multiteam("x,y,z\n0,1,0\n0,1,2\n"), ratio(1, 3), parse("x = y")));
    // the subteam keeping the x = y row still satisfies it
    CHECK(eval_exists_frac(A, load_multiteam("x,y,z\n0,0,1\n0,1,2\n"), ratio(1, 3), parse("x = y")));
}

TEST_CASE("G_p breaks union closure") {
    Multistructure A = digits(2);
    Formula f = parse("pinc(x ; y)");
    CHECK(eval_forall_frac(A, load_multiteam(kZk), ratio(2, 3), f));
    CHECK(eval_forall_frac(A, load_multiteam(kZl), ratio(2, 3), f));
    CHECK_FALSE(evaluate(A, load_multiteam(kZn), f));
    CHECK_FALSE(eval_forall_frac(A, load_multiteam(kZm), ratio(2, 3), f));
    CHECK(load_multiteam(kZm) == disjoint_union(load_multiteam(kZk), load_multiteam("x,y,#count\n0,1,0\n1,0,0\n0,0,1\n")));
}

TEST_CASE("approximate implication") {
    Multistructure A = digits(2);
    Multiteam t = load_multiteam("x,y,#count\n0,0,2\n0,1,1\n");
    CHECK(eval_impl_frac(A, t, ratio(1, 1), parse("x = x"), parse("dep(x ; y)")) == false);
    CHECK(eval_impl_frac(A, t, ratio(2, 3), parse("y = x"), parse("dep(x ; y)")));
    CHECK(eval_impl_frac(A, t, ratio(1, 3), parse("x != x"), parse("dep(; y)")));
    CHECK(eval_impl_frac(A, t, ratio(1, 2), parse("dep(;) & dep(; y)"), parse("dep(x ; y)")));
}

TEST_CASE("G_p agrees with implication from the trivial formula") {
    Rng rng(2);
    for (int i = 0; i < 150; ++i) {
        Multistructure A = random_structure(rng, {3, 2, true});
        auto vars = team_vars(pick(rng, 1, 3));
        Multiteam t = random_team(rng, A, vars, {4, 3, false});
        FormulaBounds fb;
        fb.max_depth = 3;
        fb.max_quantifiers = 1;
        Formula f = random_formula(rng, FormulaClass::Full, A, vars, fb);
        Threshold p = ratio(static_cast<int>(pick(rng, 0, 3)), 3);
        CAPTURE(print(f));
        CHECK(eval_forall_frac(A, t, p, f) == eval_impl_frac(A, t, p, parse("dep(;)"), f));
    }
}

TEST_CASE("threshold 0 and 1 edge cases") {
    Multistructure A = digits(2);
    Multiteam t = load_multiteam("x\n0\n1\n");
    CHECK(eval_exists_frac(A, t, ratio(0, 1), parse("x != x")));
    CHECK_FALSE(eval_forall_frac(A, t, ratio(0, 1), parse("dep(; x)")));
    CHECK(eval_forall_frac(A, t, ratio(1, 1), parse("dep(x ; x)")));
    CHECK_FALSE(eval_exists_frac(A, t, ratio(1, 1), parse("dep(; x)")));
    CHECK(eval_exists_frac(A, t, ratio(1, 2), parse("dep(; x)")));
}

TEST_CASE("approximate dependence counts majority rows") {
    Multistructure A = digits(2);
    Multiteam t = load_multiteam("x,y,#count\n0,0,3\n0,1,1\n1,1,2\n1,0,2\n");
    // keep 3 + 2 of 8 rows
    CHECK(eval_exists_frac(A, t, ratio(5, 8), parse("dep(x ; y)")));
    CHECK_FALSE(eval_exists_frac(A, t, ratio(2, 3), parse("dep(x ; y)")));
}

TEST_CASE("absolute reading of thresholds") {
    Multistructure A = digits(2);
    const SemanticsConfig abs{TeamKind::Multi, Strictness::Lax, ApproxKind::Absolute};
    Multiteam t = load_multiteam("x,#count\n0,2\n1,3\n");
    CHECK(eval_exists_frac(A, t, Threshold::count(3), parse("dep(; x)"), abs));
    CHECK_FALSE(eval_exists_frac(A, t, Threshold::count(4), parse("dep(; x)"), abs));
    CHECK(eval_forall_frac(A, t, Threshold::count(6), parse("x != x"), abs));
    CHECK_THROWS_AS(eval_exists_frac(A, t, Threshold::count(3), parse("dep(; x)")), InputError);
}

}
