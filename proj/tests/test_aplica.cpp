#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lvint/aplica.hpp"
#include "lvint/errors.hpp"
#include "lvint/serialize.hpp"

using namespace lvint;

TEST_CASE("family field has the fixed quadratic part") {
    AplicaParams zero;
    PlanarField f = aplica_field(zero);
    CHECK(f.P == BiPoly::parse("-x^2 + 3*x*y"));
    CHECK(f.Q == BiPoly::parse("3*x*y - y^2"));

    AplicaParams ones{Rational(1), Rational(1), Rational(1),
                      Rational(1), Rational(1), Rational(1)};
    auto comps = homogeneous_components(aplica_field(ones));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].degree == 2);
    CHECK(comps[1].degree == 3);
}

TEST_CASE("parameter list parsing") {
    AplicaParams p = parse_aplica_params("b02=1,b11=-5,b20=-2,a11=-3,a20=1,a02=0");
    CHECK(p.b02 == Rational(1));
    CHECK(p.b11 == Rational(-5));
    CHECK(p.b20 == Rational(-2));
    CHECK(p.a11 == Rational(-3));
    CHECK(p.a20 == Rational(1));
    CHECK(p.a02 == Rational(0));

    AplicaParams partial = parse_aplica_params("a20=1/2");
    CHECK(partial.a20 == Rational(1, 2));
    CHECK(partial.b02 == Rational(0));

    CHECK(parse_aplica_params("") == AplicaParams{});
    CHECK(parse_aplica_params(" a20 = 1 , b02 = 2 ").a20 ==
          Rational(1));  // embedded spaces around keys are trimmed

    CHECK_THROWS_AS(parse_aplica_params("c1=3"), ParseError);
    CHECK_THROWS_AS(parse_aplica_params("a20"), ParseError);
}

TEST_CASE("case conditions") {
    SUBCASE("the reference sample satisfies exactly the first case") {
        AplicaParams p = parse_aplica_params("b02=1,b11=-5,b20=-2,a11=-3,a20=1,a02=0");
        auto conds = eval_case_conditions(p);
        REQUIRE(conds.size() == 6);
        CHECK(conds[0].satisfied());
        for (const auto& res : conds[0].residuals) CHECK(res.is_zero());
        int satisfied = 0;
        for (const auto& c : conds) satisfied += c.satisfied();
        CHECK(satisfied == 1);
    }
    SUBCASE("the origin of parameter space satisfies all six") {
        auto conds = eval_case_conditions(AplicaParams{});
        for (const auto& c : conds) CHECK(c.satisfied());
    }
    SUBCASE("a lone a20 satisfies none") {
        AplicaParams p;
        p.a20 = Rational(1);
        CHECK_FALSE(any_case_satisfied(p));
    }
}

TEST_CASE("on-variety samples are exact members") {
    RationalSampler sampler(1234);
    for (int case_id = 1; case_id <= 6; ++case_id)
        for (int t = 0; t < 10; ++t) {
            AplicaParams p = sample_on_case(case_id, sampler);
            CHECK(eval_case_conditions(p)[static_cast<std::size_t>(case_id - 1)].satisfied());
        }
    for (int t = 0; t < 20; ++t) CHECK_FALSE(any_case_satisfied(sample_generic(sampler)));
}

TEST_CASE("sweeps are deterministic and tally correctly") {
    SweepReport a = run_sweep(42, 4, "on-case-4", 7);
    SweepReport b = run_sweep(42, 4, "on-case-4", 7);
    CHECK(to_json(a).dump() == to_json(b).dump());
    CHECK(a.samples.size() == 4);
    CHECK(a.integrable_count == 4);
    CHECK(a.obstructed_count == 0);
    CHECK(a.disagreement_count == 0);

    SweepReport g = run_sweep(43, 3, "generic", 7);
    CHECK(g.obstructed_count == 3);
    CHECK(g.disagreement_count == 0);
    for (const auto& s : g.samples) CHECK(s.obstruction_degree >= 2);

    CHECK_THROWS(run_sweep(1, 0, "generic", 7));
    CHECK_THROWS(run_sweep(1, 1, "on-case-9", 7));
    CHECK_THROWS(run_sweep(1, 1, "bogus", 7));
}
