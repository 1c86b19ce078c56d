#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lvint/field.hpp"
#include "lvint/poly.hpp"

using namespace lvint;

namespace {

std::mt19937_64 rng(911);

Rational random_rational() {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    return Rational(num(rng), den(rng));
}

BiPoly random_poly(int max_deg, int terms) {
    std::uniform_int_distribution<int> d(0, max_deg);
    BiPoly p;
    for (int t = 0; t < terms; ++t) p += BiPoly::term({d(rng), d(rng)}, random_rational());
    return p;
}

BiPoly random_homogeneous(int deg) {
    std::uniform_int_distribution<int> d(0, deg);
    BiPoly p;
    for (int t = 0; t < deg + 1; ++t) {
        int i = d(rng);
        p += BiPoly::term({i, deg - i}, random_rational());
    }
    return p;
}

PlanarField random_field(int max_deg) {
    BiPoly p = random_poly(max_deg, 5), q = random_poly(max_deg, 5);
    p.set_coeff({0, 0}, Rational(0));
    q.set_coeff({0, 0}, Rational(0));
    return {p, q};
}

// Quadratic Lotka-Volterra field of the planar family under study.
const PlanarField kF2{BiPoly::parse("-x^2 + 3*x*y"), BiPoly::parse("3*x*y - y^2")};

}  // namespace

TEST_CASE("homogeneous components are graded and ascending") {
    PlanarField f{BiPoly::parse("-x^2 + 3*x*y + x^3"), BiPoly::parse("3*x*y - y^2")};
    auto comps = homogeneous_components(f);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].degree == 2);
    CHECK(comps[1].degree == 3);
    CHECK(comps[1].body.P == BiPoly::parse("x^3"));
    CHECK(comps[1].body.Q.is_zero());
    PlanarField sum;
    for (const auto& c : comps) sum += c.body;
    CHECK(sum == f);

    CHECK(homogeneous_components(PlanarField{}).empty());
}

TEST_CASE("cubic family with unit coefficients has exactly two components") {
    const BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
    BiPoly cubic = x.pow(2) + x * y + y.pow(2);
    PlanarField f{x * (y * Rational(3) - x) + x * cubic,
                  y * (x * Rational(3) - y) + y * cubic};
    auto comps = homogeneous_components(f);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].degree == 2);
    CHECK(comps[1].degree == 3);
}

TEST_CASE("lie derivative basics") {
    // x y (x - y)^2 is a first integral of the quadratic part
    CHECK(lie_derivative(kF2, BiPoly::parse("x^3*y - 2*x^2*y^2 + x*y^3")).is_zero());
    CHECK(lie_derivative(kF2, BiPoly::constant(Rational(5))).is_zero());
    CHECK(lie_derivative(kF2, BiPoly::var_x()) == BiPoly::parse("-x^2 + 3*x*y"));
}

TEST_CASE("leibniz rule on random inputs") {
    for (int t = 0; t < 120; ++t) {
        PlanarField f = random_field(4);
        BiPoly c = random_poly(4, 4), d = random_poly(4, 4);
        CHECK(lie_derivative(f, c * d) ==
              c * lie_derivative(f, d) + d * lie_derivative(f, c));
    }
}

TEST_CASE("euler identity on homogeneous polynomials") {
    for (int s = 0; s <= 8; ++s) {
        for (int t = 0; t < 15; ++t) {
            BiPoly p = random_homogeneous(s);
            CHECK(lie_derivative(radial_field(), p) == p * Rational(s));
        }
    }
}

TEST_CASE("grading of the lie derivative") {
    for (int n = 1; n <= 4; ++n) {
        for (int k = 1; k <= 4; ++k) {
            BiPoly p = random_homogeneous(n), q = random_homogeneous(n);
            BiPoly c = random_homogeneous(k);
            HomoField fn(n, {p, q});
            BiPoly out = lie_derivative(fn.body, c);
            if (!out.is_zero()) {
                CHECK(out.degree() == n + k - 1);
                CHECK(out.low_degree() == n + k - 1);
            }
        }
    }
}

TEST_CASE("wedge with the radial field") {
    HomoField f2(2, kF2);
    CHECK(wedge_with_radial(f2).body() == BiPoly::parse("4/3*x^2*y - 4/3*x*y^2"));

    HomoField d(1, radial_field());
    CHECK(wedge_with_radial(d).is_zero());

    // canonical field for (p, q, r): h = ((p+q+r)/3) x y (x - y)
    for (long p = 1; p <= 3; ++p)
        for (long q = 1; q <= 3; ++q)
            for (long r = 1; r <= 3; ++r) {
                const BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
                HomoField g2(2, {x * (x * Rational(-q) + y * Rational(q + r)),
                                 y * (x * Rational(p + r) + y * Rational(-p))});
                CHECK(wedge_with_radial(g2).body() ==
                      x * y * (x - y) * Rational(p + q + r, 3));
            }
}

TEST_CASE("divergence part") {
    HomoField f2(2, kF2);
    CHECK(divergence_part(f2).body() == BiPoly::parse("1/3*x + 1/3*y"));

    // Hamiltonian fields are divergence free.
    for (int t = 0; t < 30; ++t) {
        BiPoly h = random_homogeneous(4);
        if (h.is_zero()) continue;
        HomoField xh(3, hamiltonian_field(h));
        CHECK(divergence_part(xh).is_zero());
    }

    // canonical field: mu = (1/3)((-2q+p+r) x + (q+r-2p) y)
    for (long p = 1; p <= 3; ++p)
        for (long q = 1; q <= 3; ++q)
            for (long r = 1; r <= 3; ++r) {
                const BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
                HomoField g2(2, {x * (x * Rational(-q) + y * Rational(q + r)),
                                 y * (x * Rational(p + r) + y * Rational(-p))});
                CHECK(divergence_part(g2).body() ==
                      (x * Rational(-2 * q + p + r) + y * Rational(q + r - 2 * p)) *
                          Rational(1, 3));
            }
}

TEST_CASE("splitting examples") {
    HomoField f2(2, kF2);
    SplitParts s = split(f2);
    CHECK(s.h.body() == BiPoly::parse("4/3*x^2*y - 4/3*x*y^2"));
    CHECK(s.mu.body() == BiPoly::parse("1/3*x + 1/3*y"));

    HomoField d(1, radial_field());
    SplitParts sd = split(d);
    CHECK(sd.h.is_zero());
    CHECK(sd.mu.body() == BiPoly::constant(1));

    // cubic Hamiltonian example: mu vanishes
    HomoField f3(3, {BiPoly::parse("-3*x*y^2 - x^3"), BiPoly::parse("y^3 + 3*x^2*y")});
    CHECK(split(f3).mu.is_zero());
}

TEST_CASE("splitting reconstructs the field exactly") {
    for (int k = 1; k <= 10; ++k) {
        for (int t = 0; t < 10; ++t) {
            HomoField fk(k, {random_homogeneous(k), random_homogeneous(k)});
            SplitParts s = split(fk);
            PlanarField rebuilt =
                hamiltonian_field(s.h.body()) + (s.mu.body() * radial_field());
            CHECK(rebuilt == fk.body);
        }
    }
}

TEST_CASE("symmetry bracket orientation fixes nu = 1 for the radial field") {
    CHECK(symmetry_bracket(kF2, radial_field()) == kF2);
}
