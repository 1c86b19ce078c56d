#include "lvint/lv_structure.hpp"

#include <numeric>
#include <stdexcept>

#include "lvint/errors.hpp"

namespace lvint {

CurveCheck check_invariant_curve(const PlanarField& f, const BiPoly& c, int max_degree) {
    require_singular_origin(f, "check_invariant_curve");
    if (c.is_zero()) throw std::invalid_argument("check_invariant_curve: zero curve");
    if (!c.constant_term().is_zero())
        throw std::invalid_argument("check_invariant_curve: curve must vanish at the origin");

    const int s = c.low_degree();
    const BiPoly c_low = c.homogeneous_part(s);
    const BiPoly fc = lie_derivative(f, c);

    // Degree-d part of F(c) - K c determines K_{d-s} via division by the
    // lowest curve component; failure of that division means no cofactor
    // truncation can satisfy the identity at degree d.
    BiPoly K;
    for (int d = 1; d <= max_degree; ++d) {
        BiPoly rem = fc.homogeneous_part(d) - (K * c).homogeneous_part(d);
        if (rem.is_zero()) continue;
        BiPoly k_part;
        if (!try_divide(c_low, rem, &k_part)) return {false, {}, d};
        K += k_part;
    }
    return {true, {c, K, max_degree}, -1};
}

HomoPoly cofactor_of_h_factor(const HomoField& fk, const HomoPoly& factor) {
    SplitParts parts = split(fk);
    BiPoly g;
    if (factor.is_zero() || !try_divide(factor.body(), parts.h.body(), &g))
        throw NotAFactor("cofactor_of_h_factor: polynomial does not divide h");
    const int s = factor.degree();
    // F_k(f) = (X_g(f) + s mu) f for h = f g.
    BiPoly xg_f = -g.dy() * factor.body().dx() + g.dx() * factor.body().dy();
    return HomoPoly(fk.degree - 1, xg_f + parts.mu.body() * Rational(s));
}

namespace {

LVData assemble_lv(long p, long q, long r, Rational alpha, Rational beta, Rational time_scale) {
    LVData lv;
    lv.p = p;
    lv.q = q;
    lv.r = r;
    lv.M = p + q + r;
    lv.alpha = std::move(alpha);
    lv.beta = std::move(beta);
    lv.time_scale = std::move(time_scale);
    const BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
    lv.canonical_field = HomoField(
        2, {x * (x * Rational(-q) + y * Rational(q + r)),
            y * (x * Rational(p + r) + y * Rational(-p))});
    lv.I_M = HomoPoly(static_cast<int>(lv.M),
                      x.pow(static_cast<unsigned>(p)) * y.pow(static_cast<unsigned>(q)) *
                          (x - y).pow(static_cast<unsigned>(r)));
    SplitParts parts = split(lv.canonical_field);
    lv.h = parts.h;
    lv.mu = parts.mu;
    return lv;
}

}  // namespace

LVData make_lv(long p, long q, long r) {
    if (p < 1 || q < 1 || r < 1) throw std::invalid_argument("make_lv: p, q, r must be positive");
    return assemble_lv(p, q, r, Rational(1), Rational(1), Rational(1));
}

LVData canonicalize_quadratic_lv(const HomoField& f2) {
    if (f2.degree != 2)
        throw NotLVShape("canonicalize_quadratic_lv: leading component has degree " +
                         std::to_string(f2.degree) + ", expected 2");
    // Required shape: P = x(a1 x + a2 y), Q = y(b1 x + b2 y).
    for (const auto& [m, c] : f2.body.P.terms())
        if (m.x == 0) throw NotLVShape("canonicalize_quadratic_lv: x does not divide P");
    for (const auto& [m, c] : f2.body.Q.terms())
        if (m.y == 0) throw NotLVShape("canonicalize_quadratic_lv: y does not divide Q");
    const Rational a1 = f2.body.P.coeff({2, 0}), a2 = f2.body.P.coeff({1, 1});
    const Rational b1 = f2.body.Q.coeff({1, 1}), b2 = f2.body.Q.coeff({0, 2});

    const Rational jac = a2 * b1 - a1 * b2;
    if (a1.is_zero() || b2.is_zero() || jac.is_zero())
        throw OriginNotIsolated("canonicalize_quadratic_lv: a1*b2*(a2*b1 - a1*b2) vanishes");
    if (a1 == b1 || a2 == b2)
        throw NotPolynomiallyIntegrable(
            "canonicalize_quadratic_lv: b1 - a1 and b2 - a2 must both be nonzero");

    // (p, q, r) spans the kernel of the 2x3 system
    // a1 p + b1 q + a1 r = 0, a2 p + b2 q + b2 r = 0.
    const Rational v1 = b2 * (b1 - a1);
    const Rational v2 = a1 * (a2 - b2);
    const Rational v3 = -jac;
    if (!(v1.sign() == v2.sign() && v2.sign() == v3.sign()))
        throw NotPolynomiallyIntegrable(
            "canonicalize_quadratic_lv: exponent ratios are not all positive");

    mpz_class l = lcm(lcm(v1.den(), v2.den()), v3.den());
    mpz_class n1 = v1.num() * (l / v1.den());
    mpz_class n2 = v2.num() * (l / v2.den());
    mpz_class n3 = v3.num() * (l / v3.den());
    mpz_class g = gcd(gcd(n1, n2), n3);
    n1 /= g;
    n2 /= g;
    n3 /= g;
    if (sgn(n1) < 0) {
        n1 = -n1;
        n2 = -n2;
        n3 = -n3;
    }
    if (!n1.fits_slong_p() || !n2.fits_slong_p() || !n3.fits_slong_p())
        throw NotPolynomiallyIntegrable("canonicalize_quadratic_lv: exponents out of range");
    const long p = n1.get_si(), q = n2.get_si(), r = n3.get_si();

    LVData lv = assemble_lv(p, q, r, -Rational(p) * a1, -Rational(q) * b2, Rational(p * q));
    if (f2.body == lv.canonical_field.body) {
        // already canonical: record the identity instead of a redundant
        // uniform scaling
        lv.alpha = lv.beta = lv.time_scale = Rational(1);
    }
    PlanarField pushed = apply_linear_change(f2.body, lv);
    if (!(pushed == lv.canonical_field.body))
        throw InternalError("canonicalize_quadratic_lv: change of variables failed to normalize");
    return lv;
}

PlanarField apply_linear_change(const PlanarField& f, const LVData& lv) {
    // u = alpha x, v = beta y and a constant time rescale:
    // P'(u,v) = s alpha P(u/alpha, v/beta), Q'(u,v) = s beta Q(u/alpha, v/beta).
    const int n = std::max(f.degree(), 0);
    const BiPoly sx = BiPoly::var_x() * lv.alpha.inverse();
    const BiPoly sy = BiPoly::var_y() * lv.beta.inverse();
    return {f.P.subst(sx, sy, n) * (lv.time_scale * lv.alpha),
            f.Q.subst(sx, sy, n) * (lv.time_scale * lv.beta)};
}

std::vector<std::pair<BiPoly, long>> leading_invariant_factors(const LVData& lv) {
    const BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
    return {{x, lv.p}, {y, lv.q}, {x - y, lv.r}};
}

}  // namespace lvint
