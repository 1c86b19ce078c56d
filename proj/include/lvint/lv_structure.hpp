#pragma once

#include <utility>
#include <vector>

#include "lvint/field.hpp"
#include "lvint/poly.hpp"

namespace lvint {

// Witness that F(curve) = cofactor * curve holds through the stated degree.
struct InvariantCurveCertificate {
    BiPoly curve;
    BiPoly cofactor;
    int verified_to_degree = 0;
};

// Outcome of an invariant-curve check: either a certificate or the first
// degree at which no cofactor truncation satisfies the identity.
struct CurveCheck {
    bool invariant = false;
    InvariantCurveCertificate certificate;
    int failing_degree = -1;
};

// Computes the cofactor degree by degree from the lowest-degree division and
// verifies F(c) - K c = 0 through max_degree. Preconditions: c(0,0) = 0 and
// c != 0.
CurveCheck check_invariant_curve(const PlanarField& f, const BiPoly& c, int max_degree);

// Cofactor of a homogeneous factor f of h: X_g(f) + s mu with h = f g and
// s = deg f. Throws NotAFactor when f does not divide h.
HomoPoly cofactor_of_h_factor(const HomoField& fk, const HomoPoly& factor);

// Canonical data of a polynomially integrable quadratic Lotka-Volterra
// leading part. The linear change u = alpha x, v = beta y followed by a
// constant time rescale maps the input onto canonical_field =
// (x(-qx+(q+r)y), y((p+r)x-py)), whose primitive first integral is
// I_M = x^p y^q (x-y)^r of degree M = p+q+r.
struct LVData {
    long p = 0, q = 0, r = 0;
    long M = 0;
    Rational alpha, beta;     // diagonal change u = alpha x, v = beta y
    Rational time_scale;      // constant multiplier applied after the change
    HomoField canonical_field;
    HomoPoly I_M;
    HomoPoly h;
    HomoPoly mu;

    bool change_is_identity() const {
        return alpha == Rational(1) && beta == Rational(1) && time_scale == Rational(1);
    }
};

// Canonical data for a given positive triple, identity change. The triple is
// used verbatim (not reduced); canonicalize_quadratic_lv always returns a
// coprime triple.
LVData make_lv(long p, long q, long r);

// Throws NotLVShape, OriginNotIsolated or NotPolynomiallyIntegrable.
LVData canonicalize_quadratic_lv(const HomoField& f2);

// Push f through the diagonal change and time rescale recorded in lv.
PlanarField apply_linear_change(const PlanarField& f, const LVData& lv);

// The three linear invariant factors of I_M with their multiplicities:
// [(x, p), (y, q), (x - y, r)].
std::vector<std::pair<BiPoly, long>> leading_invariant_factors(const LVData& lv);

}  // namespace lvint
