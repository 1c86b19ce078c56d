#pragma once

#include <iosfwd>
#include <vector>

#include "lvint/poly.hpp"

namespace lvint {

// Planar polynomial vector field F = (P, Q), acting on scalars as the
// derivation F = P d/dx + Q d/dy. Fields submitted for analysis must vanish
// at the origin (see require_singular_origin); intermediate algebraic fields
// such as Hamiltonian fields of linear polynomials need not.
struct PlanarField {
    BiPoly P, Q;

    bool is_zero() const { return P.is_zero() && Q.is_zero(); }
    int degree() const;
    PlanarField truncated(int max_degree) const {
        return {P.truncated(max_degree), Q.truncated(max_degree)};
    }
    PlanarField operator-() const { return {-P, -Q}; }
    PlanarField& operator+=(const PlanarField& o) {
        P += o.P;
        Q += o.Q;
        return *this;
    }
    PlanarField& operator-=(const PlanarField& o) {
        P -= o.P;
        Q -= o.Q;
        return *this;
    }
    friend PlanarField operator+(PlanarField a, const PlanarField& b) { return a += b; }
    friend PlanarField operator-(PlanarField a, const PlanarField& b) { return a -= b; }
    friend PlanarField operator*(const Rational& c, const PlanarField& f) {
        return {f.P * c, f.Q * c};
    }
    friend PlanarField operator*(const BiPoly& s, const PlanarField& f) {
        return {s * f.P, s * f.Q};
    }
    friend bool operator==(const PlanarField&, const PlanarField&) = default;
};

std::ostream& operator<<(std::ostream& os, const PlanarField& f);

// Throws std::invalid_argument unless P(0,0) = Q(0,0) = 0.
void require_singular_origin(const PlanarField& f, const char* where);

// Homogeneous vector field with an explicit degree tag; both components are
// homogeneous of the tagged degree (zero allowed).
struct HomoField {
    int degree = 0;
    PlanarField body;

    HomoField() = default;
    HomoField(int degree, PlanarField body);

    friend bool operator==(const HomoField&, const HomoField&) = default;
};

// F(c) = P dc/dx + Q dc/dy, exact.
BiPoly lie_derivative(const PlanarField& f, const BiPoly& c);

// Degree-graded pieces of f, ascending; the leading (lowest) nonzero
// component comes first. The zero field yields an empty list.
std::vector<HomoField> homogeneous_components(const PlanarField& f);

// The radial field D = (x, y).
PlanarField radial_field();

// Hamiltonian field X_h = (-dh/dy, dh/dx).
PlanarField hamiltonian_field(const BiPoly& h);

BiPoly divergence(const PlanarField& f);

// h := (1/(k+1)) (D ^ F_k) with D ^ F := x Q - y P; degree k+1.
HomoPoly wedge_with_radial(const HomoField& fk);

// mu := (1/(k+1)) div(F_k); degree k-1, requires k >= 1.
HomoPoly divergence_part(const HomoField& fk);

// Unique splitting F_k = X_h + mu D of a homogeneous field into a
// Hamiltonian part and a radial multiple.
struct SplitParts {
    HomoPoly h;
    HomoPoly mu;
};
SplitParts split(const HomoField& fk);

// DF*G - DG*F; oriented so that a homogeneous quadratic f paired with the
// radial field gives bracket = f (multiplier one).
PlanarField symmetry_bracket(const PlanarField& f, const PlanarField& g);

}  // namespace lvint
