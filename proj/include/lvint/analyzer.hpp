#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lvint/field.hpp"
#include "lvint/lv_structure.hpp"
#include "lvint/normal_form.hpp"
#include "lvint/poly.hpp"

namespace lvint {

// First degree at which a degree-by-degree solve cannot be completed,
// together with the exact nonzero coordinates of the uncancellable residual
// over the complement basis at that degree.
struct Obstruction {
    int degree = 0;
    std::vector<Rational> coords;
    std::vector<BiPoly> basis;
};

// Truncated first integral: lie_derivative(f, integral) vanishes through
// degree verified_to_degree + 1 and the lowest-degree part is the primitive
// integral of the leading component (I_M itself when the input leading part
// is already canonical).
struct FirstIntegralCertificate {
    BiPoly integral;
    HomoPoly leading;
    int verified_to_degree = 0;
};

struct FirstIntegralResult {
    bool success = false;
    FirstIntegralCertificate certificate;
    Obstruction obstruction;
};

// Seeds I_M^seed_power and solves F(I) = 0 degree by degree. The default
// seed power 1 matches the primitive integral; higher powers are an expert
// escape hatch.
FirstIntegralResult solve_first_integral(const PlanarField& f, int max_degree,
                                         int seed_power = 1);

// True iff F(num) den - dpow num F(den) == 0 as an exact polynomial
// identity, i.e. num / den^dpow is a first integral. Requires den(0,0) != 0.
bool verify_rational_first_integral(const PlanarField& f, const BiPoly& num, const BiPoly& den,
                                    int dpow);

// Truncated inverse integrating factor: F(v) - v div(F) vanishes through
// degree verified_to_degree + 1 and the lowest-degree part is proportional
// to the leading component's Hamiltonian cubic (xy(x-y) in canonical
// coordinates).
struct IIFCertificate {
    BiPoly v;
    int verified_to_degree = 0;
};

struct IIFResult {
    bool success = false;
    IIFCertificate certificate;
    Obstruction obstruction;
};

IIFResult solve_iif(const PlanarField& f, int max_degree);

// True iff DF G - DG F = nu F through max_degree. Preconditions: g has
// linear part (x, y) and nu(0,0) = 1; the bracket orientation is fixed so
// that g = D with constant nu = 1 certifies any homogeneous quadratic f.
bool verify_lie_symmetry(const PlanarField& f, const PlanarField& g, const BiPoly& nu,
                         int max_degree);

// Scalar series nu with DF G - DG F = nu f through max_degree, or nullopt.
std::optional<BiPoly> solve_symmetry_multiplier(const PlanarField& f, const PlanarField& g,
                                                int max_degree);

// Lie symmetry of f assembled by transporting the radial field through the
// inverse of the recorded normalizing transformation. Requires a report with
// all eta zero. Returns (g, nu) verified through max_degree.
std::pair<PlanarField, BiPoly> lie_symmetry_from_report(const PlanarField& f,
                                                        const NormalFormReport& report,
                                                        int max_degree);

// Invariant curve C = (x - y) + h.o.t. of the one-parameter family
//   (x(-x+3y), y(3x-y)) + (-x W, y W),  W = b02 x^2 + b11 x y + b02 y^2,
// built from an explicit two-term recurrence, with cofactor
// K = -(x+y)(1 + 2 b02 x - 2 b02 y). The certificate is checked exactly
// through max_degree before being returned.
InvariantCurveCertificate build_case6_curve(const Rational& b02, const Rational& b11,
                                            int max_degree);

// Classification verdict at the truncation degree: integrable iff every
// normal-form coefficient eta vanishes through the requested degree.
struct ClassificationVerdict {
    bool integrable = false;
    std::optional<FirstIntegralCertificate> witness;
    std::optional<Obstruction> obstruction;
};

ClassificationVerdict classify(const PlanarField& f, int max_degree);

}  // namespace lvint
