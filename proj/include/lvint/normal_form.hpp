#pragma once

#include <map>
#include <vector>

#include "lvint/field.hpp"
#include "lvint/homological.hpp"
#include "lvint/lv_structure.hpp"

namespace lvint {

// Transformation data for one degree: a near-identity change of variables
// x -> x + U(x) with U homogeneous of degree d-1, followed by the polynomial
// time rescale (1 + nu) with nu homogeneous of degree d-2. Applying the pair
// alters only components of degree >= d.
struct OrbitalGenerator {
    int degree = 0;
    PlanarField field_part;  // U
    BiPoly scale_part;       // nu

    bool is_zero() const { return field_part.is_zero() && scale_part.is_zero(); }
};

// Push f through x -> x + U(x): (I + DU)^{-1} (f o (id + U)), truncated.
PlanarField push_forward(const PlanarField& f, const PlanarField& u, int max_degree);

// Compositional inverse map of id + U as id + V, truncated: V satisfies
// (id + U) o (id + V) = id through max_degree.
PlanarField invert_near_identity(const PlanarField& u, int max_degree);

// 1 / (1 + s) truncated, for s vanishing at the origin.
BiPoly reciprocal_one_plus(const BiPoly& s, int max_degree);

// (1 + nu) * push_forward(f, U), truncated. Degrees below g.degree are
// unchanged.
PlanarField apply_generator(const PlanarField& f, const OrbitalGenerator& g, int max_degree);

// Exact inverse of apply_generator through max_degree.
PlanarField apply_generator_inverse(const PlanarField& f, const OrbitalGenerator& g,
                                    int max_degree);

struct StepResult {
    OrbitalGenerator generator;
    std::vector<Rational> eta;  // coordinates over Cor(ell_{d-1})
};

// One homological step at degree d = residual_d.degree: solves
//   [F_2, U] - nu F_2 + sum c_i (basis_i D) = residual_d
// as a single exact linear system, where [F_2, U] = DU F_2 - DF_2 U and the
// basis spans the chosen complement of Range(ell_{d-1}). Solvability and the
// direct-sum property are verified by exact rank checks, not assumed.
StepResult homological_step(const LVData& lv, const HomoField& residual_d,
                            const CorangeChain& chain);

// Orbital normal form report: per-degree complement coordinates eta_j over
// CorangeChain.at(j), the recorded generators, and the transformed field.
struct NormalFormReport {
    LVData lv;
    int max_degree = 0;
    std::map<int, std::vector<Rational>> eta;  // j = 2 .. max_degree - 1
    std::vector<OrbitalGenerator> generators;
    PlanarField residual_field;
    CorangeChain chain;

    bool eta_all_zero() const;
    // Smallest j with eta_j != 0, or -1 when all vanish.
    int first_nonzero_eta() const;
};

// Degree-by-degree orbital normal form of f through max_degree. The leading
// component must canonicalize; the engine works in canonical coordinates
// (the recorded linear change is applied first) and verifies internally that
// replaying the generator sequence reproduces residual_field exactly.
NormalFormReport normal_form(const PlanarField& f, int max_degree);

}  // namespace lvint
