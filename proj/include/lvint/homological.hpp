#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lvint/linalg.hpp"
#include "lvint/lv_structure.hpp"
#include "lvint/poly.hpp"

namespace lvint {

// Monomial basis of the homogeneous polynomials of degree k in canonical
// order: x^k, x^(k-1) y, ..., y^k.
std::vector<Monomial> degree_basis(int k);

std::vector<Rational> poly_to_vector(const BiPoly& p, const std::vector<Monomial>& basis);
BiPoly vector_to_poly(const std::vector<Rational>& v, const std::vector<Monomial>& basis);

// Exact matrix of a linear polynomial map between ordered monomial bases.
// Applying entries to a coefficient vector agrees with applying the symbolic
// operator to the corresponding polynomial.
struct LinearOpMatrix {
    std::vector<Monomial> domain_basis;
    std::vector<Monomial> codomain_basis;
    RatMatrix entries;

    BiPoly apply(const BiPoly& p) const;
};

LinearOpMatrix matrix_of_poly_map(std::vector<Monomial> domain, std::vector<Monomial> codomain,
                                  const std::function<BiPoly(const BiPoly&)>& map);

// ell_k : P_{k-1} -> P_k, eta -> F_2(eta), for the canonical field of lv.
LinearOpMatrix build_ell(const LVData& lv, int k);

// ell^c_{k+3} : span(x^{k+2}, x^{k+1} y, y^{k+2}) -> span(x^{k+3}, x^{k+2} y,
// y^{k+3}), g -> proj((F_2 - 3/(k+3) mu D)(g)), where the projection is along
// h * P_k. Exact 3x3 matrix; k >= 0.
LinearOpMatrix build_ell_c(const LVData& lv, int k);

// Exact rational kernel basis as polynomials over the domain basis.
std::vector<HomoPoly> op_kernel(const LinearOpMatrix& op);

// CSV dump with exact rational cells ("num/den").
std::string operator_csv(const LinearOpMatrix& op);

// Chosen complement of Range(ell_k) inside P_k.
struct CorangeBasis {
    int degree = 0;
    std::vector<HomoPoly> basis;
};

// Deterministic chain of complements Cor(ell_k), k = 2..N. Seeds for
// k <= M+1 are the earliest canonical-order monomials independent from the
// range, except that at k = M+1 the pair {x I_M, y I_M} is preferred when it
// completes the range. For k > M+1 the basis is I_M * basis(k - M),
// verified against the range by an exact rank check.
class CorangeChain {
public:
    static CorangeChain build(const LVData& lv, int max_degree);

    const CorangeBasis& at(int k) const;
    int max_degree() const { return max_degree_; }

private:
    int max_degree_ = 0;
    std::vector<CorangeBasis> by_degree_;  // index k - 2
};

// Solve op(u) + sum c_i complement_i = target exactly. The target is range
// membership: solvable means all c_i vanish; otherwise the c_i are the
// obstruction coordinates (unique once range + complement is a direct sum).
struct HomologicalSolve {
    bool solvable = false;
    BiPoly solution;
    std::vector<Rational> complement_coords;
};

HomologicalSolve solve_against(const LinearOpMatrix& op, const std::vector<HomoPoly>& complement,
                               const BiPoly& target);

// Earliest canonical-order monomials of degree k completing the column space
// of op to the whole codomain.
std::vector<HomoPoly> greedy_complement(const LinearOpMatrix& op);

}  // namespace lvint
