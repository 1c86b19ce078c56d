#include "lvint/analyzer.hpp"

#include <algorithm>
#include <stdexcept>

#include "lvint/errors.hpp"
#include "lvint/homological.hpp"

namespace lvint {

namespace {

struct CanonicalSetup {
    LVData lv;
    PlanarField field;  // input pushed to canonical coordinates
};

CanonicalSetup canonical_setup(const PlanarField& f, const char* where) {
    require_singular_origin(f, where);
    std::vector<HomoField> comps = homogeneous_components(f);
    if (comps.empty()) throw NotLVShape(std::string(where) + ": zero field");
    LVData lv = canonicalize_quadratic_lv(comps.front());
    return {lv, apply_linear_change(f, lv)};
}

// Substitute the canonical coordinates u = alpha x, v = beta y into a scalar
// found in canonical coordinates, landing back in input coordinates.
BiPoly pull_back_scalar(const BiPoly& p, const LVData& lv) {
    if (lv.change_is_identity()) return p;
    const int n = std::max(p.degree(), 0);
    return p.subst(BiPoly::var_x() * lv.alpha, BiPoly::var_y() * lv.beta, n);
}

Obstruction make_obstruction(int degree, const std::vector<Rational>& coords,
                             const std::vector<HomoPoly>& basis) {
    Obstruction o;
    o.degree = degree;
    o.coords = coords;
    for (const auto& b : basis) o.basis.push_back(b.body());
    return o;
}

}  // namespace

FirstIntegralResult solve_first_integral(const PlanarField& f, int max_degree, int seed_power) {
    if (seed_power < 1)
        throw std::invalid_argument("solve_first_integral: seed power must be positive");
    auto [lv, fc] = canonical_setup(f, "solve_first_integral");
    fc = fc.truncated(max_degree);
    const long seed_degree = lv.M * seed_power;
    if (seed_degree > max_degree)
        throw std::invalid_argument("solve_first_integral: max_degree below the seed degree");

    CorangeChain chain = CorangeChain::build(lv, max_degree + 1);
    BiPoly integral = lv.I_M.body().pow(static_cast<unsigned>(seed_power));

    // Equation degrees d+1: F_2(I_d) cancels the known part of F(I).
    for (int d = static_cast<int>(seed_degree) + 1; d <= max_degree; ++d) {
        const BiPoly target = -lie_derivative(fc, integral).homogeneous_part(d + 1);
        if (target.is_zero()) continue;
        HomologicalSolve step =
            solve_against(build_ell(lv, d + 1), chain.at(d + 1).basis, target);
        if (!step.solvable) {
            FirstIntegralResult out;
            out.obstruction =
                make_obstruction(d + 1, step.complement_coords, chain.at(d + 1).basis);
            return out;
        }
        integral += step.solution;
    }

    const BiPoly residual = lie_derivative(fc, integral).truncated(max_degree + 1);
    if (!residual.is_zero())
        throw InternalError("solve_first_integral: residual after completing all degrees");

    FirstIntegralResult out;
    out.success = true;
    out.certificate.integral = pull_back_scalar(integral, lv);
    const int lead = out.certificate.integral.low_degree();
    out.certificate.leading =
        HomoPoly(lead, out.certificate.integral.homogeneous_part(lead));
    out.certificate.verified_to_degree = max_degree;
    if (!lie_derivative(f, out.certificate.integral).truncated(max_degree + 1).is_zero())
        throw InternalError("solve_first_integral: pulled-back integral fails verification");
    return out;
}

bool verify_rational_first_integral(const PlanarField& f, const BiPoly& num, const BiPoly& den,
                                    int dpow) {
    if (den.constant_term().is_zero())
        throw std::invalid_argument("verify_rational_first_integral: denominator vanishes at 0");
    // Quotient-rule numerator of F(num * den^-dpow), exact polynomial identity.
    return (lie_derivative(f, num) * den - Rational(dpow) * (num * lie_derivative(f, den)))
        .is_zero();
}

IIFResult solve_iif(const PlanarField& f, int max_degree) {
    auto [lv, fc] = canonical_setup(f, "solve_iif");
    fc = fc.truncated(max_degree);
    if (max_degree < 3)
        throw std::invalid_argument("solve_iif: max_degree must be at least 3");

    const BiPoly div_f = divergence(fc);
    const BiPoly div2 = div_f.homogeneous_part(1);
    const PlanarField f2 = lv.canonical_field.body;
    BiPoly v = BiPoly::var_x() * BiPoly::var_y() * (BiPoly::var_x() - BiPoly::var_y());

    for (int d = 4; d <= max_degree; ++d) {
        const BiPoly target =
            -(lie_derivative(fc, v) - v * div_f).homogeneous_part(d + 1);
        if (target.is_zero()) continue;
        // V_d -> F_2(V_d) - V_d div(F_2), the degree-(d+1) principal part.
        LinearOpMatrix op = matrix_of_poly_map(
            degree_basis(d), degree_basis(d + 1),
            [&](const BiPoly& p) { return lie_derivative(f2, p) - p * div2; });
        const std::vector<HomoPoly> complement = greedy_complement(op);
        HomologicalSolve step = solve_against(op, complement, target);
        if (!step.solvable) {
            IIFResult out;
            out.obstruction = make_obstruction(d + 1, step.complement_coords, complement);
            return out;
        }
        v += step.solution;
    }

    if (!(lie_derivative(fc, v) - v * div_f).truncated(max_degree + 1).is_zero())
        throw InternalError("solve_iif: residual after completing all degrees");

    IIFResult out;
    out.success = true;
    BiPoly pulled = pull_back_scalar(v, lv);
    if (!lv.change_is_identity())
        pulled = pulled * (lv.alpha * lv.beta).inverse();
    if (!(lie_derivative(f, pulled) - pulled * divergence(f)).truncated(max_degree + 1).is_zero())
        throw InternalError("solve_iif: pulled-back factor fails verification");
    out.certificate.v = pulled;
    out.certificate.verified_to_degree = max_degree;
    return out;
}

bool verify_lie_symmetry(const PlanarField& f, const PlanarField& g, const BiPoly& nu,
                         int max_degree) {
    const BiPoly gx = g.P.homogeneous_part(1), gy = g.Q.homogeneous_part(1);
    if (!(gx == BiPoly::var_x()) || !(gy == BiPoly::var_y()))
        throw std::invalid_argument("verify_lie_symmetry: g must have linear part (x, y)");
    if (!(nu.constant_term() == Rational(1)))
        throw std::invalid_argument("verify_lie_symmetry: nu(0,0) must be 1");
    const PlanarField lhs = symmetry_bracket(f, g);
    const PlanarField rhs = nu * f;
    return (lhs - rhs).truncated(max_degree).is_zero();
}

std::optional<BiPoly> solve_symmetry_multiplier(const PlanarField& f, const PlanarField& g,
                                                int max_degree) {
    const PlanarField bracket = symmetry_bracket(f, g).truncated(max_degree);
    BiPoly nu;
    for (int e = 2; e <= max_degree; ++e) {
        // nu_{e-2} * F_2 = [bracket]_e - (known nu parts) * (higher f parts).
        const PlanarField known = (nu * f).truncated(e);
        const PlanarField target{
            bracket.P.homogeneous_part(e) - known.P.homogeneous_part(e),
            bracket.Q.homogeneous_part(e) - known.Q.homogeneous_part(e)};
        const PlanarField f2{f.P.homogeneous_part(2), f.Q.homogeneous_part(2)};
        const std::vector<Monomial> dom = degree_basis(e - 2);
        const std::vector<Monomial> cod = degree_basis(e);
        RatMatrix sys(2 * cod.size(), dom.size());
        for (std::size_t c = 0; c < dom.size(); ++c) {
            const PlanarField col = BiPoly::term(dom[c], Rational(1)) * f2;
            std::vector<Rational> v = poly_to_vector(col.P, cod);
            std::vector<Rational> w = poly_to_vector(col.Q, cod);
            v.insert(v.end(), w.begin(), w.end());
            sys.set_column(c, v);
        }
        std::vector<Rational> rhs = poly_to_vector(target.P, cod);
        std::vector<Rational> rhs_q = poly_to_vector(target.Q, cod);
        rhs.insert(rhs.end(), rhs_q.begin(), rhs_q.end());
        auto sol = solve(sys, rhs);
        if (!sol) return std::nullopt;
        nu += vector_to_poly(*sol, dom);
    }
    return nu;
}

std::pair<PlanarField, BiPoly> lie_symmetry_from_report(const PlanarField& f,
                                                        const NormalFormReport& report,
                                                        int max_degree) {
    if (!report.eta_all_zero())
        throw std::invalid_argument("lie_symmetry_from_report: field is not in the orbit of F_2");
    PlanarField g = radial_field();
    for (auto it = report.generators.rbegin(); it != report.generators.rend(); ++it) {
        const PlanarField back = invert_near_identity(it->field_part, max_degree);
        g = push_forward(g, back, max_degree);
    }
    if (!report.lv.change_is_identity()) {
        // Transport through the inverse diagonal change (no time factor).
        const int n = std::max(g.degree(), 0);
        const BiPoly sx = BiPoly::var_x() * report.lv.alpha;
        const BiPoly sy = BiPoly::var_y() * report.lv.beta;
        g = {g.P.subst(sx, sy, n) * report.lv.alpha.inverse(),
             g.Q.subst(sx, sy, n) * report.lv.beta.inverse()};
    }
    auto nu = solve_symmetry_multiplier(f, g, max_degree);
    if (!nu || !verify_lie_symmetry(f, g, *nu, max_degree))
        throw InternalError("lie_symmetry_from_report: constructed symmetry fails verification");
    return {g, *nu};
}

InvariantCurveCertificate build_case6_curve(const Rational& b02, const Rational& b11,
                                            int max_degree) {
    if (max_degree < 1)
        throw std::invalid_argument("build_case6_curve: max_degree must be positive");
    const BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();

    // C_1 = x - y and C_2 = b02 x^2 + (b11 - 4 b02)/3 xy + b02 y^2; for
    // j >= 1 the odd and even terms follow the two-term recurrence
    //   A_{2j+1} = (A_{2j} b11 - B_{2j} b02) / j,
    //   C_{2j+1} = A_{2j+1} x^j y^j (x - y),
    //   A_{2j+2} = -A_{2j+1} b02 / (2j-1),
    //   B_{2j+2} = A_{2j+1} (b11 (2j-1) + 4 b02 (2j+1)) / ((2j-1)(2j+3)),
    //   C_{2j+2} = x^j y^j (A_{2j+2} x^2 + B_{2j+2} xy + A_{2j+2} y^2).
    // The 1/j factor comes from the principal part acting on the odd shape:
    // F_2(A x^j y^j (x-y)) - K_1 A x^j y^j (x-y) = 2 j A x^j y^j (x-y)(x+y).
    BiPoly curve = x - y;
    Rational a_even = b02;                          // A_2
    Rational b_even = (b11 - Rational(4) * b02) / Rational(3);  // B_2
    if (max_degree >= 2)
        curve += x.pow(2) * a_even + x * y * b_even + y.pow(2) * a_even;
    for (int j = 1; 2 * j + 1 <= max_degree; ++j) {
        const Rational a_odd = (a_even * b11 - b_even * b02) / Rational(j);
        const BiPoly xy_pow = x.pow(static_cast<unsigned>(j)) * y.pow(static_cast<unsigned>(j));
        curve += xy_pow * (x - y) * a_odd;
        if (2 * j + 2 > max_degree) break;
        a_even = -a_odd * b02 / Rational(2 * j - 1);
        b_even = a_odd * (b11 * Rational(2 * j - 1) + Rational(4) * b02 * Rational(2 * j + 1)) /
                 (Rational(2 * j - 1) * Rational(2 * j + 3));
        curve += xy_pow * (x.pow(2) * a_even + x * y * b_even + y.pow(2) * a_even);
    }

    const BiPoly w = x.pow(2) * b02 + x * y * b11 + y.pow(2) * b02;
    const PlanarField field{x * (y * Rational(3) - x) - x * w,
                            y * (x * Rational(3) - y) + y * w};
    CurveCheck check = check_invariant_curve(field, curve, max_degree);
    if (!check.invariant)
        throw InternalError("build_case6_curve: recurrence fails at degree " +
                            std::to_string(check.failing_degree));
    // the identity at degree a+1 determines the cofactor part of degree a,
    // so the computed cofactor reaches degree max_degree - 1
    const BiPoly expected_k =
        -(x + y) * (BiPoly::constant(1) + x * (Rational(2) * b02) - y * (Rational(2) * b02));
    if (!(check.certificate.cofactor == expected_k.truncated(max_degree - 1)))
        throw InternalError("build_case6_curve: cofactor differs from the closed form");
    return check.certificate;
}

ClassificationVerdict classify(const PlanarField& f, int max_degree) {
    NormalFormReport report = normal_form(f, max_degree);
    ClassificationVerdict verdict;
    if (report.eta_all_zero()) {
        verdict.integrable = true;
        // the certificate needs at least the seed degree M
        const int cert_degree = static_cast<int>(std::max<long>(max_degree, report.lv.M));
        FirstIntegralResult fi = solve_first_integral(f, cert_degree);
        if (!fi.success)
            throw InternalError("classify: vanishing normal form but first integral obstructed");
        verdict.witness = fi.certificate;
    } else {
        const int j = report.first_nonzero_eta();
        verdict.obstruction =
            make_obstruction(j, report.eta.at(j), report.chain.at(j).basis);
    }
    return verdict;
}

}  // namespace lvint
