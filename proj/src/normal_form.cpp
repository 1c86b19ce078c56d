#include "lvint/normal_form.hpp"

#include <array>
#include <stdexcept>

#include "lvint/errors.hpp"

namespace lvint {

PlanarField push_forward(const PlanarField& f, const PlanarField& u, int max_degree) {
    const BiPoly sx = BiPoly::var_x() + u.P;
    const BiPoly sy = BiPoly::var_y() + u.Q;
    const BiPoly fp = f.P.subst(sx, sy, max_degree);
    const BiPoly fq = f.Q.subst(sx, sy, max_degree);

    // (I + DU)^{-1} = sum (-DU)^m, truncated; DU entries vanish at the
    // origin so the series terminates.
    std::array<BiPoly, 4> du{u.P.dx(), u.P.dy(), u.Q.dx(), u.Q.dy()};
    std::array<BiPoly, 4> inv{BiPoly::constant(1), BiPoly(), BiPoly(), BiPoly::constant(1)};
    std::array<BiPoly, 4> term = inv;
    for (;;) {
        std::array<BiPoly, 4> next;
        next[0] = (-(du[0] * term[0] + du[1] * term[2])).truncated(max_degree);
        next[1] = (-(du[0] * term[1] + du[1] * term[3])).truncated(max_degree);
        next[2] = (-(du[2] * term[0] + du[3] * term[2])).truncated(max_degree);
        next[3] = (-(du[2] * term[1] + du[3] * term[3])).truncated(max_degree);
        if (next[0].is_zero() && next[1].is_zero() && next[2].is_zero() && next[3].is_zero())
            break;
        for (int i = 0; i < 4; ++i) inv[i] += next[i];
        term = std::move(next);
    }
    return {(inv[0] * fp + inv[1] * fq).truncated(max_degree),
            (inv[2] * fp + inv[3] * fq).truncated(max_degree)};
}

PlanarField invert_near_identity(const PlanarField& u, int max_degree) {
    if (!u.P.constant_term().is_zero() || !u.Q.constant_term().is_zero() ||
        (!u.is_zero() && std::min(u.P.is_zero() ? max_degree : u.P.low_degree(),
                                  u.Q.is_zero() ? max_degree : u.Q.low_degree()) < 2))
        throw std::invalid_argument("invert_near_identity: offset must vanish to order 2");
    PlanarField v = -u;
    for (;;) {
        const BiPoly sx = BiPoly::var_x() + v.P;
        const BiPoly sy = BiPoly::var_y() + v.Q;
        PlanarField next{(-u.P.subst(sx, sy, max_degree)), (-u.Q.subst(sx, sy, max_degree))};
        if (next == v) return v;
        v = std::move(next);
    }
}

BiPoly reciprocal_one_plus(const BiPoly& s, int max_degree) {
    if (!s.constant_term().is_zero())
        throw std::invalid_argument("reciprocal_one_plus: series must vanish at the origin");
    BiPoly r = BiPoly::constant(1), term = BiPoly::constant(1);
    for (;;) {
        term = (-(term * s)).truncated(max_degree);
        if (term.is_zero()) return r;
        r += term;
    }
}

PlanarField apply_generator(const PlanarField& f, const OrbitalGenerator& g, int max_degree) {
    PlanarField pushed = push_forward(f, g.field_part, max_degree);
    const BiPoly w = BiPoly::constant(1) + g.scale_part;
    return (w * pushed).truncated(max_degree);
}

PlanarField apply_generator_inverse(const PlanarField& f, const OrbitalGenerator& g,
                                    int max_degree) {
    const PlanarField v = invert_near_identity(g.field_part, max_degree);
    const BiPoly sx = BiPoly::var_x() + v.P;
    const BiPoly sy = BiPoly::var_y() + v.Q;
    const BiPoly w_back = g.scale_part.subst(sx, sy, max_degree);
    const BiPoly w_inv = reciprocal_one_plus(w_back, max_degree);
    PlanarField pushed = push_forward(f, v, max_degree);
    return (w_inv * pushed).truncated(max_degree);
}

StepResult homological_step(const LVData& lv, const HomoField& residual_d,
                            const CorangeChain& chain) {
    const int d = residual_d.degree;
    if (d < 3) throw std::invalid_argument("homological_step: degree must be at least 3");
    const PlanarField f2 = lv.canonical_field.body;
    const std::vector<Monomial> dom_d = degree_basis(d);
    const std::vector<Monomial> dom_u = degree_basis(d - 1);
    const std::vector<Monomial> dom_nu = degree_basis(d - 2);
    const std::vector<HomoPoly>& cor = chain.at(d - 1).basis;

    const std::size_t rows = 2 * dom_d.size();
    const std::size_t cols_u = 2 * dom_u.size();
    const std::size_t cols = cols_u + dom_nu.size() + cor.size();

    auto field_to_vector = [&](const PlanarField& f) {
        std::vector<Rational> v = poly_to_vector(f.P, dom_d);
        std::vector<Rational> w = poly_to_vector(f.Q, dom_d);
        v.insert(v.end(), w.begin(), w.end());
        return v;
    };

    RatMatrix sys(rows, cols);
    std::size_t col = 0;
    for (const Monomial& m : dom_u) {
        const BiPoly mono = BiPoly::term(m, Rational(1));
        sys.set_column(col++, field_to_vector(symmetry_bracket(PlanarField{mono, BiPoly()}, f2)));
        sys.set_column(col++, field_to_vector(symmetry_bracket(PlanarField{BiPoly(), mono}, f2)));
    }
    for (const Monomial& m : dom_nu) {
        const BiPoly mono = BiPoly::term(m, Rational(1));
        sys.set_column(col++, field_to_vector(Rational(-1) * (mono * f2)));
    }
    for (const HomoPoly& b : cor)
        sys.set_column(col++, field_to_vector(b.body() * radial_field()));

    // Direct-sum verification: the removable space (brackets and rescales)
    // must have corank exactly |cor|, and adding the complement columns must
    // span everything; this is what makes the eta coordinates unique.
    RatMatrix removable(rows, cols_u + dom_nu.size());
    for (std::size_t c = 0; c < cols_u + dom_nu.size(); ++c)
        removable.set_column(c, sys.column(c));
    if (rank(removable) != rows - cor.size() || rank(sys) != rows)
        throw HomologicalSolveFailure(
            "homological_step: direct-sum rank check failed at degree " + std::to_string(d));

    auto sol = solve(sys, field_to_vector(residual_d.body));
    if (!sol)
        throw HomologicalSolveFailure("homological_step: inconsistent system at degree " +
                                      std::to_string(d));

    StepResult out;
    out.generator.degree = d;
    BiPoly up, uq;
    col = 0;
    for (const Monomial& m : dom_u) {
        up += BiPoly::term(m, (*sol)[col++]);
        uq += BiPoly::term(m, (*sol)[col++]);
    }
    out.generator.field_part = {up, uq};
    BiPoly nu;
    for (const Monomial& m : dom_nu) nu += BiPoly::term(m, (*sol)[col++]);
    // The solved system writes residual = bracket - nu F_2 + eta D; applying
    // the generator subtracts the bracket and adds nu F_2, so the stored
    // rescale is the solved nu.
    out.generator.scale_part = nu;
    out.eta.assign(sol->begin() + static_cast<long>(col), sol->end());
    return out;
}

bool NormalFormReport::eta_all_zero() const { return first_nonzero_eta() == -1; }

int NormalFormReport::first_nonzero_eta() const {
    for (const auto& [j, coords] : eta)
        for (const auto& c : coords)
            if (!c.is_zero()) return j;
    return -1;
}

NormalFormReport normal_form(const PlanarField& f, int max_degree) {
    require_singular_origin(f, "normal_form");
    if (max_degree < 2) throw std::invalid_argument("normal_form: max_degree must be >= 2");
    std::vector<HomoField> comps = homogeneous_components(f);
    if (comps.empty()) throw NotLVShape("normal_form: zero field");
    LVData lv = canonicalize_quadratic_lv(comps.front());

    const PlanarField f_canonical = apply_linear_change(f, lv).truncated(max_degree);

    NormalFormReport report;
    report.lv = lv;
    report.max_degree = max_degree;
    report.chain = CorangeChain::build(lv, std::max(2, max_degree - 1));

    PlanarField residual = f_canonical;
    for (int d = 3; d <= max_degree; ++d) {
        HomoField rd(d, {residual.P.homogeneous_part(d), residual.Q.homogeneous_part(d)});
        StepResult step = homological_step(lv, rd, report.chain);
        residual = apply_generator(residual, step.generator, max_degree);

        // The degree-d component must now be exactly eta * D over the chosen
        // complement.
        PlanarField expected;
        const auto& basis = report.chain.at(d - 1).basis;
        for (std::size_t i = 0; i < basis.size(); ++i)
            expected += step.eta[i] * (basis[i].body() * radial_field());
        if (!(PlanarField{residual.P.homogeneous_part(d), residual.Q.homogeneous_part(d)} ==
              expected))
            throw InternalError("normal_form: residual at degree " + std::to_string(d) +
                                " is not in complement form");

        report.eta[d - 1] = std::move(step.eta);
        report.generators.push_back(std::move(step.generator));
    }
    report.residual_field = residual;

    // Soundness: replay the recorded generators onto the canonicalized field
    // and compare against the residual.
    PlanarField replay = f_canonical;
    for (const auto& g : report.generators) replay = apply_generator(replay, g, max_degree);
    if (!(replay == report.residual_field))
        throw InternalError("normal_form: generator replay does not reproduce the residual");

    return report;
}

}  // namespace lvint
