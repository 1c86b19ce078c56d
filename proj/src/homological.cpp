#include "lvint/homological.hpp"

#include <sstream>
#include <stdexcept>

#include "lvint/errors.hpp"
#include "lvint/field.hpp"

namespace lvint {

std::vector<Monomial> degree_basis(int k) {
    if (k < 0) throw std::invalid_argument("degree_basis: negative degree");
    std::vector<Monomial> basis;
    basis.reserve(k + 1);
    for (int i = k; i >= 0; --i) basis.push_back({i, k - i});
    return basis;
}

std::vector<Rational> poly_to_vector(const BiPoly& p, const std::vector<Monomial>& basis) {
    std::vector<Rational> v(basis.size(), Rational(0));
    std::size_t found = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        v[i] = p.coeff(basis[i]);
        if (!v[i].is_zero()) ++found;
    }
    if (found != p.term_count())
        throw InternalError("poly_to_vector: polynomial has terms outside the basis");
    return v;
}

BiPoly vector_to_poly(const std::vector<Rational>& v, const std::vector<Monomial>& basis) {
    if (v.size() != basis.size()) throw std::invalid_argument("vector_to_poly: size mismatch");
    BiPoly p;
    for (std::size_t i = 0; i < basis.size(); ++i) p += BiPoly::term(basis[i], v[i]);
    return p;
}

BiPoly LinearOpMatrix::apply(const BiPoly& p) const {
    std::vector<Rational> v = poly_to_vector(p, domain_basis);
    std::vector<Rational> w(codomain_basis.size(), Rational(0));
    for (std::size_t r = 0; r < entries.rows(); ++r)
        for (std::size_t c = 0; c < entries.cols(); ++c) w[r] += entries.at(r, c) * v[c];
    return vector_to_poly(w, codomain_basis);
}

LinearOpMatrix matrix_of_poly_map(std::vector<Monomial> domain, std::vector<Monomial> codomain,
                                  const std::function<BiPoly(const BiPoly&)>& map) {
    LinearOpMatrix op;
    op.domain_basis = std::move(domain);
    op.codomain_basis = std::move(codomain);
    op.entries = RatMatrix(op.codomain_basis.size(), op.domain_basis.size());
    for (std::size_t c = 0; c < op.domain_basis.size(); ++c) {
        BiPoly image = map(BiPoly::term(op.domain_basis[c], Rational(1)));
        op.entries.set_column(c, poly_to_vector(image, op.codomain_basis));
    }
    return op;
}

LinearOpMatrix build_ell(const LVData& lv, int k) {
    if (k < 1) throw std::invalid_argument("build_ell: degree must be at least 1");
    const PlanarField f2 = lv.canonical_field.body;
    return matrix_of_poly_map(degree_basis(k - 1), degree_basis(k),
                              [&](const BiPoly& p) { return lie_derivative(f2, p); });
}

LinearOpMatrix build_ell_c(const LVData& lv, int k) {
    if (k < 0) throw std::invalid_argument("build_ell_c: k must be nonnegative");
    std::vector<Monomial> delta_dom{{k + 2, 0}, {k + 1, 1}, {0, k + 2}};
    std::vector<Monomial> delta_cod{{k + 3, 0}, {k + 2, 1}, {0, k + 3}};

    // G = F_2 - 3/(k+3) mu D.
    const PlanarField g_field =
        lv.canonical_field.body - Rational(3, k + 3) * (lv.mu.body() * radial_field());

    // Projection onto the Delta basis along h * P_k: write w = delta + h s by
    // an exact linear solve in the monomial basis of P_{k+3}.
    const std::vector<Monomial> full = degree_basis(k + 3);
    const std::vector<Monomial> pk = degree_basis(k);
    RatMatrix sys(full.size(), 3 + pk.size());
    for (std::size_t c = 0; c < 3; ++c)
        sys.set_column(c, poly_to_vector(BiPoly::term(delta_cod[c], Rational(1)), full));
    for (std::size_t c = 0; c < pk.size(); ++c)
        sys.set_column(3 + c,
                       poly_to_vector(lv.h.body() * BiPoly::term(pk[c], Rational(1)), full));

    return matrix_of_poly_map(delta_dom, delta_cod, [&](const BiPoly& p) {
        BiPoly image = lie_derivative(g_field, p);
        auto sol = solve(sys, poly_to_vector(image, full));
        if (!sol) throw InternalError("build_ell_c: projection solve failed");
        BiPoly delta;
        for (std::size_t i = 0; i < 3; ++i) delta += BiPoly::term(delta_cod[i], (*sol)[i]);
        return delta;
    });
}

std::vector<HomoPoly> op_kernel(const LinearOpMatrix& op) {
    const int deg = op.domain_basis.empty() ? 0 : op.domain_basis.front().degree();
    std::vector<HomoPoly> out;
    for (const auto& v : kernel_basis(op.entries))
        out.emplace_back(deg, vector_to_poly(v, op.domain_basis));
    return out;
}

std::string operator_csv(const LinearOpMatrix& op) {
    std::ostringstream os;
    os << "codomain\\domain";
    for (const auto& m : op.domain_basis) os << "," << to_string(m);
    os << "\n";
    for (std::size_t r = 0; r < op.entries.rows(); ++r) {
        os << to_string(op.codomain_basis[r]);
        for (std::size_t c = 0; c < op.entries.cols(); ++c)
            os << "," << op.entries.at(r, c).str();
        os << "\n";
    }
    return os.str();
}

std::vector<HomoPoly> greedy_complement(const LinearOpMatrix& op) {
    const std::size_t dim = op.codomain_basis.size();
    RatMatrix current = op.entries;
    std::size_t current_rank = rank(current);
    std::vector<HomoPoly> chosen;
    const int deg = op.codomain_basis.empty() ? 0 : op.codomain_basis.front().degree();
    for (const Monomial& m : op.codomain_basis) {
        if (current_rank == dim) break;
        BiPoly cand = BiPoly::term(m, Rational(1));
        RatMatrix extended = current.augmented(poly_to_vector(cand, op.codomain_basis));
        std::size_t r = rank(extended);
        if (r > current_rank) {
            chosen.emplace_back(deg, cand);
            current = std::move(extended);
            current_rank = r;
        }
    }
    if (current_rank != dim)
        throw InternalError("greedy_complement: could not complete the range");
    return chosen;
}

CorangeChain CorangeChain::build(const LVData& lv, int max_degree) {
    if (max_degree < 2) throw std::invalid_argument("CorangeChain: max_degree must be >= 2");
    CorangeChain chain;
    chain.max_degree_ = max_degree;
    for (int k = 2; k <= max_degree; ++k) {
        LinearOpMatrix ell = build_ell(lv, k);
        const std::size_t dim = ell.codomain_basis.size();
        const std::size_t range_rank = rank(ell.entries);
        const std::size_t cor_dim = dim - range_rank;
        CorangeBasis cor{k, {}};

        auto completes_range = [&](const std::vector<HomoPoly>& cand) {
            if (cand.size() != cor_dim) return false;
            RatMatrix ext = ell.entries;
            for (const auto& p : cand)
                ext = ext.augmented(poly_to_vector(p.body(), ell.codomain_basis));
            return rank(ext) == dim;
        };

        if (k > lv.M + 1) {
            // Cyclic step: multiply the complement M degrees below by I_M.
            std::vector<HomoPoly> cand;
            for (const auto& p : chain.at(k - static_cast<int>(lv.M)).basis)
                cand.emplace_back(k, p.body() * lv.I_M.body());
            if (!completes_range(cand))
                throw ComplementVerificationFailure(
                    "CorangeChain: cyclic candidate fails the rank check at degree " +
                    std::to_string(k));
            cor.basis = std::move(cand);
        } else {
            if (k == lv.M + 1 && cor_dim == 2) {
                std::vector<HomoPoly> pair{
                    HomoPoly(k, BiPoly::var_x() * lv.I_M.body()),
                    HomoPoly(k, BiPoly::var_y() * lv.I_M.body())};
                if (completes_range(pair)) cor.basis = std::move(pair);
            }
            if (cor.basis.empty()) cor.basis = greedy_complement(ell);
        }
        chain.by_degree_.push_back(std::move(cor));
    }
    return chain;
}

const CorangeBasis& CorangeChain::at(int k) const {
    if (k < 2 || k > max_degree_)
        throw std::out_of_range("CorangeChain: degree " + std::to_string(k) + " out of range");
    return by_degree_[static_cast<std::size_t>(k - 2)];
}

HomologicalSolve solve_against(const LinearOpMatrix& op, const std::vector<HomoPoly>& complement,
                               const BiPoly& target) {
    RatMatrix sys = op.entries;
    for (const auto& p : complement)
        sys = sys.augmented(poly_to_vector(p.body(), op.codomain_basis));
    auto sol = solve(sys, poly_to_vector(target, op.codomain_basis));
    if (!sol)
        throw HomologicalSolveFailure(
            "solve_against: range plus complement does not span the target space");
    HomologicalSolve out;
    const std::size_t n = op.domain_basis.size();
    std::vector<Rational> u(sol->begin(), sol->begin() + static_cast<long>(n));
    out.solution = vector_to_poly(u, op.domain_basis);
    out.complement_coords.assign(sol->begin() + static_cast<long>(n), sol->end());
    out.solvable = true;
    for (const auto& c : out.complement_coords)
        if (!c.is_zero()) out.solvable = false;
    return out;
}

}  // namespace lvint
