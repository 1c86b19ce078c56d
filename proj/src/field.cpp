#include "lvint/field.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>

#include "lvint/errors.hpp"

namespace lvint {

int PlanarField::degree() const { return std::max(P.degree(), Q.degree()); }

std::ostream& operator<<(std::ostream& os, const PlanarField& f) {
    return os << "(" << f.P.str() << ", " << f.Q.str() << ")";
}

void require_singular_origin(const PlanarField& f, const char* where) {
    if (!f.P.constant_term().is_zero() || !f.Q.constant_term().is_zero())
        throw std::invalid_argument(std::string(where) + ": field does not vanish at the origin");
}

HomoField::HomoField(int degree, PlanarField body) : degree(degree), body(std::move(body)) {
    if (degree < 0) throw std::invalid_argument("HomoField: negative degree");
    auto homogeneous = [&](const BiPoly& p) {
        return p.is_zero() || (p.degree() == degree && p.low_degree() == degree);
    };
    if (!homogeneous(this->body.P) || !homogeneous(this->body.Q))
        throw std::invalid_argument("HomoField: components not homogeneous of the tagged degree");
}

BiPoly lie_derivative(const PlanarField& f, const BiPoly& c) {
    return f.P * c.dx() + f.Q * c.dy();
}

std::vector<HomoField> homogeneous_components(const PlanarField& f) {
    std::set<int> degrees;
    for (const auto& [m, c] : f.P.terms()) degrees.insert(m.degree());
    for (const auto& [m, c] : f.Q.terms()) degrees.insert(m.degree());
    std::vector<HomoField> out;
    for (int d : degrees)
        out.emplace_back(d, PlanarField{f.P.homogeneous_part(d), f.Q.homogeneous_part(d)});
    return out;
}

PlanarField radial_field() { return {BiPoly::var_x(), BiPoly::var_y()}; }

PlanarField hamiltonian_field(const BiPoly& h) { return {-h.dy(), h.dx()}; }

BiPoly divergence(const PlanarField& f) { return f.P.dx() + f.Q.dy(); }

HomoPoly wedge_with_radial(const HomoField& fk) {
    BiPoly w = BiPoly::var_x() * fk.body.Q - BiPoly::var_y() * fk.body.P;
    return HomoPoly(fk.degree + 1, w * Rational(1, fk.degree + 1));
}

HomoPoly divergence_part(const HomoField& fk) {
    if (fk.degree < 1)
        throw std::invalid_argument("divergence_part: degree must be at least 1");
    return HomoPoly(fk.degree - 1, divergence(fk.body) * Rational(1, fk.degree + 1));
}

SplitParts split(const HomoField& fk) {
    SplitParts parts{wedge_with_radial(fk), divergence_part(fk)};
    return parts;
}

PlanarField symmetry_bracket(const PlanarField& f, const PlanarField& g) {
    // Row i of DF dotted with G is the operator of g applied to component i.
    return {lie_derivative(g, f.P) - lie_derivative(f, g.P),
            lie_derivative(g, f.Q) - lie_derivative(f, g.Q)};
}

}  // namespace lvint
