#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lvint/rational.hpp"

namespace lvint {

struct Monomial {
    int x = 0;
    int y = 0;
    int degree() const { return x + y; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Canonical term order: ascending total degree, then descending x exponent
// (graded lexicographic with x > y). Within one degree the order reads
// x^k, x^(k-1) y, ..., y^k. Used for storage, printing and basis listings.
struct CanonicalTermOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.x > b.x;
    }
};

std::string to_string(const Monomial& m);

// Sparse bivariate polynomial over Rational. No zero coefficients are ever
// stored; the zero polynomial has an empty term map.
class BiPoly {
public:
    using TermMap = std::map<Monomial, Rational, CanonicalTermOrder>;

    BiPoly() = default;

    static BiPoly constant(Rational c);
    static BiPoly term(Monomial m, Rational c);
    static BiPoly var_x() { return term({1, 0}, 1); }
    static BiPoly var_y() { return term({0, 1}, 1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // -1 for the zero polynomial.
    int degree() const;
    int low_degree() const;
    bool is_homogeneous() const { return is_zero() || degree() == low_degree(); }

    Rational coeff(Monomial m) const;
    Rational constant_term() const { return coeff({0, 0}); }
    void set_coeff(Monomial m, Rational c);

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const Rational& c);
    friend BiPoly operator*(const Rational& c, const BiPoly& a) { return a * c; }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    BiPoly dx() const;
    BiPoly dy() const;

    BiPoly homogeneous_part(int k) const;
    BiPoly truncated(int max_degree) const;
    BiPoly pow(unsigned n) const;
    BiPoly pow_truncated(unsigned n, int max_degree) const;

    // Composition this(sx, sy), truncated at max_degree.
    BiPoly subst(const BiPoly& sx, const BiPoly& sy, int max_degree) const;

    // Canonical text form, e.g. "-x^3 + 4/3*x*y^2". parse(str()) round-trips
    // bit-exactly.
    std::string str() const;
    static BiPoly parse(std::string_view s);

private:
    TermMap terms_;
};

// True iff dividend lies in the ideal generated by divisor; on success the
// exact quotient is stored in *quotient when non-null.
bool try_divide(const BiPoly& divisor, const BiPoly& dividend, BiPoly* quotient = nullptr);

std::ostream& operator<<(std::ostream& os, const BiPoly& p);

// Homogeneous polynomial with an explicit degree tag. The zero polynomial is
// allowed at any degree (operators need well-typed domains and codomains).
class HomoPoly {
public:
    HomoPoly() = default;
    HomoPoly(int degree, BiPoly body);

    int degree() const { return degree_; }
    const BiPoly& body() const { return body_; }
    bool is_zero() const { return body_.is_zero(); }

    HomoPoly operator-() const { return HomoPoly(degree_, -body_); }
    friend HomoPoly operator*(const HomoPoly& p, const Rational& c) {
        return HomoPoly(p.degree_, p.body_ * c);
    }
    friend bool operator==(const HomoPoly& a, const HomoPoly& b) {
        return a.degree_ == b.degree_ && a.body_ == b.body_;
    }

private:
    int degree_ = 0;
    BiPoly body_;
};

std::ostream& operator<<(std::ostream& os, const HomoPoly& p);

}  // namespace lvint
