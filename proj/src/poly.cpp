#include "lvint/poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

#include "lvint/errors.hpp"

namespace lvint {

std::string to_string(const Monomial& m) {
    std::string s;
    if (m.x > 0) {
        s += "x";
        if (m.x > 1) s += "^" + std::to_string(m.x);
    }
    if (m.y > 0) {
        if (!s.empty()) s += "*";
        s += "y";
        if (m.y > 1) s += "^" + std::to_string(m.y);
    }
    if (s.empty()) s = "1";
    return s;
}

BiPoly BiPoly::constant(Rational c) { return term({0, 0}, std::move(c)); }

BiPoly BiPoly::term(Monomial m, Rational c) {
    BiPoly p;
    if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
    return p;
}

int BiPoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

int BiPoly::low_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

Rational BiPoly::coeff(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void BiPoly::set_coeff(Monomial m, Rational c) {
    if (c.is_zero())
        terms_.erase(m);
    else
        terms_[m] = std::move(c);
}

BiPoly BiPoly::operator-() const {
    BiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m{ma.x + mb.x, ma.y + mb.y};
            auto [it, inserted] = r.terms_.try_emplace(m, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    return r;
}

BiPoly operator*(const BiPoly& a, const Rational& c) {
    BiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : a.terms_) r.terms_.emplace(m, v * c);
    return r;
}

BiPoly BiPoly::dx() const {
    BiPoly r;
    for (const auto& [m, c] : terms_)
        if (m.x > 0) r.terms_.emplace(Monomial{m.x - 1, m.y}, c * Rational(m.x));
    return r;
}

BiPoly BiPoly::dy() const {
    BiPoly r;
    for (const auto& [m, c] : terms_)
        if (m.y > 0) r.terms_.emplace(Monomial{m.x, m.y - 1}, c * Rational(m.y));
    return r;
}

BiPoly BiPoly::homogeneous_part(int k) const {
    BiPoly r;
    for (const auto& [m, c] : terms_)
        if (m.degree() == k) r.terms_.emplace(m, c);
    return r;
}

BiPoly BiPoly::truncated(int max_degree) const {
    BiPoly r;
    for (const auto& [m, c] : terms_) {
        if (m.degree() > max_degree) break;  // map is degree-ascending
        r.terms_.emplace(m, c);
    }
    return r;
}

BiPoly BiPoly::pow(unsigned n) const {
    BiPoly r = constant(1);
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
}

BiPoly BiPoly::pow_truncated(unsigned n, int max_degree) const {
    BiPoly r = constant(1);
    for (unsigned i = 0; i < n; ++i) r = (r * *this).truncated(max_degree);
    return r;
}

BiPoly BiPoly::subst(const BiPoly& sx, const BiPoly& sy, int max_degree) const {
    int max_x = 0, max_y = 0;
    for (const auto& [m, c] : terms_) {
        max_x = std::max(max_x, m.x);
        max_y = std::max(max_y, m.y);
    }
    std::vector<BiPoly> px(max_x + 1), py(max_y + 1);
    px[0] = constant(1);
    py[0] = constant(1);
    for (int i = 1; i <= max_x; ++i) px[i] = (px[i - 1] * sx).truncated(max_degree);
    for (int j = 1; j <= max_y; ++j) py[j] = (py[j - 1] * sy).truncated(max_degree);
    BiPoly r;
    for (const auto& [m, c] : terms_) r += (px[m.x] * py[m.y]).truncated(max_degree) * c;
    return r.truncated(max_degree);
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) s += "-";
            first = false;
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        if (m.x == 0 && m.y == 0) {
            s += a.str();
        } else {
            if (!(a == Rational(1))) s += a.str() + "*";
            s += to_string(m);
        }
    }
    return s;
}

namespace {

// Recursive-descent parser for the polynomial grammar:
//   poly := ['+'|'-'] term (('+'|'-') term)*
//   term := coef ['*'] [mono] | mono
//   coef := int ['/' posint]
//   mono := ('x'|'y') ['^' posint] (['*'] ('x'|'y') ['^' posint])*
// Whitespace is permitted between tokens.
class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    BiPoly parse() {
        BiPoly result;
        skip_ws();
        if (at_end()) throw ParseError("empty polynomial", pos_);
        bool negative = eat_sign();
        result += parse_term(negative);
        for (;;) {
            skip_ws();
            if (at_end()) break;
            char c = peek();
            if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", pos_);
            ++pos_;
            result += parse_term(c == '-');
        }
        return result;
    }

private:
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool eat_sign() {
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            bool neg = peek() == '-';
            ++pos_;
            return neg;
        }
        return false;
    }

    std::string read_digits() {
        std::string d;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) d += s_[pos_++];
        return d;
    }

    int read_exponent() {
        skip_ws();
        if (at_end() || peek() != '^') return 1;
        ++pos_;
        skip_ws();
        std::string d = read_digits();
        if (d.empty()) throw ParseError("expected exponent digits", pos_);
        long e = std::stol(d);
        if (e <= 0) throw ParseError("exponent must be positive", pos_);
        return static_cast<int>(e);
    }

    BiPoly parse_term(bool negative) {
        skip_ws();
        if (at_end()) throw ParseError("expected term", pos_);
        Rational coef(1);
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num = read_digits();
            std::string den;
            skip_ws();
            if (!at_end() && peek() == '/') {
                ++pos_;
                skip_ws();
                den = read_digits();
                if (den.empty()) throw ParseError("expected denominator digits", pos_);
            }
            try {
                coef = Rational::from_string(den.empty() ? num : num + "/" + den);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), pos_);
            }
            have_coef = true;
            skip_ws();
            if (!at_end() && peek() == '*') ++pos_;
        }
        Monomial mono;
        bool have_mono = false;
        for (;;) {
            skip_ws();
            if (at_end()) break;
            char c = peek();
            if (c == 'x') {
                ++pos_;
                mono.x += read_exponent();
                have_mono = true;
            } else if (c == 'y') {
                ++pos_;
                mono.y += read_exponent();
                have_mono = true;
            } else if (c == '*' && have_mono) {
                std::size_t save = pos_;
                ++pos_;
                skip_ws();
                if (at_end() || (peek() != 'x' && peek() != 'y')) {
                    pos_ = save;
                    break;
                }
            } else {
                break;
            }
        }
        if (!have_coef && !have_mono) throw ParseError("expected coefficient or variable", pos_);
        if (negative) coef = -coef;
        return BiPoly::term(mono, coef);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

BiPoly BiPoly::parse(std::string_view s) { return PolyParser(s).parse(); }

bool try_divide(const BiPoly& divisor, const BiPoly& dividend, BiPoly* quotient) {
    if (divisor.is_zero()) throw std::invalid_argument("try_divide: zero divisor");
    const auto& [dm, dc] = *divisor.terms().rbegin();
    BiPoly q, r = dividend;
    while (!r.is_zero()) {
        const auto& [rm, rc] = *r.terms().rbegin();
        // The leading term of any multiple of divisor is divisible by the
        // divisor's leading term, so a non-divisible leading term settles it.
        if (rm.x < dm.x || rm.y < dm.y) return false;
        BiPoly t = BiPoly::term({rm.x - dm.x, rm.y - dm.y}, rc / dc);
        q += t;
        r -= t * divisor;
    }
    if (quotient) *quotient = q;
    return true;
}

std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.str(); }

HomoPoly::HomoPoly(int degree, BiPoly body) : degree_(degree), body_(std::move(body)) {
    if (degree_ < 0) throw std::invalid_argument("HomoPoly: negative degree");
    if (!body_.is_zero() && (body_.degree() != degree_ || body_.low_degree() != degree_))
        throw std::invalid_argument("HomoPoly: body is not homogeneous of the tagged degree");
}

std::ostream& operator<<(std::ostream& os, const HomoPoly& p) { return os << p.body().str(); }

}  // namespace lvint
