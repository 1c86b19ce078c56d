#include "lvint/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "lvint/errors.hpp"

namespace lvint {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    auto bad = [&] { return std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'"); };
    if (s.empty()) throw bad();
    std::string_view num = s, den;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
        if (den.empty()) throw bad();
    }
    auto check_int = [&](std::string_view t, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < t.size() && (t[i] == '+' || t[i] == '-')) ++i;
        if (i == t.size()) throw bad();
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') throw bad();
    };
    check_int(num, true);
    mpz_class n{std::string(num)};
    mpq_class v{n};
    if (!den.empty()) {
        check_int(den, false);
        mpz_class d{std::string(den)};
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        v /= mpq_class(d);
    }
    return Rational(std::move(v));
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::invalid_argument("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace lvint
