#include "lvint/aplica.hpp"

#include <stdexcept>

#include "lvint/errors.hpp"

namespace lvint {

PlanarField aplica_field(const AplicaParams& p) {
    const BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
    const BiPoly cubic_a = x.pow(2) * p.a20 + x * y * p.a11 + y.pow(2) * p.a02;
    const BiPoly cubic_b = x.pow(2) * p.b20 + x * y * p.b11 + y.pow(2) * p.b02;
    return {x * (y * Rational(3) - x) + x * cubic_a,
            y * (x * Rational(3) - y) + y * cubic_b};
}

AplicaParams parse_aplica_params(std::string_view kv) {
    AplicaParams p;
    std::size_t pos = 0;
    while (pos < kv.size()) {
        std::size_t end = kv.find(',', pos);
        if (end == std::string_view::npos) end = kv.size();
        std::string_view item = kv.substr(pos, end - pos);
        auto trim = [](std::string_view s) {
            while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
            while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
            return s;
        };
        item = trim(item);
        if (!item.empty()) {
            std::size_t eq = item.find('=');
            if (eq == std::string_view::npos)
                throw ParseError("expected key=value in parameter list", pos);
            std::string key{trim(item.substr(0, eq))};
            Rational value = Rational::from_string(trim(item.substr(eq + 1)));
            if (key == "a20")
                p.a20 = value;
            else if (key == "a11")
                p.a11 = value;
            else if (key == "a02")
                p.a02 = value;
            else if (key == "b20")
                p.b20 = value;
            else if (key == "b11")
                p.b11 = value;
            else if (key == "b02")
                p.b02 = value;
            else
                throw ParseError("unknown parameter '" + key + "'", pos);
        }
        pos = end + 1;
    }
    return p;
}

std::vector<CaseConditions> eval_case_conditions(const AplicaParams& p) {
    const Rational &a20 = p.a20, &a11 = p.a11, &a02 = p.a02;
    const Rational &b20 = p.b20, &b11 = p.b11, &b02 = p.b02;
    const Rational five(5), three(3), two(2);
    std::vector<CaseConditions> out;
    out.push_back({1,
                   {b11 + five * b02, b20 + two * b02, a11 + three * b02, a20 - b02, a02}});
    out.push_back({2,
                   {b11 + three * b02, a02 + two * b02, a11 + five * b02, a20 - b02, b20}});
    out.push_back({3,
                   {two * a11 + two * a02 - three * b20 - three * b11 - five * b02,
                    a02 * b20 + a02 * b11 + three * a02 * b02 + two * b20 * b02,
                    two * a20 + b20 + b11 + three * b02}});
    out.push_back({4, {a02 + five * b02, a11 + b11, five * a20 + b20}});
    out.push_back({5, {a11 + b11, a20 + b02, a02, b20}});
    out.push_back({6, {b20 - b02, a02 + b02, a11 + b11, a20 + b02}});
    return out;
}

bool any_case_satisfied(const AplicaParams& p) {
    for (const auto& c : eval_case_conditions(p))
        if (c.satisfied()) return true;
    return false;
}

Rational RationalSampler::small() {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 3);
    return Rational(num(rng_), den(rng_));
}

Rational RationalSampler::small_nonzero() {
    for (;;) {
        Rational r = small();
        if (!r.is_zero()) return r;
    }
}

AplicaParams sample_on_case(int case_id, RationalSampler& sampler) {
    AplicaParams p;
    switch (case_id) {
        case 1: {
            const Rational b02 = sampler.small_nonzero();
            p = {b02, -Rational(3) * b02, Rational(0), -Rational(2) * b02, -Rational(5) * b02,
                 b02};
            break;
        }
        case 2: {
            const Rational b02 = sampler.small_nonzero();
            p = {b02, -Rational(5) * b02, -Rational(2) * b02, Rational(0), -Rational(3) * b02,
                 b02};
            break;
        }
        case 3: {
            for (;;) {
                const Rational b20 = sampler.small_nonzero();
                const Rational b11 = sampler.small_nonzero();
                const Rational b02 = sampler.small_nonzero();
                const Rational denom = b20 + b11 + Rational(3) * b02;
                if (denom.is_zero()) continue;
                const Rational a20 = -(b20 + b11 + Rational(3) * b02) / Rational(2);
                const Rational a02 = -Rational(2) * b20 * b02 / denom;
                const Rational a11 =
                    (Rational(3) * b20 + Rational(3) * b11 + Rational(5) * b02) / Rational(2) -
                    a02;
                p = {a20, a11, a02, b20, b11, b02};
                break;
            }
            break;
        }
        case 4: {
            const Rational a20 = sampler.small_nonzero();
            const Rational b02 = sampler.small_nonzero();
            const Rational b11 = sampler.small_nonzero();
            p = {a20, -b11, -Rational(5) * b02, -Rational(5) * a20, b11, b02};
            break;
        }
        case 5: {
            const Rational b02 = sampler.small_nonzero();
            const Rational b11 = sampler.small_nonzero();
            p = {-b02, -b11, Rational(0), Rational(0), b11, b02};
            break;
        }
        case 6: {
            const Rational b02 = sampler.small_nonzero();
            const Rational b11 = sampler.small_nonzero();
            p = {-b02, -b11, -b02, b02, b11, b02};
            break;
        }
        default:
            throw std::invalid_argument("sample_on_case: case id must be in 1..6");
    }
    auto conditions = eval_case_conditions(p);
    if (!conditions[static_cast<std::size_t>(case_id - 1)].satisfied())
        throw InternalError("sample_on_case: constructed point misses its variety");
    return p;
}

AplicaParams sample_generic(RationalSampler& sampler) {
    for (int tries = 0; tries < 1000; ++tries) {
        AplicaParams p{sampler.small(), sampler.small(), sampler.small(),
                       sampler.small(), sampler.small(), sampler.small()};
        if (!any_case_satisfied(p)) return p;
    }
    throw InternalError("sample_generic: could not leave the case varieties");
}

SweepReport run_sweep(std::uint64_t seed, std::size_t count, const std::string& mode,
                      int max_degree) {
    if (count < 1) throw std::invalid_argument("run_sweep: count must be at least 1");
    int on_case = 0;
    if (mode.rfind("on-case-", 0) == 0) {
        on_case = std::stoi(mode.substr(8));
        if (on_case < 1 || on_case > 6)
            throw std::invalid_argument("run_sweep: mode must be on-case-1..6 or generic");
    } else if (mode != "generic") {
        throw std::invalid_argument("run_sweep: mode must be on-case-1..6 or generic");
    }

    SweepReport report;
    report.seed = seed;
    report.mode = mode;
    report.max_degree = max_degree;
    RationalSampler sampler(seed);
    for (std::size_t i = 0; i < count; ++i) {
        SweepSample sample;
        sample.index = i;
        sample.params = on_case ? sample_on_case(on_case, sampler) : sample_generic(sampler);
        for (const auto& c : eval_case_conditions(sample.params))
            if (c.satisfied()) sample.cases_satisfied.push_back(c.case_id);

        ClassificationVerdict verdict = classify(aplica_field(sample.params), max_degree);
        sample.integrable = verdict.integrable;
        if (verdict.obstruction) sample.obstruction_degree = verdict.obstruction->degree;
        sample.oracle_agrees = verdict.integrable == !sample.cases_satisfied.empty();

        if (sample.integrable)
            ++report.integrable_count;
        else
            ++report.obstructed_count;
        if (!sample.oracle_agrees) ++report.disagreement_count;
        report.samples.push_back(std::move(sample));
    }
    return report;
}

}  // namespace lvint
