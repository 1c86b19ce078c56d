#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lvint/analyzer.hpp"
#include "lvint/field.hpp"
#include "lvint/rational.hpp"

namespace lvint {

// Cubic perturbation parameters of the family
//   (x(3y - x), y(3x - y)) + (x(a20 x^2 + a11 xy + a02 y^2),
//                             y(b20 x^2 + b11 xy + b02 y^2)).
struct AplicaParams {
    Rational a20, a11, a02, b20, b11, b02;

    friend bool operator==(const AplicaParams&, const AplicaParams&) = default;
};

PlanarField aplica_field(const AplicaParams& p);

// "a20=1,b02=-1/2" style key-value list; unset keys default to zero.
AplicaParams parse_aplica_params(std::string_view kv);

// Exact residuals of the defining polynomials of one integrability case;
// the parameters lie on the case variety iff every residual vanishes.
struct CaseConditions {
    int case_id = 0;
    std::vector<Rational> residuals;

    bool satisfied() const {
        for (const auto& r : residuals)
            if (!r.is_zero()) return false;
        return true;
    }
};

// Residuals of all six case varieties. Each equality chain is read as "all
// listed expressions equal zero".
std::vector<CaseConditions> eval_case_conditions(const AplicaParams& p);

bool any_case_satisfied(const AplicaParams& p);

// Deterministic small-height rational sampler.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

    // Numerator in [-6, 6], denominator in {1, 2, 3}.
    Rational small();
    Rational small_nonzero();

private:
    std::mt19937_64 rng_;
};

// Exact point on the given case variety: the case constraints are solved
// symbolically for the dependent parameters, the free ones are drawn from
// the sampler.
AplicaParams sample_on_case(int case_id, RationalSampler& sampler);

// Point avoiding all six varieties.
AplicaParams sample_generic(RationalSampler& sampler);

struct SweepSample {
    std::size_t index = 0;
    AplicaParams params;
    std::vector<int> cases_satisfied;
    bool integrable = false;
    int obstruction_degree = -1;
    bool oracle_agrees = false;  // classifier verdict vs case-condition oracle
};

struct SweepReport {
    std::uint64_t seed = 0;
    std::string mode;
    int max_degree = 0;
    std::vector<SweepSample> samples;
    std::size_t integrable_count = 0;
    std::size_t obstructed_count = 0;
    std::size_t disagreement_count = 0;
};

// mode: "on-case-1" .. "on-case-6" or "generic".
SweepReport run_sweep(std::uint64_t seed, std::size_t count, const std::string& mode,
                      int max_degree);

}  // namespace lvint
