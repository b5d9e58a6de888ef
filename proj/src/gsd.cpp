#include "monogamy/gsd.hpp"

#include <cmath>
#include <stdexcept>

namespace monogamy {

void SchmidtParams::validate() const {
    double sum = 0.0;
    for (double l : lambda) {
        if (l < 0.0) throw std::invalid_argument("Schmidt coefficients must be nonnegative");
        sum += l * l;
    }
    if (std::abs(sum - 1.0) > kNormTol)
        throw std::invalid_argument("Schmidt coefficients are not normalized");
}

PureState make_gsd_state(const SchmidtParams& p) {
    p.validate();
    ComplexVector amps = ComplexVector::Zero(8);
    amps(0) = p.lambda[0];                                                   // |000>
    amps(4) = p.lambda[1] * Complex(std::cos(p.phi), std::sin(p.phi));       // |100>
    amps(6) = p.lambda[2];                                                   // |110>
    amps(5) = p.lambda[3];                                                   // |101>
    amps(7) = p.lambda[4];                                                   // |111>
    return PureState(3, std::move(amps));
}

GsdMeasures gsd_analytic_measures(const SchmidtParams& p) {
    p.validate();
    GsdMeasures m;
    m.c_ab = 2.0 * p.lambda[0] * p.lambda[2];
    m.c_ac = 2.0 * p.lambda[0] * p.lambda[3];
    m.c_a_bc = 2.0 * p.lambda[0] *
               std::sqrt(p.lambda[2] * p.lambda[2] + p.lambda[3] * p.lambda[3] +
                         p.lambda[4] * p.lambda[4]);
    return m;
}

SchmidtParams sample_gsd_params(std::mt19937_64& rng) {
    SchmidtParams p;
    double sum = 0.0;
    for (double& l : p.lambda) {
        l = std::abs(gaussian(rng));
        sum += l * l;
    }
    double norm = std::sqrt(sum);
    for (double& l : p.lambda) l /= norm;
    p.phi = uniform_unit(rng) * 6.283185307179586476925286766559;
    return p;
}

SchmidtParams sample_gsd_params_conditioned(std::mt19937_64& rng, double k, long max_retries) {
    if (k <= 0.0 || k > 1.0) throw std::invalid_argument("k must lie in (0, 1]");
    for (long attempt = 0; attempt < max_retries; ++attempt) {
        SchmidtParams p = sample_gsd_params(rng);
        GsdMeasures m = gsd_analytic_measures(p);
        if (m.c_ac * m.c_ac <= k * m.c_ab * m.c_ab) return p;
    }
    throw std::runtime_error("conditioned sampling exceeded the retry cap");
}

}  // namespace monogamy
