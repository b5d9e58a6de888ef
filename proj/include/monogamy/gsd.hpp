#pragma once

#include "monogamy/rng.hpp"
#include "monogamy/states.hpp"

#include <array>

namespace monogamy {

// Parameters of the three-qubit generalized Schmidt form
//   lambda0|000> + lambda1 e^{i phi}|100> + lambda2|110> + lambda3|101> + lambda4|111>.
// lambda2 multiplies |110> and lambda3 multiplies |101>; this pairing is what
// makes the closed forms below (C_AB from lambda2, C_AC from lambda3) hold.
struct SchmidtParams {
    std::array<double, 5> lambda{};
    double phi = 0.0;

    void validate() const;
};

struct GsdMeasures {
    double c_ab = 0.0;    // concurrence of the reduced AB pair
    double c_ac = 0.0;    // concurrence of the reduced AC pair
    double c_a_bc = 0.0;  // concurrence across the A|BC cut
};

// Build the normalized three-qubit state for the given parameters.
PureState make_gsd_state(const SchmidtParams& p);

// Closed forms: C_AB = 2 l0 l2, C_AC = 2 l0 l3, C_A|BC = 2 l0 sqrt(l2^2+l3^2+l4^2).
// By the two-qubit identity these are also the CREN values of the pairs, and
// the A|BC value doubles as the CREN of the pure 2x4 cut.
GsdMeasures gsd_analytic_measures(const SchmidtParams& p);

// Draw lambda from normalized |N(0,1)| magnitudes, phi uniform in [0, 2pi).
SchmidtParams sample_gsd_params(std::mt19937_64& rng);

// Rejection-sample until c_ac^2 <= k * c_ab^2; throws after max_retries draws.
SchmidtParams sample_gsd_params_conditioned(std::mt19937_64& rng, double k,
                                            long max_retries = 100000);

}  // namespace monogamy
