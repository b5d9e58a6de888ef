#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monogamy/gsd.hpp"
#include "monogamy/measures.hpp"
#include "monogamy/rng.hpp"

#include <cmath>

using namespace monogamy;

namespace {

GsdMeasures numeric_measures(const PureState& psi) {
    GsdMeasures m;
    m.c_ab = concurrence_two_qubit(reduced_density(psi, {0, 1}));
    m.c_ac = concurrence_two_qubit(reduced_density(psi, {0, 2}));
    m.c_a_bc = concurrence_pure(psi, Bipartition{{0}});
    return m;
}

}  // namespace

TEST_CASE("amplitude placement") {
    SchmidtParams p{{0.5, 0.0, std::sqrt(0.5), 0.5, 0.0}, 0.0};
    PureState psi = make_gsd_state(p);
    REQUIRE(psi.num_qubits == 3);
    // lambda0 |000>, lambda1 e^{i phi} |100>, lambda2 |110>, lambda3 |101>, lambda4 |111>
    CHECK(psi.amplitudes(0) == Complex(0.5));
    CHECK(psi.amplitudes(4) == Complex(0.0));
    CHECK(psi.amplitudes(6).real() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(psi.amplitudes(5) == Complex(0.5));
    CHECK(psi.amplitudes(7) == Complex(0.0));
    CHECK(psi.amplitudes(1) == Complex(0.0));
    CHECK(psi.amplitudes(2) == Complex(0.0));
    CHECK(psi.amplitudes(3) == Complex(0.0));
}

TEST_CASE("phase lands on the lambda1 amplitude") {
    SchmidtParams p{{0.6, 0.8, 0.0, 0.0, 0.0}, 1.25};
    PureState psi = make_gsd_state(p);
    CHECK(psi.amplitudes(4).real() == doctest::Approx(0.8 * std::cos(1.25)).epsilon(1e-15));
    CHECK(psi.amplitudes(4).imag() == doctest::Approx(0.8 * std::sin(1.25)).epsilon(1e-15));
}

TEST_CASE("degenerate family member is a product state") {
    SchmidtParams p{{1.0, 0.0, 0.0, 0.0, 0.0}, 0.0};
    PureState psi = make_gsd_state(p);
    CHECK(psi.amplitudes(0) == Complex(1.0));
    GsdMeasures analytic = gsd_analytic_measures(p);
    CHECK(analytic.c_ab == 0.0);
    CHECK(analytic.c_ac == 0.0);
    CHECK(analytic.c_a_bc == 0.0);
    GsdMeasures numeric = numeric_measures(psi);
    CHECK(numeric.c_ab == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(numeric.c_ac == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(numeric.c_a_bc == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("analytic formulas match the numeric pipeline on random parameters") {
    std::mt19937_64 rng = derive_stream(99, 0);
    for (int rep = 0; rep < 1000; ++rep) {
        SchmidtParams p = sample_gsd_params(rng);
        PureState psi = make_gsd_state(p);
        GsdMeasures analytic = gsd_analytic_measures(p);
        GsdMeasures numeric = numeric_measures(psi);
        CHECK(numeric.c_ab == doctest::Approx(analytic.c_ab).epsilon(1e-9));
        CHECK(numeric.c_ac == doctest::Approx(analytic.c_ac).epsilon(1e-9));
        CHECK(numeric.c_a_bc == doctest::Approx(analytic.c_a_bc).epsilon(1e-10));
    }
}

TEST_CASE("measures do not depend on the relative phase") {
    SchmidtParams base{{0.4, 0.3, 0.5, 0.6, std::sqrt(1.0 - 0.16 - 0.09 - 0.25 - 0.36)}, 0.0};
    GsdMeasures ref = numeric_measures(make_gsd_state(base));
    for (int i = 1; i <= 7; ++i) {
        SchmidtParams p = base;
        p.phi = i * 0.7;
        GsdMeasures m = numeric_measures(make_gsd_state(p));
        CHECK(m.c_ab == doctest::Approx(ref.c_ab).epsilon(1e-10));
        CHECK(m.c_ac == doctest::Approx(ref.c_ac).epsilon(1e-10));
        CHECK(m.c_a_bc == doctest::Approx(ref.c_a_bc).epsilon(1e-10));
    }
}

TEST_CASE("squared-concurrence slack is exactly 4 lambda0^2 lambda4^2") {
    std::mt19937_64 rng = derive_stream(99, 1);
    for (int rep = 0; rep < 200; ++rep) {
        SchmidtParams p = sample_gsd_params(rng);
        GsdMeasures m = gsd_analytic_measures(p);
        double slack = m.c_a_bc * m.c_a_bc - m.c_ab * m.c_ab - m.c_ac * m.c_ac;
        double expected = 4.0 * p.lambda[0] * p.lambda[0] * p.lambda[4] * p.lambda[4];
        CHECK(slack == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("conditioned sampler respects the requested ratio") {
    std::mt19937_64 rng = derive_stream(99, 2);
    for (int rep = 0; rep < 200; ++rep) {
        SchmidtParams p = sample_gsd_params_conditioned(rng, 0.5);
        GsdMeasures m = gsd_analytic_measures(p);
        CHECK(m.c_ac * m.c_ac <= 0.5 * m.c_ab * m.c_ab + 1e-12);
    }
    CHECK_THROWS_AS(sample_gsd_params_conditioned(rng, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(sample_gsd_params_conditioned(rng, 1.5), std::invalid_argument);
    // An impossible ratio must exhaust the retry budget, not loop forever.
    CHECK_THROWS_AS(sample_gsd_params_conditioned(rng, 1e-300, 50), std::runtime_error);
}

TEST_CASE("random samples are valid parameter sets") {
    std::mt19937_64 rng = derive_stream(99, 3);
    for (int rep = 0; rep < 100; ++rep) {
        SchmidtParams p = sample_gsd_params(rng);
        CHECK_NOTHROW(p.validate());
        CHECK(p.phi >= 0.0);
        CHECK(p.phi < 2.0 * 3.14159265358979324);
    }
}

TEST_CASE("normalization is enforced") {
    SchmidtParams bad{{1.0, 1.0, 0.0, 0.0, 0.0}, 0.0};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    CHECK_THROWS_AS(make_gsd_state(bad), std::invalid_argument);
    SchmidtParams negative{{-0.5, 0.0, std::sqrt(0.75), 0.0, 0.0}, 0.0};
    CHECK_THROWS_AS(negative.validate(), std::invalid_argument);
}
