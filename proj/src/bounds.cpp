#include "monogamy/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace monogamy {

std::string family_name(BoundFamily family) {
    switch (family) {
        case BoundFamily::POWER_SUM: return "power_sum";
        case BoundFamily::HALF_BETA: return "half_beta";
        case BoundFamily::FEI: return "fei";
        case BoundFamily::YLM: return "ylm";
        case BoundFamily::TAO: return "tao";
        case BoundFamily::NEW: return "new";
    }
    throw std::invalid_argument("unknown bound family");
}

BoundFamily family_from_name(const std::string& name) {
    if (name == "power_sum") return BoundFamily::POWER_SUM;
    if (name == "half_beta") return BoundFamily::HALF_BETA;
    if (name == "fei") return BoundFamily::FEI;
    if (name == "ylm") return BoundFamily::YLM;
    if (name == "tao") return BoundFamily::TAO;
    if (name == "new") return BoundFamily::NEW;
    throw std::invalid_argument("unknown bound family: " + name);
}

double family_min_beta(BoundFamily family) {
    return (family == BoundFamily::TAO || family == BoundFamily::NEW) ? 4.0 : 2.0;
}

void EntanglementProfile::validate() const {
    if (pairwise.size() < 2)
        throw std::invalid_argument("profile needs at least two pairwise entries");
    if (tails.size() != pairwise.size())
        throw std::invalid_argument("profile tails must match pairwise length");
    for (double e : pairwise)
        if (!(e >= 0.0)) throw std::invalid_argument("pairwise entries must be nonnegative");
    for (double t : tails)
        if (!(t >= 0.0)) throw std::invalid_argument("tail entries must be nonnegative");
    if (std::abs(tails.back() - pairwise.back()) > 1e-12)
        throw std::invalid_argument("last tail must equal the last pairwise entry");
    if (from_state) {
        double sum = 0.0;
        for (double e : pairwise) sum += e * e;
        if (tails.front() * tails.front() < sum - 1e-9)
            throw std::invalid_argument("state-derived profile violates the aggregate relation");
    }
}

void BoundSpec::validate(int parties) const {
    if (beta < family_min_beta(family))
        throw std::domain_error("beta is below the family minimum");
    if (family == BoundFamily::YLM || family == BoundFamily::NEW) {
        if (k <= 0.0 || k > 1.0) throw std::domain_error("k must lie in (0, 1]");
    }
    if (m < 0 || m > parties - 2)
        throw std::invalid_argument("split index m out of range for profile");
}

double lemma1_gap_unchecked(double t, double k, double x) {
    double coeff = (std::pow(1.0 + k, x) - 1.0) / std::pow(k, x) + std::pow(k, x) - std::pow(t, x);
    return std::pow(1.0 + t, x) - 1.0 - coeff * std::pow(t, x);
}

double lemma1_gap(double t, double k, double x) {
    if (k <= 0.0 || k > 1.0) throw std::domain_error("k must lie in (0, 1]");
    if (t < 0.0 || t > k) throw std::domain_error("t must lie in [0, k]");
    if (x < 2.0) throw std::domain_error("x must be at least 2");
    return lemma1_gap_unchecked(t, k, x);
}

double coefficient_M(double k, double beta) {
    if (k <= 0.0 || k > 1.0) throw std::domain_error("k must lie in (0, 1]");
    if (beta < 4.0) throw std::domain_error("beta must be at least 4");
    double half = beta / 2.0;
    double kh = std::pow(k, half);
    return (std::pow(1.0 + k, half) - 1.0) / kh + kh;
}

namespace {

bool is_k_scaled(BoundFamily family) {
    return family == BoundFamily::YLM || family == BoundFamily::NEW;
}

// Signed ordering slacks for chain steps 1..N-2 under the given split:
// head steps compare kappa*e_i^2 against t_{i+1}^2, tail steps the reverse.
std::vector<double> step_slacks(const EntanglementProfile& p, double kappa, int m) {
    const int steps = static_cast<int>(p.pairwise.size()) - 1;
    std::vector<double> slacks(static_cast<std::size_t>(steps));
    for (int i = 1; i <= steps; ++i) {
        double e = p.pairwise[static_cast<std::size_t>(i - 1)];
        double t = p.tails[static_cast<std::size_t>(i)];
        slacks[static_cast<std::size_t>(i - 1)] =
            (i <= m) ? kappa * e * e - t * t : kappa * t * t - e * e;
    }
    return slacks;
}

bool all_nonnegative(const std::vector<double>& slacks) {
    for (double s : slacks)
        if (s < -kConditionTol) return false;
    return true;
}

double assemble_value(const std::vector<double>& coeffs, const std::vector<double>& pairwise,
                      double beta) {
    double value = 0.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        value += coeffs[i] * std::pow(pairwise[i], beta);
    return value;
}

// Coefficients of the M-based chain (the TAO structure, and the tighter one
// when big_m carries the k-dependent value). Head steps multiply the running
// product by M_i = big_m - (t_{i+1}/e_i)^beta; tail steps contribute
// Q_j = big_m - (e_j/t_{j+1})^beta once. A 0/0 ratio zeroes everything the
// step would have multiplied, matching the step-by-step recursion.
std::vector<double> m_chain_coefficients(const EntanglementProfile& p, double big_m, double beta,
                                         int m, bool literal) {
    const std::size_t terms = p.pairwise.size();
    std::vector<double> coeffs(terms, 0.0);
    if (m >= 1 && !literal) coeffs[0] = 1.0;
    if (m >= 1 && literal) coeffs[0] = 0.0;

    double product = 1.0;
    for (int i = 1; i <= m; ++i) {
        double e = p.pairwise[static_cast<std::size_t>(i - 1)];
        double t = p.tails[static_cast<std::size_t>(i)];
        if (e == 0.0) {
            if (t != 0.0)
                throw std::invalid_argument("infeasible chain: zero pairwise entry with nonzero tail");
            product = 0.0;
            break;  // nothing deeper can contribute
        }
        product *= big_m - std::pow(t / e, beta);
        if (i < m) coeffs[static_cast<std::size_t>(i)] = product;
    }

    const int steps = static_cast<int>(terms) - 1;
    for (int j = m + 1; j <= steps; ++j) {
        double e = p.pairwise[static_cast<std::size_t>(j - 1)];
        double t = p.tails[static_cast<std::size_t>(j)];
        if (t == 0.0) {
            if (e != 0.0)
                throw std::invalid_argument("infeasible chain: zero tail with nonzero pairwise entry");
            continue;  // term contributes nothing
        }
        coeffs[static_cast<std::size_t>(j - 1)] = product * (big_m - std::pow(e / t, beta));
    }
    coeffs[terms - 1] = product;
    return coeffs;
}

// Coefficients of the geometric-weight chains: w^{i-1} on the head, w^{m+1}
// on the middle block, w^m on the final entry.
std::vector<double> weighted_chain_coefficients(std::size_t terms, double w, int m) {
    std::vector<double> coeffs(terms, 0.0);
    for (int i = 1; i <= m; ++i)
        coeffs[static_cast<std::size_t>(i - 1)] = std::pow(w, static_cast<double>(i - 1));
    const int steps = static_cast<int>(terms) - 1;
    for (int j = m + 1; j <= steps; ++j)
        coeffs[static_cast<std::size_t>(j - 1)] = std::pow(w, static_cast<double>(m + 1));
    coeffs[terms - 1] = std::pow(w, static_cast<double>(m));
    return coeffs;
}

double geometric_weight(BoundFamily family, double beta, double k) {
    double half = beta / 2.0;
    switch (family) {
        case BoundFamily::HALF_BETA: return half;
        case BoundFamily::FEI: return std::pow(2.0, half) - 1.0;
        case BoundFamily::YLM: return (std::pow(1.0 + k, half) - 1.0) / std::pow(k, half);
        default: throw std::invalid_argument("family has no geometric weight");
    }
}

BoundReport finish_report(const EntanglementProfile& p, const BoundSpec& spec,
                          std::vector<double> coeffs, bool has_conditions) {
    BoundReport report;
    report.coefficients = std::move(coeffs);
    report.value = assemble_value(report.coefficients, p.pairwise, spec.beta);
    if (has_conditions) {
        double kappa = is_k_scaled(spec.family) ? spec.k : 1.0;
        report.condition_details = step_slacks(p, kappa, spec.m);
        report.conditions_ok = all_nonnegative(report.condition_details);
    }
    report.family = spec.family;
    report.beta = spec.beta;
    report.k = spec.k;
    report.m = spec.m;
    return report;
}

}  // namespace

BoundReport tripartite_new(double e_ab, double e_ac, double k, double beta) {
    EntanglementProfile p{{e_ab, e_ac}, {std::hypot(e_ab, e_ac), e_ac}, false};
    BoundSpec spec{BoundFamily::NEW, beta, k, 1, false};
    return chain_new(p, spec);
}

BoundReport tripartite_family(double e_ab, double e_ac, const BoundSpec& spec) {
    if (spec.family == BoundFamily::NEW) return tripartite_new(e_ab, e_ac, spec.k, spec.beta);
    EntanglementProfile p{{e_ab, e_ac}, {std::hypot(e_ab, e_ac), e_ac}, false};
    BoundSpec chain_spec = spec;
    chain_spec.m = 1;
    return chain_prior(p, chain_spec);
}

BoundReport chain_new(const EntanglementProfile& profile, const BoundSpec& spec) {
    profile.validate();
    spec.validate(profile.parties());
    if (spec.family != BoundFamily::NEW)
        throw std::invalid_argument("chain_new requires the NEW family");
    std::vector<double> coeffs = m_chain_coefficients(
        profile, coefficient_M(spec.k, spec.beta), spec.beta, spec.m, spec.literal_chain);
    return finish_report(profile, spec, std::move(coeffs), true);
}

BoundReport chain_prior(const EntanglementProfile& profile, const BoundSpec& spec) {
    profile.validate();
    spec.validate(profile.parties());
    switch (spec.family) {
        case BoundFamily::NEW:
            throw std::invalid_argument("chain_prior requires a published predecessor family");
        case BoundFamily::POWER_SUM: {
            std::vector<double> coeffs(profile.pairwise.size(), 1.0);
            return finish_report(profile, spec, std::move(coeffs), false);
        }
        case BoundFamily::TAO: {
            std::vector<double> coeffs = m_chain_coefficients(
                profile, std::pow(2.0, spec.beta / 2.0), spec.beta, spec.m, spec.literal_chain);
            return finish_report(profile, spec, std::move(coeffs), true);
        }
        default: {
            double w = geometric_weight(spec.family, spec.beta, spec.k);
            std::vector<double> coeffs = weighted_chain_coefficients(profile.pairwise.size(), w, spec.m);
            return finish_report(profile, spec, std::move(coeffs), true);
        }
    }
}

ConditionReport check_conditions(const EntanglementProfile& profile, double k, int m) {
    profile.validate();
    if (k <= 0.0 || k > 1.0) throw std::domain_error("k must lie in (0, 1]");
    const int steps = profile.parties() - 2;
    if (m < 0 || m > steps) throw std::invalid_argument("split index m out of range");

    ConditionReport report;
    report.m = m;
    report.head_slack = step_slacks(profile, k, steps);    // all steps as head
    report.tail_slack = step_slacks(profile, k, 0);        // all steps as tail
    for (int cand = 0; cand <= steps; ++cand) {
        bool ok = true;
        for (int i = 1; i <= steps; ++i) {
            double s = (i <= cand) ? report.head_slack[static_cast<std::size_t>(i - 1)]
                                   : report.tail_slack[static_cast<std::size_t>(i - 1)];
            if (s < -kConditionTol) ok = false;
        }
        if (ok) report.feasible_m.push_back(cand);
        if (cand == m) report.conditions_ok = ok;
    }
    return report;
}

}  // namespace monogamy
