#pragma once

#include <string>
#include <vector>

namespace monogamy {

// Families of lower bounds on truth^beta across the A|B1...B_{N-1} cut, in
// historical order; each one tightens the previous under its conditions.
enum class BoundFamily { POWER_SUM, HALF_BETA, FEI, YLM, TAO, NEW };

std::string family_name(BoundFamily family);
BoundFamily family_from_name(const std::string& name);
// Smallest exponent the family's inequality is stated for.
double family_min_beta(BoundFamily family);

// Measure values entering a chain bound: pairwise[i] = e_{i+1} is the measure
// of the pair A|B_{i+1}; tails[i] = t_{i+1} is the measure of the nested cut
// A|B_{i+1}...B_{N-1}. tails.front() is the total, and the last tail equals
// the last pairwise value (that cut is itself a pair).
struct EntanglementProfile {
    std::vector<double> pairwise;
    std::vector<double> tails;
    bool from_state = false;

    // Number of parties N (side A plus N-1 partners).
    int parties() const { return static_cast<int>(pairwise.size()) + 1; }
    void validate() const;
};

struct BoundSpec {
    BoundFamily family = BoundFamily::NEW;
    double beta = 4.0;
    double k = 1.0;
    int m = 1;
    // When set, drop the leading e_1^beta term from NEW/TAO chains (the
    // published display omits it; the proof chain produces it).
    bool literal_chain = false;

    void validate(int parties) const;
};

struct BoundReport {
    double value = 0.0;
    // Multiplier of e_i^beta for each pairwise entry, in profile order.
    std::vector<double> coefficients;
    bool conditions_ok = true;
    // Signed slack per chain step i=1..N-2: head steps (i <= m) report
    // kappa*e_i^2 - t_{i+1}^2, tail steps report kappa*t_{i+1}^2 - e_i^2,
    // where kappa is k for the k-scaled families and 1 otherwise.
    std::vector<double> condition_details;
    BoundFamily family = BoundFamily::NEW;
    double beta = 4.0;
    double k = 1.0;
    int m = 1;
};

struct ConditionReport {
    // head_slack[i] = k*e_{i+1}^2 - t_{i+2}^2 and tail_slack[i] =
    // k*t_{i+2}^2 - e_{i+1}^2 for step i+1 (one entry per step 1..N-2).
    std::vector<double> head_slack;
    std::vector<double> tail_slack;
    std::vector<int> feasible_m;
    bool conditions_ok = false;
    int m = 0;
};

// Comparisons of squared measures accept this much rounding slack.
inline constexpr double kConditionTol = 1e-12;

// (1+t)^x - 1 - [((1+k)^x - 1)/k^x + k^x - t^x] * t^x, nonnegative on the
// stated domain. The checked form enforces 0 < k <= 1, 0 <= t <= k, x >= 2.
double lemma1_gap(double t, double k, double x);
double lemma1_gap_unchecked(double t, double k, double x);

// M(k, beta) = ((1+k)^{beta/2} - 1)/k^{beta/2} + k^{beta/2}; >= 2^{beta/2}
// with equality at k = 1.
double coefficient_M(double k, double beta);

// Tripartite bound e_ab^beta + [M(k,beta) - (e_ac/e_ab)^beta] e_ac^beta,
// certified when e_ac^2 <= k e_ab^2.
BoundReport tripartite_new(double e_ab, double e_ac, double k, double beta);

// The N=3 specialization of any family.
BoundReport tripartite_family(double e_ab, double e_ac, const BoundSpec& spec);

// Chain bound with M-based step coefficients: head steps i=1..m multiply in
// M_i = M - (t_{i+1}/e_i)^beta, tail steps j=m+1..N-2 contribute
// Q_j = M - (e_j/t_{j+1})^beta. The value follows the proof chain (leading
// e_1^beta included) unless spec.literal_chain drops it.
BoundReport chain_new(const EntanglementProfile& profile, const BoundSpec& spec);

// Published predecessor chains: POWER_SUM, the geometric-weight families
// (HALF_BETA, FEI, YLM), and TAO (the M -> 2^{beta/2} specialization).
BoundReport chain_prior(const EntanglementProfile& profile, const BoundSpec& spec);

// Signed ordering slacks for every chain step plus the set of split indices m
// whose head/tail conditions all hold, using k-scaled squared comparisons.
ConditionReport check_conditions(const EntanglementProfile& profile, double k, int m);

}  // namespace monogamy
