#pragma once

#include "monogamy/bounds.hpp"
#include "monogamy/gsd.hpp"
#include "monogamy/rng.hpp"
#include "monogamy/states.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace monogamy {

// Uniform grid min, min+step, ..., capped at max (inclusive within rounding).
struct GridSpec {
    double min = 0.0;
    double max = 0.0;
    double step = 1.0;

    void validate() const;
    long points() const;
    double value(long i) const { return min + static_cast<double>(i) * step; }
};

struct CampaignConfig {
    std::uint64_t seed = 1;
    long sample_count = 1000;
    GridSpec beta_grid{4.0, 12.0, 0.05};
    GridSpec k_grid{0.2, 1.0, 0.2};
    double tolerance = 1e-9;
    // Allows probing outside the theorem hypotheses (e.g. x < 2 in the scalar
    // scan); results are reported but nothing is asserted by callers.
    bool exploratory = false;

    void validate() const;
};

// Replayable record of the weakest observation: the flat sample index and the
// named inputs (state parameters and grid point) that produced it.
struct WorstCase {
    long sample_index = -1;
    double slack = 0.0;
    std::vector<std::pair<std::string, double>> inputs;
};

struct CampaignResult {
    long checked = 0;
    long violations = 0;
    double min_slack = 0.0;
    WorstCase worst_case;
};

enum class MeasureKind { kConcurrence, kNegativity };
enum class Figure { kFig1, kFig2 };

MeasureKind measure_from_name(const std::string& name);
Figure figure_from_name(const std::string& name);

// Columns: beta, ylm, fei, tao, new, truth.
struct FigureTable {
    std::vector<std::array<double, 6>> rows;
};

// Haar-uniform pure state: i.i.d. complex standard normal amplitudes,
// normalized. Supports 2 to 5 qubits.
PureState sample_haar_pure(int n_qubits, std::mt19937_64& rng);

// Pairwise and total measures of a 3-qubit pure state as a profile
// (pairwise = {AB, AC}, tails = {A|BC, AC}).
EntanglementProfile profile_three_qubit(const PureState& psi, MeasureKind kind);

// Worker count: explicit override, else MONOGAMY_THREADS, else hardware.
int resolve_thread_count(int override_count = 0);

// slack = C^2_{A|BC} - C^2_{AB} - C^2_{AC} over Haar 3-qubit samples.
CampaignResult run_ckw_campaign(const CampaignConfig& cfg);

// Scalar-inequality scan: gap over x in beta_grid, k in k_grid and 101 values
// of t per k (t_j = (j/100) * k, hitting both endpoints exactly).
CampaignResult run_lemma_scan(const CampaignConfig& cfg);

// slack = truth^beta - bound over random Schmidt-form states and the (beta, k)
// grid, counting only grid points where the family's conditions hold.
CampaignResult run_bound_validity(const CampaignConfig& cfg, BoundFamily family);

// Tightness ordering NEW >= TAO, NEW >= YLM, TAO >= FEI, FEI >= POWER_SUM on
// condition-satisfying cases, plus the NEW(k=1) = TAO collapse.
CampaignResult run_dominance(const CampaignConfig& cfg);

// Bound curves (ylm, fei, tao, new, truth^beta) for an explicit measure
// triple over a beta grid.
FigureTable bound_table(double e_ab, double e_ac, double truth, double k,
                        const GridSpec& beta_grid);

// Bound curves for the two pinned worked examples: concurrence values
// (1/2, 1/(2 sqrt 2); sqrt 2/2) for the first figure, negativity values
// (4/9, 2 sqrt 3/9; 2 sqrt 10/9) for the second.
FigureTable reproduce_figure(Figure which, double k, const GridSpec& beta_grid);

}  // namespace monogamy
