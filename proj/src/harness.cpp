#include "monogamy/harness.hpp"

#include "monogamy/measures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>

namespace monogamy {

void GridSpec::validate() const {
    if (!(step > 0.0)) throw std::invalid_argument("grid step must be positive");
    if (!(min <= max)) throw std::invalid_argument("grid min must not exceed max");
}

long GridSpec::points() const {
    validate();
    return static_cast<long>(std::floor((max - min) / step + 1e-9)) + 1;
}

void CampaignConfig::validate() const {
    beta_grid.validate();
    k_grid.validate();
    if (sample_count < 1) throw std::invalid_argument("sample count must be at least 1");
    if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
}

MeasureKind measure_from_name(const std::string& name) {
    if (name == "concurrence") return MeasureKind::kConcurrence;
    if (name == "negativity") return MeasureKind::kNegativity;
    throw std::invalid_argument("unknown measure: " + name);
}

Figure figure_from_name(const std::string& name) {
    if (name == "fig1") return Figure::kFig1;
    if (name == "fig2") return Figure::kFig2;
    throw std::invalid_argument("unknown figure id: " + name);
}

PureState sample_haar_pure(int n_qubits, std::mt19937_64& rng) {
    if (n_qubits < 2 || n_qubits > 5)
        throw std::invalid_argument("supported sizes are 2 to 5 qubits");
    ComplexVector amps(1L << n_qubits);
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        double re = gaussian(rng);
        double im = gaussian(rng);
        amps(i) = Complex(re, im);
    }
    amps /= amps.norm();
    return PureState(n_qubits, std::move(amps));
}

EntanglementProfile profile_three_qubit(const PureState& psi, MeasureKind kind) {
    if (psi.num_qubits != 3) throw std::invalid_argument("profiles require a 3-qubit state");
    ComplexMatrix rho_ab = reduced_density(psi, {0, 1});
    ComplexMatrix rho_ac = reduced_density(psi, {0, 2});
    Bipartition cut{{0}};
    EntanglementProfile profile;
    if (kind == MeasureKind::kConcurrence) {
        profile.pairwise = {concurrence_two_qubit(rho_ab), concurrence_two_qubit(rho_ac)};
        profile.tails = {concurrence_pure(psi, cut), profile.pairwise[1]};
    } else {
        profile.pairwise = {cren_two_qubit(rho_ab), cren_two_qubit(rho_ac)};
        profile.tails = {negativity_pure(psi, cut), profile.pairwise[1]};
    }
    profile.from_state = true;
    return profile;
}

int resolve_thread_count(int override_count) {
    if (override_count > 0) return override_count;
    if (const char* env = std::getenv("MONOGAMY_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1 || v > 4096)
            throw std::invalid_argument("MONOGAMY_THREADS must be a positive integer");
        return static_cast<int>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct SampleOutcome {
    long checked = 0;
    long violations = 0;
    double min_slack = kInf;
    std::vector<std::pair<std::string, double>> worst_inputs;
};

void fold_point(SampleOutcome& o, double slack, double tolerance,
                std::vector<std::pair<std::string, double>> inputs) {
    ++o.checked;
    if (slack < -tolerance) ++o.violations;
    if (slack < o.min_slack) {
        o.min_slack = slack;
        o.worst_inputs = std::move(inputs);
    }
}

// Evaluates eval_sample(i) for every sample index, sharded across workers;
// the merge runs in index order, so the result is independent of the worker
// count. Each evaluator derives its own PRNG stream from (seed, index).
template <typename Fn>
CampaignResult run_samples(const CampaignConfig& cfg, Fn&& eval_sample) {
    cfg.validate();
    const long n = cfg.sample_count;
    std::vector<SampleOutcome> outcomes(static_cast<std::size_t>(n));

    const int workers =
        static_cast<int>(std::min<long>(resolve_thread_count(), n));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<long> error_index(static_cast<std::size_t>(workers), -1);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        const long begin = n * w / workers;
        const long end = n * (w + 1) / workers;
        pool.emplace_back([&, w, begin, end] {
            for (long i = begin; i < end; ++i) {
                try {
                    outcomes[static_cast<std::size_t>(i)] = eval_sample(i);
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                    error_index[static_cast<std::size_t>(w)] = i;
                    return;
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();

    long first_error = -1;
    std::exception_ptr to_throw;
    for (int w = 0; w < workers; ++w) {
        if (errors[static_cast<std::size_t>(w)] &&
            (first_error < 0 || error_index[static_cast<std::size_t>(w)] < first_error)) {
            first_error = error_index[static_cast<std::size_t>(w)];
            to_throw = errors[static_cast<std::size_t>(w)];
        }
    }
    if (to_throw) std::rethrow_exception(to_throw);

    CampaignResult result;
    result.min_slack = kInf;
    for (long i = 0; i < n; ++i) {
        SampleOutcome& o = outcomes[static_cast<std::size_t>(i)];
        result.checked += o.checked;
        result.violations += o.violations;
        if (o.checked > 0 && o.min_slack < result.min_slack) {
            result.min_slack = o.min_slack;
            result.worst_case = WorstCase{i, o.min_slack, std::move(o.worst_inputs)};
        }
    }
    if (result.checked == 0) result.min_slack = 0.0;
    return result;
}

std::vector<std::pair<std::string, double>> amplitude_inputs(const PureState& psi) {
    std::vector<std::pair<std::string, double>> inputs;
    inputs.reserve(static_cast<std::size_t>(2 * psi.amplitudes.size()));
    for (Eigen::Index i = 0; i < psi.amplitudes.size(); ++i) {
        std::string base = "amp" + std::to_string(i);
        inputs.emplace_back(base + "_re", psi.amplitudes(i).real());
        inputs.emplace_back(base + "_im", psi.amplitudes(i).imag());
    }
    return inputs;
}

std::vector<std::pair<std::string, double>> gsd_inputs(const SchmidtParams& p, double beta,
                                                       double k, double check) {
    return {{"lambda0", p.lambda[0]}, {"lambda1", p.lambda[1]}, {"lambda2", p.lambda[2]},
            {"lambda3", p.lambda[3]}, {"lambda4", p.lambda[4]}, {"phi", p.phi},
            {"beta", beta},           {"k", k},                 {"check", check}};
}

}  // namespace

CampaignResult run_ckw_campaign(const CampaignConfig& cfg) {
    return run_samples(cfg, [&cfg](long i) {
        std::mt19937_64 rng = derive_stream(cfg.seed, static_cast<std::uint64_t>(i));
        PureState psi = sample_haar_pure(3, rng);
        EntanglementProfile p = profile_three_qubit(psi, MeasureKind::kConcurrence);
        double slack = p.tails[0] * p.tails[0] - p.pairwise[0] * p.pairwise[0] -
                       p.pairwise[1] * p.pairwise[1];
        SampleOutcome o;
        fold_point(o, slack, cfg.tolerance, amplitude_inputs(psi));
        return o;
    });
}

CampaignResult run_lemma_scan(const CampaignConfig& cfg) {
    cfg.validate();
    if (!cfg.exploratory && cfg.beta_grid.min < 2.0)
        throw std::invalid_argument("scan requires x >= 2 outside exploratory mode");
    if (cfg.k_grid.min <= 0.0 || cfg.k_grid.max > 1.0)
        throw std::invalid_argument("scan requires k in (0, 1]");

    CampaignResult result;
    result.min_slack = kInf;
    long flat = 0;
    for (long xi = 0; xi < cfg.beta_grid.points(); ++xi) {
        double x = cfg.beta_grid.value(xi);
        for (long ki = 0; ki < cfg.k_grid.points(); ++ki) {
            double k = cfg.k_grid.value(ki);
            for (int j = 0; j <= 100; ++j) {
                double t = (static_cast<double>(j) / 100.0) * k;  // j=100 lands on k exactly
                double gap = cfg.exploratory ? lemma1_gap_unchecked(t, k, x)
                                             : lemma1_gap(t, k, x);
                ++result.checked;
                if (gap < -cfg.tolerance) ++result.violations;
                if (gap < result.min_slack) {
                    result.min_slack = gap;
                    result.worst_case = WorstCase{flat, gap, {{"t", t}, {"k", k}, {"x", x}}};
                }
                ++flat;
            }
        }
    }
    return result;
}

CampaignResult run_bound_validity(const CampaignConfig& cfg, BoundFamily family) {
    const double min_beta = family_min_beta(family);
    return run_samples(cfg, [&cfg, family, min_beta](long i) {
        std::mt19937_64 rng = derive_stream(cfg.seed, static_cast<std::uint64_t>(i));
        SchmidtParams params = sample_gsd_params(rng);
        EntanglementProfile p = profile_three_qubit(make_gsd_state(params),
                                                    MeasureKind::kConcurrence);
        double truth = p.tails[0];
        SampleOutcome o;
        for (long bi = 0; bi < cfg.beta_grid.points(); ++bi) {
            double beta = cfg.beta_grid.value(bi);
            if (beta < min_beta) continue;
            for (long ki = 0; ki < cfg.k_grid.points(); ++ki) {
                double k = cfg.k_grid.value(ki);
                BoundSpec spec{family, beta, k, 1, false};
                BoundReport rep = tripartite_family(p.pairwise[0], p.pairwise[1], spec);
                if (!rep.conditions_ok) continue;
                double slack = std::pow(truth, beta) - rep.value;
                fold_point(o, slack, cfg.tolerance, gsd_inputs(params, beta, k, 0.0));
            }
        }
        return o;
    });
}

CampaignResult run_dominance(const CampaignConfig& cfg) {
    return run_samples(cfg, [&cfg](long i) {
        std::mt19937_64 rng = derive_stream(cfg.seed, static_cast<std::uint64_t>(i));
        SchmidtParams params = sample_gsd_params(rng);
        EntanglementProfile p = profile_three_qubit(make_gsd_state(params),
                                                    MeasureKind::kConcurrence);
        double e1 = p.pairwise[0];
        double e2 = p.pairwise[1];
        SampleOutcome o;
        for (long bi = 0; bi < cfg.beta_grid.points(); ++bi) {
            double beta = cfg.beta_grid.value(bi);
            if (beta < 4.0) continue;  // the chain of comparisons involves TAO/NEW
            for (long ki = 0; ki < cfg.k_grid.points(); ++ki) {
                double k = cfg.k_grid.value(ki);
                BoundReport rep_new = tripartite_new(e1, e2, k, beta);
                BoundReport rep_tao =
                    tripartite_family(e1, e2, BoundSpec{BoundFamily::TAO, beta, k, 1, false});
                BoundReport rep_fei =
                    tripartite_family(e1, e2, BoundSpec{BoundFamily::FEI, beta, k, 1, false});
                BoundReport rep_ylm =
                    tripartite_family(e1, e2, BoundSpec{BoundFamily::YLM, beta, k, 1, false});
                BoundReport rep_pow = tripartite_family(
                    e1, e2, BoundSpec{BoundFamily::POWER_SUM, beta, k, 1, false});
                if (rep_new.conditions_ok) {
                    fold_point(o, rep_new.value - rep_tao.value, cfg.tolerance,
                               gsd_inputs(params, beta, k, 1.0));
                    fold_point(o, rep_new.value - rep_ylm.value, cfg.tolerance,
                               gsd_inputs(params, beta, k, 2.0));
                }
                if (rep_tao.conditions_ok) {
                    fold_point(o, rep_tao.value - rep_fei.value, cfg.tolerance,
                               gsd_inputs(params, beta, k, 3.0));
                    fold_point(o, rep_fei.value - rep_pow.value, cfg.tolerance,
                               gsd_inputs(params, beta, k, 4.0));
                    BoundReport collapsed = tripartite_new(e1, e2, 1.0, beta);
                    fold_point(o, -std::abs(collapsed.value - rep_tao.value), cfg.tolerance,
                               gsd_inputs(params, beta, k, 5.0));
                }
            }
        }
        return o;
    });
}

FigureTable bound_table(double e_ab, double e_ac, double truth, double k,
                        const GridSpec& beta_grid) {
    beta_grid.validate();
    if (beta_grid.min < 4.0)
        throw std::invalid_argument("bound tables start at beta = 4");
    if (k <= 0.0 || k > 1.0) throw std::domain_error("k must lie in (0, 1]");

    FigureTable table;
    table.rows.reserve(static_cast<std::size_t>(beta_grid.points()));
    for (long bi = 0; bi < beta_grid.points(); ++bi) {
        double beta = beta_grid.value(bi);
        double ylm =
            tripartite_family(e_ab, e_ac, BoundSpec{BoundFamily::YLM, beta, k, 1, false}).value;
        double fei =
            tripartite_family(e_ab, e_ac, BoundSpec{BoundFamily::FEI, beta, k, 1, false}).value;
        double tao =
            tripartite_family(e_ab, e_ac, BoundSpec{BoundFamily::TAO, beta, k, 1, false}).value;
        double neu = tripartite_new(e_ab, e_ac, k, beta).value;
        table.rows.push_back({beta, ylm, fei, tao, neu, std::pow(truth, beta)});
    }
    return table;
}

FigureTable reproduce_figure(Figure which, double k, const GridSpec& beta_grid) {
    if (which == Figure::kFig1)
        return bound_table(0.5, std::sqrt(0.125), std::sqrt(0.5), k, beta_grid);
    return bound_table(4.0 / 9.0, 2.0 * std::sqrt(3.0) / 9.0, 2.0 * std::sqrt(10.0) / 9.0, k,
                       beta_grid);
}

}  // namespace monogamy
