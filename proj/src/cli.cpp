#include "monogamy/cli.hpp"

#include "monogamy/bounds.hpp"
#include "monogamy/gsd.hpp"
#include "monogamy/harness.hpp"
#include "monogamy/io.hpp"
#include "monogamy/measures.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace monogamy {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json json_numbers(const std::vector<double>& values) {
    ordered_json arr = ordered_json::array();
    for (double v : values) arr.push_back(rounded_number(v));
    return arr;
}

ordered_json json_grid(const GridSpec& grid) {
    return ordered_json{{"min", rounded_number(grid.min)},
                        {"max", rounded_number(grid.max)},
                        {"step", rounded_number(grid.step)}};
}

SchmidtParams parse_gsd(const std::string& text, double phi) {
    std::vector<double> values;
    std::string::size_type pos = 0;
    while (pos <= text.size()) {
        std::string::size_type comma = text.find(',', pos);
        std::string field = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(field, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("--gsd entries must be decimal numbers");
        }
        if (used != field.size())
            throw std::invalid_argument("--gsd entries must be decimal numbers");
        values.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (values.size() != 5)
        throw std::invalid_argument("--gsd needs exactly five comma-separated coefficients");

    double sum = 0.0;
    for (double v : values) {
        if (v < 0.0) throw std::invalid_argument("Schmidt coefficients must be nonnegative");
        sum += v * v;
    }
    if (std::abs(sum - 1.0) > 1e-6)
        throw std::invalid_argument("Schmidt coefficients are not normalized");

    SchmidtParams p;
    double scale = std::sqrt(sum);
    for (std::size_t i = 0; i < 5; ++i) p.lambda[i] = values[i] / scale;
    constexpr double two_pi = 6.283185307179586476925286766559;
    p.phi = std::fmod(phi, two_pi);
    if (p.phi < 0.0) p.phi += two_pi;
    return p;
}

struct StateArgs {
    std::string gsd;
    double phi = 0.0;
    std::string amplitudes_path;
};

struct ResolvedState {
    PureState psi;
    bool has_params = false;
    SchmidtParams params;
    std::string source;
};

void add_state_options(CLI::App* sub, StateArgs& s) {
    auto* gsd = sub->add_option(
        "--gsd", s.gsd,
        "Schmidt coefficients l0,l1,l2,l3,l4 (decimals; rescaled when within 1e-6 of unit norm)");
    sub->add_option("--phi", s.phi, "relative phase of the l1 term, radians (with --gsd)");
    auto* amp = sub->add_option("--amplitudes", s.amplitudes_path,
                                "file with one 're im' amplitude pair per line (3-qubit state)");
    gsd->excludes(amp);
    amp->excludes(gsd);
}

ResolvedState resolve_state(const StateArgs& s) {
    if (!s.gsd.empty()) {
        SchmidtParams p = parse_gsd(s.gsd, s.phi);
        return ResolvedState{make_gsd_state(p), true, p, "gsd"};
    }
    if (!s.amplitudes_path.empty()) {
        std::ifstream in(s.amplitudes_path);
        if (!in) throw std::invalid_argument("cannot open amplitude file: " + s.amplitudes_path);
        PureState psi = read_amplitudes(in);
        if (psi.num_qubits != 3)
            throw std::invalid_argument("amplitude state must have exactly 3 qubits");
        return ResolvedState{std::move(psi), false, {}, "amplitudes"};
    }
    throw std::invalid_argument("a state source is required: --gsd or --amplitudes");
}

void emit_text(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
    f << text;
}

ordered_json bound_json(const BoundReport& rep, bool literal) {
    ordered_json j;
    j["value"] = rounded_number(rep.value);
    j["conditions_ok"] = rep.conditions_ok;
    j["coefficients"] = json_numbers(rep.coefficients);
    j["condition_slacks"] = json_numbers(rep.condition_details);
    j["beta"] = rounded_number(rep.beta);
    j["k"] = rounded_number(rep.k);
    j["m"] = rep.m;
    if (rep.family == BoundFamily::NEW || rep.family == BoundFamily::TAO)
        j["literal_chain"] = literal;
    return j;
}

struct EvalArgs {
    StateArgs state;
    double beta = 4.0;
    double k = 1.0;
    std::string measure = "concurrence";
    std::vector<std::string> families;
    int m = -1;
    bool literal_chain = false;
};

int do_eval(const EvalArgs& a, bool families_given, std::ostream& out) {
    ResolvedState st = resolve_state(a.state);
    MeasureKind kind = measure_from_name(a.measure);
    EntanglementProfile profile = profile_three_qubit(st.psi, kind);
    int m_eff = a.m < 0 ? profile.parties() - 2 : a.m;

    std::vector<std::string> families = a.families;
    if (families.empty()) {
        for (const char* name : {"power_sum", "half_beta", "fei", "ylm", "tao", "new"}) {
            if (!families_given && a.beta < family_min_beta(family_from_name(name))) continue;
            families.push_back(name);
        }
    }

    ordered_json doc;
    doc["schema_version"] = "1";
    doc["command"] = "eval";
    doc["measure"] = a.measure;
    ordered_json state;
    state["source"] = st.source;
    if (st.has_params) {
        state["lambda"] = json_numbers({st.params.lambda[0], st.params.lambda[1],
                                        st.params.lambda[2], st.params.lambda[3],
                                        st.params.lambda[4]});
        state["phi"] = rounded_number(st.params.phi);
    } else {
        state["path"] = a.state.amplitudes_path;
        state["num_qubits"] = st.psi.num_qubits;
    }
    doc["state"] = state;

    ordered_json measures;
    if (st.has_params) {
        GsdMeasures g = gsd_analytic_measures(st.params);
        measures["analytic"] = ordered_json{{"ab", rounded_number(g.c_ab)},
                                            {"ac", rounded_number(g.c_ac)},
                                            {"total", rounded_number(g.c_a_bc)}};
    }
    measures["numeric"] = ordered_json{{"ab", rounded_number(profile.pairwise[0])},
                                       {"ac", rounded_number(profile.pairwise[1])},
                                       {"total", rounded_number(profile.tails[0])}};
    doc["measures"] = measures;
    doc["truth_power"] = rounded_number(std::pow(profile.tails[0], a.beta));

    ordered_json bounds;
    for (const std::string& name : families) {
        BoundFamily family = family_from_name(name);
        BoundSpec spec{family, a.beta, a.k, m_eff, a.literal_chain};
        BoundReport rep = family == BoundFamily::NEW ? chain_new(profile, spec)
                                                     : chain_prior(profile, spec);
        bounds[name] = bound_json(rep, a.literal_chain);
    }
    doc["bounds"] = bounds;

    out << doc.dump(2) << "\n";
    return 0;
}

struct SweepArgs {
    StateArgs state;
    std::string measure = "concurrence";
    double beta_min = 4.0;
    double beta_max = 12.0;
    double step = 0.05;
    double k = 0.8;
    std::string out_path;
};

int do_sweep(const SweepArgs& a, std::ostream& out) {
    ResolvedState st = resolve_state(a.state);
    EntanglementProfile profile = profile_three_qubit(st.psi, measure_from_name(a.measure));
    FigureTable table = bound_table(profile.pairwise[0], profile.pairwise[1], profile.tails[0],
                                    a.k, GridSpec{a.beta_min, a.beta_max, a.step});
    emit_text(figure_csv(table), a.out_path, out);
    return 0;
}

struct CampaignArgs {
    std::string kind;
    std::uint64_t seed = 1;
    long samples = 1000;
    double beta_min = 0.0, beta_max = 0.0, beta_step = 0.0;
    double k_min = 0.0, k_max = 0.0, k_step = 0.0;
    double tolerance = 0.0;
    std::string family = "new";
    bool exploratory = false;
    std::string out_path;
};

int do_campaign(const CampaignArgs& a, bool grids_given[6], bool tol_given, std::ostream& out) {
    CampaignConfig cfg;
    cfg.seed = a.seed;
    cfg.sample_count = a.samples;
    cfg.exploratory = a.exploratory;

    if (a.kind == "lemma") {
        cfg.beta_grid = GridSpec{2.0, 12.0, 0.1};
        cfg.k_grid = GridSpec{0.01, 1.0, 0.01};
        cfg.tolerance = 1e-12;
    } else if (a.kind == "ckw") {
        cfg.beta_grid = GridSpec{4.0, 8.0, 2.0};
        cfg.k_grid = GridSpec{0.2, 1.0, 0.2};
        cfg.tolerance = 1e-9;
    } else if (a.kind == "validity") {
        cfg.beta_grid = GridSpec{4.0, 8.0, 2.0};
        cfg.k_grid = GridSpec{0.2, 1.0, 0.2};
        cfg.tolerance = 1e-9;
    } else if (a.kind == "dominance") {
        cfg.beta_grid = GridSpec{4.0, 8.0, 2.0};
        cfg.k_grid = GridSpec{0.2, 1.0, 0.2};
        cfg.tolerance = 1e-12;
    } else {
        throw std::invalid_argument("unknown campaign kind: " + a.kind);
    }
    if (grids_given[0]) cfg.beta_grid.min = a.beta_min;
    if (grids_given[1]) cfg.beta_grid.max = a.beta_max;
    if (grids_given[2]) cfg.beta_grid.step = a.beta_step;
    if (grids_given[3]) cfg.k_grid.min = a.k_min;
    if (grids_given[4]) cfg.k_grid.max = a.k_max;
    if (grids_given[5]) cfg.k_grid.step = a.k_step;
    if (tol_given) cfg.tolerance = a.tolerance;

    CampaignResult result;
    if (a.kind == "ckw") result = run_ckw_campaign(cfg);
    else if (a.kind == "lemma") result = run_lemma_scan(cfg);
    else if (a.kind == "validity") result = run_bound_validity(cfg, family_from_name(a.family));
    else result = run_dominance(cfg);

    ordered_json doc;
    doc["schema_version"] = "1";
    doc["command"] = "campaign";
    doc["kind"] = a.kind;
    if (a.kind == "validity") doc["family"] = a.family;
    ordered_json config;
    config["seed"] = cfg.seed;
    config["samples"] = cfg.sample_count;
    config["beta_grid"] = json_grid(cfg.beta_grid);
    config["k_grid"] = json_grid(cfg.k_grid);
    config["tolerance"] = cfg.tolerance;
    config["exploratory"] = cfg.exploratory;
    doc["config"] = config;

    ordered_json res;
    res["checked"] = result.checked;
    res["violations"] = result.violations;
    res["min_slack"] = rounded_number(result.min_slack);
    ordered_json worst;
    worst["sample_index"] = result.worst_case.sample_index;
    worst["slack"] = rounded_number(result.worst_case.slack);
    ordered_json inputs;
    for (const auto& [name, value] : result.worst_case.inputs)
        inputs[name] = rounded_number(value);
    worst["inputs"] = inputs;
    res["worst_case"] = worst;
    doc["result"] = res;

    emit_text(doc.dump(2) + "\n", a.out_path, out);
    return result.violations > 0 ? 1 : 0;
}

struct ReproduceArgs {
    std::string figure;
    double k = 0.8;
    double beta_min = 4.0;
    double beta_max = 12.0;
    double step = 0.05;
    std::string out_path;
};

int do_reproduce(const ReproduceArgs& a, std::ostream& out) {
    FigureTable table = reproduce_figure(figure_from_name(a.figure), a.k,
                                         GridSpec{a.beta_min, a.beta_max, a.step});
    emit_text(figure_csv(table), a.out_path, out);
    return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"multiqubit entanglement monogamy bounds"};
    app.require_subcommand(1);

    EvalArgs eval_args;
    auto* eval_cmd = app.add_subcommand(
        "eval", "evaluate measures and every requested bound for one state");
    add_state_options(eval_cmd, eval_args.state);
    eval_cmd->add_option("--beta", eval_args.beta, "exponent beta")->capture_default_str();
    eval_cmd->add_option("--k", eval_args.k, "scale parameter k in (0,1]")->capture_default_str();
    eval_cmd->add_option("--measure", eval_args.measure, "concurrence or negativity")
        ->capture_default_str();
    auto* family_opt = eval_cmd->add_option(
        "--family", eval_args.families,
        "bound families to evaluate (default: every family valid at beta)");
    eval_cmd->add_option("--m", eval_args.m, "chain split index (default: N-2)");
    eval_cmd->add_flag("--literal-chain", eval_args.literal_chain,
                       "drop the leading pairwise term from the published chain display");

    SweepArgs sweep_args;
    auto* sweep_cmd =
        app.add_subcommand("sweep", "bound curves over a beta grid for one state (CSV)");
    add_state_options(sweep_cmd, sweep_args.state);
    sweep_cmd->add_option("--measure", sweep_args.measure, "concurrence or negativity")
        ->capture_default_str();
    sweep_cmd->add_option("--beta-min", sweep_args.beta_min, "grid start")->capture_default_str();
    sweep_cmd->add_option("--beta-max", sweep_args.beta_max, "grid end")->capture_default_str();
    sweep_cmd->add_option("--step", sweep_args.step, "grid step")->capture_default_str();
    sweep_cmd->add_option("--k", sweep_args.k, "scale parameter k in (0,1]")
        ->capture_default_str();
    sweep_cmd->add_option("--out", sweep_args.out_path, "write CSV to this file");

    CampaignArgs campaign_args;
    auto* campaign_cmd =
        app.add_subcommand("campaign", "randomized verification campaigns (JSON report)");
    campaign_cmd
        ->add_option("--kind", campaign_args.kind, "ckw, lemma, validity, or dominance")
        ->required();
    campaign_cmd->add_option("--seed", campaign_args.seed, "PRNG seed")->capture_default_str();
    campaign_cmd->add_option("--samples", campaign_args.samples, "sample count")
        ->capture_default_str();
    auto* bmin = campaign_cmd->add_option("--beta-min", campaign_args.beta_min, "beta/x grid start");
    auto* bmax = campaign_cmd->add_option("--beta-max", campaign_args.beta_max, "beta/x grid end");
    auto* bstep = campaign_cmd->add_option("--step", campaign_args.beta_step, "beta/x grid step");
    auto* kmin = campaign_cmd->add_option("--k-min", campaign_args.k_min, "k grid start");
    auto* kmax = campaign_cmd->add_option("--k-max", campaign_args.k_max, "k grid end");
    auto* kstep = campaign_cmd->add_option("--k-step", campaign_args.k_step, "k grid step");
    auto* tol = campaign_cmd->add_option("--tolerance", campaign_args.tolerance,
                                         "violation tolerance (default depends on kind)");
    campaign_cmd->add_option("--family", campaign_args.family, "bound family (validity)")
        ->capture_default_str();
    campaign_cmd->add_flag("--exploratory", campaign_args.exploratory,
                           "probe outside theorem hypotheses; report only");
    campaign_cmd->add_option("--out", campaign_args.out_path, "write JSON to this file");

    ReproduceArgs repro_args;
    auto* repro_cmd =
        app.add_subcommand("reproduce", "pinned worked-example bound curves (CSV)");
    repro_cmd->add_option("figure", repro_args.figure, "fig1 or fig2")->required();
    repro_cmd->add_option("--k", repro_args.k, "scale parameter k in (0,1]")
        ->capture_default_str();
    repro_cmd->add_option("--beta-min", repro_args.beta_min, "grid start")->capture_default_str();
    repro_cmd->add_option("--beta-max", repro_args.beta_max, "grid end")->capture_default_str();
    repro_cmd->add_option("--step", repro_args.step, "grid step")->capture_default_str();
    repro_cmd->add_option("--out", repro_args.out_path, "write CSV to this file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval_cmd->parsed()) return do_eval(eval_args, family_opt->count() > 0, out);
        if (sweep_cmd->parsed()) return do_sweep(sweep_args, out);
        if (campaign_cmd->parsed()) {
            bool grids_given[6] = {bmin->count() > 0,  bmax->count() > 0, bstep->count() > 0,
                                   kmin->count() > 0,  kmax->count() > 0, kstep->count() > 0};
            return do_campaign(campaign_args, grids_given, tol->count() > 0, out);
        }
        if (repro_cmd->parsed()) return do_reproduce(repro_args, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command selected\n";
    return 2;
}

}  // namespace monogamy
