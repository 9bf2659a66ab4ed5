#include "gdz/explore.hpp"

#include <chrono>
#include <ctime>
#include <thread>

#include "gdz/version.hpp"

namespace gdz {

namespace {

template <class S>
RouteOutcome<S> run_route(RouteId route, const std::vector<Matrix<S>>& mats,
                          const TolerancePolicy& pol, bool force) {
    if (route_arity(route) == RouteArity::Blocks)
        return operator_matrix_d(mats[0], mats[1], mats[2], mats[3], route, pol, force);
    switch (route) {
        case RouteId::L21:
        case RouteId::T31:
        case RouteId::C32:
        case RouteId::T33:
        case RouteId::C34:
        case RouteId::C35:
            return additive_d(mats[0], mats[1], route, pol, force);
        default:
            return anti_triangular_d(mats[0], mats[1], route, pol, force);
    }
}

template <class S>
Matrix<S> target_of(RouteId route, const std::vector<Matrix<S>>& mats) {
    if (route_arity(route) == RouteArity::Blocks)
        return route_target(route, mats[0], mats[1], mats[2], mats[3]);
    return route_target(route, mats[0], mats[1]);
}

void run_one_trial(const ExploreConfig& cfg, int index, TrialRecord& rec) {
    rec.index = index;
    rec.seed = cfg.seed ^ static_cast<std::uint64_t>(index);
    const RouteId route = hypothesis_route(cfg.id);
    try {
        GenConfig gen;
        gen.id = cfg.id;
        gen.dim = cfg.dim;
        gen.seed = rec.seed;
        Instance inst = generate_instance(gen);
        if (cfg.violate) inst = perturb_to_violate(inst, cfg.id, *cfg.violate, rec.seed);
        rec.recipe = inst.recipe;

        const bool force = cfg.violate.has_value();
        if (cfg.use_float) {
            std::vector<FloatMatrix> mats;
            mats.reserve(inst.mats.size());
            for (const auto& m : inst.mats) mats.push_back(to_float(m));
            RouteOutcome<FloatScalar> outcome = run_route(route, mats, cfg.pol, force);
            rec.hypothesis = outcome.hypothesis;
            FloatMatrix target = target_of(route, mats);
            FloatMatrix oracle = drazin(target, cfg.pol).inverse;
            rec.discrepancy = (outcome.inverse - oracle).max_abs();
            rec.match = approx_equal(outcome.inverse, oracle, cfg.pol);
        } else {
            RouteOutcome<ExactScalar> outcome = run_route(route, inst.mats, cfg.pol, force);
            rec.hypothesis = outcome.hypothesis;
            ExactMatrix target = target_of(route, inst.mats);
            ExactMatrix oracle = drazin(target).inverse;
            rec.discrepancy = (outcome.inverse - oracle).max_abs();
            rec.match = outcome.inverse == oracle;
        }
        rec.ran = true;
    } catch (const std::exception& e) {
        rec.error = e.what();
    }
}

std::string iso_timestamp() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

} // namespace

bool RunReport::all_unviolated_match() const {
    if (config.violate) return true; // violated campaigns record, never gate
    for (const auto& t : trials)
        if (!t.error.empty() || !t.match) return false;
    return true;
}

RunReport run_explore(const ExploreConfig& cfg) {
    if (cfg.trials < 0) throw InfeasibleConfigError("negative trial count");
    if (cfg.jobs < 1) throw InfeasibleConfigError("jobs must be at least 1");
    if (cfg.dim < 1) throw InfeasibleConfigError("core dimension must be at least 1");
    if (cfg.violate && *cfg.violate >= hypothesis_condition_count(cfg.id))
        throw InfeasibleConfigError("condition index out of range");

    const auto t0 = std::chrono::steady_clock::now();
    RunReport rep;
    rep.config = cfg;
    rep.trials.resize(static_cast<std::size_t>(cfg.trials));

    const int jobs = std::min(cfg.jobs, std::max(1, cfg.trials));
    if (jobs <= 1) {
        for (int i = 0; i < cfg.trials; ++i) run_one_trial(cfg, i, rep.trials[i]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w) {
            pool.emplace_back([&, w] {
                for (int i = w; i < cfg.trials; i += jobs) run_one_trial(cfg, i, rep.trials[i]);
            });
        }
        for (auto& th : pool) th.join();
    }

    for (const auto& t : rep.trials) {
        if (!t.error.empty())
            ++rep.errors;
        else if (t.match)
            ++rep.pass;
        else
            ++rep.fail;
        rep.max_discrepancy = std::max(rep.max_discrepancy, t.discrepancy);
    }
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    rep.timestamp = iso_timestamp();
    return rep;
}

json report_to_json(const RunReport& rep) {
    const ExploreConfig& cfg = rep.config;
    json config{{"id", hypothesis_name(cfg.id)},
                {"route", route_name(hypothesis_route(cfg.id))},
                {"trials", cfg.trials},
                {"dim", cfg.dim},
                {"seed", cfg.seed},
                {"violate", cfg.violate ? json(*cfg.violate) : json(nullptr)},
                {"backend", cfg.use_float ? "float" : "exact"}};

    json trials = json::array();
    for (const auto& t : rep.trials) {
        json tj{{"index", t.index},
                {"seed", t.seed},
                {"recipe", t.recipe},
                {"match", t.match},
                {"discrepancy", t.discrepancy},
                {"error", t.error.empty() ? json(nullptr) : json(t.error)}};
        tj["hypothesis"] =
            t.hypothesis ? hypothesis_report_to_json(*t.hypothesis) : json(nullptr);
        trials.push_back(std::move(tj));
    }

    json summary{{"trials", static_cast<int>(rep.trials.size())},
                 {"pass", rep.pass},
                 {"fail", rep.fail},
                 {"errors", rep.errors},
                 {"max_discrepancy", rep.max_discrepancy}};

    return json{{"command", "explore"},
                {"config", std::move(config)},
                {"trials", std::move(trials)},
                {"summary", std::move(summary)},
                {"version", kVersion},
                {"meta", json{{"timestamp", rep.timestamp}, {"elapsed_ms", rep.elapsed_ms}}}};
}

json report_body(const json& full_report) {
    json body = full_report;
    body.erase("meta");
    return body;
}

} // namespace gdz
