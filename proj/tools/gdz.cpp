// gdz: compute Drazin data, run representation routes against the oracle,
// and drive seeded exploration campaigns. Exit codes: 0 success, 1 gated
// hypothesis violated, 2 verification mismatch, 3 parse or parameter error.

#include <iostream>

#include <CLI11.hpp>

#include "gdz/explore.hpp"
#include "gdz/version.hpp"

using namespace gdz;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitParse = 3;

template <class S>
json drazin_data_to_json(const Matrix<S>& a, const TolerancePolicy& pol, bool& verified) {
    DrazinData<S> d = drazin(a, pol);
    verified = satisfies_drazin_axioms(a, d, pol);
    return json{{"inverse", matrix_to_json(d.inverse)},
                {"index", d.index},
                {"projector", matrix_to_json(d.projector)}};
}

int cmd_compute(const std::string& file, const TolerancePolicy& pol) {
    AnyMatrix any = matrix_from_json(load_json_file(file));
    bool verified = false;
    json out = std::visit(
        [&](const auto& m) {
            if (!m.square()) throw ParseError("compute needs a square matrix");
            return drazin_data_to_json(m, pol, verified);
        },
        any);
    std::cout << out.dump(2) << "\n";
    if (!verified) {
        std::cerr << "self-verification failed: output violates the defining identities\n";
        return kExitMismatch;
    }
    return kExitOk;
}

template <class S>
int route_run(RouteId route, const std::vector<Matrix<S>>& mats, const TolerancePolicy& pol,
              bool force) {
    RouteOutcome<S> outcome;
    try {
        if (route_arity(route) == RouteArity::Blocks) {
            outcome = operator_matrix_d(mats[0], mats[1], mats[2], mats[3], route, pol, force);
        } else {
            switch (route) {
                case RouteId::L21:
                case RouteId::T31:
                case RouteId::C32:
                case RouteId::T33:
                case RouteId::C34:
                case RouteId::C35:
                    outcome = additive_d(mats[0], mats[1], route, pol, force);
                    break;
                default:
                    outcome = anti_triangular_d(mats[0], mats[1], route, pol, force);
            }
        }
    } catch (const HypothesisError& e) {
        json out{{"route", route_name(route)},
                 {"hypothesis", hypothesis_report_to_json(e.report)},
                 {"result", nullptr},
                 {"oracle", nullptr},
                 {"discrepancy", nullptr},
                 {"match", false}};
        std::cout << out.dump(2) << "\n";
        return kExitViolated;
    } catch (const PreconditionError& e) {
        json out{{"route", route_name(route)},
                 {"hypothesis",
                  json{{"id", nullptr},
                       {"satisfied", false},
                       {"conditions", json::array({json{{"label", "a b = 0"},
                                                        {"residual", e.residual},
                                                        {"zero", false}}})}}},
                 {"result", nullptr},
                 {"oracle", nullptr},
                 {"discrepancy", nullptr},
                 {"match", false}};
        std::cout << out.dump(2) << "\n";
        return kExitViolated;
    }

    Matrix<S> target = route_arity(route) == RouteArity::Blocks
                           ? route_target(route, mats[0], mats[1], mats[2], mats[3])
                           : route_target(route, mats[0], mats[1]);
    Matrix<S> oracle = drazin(target, pol).inverse;
    double discrepancy = (outcome.inverse - oracle).max_abs();
    bool match = approx_equal(outcome.inverse, oracle, pol);

    json out{{"route", route_name(route)},
             {"hypothesis",
              outcome.hypothesis ? hypothesis_report_to_json(*outcome.hypothesis) : json(nullptr)},
             {"result", matrix_to_json(outcome.inverse)},
             {"oracle", matrix_to_json(oracle)},
             {"discrepancy", discrepancy},
             {"match", match},
             {"provenance", provenance_to_json(outcome.provenance)}};
    std::cout << out.dump(2) << "\n";

    if (!match) return kExitMismatch;
    if (outcome.hypothesis && !outcome.hypothesis->satisfied) return kExitViolated;
    return kExitOk;
}

int cmd_route(const std::string& route_str, const std::vector<std::string>& files,
              const TolerancePolicy& pol, bool force) {
    auto route = route_from_name(route_str);
    if (!route) throw ParseError("unknown route " + route_str);
    std::size_t arity = route_arity(*route) == RouteArity::Blocks ? 4 : 2;
    if (files.size() != arity)
        throw ParseError(route_str + " takes " + std::to_string(arity) + " matrix files");

    std::vector<AnyMatrix> parsed;
    parsed.reserve(files.size());
    for (const auto& f : files) parsed.push_back(matrix_from_json(load_json_file(f)));

    bool exact = std::holds_alternative<ExactMatrix>(parsed[0]);
    for (const auto& p : parsed)
        if (std::holds_alternative<ExactMatrix>(p) != exact)
            throw ParseError("all inputs must use one backend mode");

    if (exact) {
        std::vector<ExactMatrix> mats;
        for (auto& p : parsed) mats.push_back(std::get<ExactMatrix>(p));
        return route_run(*route, mats, pol, force);
    }
    std::vector<FloatMatrix> mats;
    for (auto& p : parsed) mats.push_back(std::get<FloatMatrix>(p));
    return route_run(*route, mats, pol, force);
}

int cmd_explore(const ExploreConfig& cfg, const std::string& out_path) {
    RunReport rep = run_explore(cfg);
    json doc = report_to_json(rep);
    if (out_path.empty())
        std::cout << doc.dump(2) << "\n";
    else
        write_json_file(out_path, doc);
    return rep.all_unviolated_match() ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized inverse toolkit: Drazin data, representation routes, "
                 "hypothesis exploration"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    TolerancePolicy pol;
    app.add_option("--zero-threshold", pol.zero_threshold, "floating zero threshold");
    app.add_option("--rel-threshold", pol.rel_threshold, "floating relative threshold");

    auto* compute = app.add_subcommand("compute", "Drazin inverse, index and spectral projector");
    std::string compute_file;
    compute->add_option("matrix", compute_file, "matrix JSON file")->required();

    auto* route = app.add_subcommand("route", "run a representation route and compare to the oracle");
    std::string route_name_arg;
    std::vector<std::string> route_files;
    bool force = false;
    route->add_option("id", route_name_arg, "route id, e.g. T2.2 or T4.1")->required();
    route->add_option("inputs", route_files, "matrix JSON files: a b, or A B C D")
        ->expected(2, 4);
    route->add_flag("--force", force, "run the formula even when the hypothesis fails");

    auto* explore = app.add_subcommand("explore", "seeded campaign over generated instances");
    std::string hyp_name;
    std::string out_path;
    long long violate_ix = -1;
    ExploreConfig cfg;
    explore->add_option("id", hyp_name, "hypothesis id, e.g. H27")->required();
    explore->add_option("--trials", cfg.trials, "trial count")->capture_default_str();
    explore->add_option("--dim", cfg.dim, "core dimension")->capture_default_str();
    explore->add_option("--seed", cfg.seed, "campaign seed")->capture_default_str();
    explore->add_option("--violate", violate_ix, "condition index to perturb and break");
    explore->add_option("--jobs", cfg.jobs, "parallel workers")->capture_default_str();
    explore->add_flag("--float", cfg.use_float, "run on the floating backend");
    explore->add_option("--out", out_path, "write the report to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (pol.zero_threshold <= 0 || pol.rel_threshold <= 0)
            throw ParseError("thresholds must be strictly positive");
        if (compute->parsed()) return cmd_compute(compute_file, pol);
        if (route->parsed()) return cmd_route(route_name_arg, route_files, pol, force);
        if (explore->parsed()) {
            auto id = hypothesis_from_name(hyp_name);
            if (!id) throw ParseError("unknown hypothesis " + hyp_name);
            cfg.id = *id;
            cfg.pol = pol;
            if (violate_ix >= 0) cfg.violate = static_cast<std::size_t>(violate_ix);
            return cmd_explore(cfg, out_path);
        }
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const InfeasibleConfigError& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitParse;
}
