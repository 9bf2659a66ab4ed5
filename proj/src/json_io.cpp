#include "gdz/json_io.hpp"

#include <fstream>

namespace gdz {

namespace {

json shape_header(std::size_t rows, std::size_t cols, const char* mode) {
    return json{{"rows", rows}, {"cols", cols}, {"mode", mode}};
}

void require(bool ok, const std::string& what) {
    if (!ok) throw ParseError(what);
}

} // namespace

json matrix_to_json(const ExactMatrix& m) {
    json j = shape_header(m.rows(), m.cols(), "exact");
    json data = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c) data.push_back(to_string(m.at(i, c)));
    j["data"] = std::move(data);
    return j;
}

json matrix_to_json(const FloatMatrix& m) {
    json j = shape_header(m.rows(), m.cols(), "float");
    json data = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c)
            data.push_back(json::array({m.at(i, c).v.real(), m.at(i, c).v.imag()}));
    j["data"] = std::move(data);
    return j;
}

AnyMatrix matrix_from_json(const json& j) {
    require(j.is_object(), "matrix must be an object");
    require(j.contains("rows") && j.contains("cols") && j.contains("mode") && j.contains("data"),
            "matrix needs rows, cols, mode, data");
    require(j["rows"].is_number_unsigned() && j["cols"].is_number_unsigned(),
            "rows/cols must be nonnegative integers");
    const std::size_t rows = j["rows"].get<std::size_t>();
    const std::size_t cols = j["cols"].get<std::size_t>();
    const json& data = j["data"];
    require(data.is_array() && data.size() == rows * cols,
            "data length must equal rows*cols");
    const std::string mode = j["mode"].get<std::string>();

    if (mode == "exact") {
        ExactMatrix m(rows, cols);
        std::size_t k = 0;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t c = 0; c < cols; ++c) {
                require(data[k].is_string(), "exact entries are scalar strings");
                m.at(i, c) = parse_exact_scalar(data[k].get<std::string>());
                ++k;
            }
        return m;
    }
    if (mode == "float") {
        FloatMatrix m(rows, cols);
        std::size_t k = 0;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t c = 0; c < cols; ++c) {
                require(data[k].is_array() && data[k].size() == 2 && data[k][0].is_number() &&
                            data[k][1].is_number(),
                        "float entries are [re, im] pairs");
                m.at(i, c) = FloatScalar(data[k][0].get<double>(), data[k][1].get<double>());
                ++k;
            }
        return m;
    }
    throw ParseError("mode must be \"exact\" or \"float\"");
}

ExactMatrix exact_matrix_from_json(const json& j) {
    AnyMatrix any = matrix_from_json(j);
    if (auto* m = std::get_if<ExactMatrix>(&any)) return *m;
    throw ParseError("expected an exact-mode matrix");
}

json hypothesis_report_to_json(const HypothesisReport& rep) {
    json conds = json::array();
    for (const auto& c : rep.conditions)
        conds.push_back(json{{"label", c.label}, {"residual", c.residual}, {"zero", c.zero}});
    return json{{"id", hypothesis_name(rep.id)},
                {"satisfied", rep.satisfied},
                {"conditions", std::move(conds)}};
}

json provenance_to_json(const Provenance& prov) {
    json arr = json::array();
    for (const auto& s : prov) {
        const char* kind = s.kind == StepKind::Formula   ? "formula"
                           : s.kind == StepKind::Oracle  ? "oracle"
                                                         : "external-identity";
        arr.push_back(json{{"step", s.label}, {"kind", kind}});
    }
    return arr;
}

json instance_to_json(const Instance& inst, HypothesisId id, std::uint64_t seed) {
    json mats = json::array();
    for (const auto& m : inst.mats) mats.push_back(matrix_to_json(m));
    return json{{"hypothesis", hypothesis_name(id)},
                {"seed", seed},
                {"recipe", inst.recipe},
                {"matrices", std::move(mats)}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out.good()) throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace gdz
