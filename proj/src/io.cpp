#include "scopt/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace scopt {

using nlohmann::json;

Matrix<int> read_int_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path.string());
    std::vector<std::vector<int>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<int> row;
        std::stringstream ss(line);
        std::string cell;
        int col = 0;
        while (std::getline(ss, cell, ',')) {
            ++col;
            try {
                std::size_t used = 0;
                const int v = std::stoi(cell, &used);
                while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used])))
                    ++used;
                if (used != cell.size()) throw std::invalid_argument(cell);
                row.push_back(v);
            } catch (const std::exception&) {
                std::ostringstream os;
                os << path.string() << ": row " << lineno << ", column " << col
                   << ": not an integer: '" << cell << "'";
                throw ValidationError(os.str());
            }
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            std::ostringstream os;
            os << path.string() << ": row " << lineno << " has " << row.size()
               << " cells, expected " << rows.front().size();
            throw ValidationError(os.str());
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ValidationError(path.string() + ": empty matrix");
    Matrix<int> m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
        }
    }
    return m;
}

void write_int_csv(const std::filesystem::path& path, const Matrix<int>& m) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path.string());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << m(i, j);
        }
        out << '\n';
    }
}

namespace {

json stats_json(const CycleStats& s) {
    return json{{"schema_version", 1},
                {"protograph", {{"candidates6", s.protograph_candidates6},
                                {"candidates8", s.protograph_candidates8}}},
                {"tanner",
                 {{"full", {{"cycles6", s.tanner_cycles6}, {"cycles8", s.tanner_cycles8}}},
                  {"period", {{"cycles6", s.tanner_period6}, {"cycles8", s.tanner_period8}}}}},
                {"weighted_objective", s.weighted_objective}};
}

json params_json(const CodeParameters& p) {
    return json{{"gamma", p.gamma},           {"kappa", p.kappa},
                {"memory", p.memory},         {"pattern", p.pattern.a},
                {"circulant_size", p.circulant_size}, {"replicas", p.replicas}};
}

CycleStats stats_from_json(const json& j) {
    CycleStats s;
    s.protograph_candidates6 = j.at("protograph").at("candidates6").get<std::int64_t>();
    s.protograph_candidates8 = j.at("protograph").at("candidates8").get<std::int64_t>();
    s.tanner_cycles6 = j.at("tanner").at("full").at("cycles6").get<std::int64_t>();
    s.tanner_cycles8 = j.at("tanner").at("full").at("cycles8").get<std::int64_t>();
    s.tanner_period6 = j.at("tanner").at("period").at("cycles6").get<std::int64_t>();
    s.tanner_period8 = j.at("tanner").at("period").at("cycles8").get<std::int64_t>();
    s.weighted_objective = j.at("weighted_objective").get<double>();
    return s;
}

CodeParameters params_from_json(const json& j) {
    CodeParameters p;
    p.gamma = j.at("gamma").get<int>();
    p.kappa = j.at("kappa").get<int>();
    p.memory = j.at("memory").get<int>();
    p.pattern.a = j.at("pattern").get<std::vector<int>>();
    p.circulant_size = j.at("circulant_size").get<int>();
    p.replicas = j.at("replicas").get<int>();
    return p;
}

}  // namespace

std::string stats_to_json(const CycleStats& stats) { return stats_json(stats).dump(2); }
std::string params_to_json(const CodeParameters& params) { return params_json(params).dump(2); }

void write_bundle(const std::filesystem::path& dir, const ConstructionResult& result,
                  const std::string& provenance_json) {
    std::filesystem::create_directories(dir);
    write_int_csv(dir / "partition.csv", result.partition);
    write_int_csv(dir / "lifting.csv", result.lifting);
    json stats = stats_json(result.stats);
    stats["params"] = params_json(result.params);
    stats["seed"] = result.seed;
    std::ofstream(dir / "stats.json") << stats.dump(2) << '\n';
    std::ofstream(dir / "provenance.json") << provenance_json << '\n';
}

ConstructionResult read_bundle(const std::filesystem::path& dir) {
    ConstructionResult r;
    r.partition = read_int_csv(dir / "partition.csv");
    r.lifting = read_int_csv(dir / "lifting.csv");
    std::ifstream in(dir / "stats.json");
    if (!in) throw ValidationError("cannot open " + (dir / "stats.json").string());
    json j;
    try {
        in >> j;
        r.stats = stats_from_json(j);
        r.params = params_from_json(j.at("params"));
        r.seed = j.at("seed").get<std::uint64_t>();
    } catch (const json::exception& e) {
        throw ValidationError((dir / "stats.json").string() + ": " + e.what());
    }
    return r;
}

}  // namespace scopt
