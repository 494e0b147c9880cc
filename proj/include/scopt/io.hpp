#pragma once

#include <filesystem>
#include <string>

#include "scopt/types.hpp"

namespace scopt {

// Plain integer CSV, one row per line, no header.
Matrix<int> read_int_csv(const std::filesystem::path& path);
void write_int_csv(const std::filesystem::path& path, const Matrix<int>& m);

std::string stats_to_json(const CycleStats& stats);
std::string params_to_json(const CodeParameters& params);

// Bundle layout: partition.csv, lifting.csv, stats.json, provenance.json.
void write_bundle(const std::filesystem::path& dir, const ConstructionResult& result,
                  const std::string& provenance_json);
ConstructionResult read_bundle(const std::filesystem::path& dir);

}  // namespace scopt
