#pragma once
// Deterministic dataset serialization.
//
// Data files are CSV: a mandatory header row, comma separators, LF line
// endings, and every number printed as the shortest decimal text that parses
// back to the identical double.  Each dataset gets a JSON metadata sidecar
// carrying the full resolved configuration (everything that influenced the
// numbers), derived quantities such as cutoffs, and a generation timestamp —
// timestamps never appear in the CSV itself, so repeated runs are
// byte-identical.

#include <string>
#include <vector>

#include "json.hpp"

#include "jcsim/config.hpp"

namespace jcsim {

using Json = nlohmann::ordered_json;

// Shortest decimal text that round-trips the double exactly.
std::string format_double(double x);

struct Column {
  std::string name;
  std::vector<double> values;
};

// Header row plus one row per sample.
std::string render_csv(const std::vector<Column>& columns);

// Write content to path, creating parent directories as needed.
void write_file(const std::string& path, const std::string& content);

// Field-for-field echo of the resolved configuration, including the
// canonical flat document under "config_document" for re-running.
Json config_json(const ScenarioConfig& config);

// Shared sidecar skeleton: library version, subcommand, timestamp, config echo.
Json base_metadata(const std::string& subcommand, const ScenarioConfig& config);

// Write <dir>/<name>.csv and <dir>/<name>.json.
void write_dataset(const std::string& dir, const std::string& name,
                   const std::vector<Column>& columns, const Json& metadata);

}  // namespace jcsim
