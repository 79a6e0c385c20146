#pragma once

// Series ingestion from delimited or whitespace tables and model serialization.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parma/core.hpp"

namespace parma {

/// Where the (year, season, value) triple lives in a text table.
///
/// The header row is the first line (after `skip_lines`) that names all three
/// columns. Rows whose year field is not an integer (unit rows, footers) are
/// skipped. Defaults read the series CSV written by write_series_csv.
struct ColumnSpec {
    std::string year_column = "cycle";
    std::string season_column = "season";
    std::string value_column = "value";
    std::optional<char> delimiter = ',';  // nullopt splits on whitespace
    std::size_t skip_lines = 0;
    std::size_t period = 12;
    int season_base = 0;  // 1 for calendar months
    std::vector<std::string> missing_markers = {"---", "NA", ""};
    std::string strip_chars = "*#";  // flags glued to numbers, e.g. "123.4*"
    std::vector<std::string> ignored_tokens = {"Provisional"};
    std::optional<int> first_year;
    std::optional<int> last_year;
};

/// Reads a complete run of cycles ordered by (year, season).
///
/// Errors (data): IncompleteCycle, MissingObservation, NonNumericValue,
/// DuplicateSeason, MissingColumn, EmptySeries.
PeriodicSeries ingest_csv(const std::filesystem::path& path, const ColumnSpec& spec);

/// Same as ingest_csv on in-memory text.
PeriodicSeries parse_table(const std::string& text, const ColumnSpec& spec);

/// Columns: t,cycle,season,value.
void write_series_csv(const std::filesystem::path& path, const PeriodicSeries& y);

using Provenance = std::map<std::string, std::string>;

struct ModelDocument {
    ParmaModel model;
    Provenance provenance;
};

/// {"schema":"parma-model/1","kind":...,"period":...,"mu":[..],"phi":[..],"theta":[..],"sigma2":[..],"provenance":{..}}
std::string model_to_json(const ParmaModel& model, const Provenance& provenance = {});
ModelDocument model_from_json(const std::string& text);

void write_model_json(const std::filesystem::path& path, const ParmaModel& model, const Provenance& provenance = {});
ModelDocument read_model_json(const std::filesystem::path& path);

/// Whole file as a string; Error "UnreadableFile" (data) when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

/// Writes `text`, creating parent directories; Error "UnwritableFile" (config) on failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace parma
