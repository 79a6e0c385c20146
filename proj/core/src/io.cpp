#include "parma/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace parma {

namespace {

constexpr const char* kModelSchema = "parma-model/1";

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line, const std::optional<char>& delimiter) {
    std::vector<std::string> out;
    if (delimiter) {
        std::string field;
        std::istringstream in(line);
        while (std::getline(in, field, *delimiter)) {
            out.push_back(trim(field));
        }
        if (!line.empty() && line.back() == *delimiter) {
            out.emplace_back();
        }
    } else {
        std::istringstream in(line);
        std::string tok;
        while (in >> tok) {
            out.push_back(tok);
        }
    }
    return out;
}

std::optional<long long> parse_int(const std::string& s) {
    long long v = 0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end || s.empty()) {
        return std::nullopt;
    }
    return v;
}

std::optional<double> parse_double(const std::string& s) {
    if (s.empty()) {
        return std::nullopt;
    }
    std::size_t used = 0;
    try {
        const double v = std::stod(s, &used);
        if (used != s.size() || !std::isfinite(v)) {
            return std::nullopt;
        }
        return v;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

struct Row {
    long long year;
    long long season;
    double value;
    std::size_t line;
};

std::string where(long long year, long long season) {
    return "year " + std::to_string(year) + ", season " + std::to_string(season);
}

}  // namespace

PeriodicSeries parse_table(const std::string& text, const ColumnSpec& spec) {
    if (spec.period < 1) {
        throw config_error("InvalidPeriod", "column spec period must be positive");
    }
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::array<std::size_t, 3>> cols;
    std::vector<Row> rows;

    while (std::getline(in, line)) {
        ++line_no;
        if (line_no <= spec.skip_lines) {
            continue;
        }
        std::vector<std::string> fields = split(line, spec.delimiter);
        if (!spec.delimiter) {
            std::erase_if(fields, [&](const std::string& f) {
                return std::find(spec.ignored_tokens.begin(), spec.ignored_tokens.end(), f) !=
                       spec.ignored_tokens.end();
            });
        }
        if (!cols) {
            auto find = [&](const std::string& name) -> std::optional<std::size_t> {
                const auto it = std::find(fields.begin(), fields.end(), name);
                if (it == fields.end()) {
                    return std::nullopt;
                }
                return static_cast<std::size_t>(it - fields.begin());
            };
            const auto y = find(spec.year_column);
            const auto s = find(spec.season_column);
            const auto v = find(spec.value_column);
            if (y && s && v) {
                cols = std::array<std::size_t, 3>{*y, *s, *v};
            }
            continue;
        }
        const auto [yc, sc, vc] = *cols;
        if (fields.size() <= yc) {
            continue;
        }
        const auto year = parse_int(fields[yc]);
        if (!year) {
            continue;  // units row, footer or blank line
        }
        if ((spec.first_year && *year < *spec.first_year) || (spec.last_year && *year > *spec.last_year)) {
            continue;
        }
        const auto season = fields.size() > sc ? parse_int(fields[sc]) : std::nullopt;
        if (!season) {
            throw data_error("NonNumericValue", "line " + std::to_string(line_no) + ": season field is not an integer");
        }
        const long long s0 = *season - spec.season_base;
        if (s0 < 0 || s0 >= static_cast<long long>(spec.period)) {
            throw data_error("NonNumericValue", "line " + std::to_string(line_no) + ": season " +
                                                    std::to_string(*season) + " outside the configured period");
        }
        std::string raw = fields.size() > vc ? fields[vc] : std::string();
        std::erase_if(raw, [&](char c) { return spec.strip_chars.find(c) != std::string::npos; });
        if (std::find(spec.missing_markers.begin(), spec.missing_markers.end(), raw) != spec.missing_markers.end()) {
            throw data_error("MissingObservation", "line " + std::to_string(line_no) + ": missing value at " +
                                                       where(*year, *season));
        }
        const auto value = parse_double(raw);
        if (!value) {
            throw data_error("NonNumericValue", "line " + std::to_string(line_no) + ": value '" + raw +
                                                    "' is not a number");
        }
        rows.push_back({*year, s0, *value, line_no});
    }
    if (!cols) {
        throw data_error("MissingColumn", "no header row names the columns '" + spec.year_column + "', '" +
                                              spec.season_column + "' and '" + spec.value_column + "'");
    }
    if (rows.empty()) {
        throw data_error("EmptySeries", "no data rows found");
    }

    std::stable_sort(rows.begin(), rows.end(),
                     [](const Row& a, const Row& b) { return std::tie(a.year, a.season) < std::tie(b.year, b.season); });
    const auto nu = static_cast<long long>(spec.period);
    for (std::size_t k = 1; k < rows.size(); ++k) {
        if (rows[k].year == rows[k - 1].year && rows[k].season == rows[k - 1].season) {
            throw data_error("DuplicateSeason", "line " + std::to_string(rows[k].line) + ": duplicate " +
                                                    where(rows[k].year, rows[k].season + spec.season_base));
        }
    }
    if (rows.front().season != 0) {
        throw data_error("IncompleteCycle", "series starts mid-cycle at " +
                                                where(rows.front().year, rows.front().season + spec.season_base));
    }
    // walk the expected (year, season) sequence and name the first gap
    long long year = rows.front().year;
    long long season = 0;
    for (const Row& r : rows) {
        if (r.year != year || r.season != season) {
            throw data_error("MissingObservation",
                             "no observation for " + where(year, season + spec.season_base));
        }
        if (++season == nu) {
            season = 0;
            ++year;
        }
    }
    if (season != 0) {
        throw data_error("IncompleteCycle", std::to_string(rows.size()) + " rows do not form complete cycles of " +
                                                std::to_string(spec.period));
    }
    std::vector<double> values;
    values.reserve(rows.size());
    for (const Row& r : rows) {
        values.push_back(r.value);
    }
    return PeriodicSeries(std::move(values), spec.period);
}

PeriodicSeries ingest_csv(const std::filesystem::path& path, const ColumnSpec& spec) {
    return parse_table(read_text_file(path), spec);
}

void write_series_csv(const std::filesystem::path& path, const PeriodicSeries& y) {
    std::ostringstream out;
    out << std::setprecision(17) << "t,cycle,season,value\n";
    for (std::size_t t = 0; t < y.size(); ++t) {
        out << t << ',' << t / y.period() << ',' << y.season_of(t) << ',' << y[t] << '\n';
    }
    write_text_file(path, out.str());
}

std::string model_to_json(const ParmaModel& model, const Provenance& provenance) {
    auto arr = [](const SeasonalVector& v) { return std::vector<double>(v.entries().begin(), v.entries().end()); };
    nlohmann::ordered_json j;
    j["schema"] = kModelSchema;
    j["kind"] = to_string(model.kind());
    j["period"] = model.period();
    j["mu"] = arr(model.mu());
    j["phi"] = arr(model.phi());
    j["theta"] = model.theta() ? nlohmann::ordered_json(arr(*model.theta())) : nlohmann::ordered_json(nullptr);
    j["sigma2"] = arr(model.sigma2());
    j["provenance"] = provenance;
    return j.dump(2) + "\n";
}

ModelDocument model_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw data_error("MalformedModel", std::string("model JSON does not parse: ") + e.what());
    }
    try {
        if (j.at("schema").get<std::string>() != kModelSchema) {
            throw data_error("MalformedModel", "unsupported model schema " + j.at("schema").dump());
        }
        const auto kind = j.at("kind").get<std::string>();
        const auto period = j.at("period").get<std::size_t>();
        auto vec = [&](const char* key, ParameterRole role) {
            auto v = j.at(key).get<std::vector<double>>();
            if (v.size() != period) {
                throw data_error("MalformedModel", std::string(key) + " has " + std::to_string(v.size()) +
                                                       " entries, expected " + std::to_string(period));
            }
            return SeasonalVector(std::move(v), role);
        };
        Provenance prov;
        if (j.contains("provenance") && j["provenance"].is_object()) {
            for (const auto& [k, v] : j["provenance"].items()) {
                prov[k] = v.is_string() ? v.get<std::string>() : v.dump();
            }
        }
        if (kind == "par1") {
            return {ParmaModel::par1(vec("mu", ParameterRole::Mu), vec("phi", ParameterRole::Phi),
                                     vec("sigma2", ParameterRole::Sigma2)),
                    prov};
        }
        if (kind == "parma11") {
            return {ParmaModel::parma11(vec("phi", ParameterRole::Phi), vec("theta", ParameterRole::Theta)), prov};
        }
        throw data_error("MalformedModel", "unknown model kind '" + kind + "'");
    } catch (const nlohmann::json::exception& e) {
        throw data_error("MalformedModel", std::string("model JSON is missing a field: ") + e.what());
    }
}

void write_model_json(const std::filesystem::path& path, const ParmaModel& model, const Provenance& provenance) {
    write_text_file(path, model_to_json(model, provenance));
}

ModelDocument read_model_json(const std::filesystem::path& path) { return model_from_json(read_text_file(path)); }

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw data_error("UnreadableFile", "cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw config_error("UnwritableFile", "cannot write " + path.string());
    }
}

}  // namespace parma
