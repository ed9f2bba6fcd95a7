#include "tsfill/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>

#include "tsfill/config.hpp"
#include "tsfill/rng.hpp"

namespace tsfill {

namespace {

using nlohmann::json;

std::string format_with(double value, std::chars_format fmt, int precision) {
    char buf[64];
    const auto res = (precision < 0) ? std::to_chars(buf, buf + sizeof(buf), value)
                                     : std::to_chars(buf, buf + sizeof(buf), value, fmt, precision);
    return std::string(buf, res.ptr);
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_double(const std::string& token, const std::string& context) {
    double value = 0.0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
        throw std::invalid_argument(context + ": cannot parse number '" + token + "'");
    return value;
}

std::uint64_t parse_unsigned(const std::string& token, const std::string& context) {
    std::uint64_t value = 0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
        throw std::invalid_argument(context + ": cannot parse integer '" + token + "'");
    return value;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

constexpr char kAggregateHeader[] = "phi,dropout,method,mean_score,std_score,replicates";
constexpr char kReplicateHeader[] = "phi,dropout,method,replicate_index,score,replicate_seed";
constexpr char kPlotHeader[] = "phi,forward_mean,backward_mean,mean_fill_mean";

}  // namespace

std::string format_real(double value) {
    return format_with(value, std::chars_format::general, 17);
}

std::string format_real_short(double value) {
    return format_with(value, std::chars_format::general, -1);
}

std::string aggregate_csv(const std::vector<AggregateResult>& aggregates) {
    std::string out(kAggregateHeader);
    out += '\n';
    for (const AggregateResult& a : aggregates) {
        out += format_real(a.phi);
        out += ',';
        out += format_real(a.dropout);
        out += ',';
        out += to_string(a.method);
        out += ',';
        out += format_real(a.mean_score);
        out += ',';
        out += format_real(a.std_score);
        out += ',';
        out += std::to_string(a.replicates);
        out += '\n';
    }
    return out;
}

std::vector<AggregateResult> parse_aggregate_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kAggregateHeader)
        throw std::invalid_argument("aggregate csv: missing or malformed header");
    std::vector<AggregateResult> out;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        const std::string context = "aggregate csv line " + std::to_string(lineno);
        if (fields.size() != 6)
            throw std::invalid_argument(context + ": expected 6 fields, got " +
                                        std::to_string(fields.size()));
        AggregateResult a;
        a.phi = parse_double(fields[0], context);
        a.dropout = parse_double(fields[1], context);
        try {
            a.method = parse_fill_method(fields[2]);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(context + ": " + e.what());
        }
        a.mean_score = parse_double(fields[3], context);
        a.std_score = parse_double(fields[4], context);
        a.replicates = static_cast<std::size_t>(parse_unsigned(fields[5], context));
        a.std_defined = a.replicates > 1;
        out.push_back(a);
    }
    return out;
}

std::string replicates_csv(const std::vector<ReplicateResult>& replicates) {
    std::string out(kReplicateHeader);
    out += '\n';
    for (const ReplicateResult& r : replicates) {
        out += format_real(r.phi);
        out += ',';
        out += format_real(r.dropout);
        out += ',';
        out += to_string(r.method);
        out += ',';
        out += std::to_string(r.replicate_index);
        out += ',';
        out += format_real(r.score);
        out += ',';
        out += std::to_string(r.replicate_seed);
        out += '\n';
    }
    return out;
}

std::string plot_table_csv(const std::vector<AggregateResult>& aggregates, double dropout) {
    std::map<double, std::array<std::optional<double>, 3>> rows;
    std::vector<double> available;
    for (const AggregateResult& a : aggregates) {
        available.push_back(a.dropout);
        if (a.dropout == dropout)
            rows[a.phi][static_cast<std::size_t>(a.method)] = a.mean_score;
    }
    if (rows.empty()) {
        std::sort(available.begin(), available.end());
        available.erase(std::unique(available.begin(), available.end()), available.end());
        std::string msg = "plot table: dropout " + format_real_short(dropout) +
                          " not in results; available rates:";
        for (double r : available) msg += " " + format_real_short(r);
        throw std::invalid_argument(msg);
    }
    std::string out(kPlotHeader);
    out += '\n';
    for (const auto& [phi, means] : rows) {
        for (const auto& m : means)
            if (!m)
                throw std::invalid_argument(
                    "plot table: all three methods are required at phi=" + format_real_short(phi));
        out += format_real(phi);
        out += ',';
        out += format_real(*means[0]);
        out += ',';
        out += format_real(*means[1]);
        out += ',';
        out += format_real(*means[2]);
        out += '\n';
    }
    return out;
}

nlohmann::json manifest_json(const RunManifest& manifest) {
    json failures = json::array();
    std::uint64_t total = 0;
    for (const CellFailureCount& f : manifest.failure_counts) {
        failures.push_back(json{{"phi", f.phi},
                                {"dropout", f.dropout},
                                {"method", to_string(f.method)},
                                {"failed", f.failed}});
        total += f.failed;
    }
    return json{{"tool_version", manifest.tool_version},
                {"started", manifest.started},
                {"finished", manifest.finished},
                {"master_seed", manifest.config.master_seed},
                {"config", config_to_json(manifest.config)},
                {"failure_counts", failures},
                {"total_failures", total}};
}

RunManifest manifest_from_json(const nlohmann::json& j) {
    RunManifest manifest;
    manifest.config = config_from_json(j.at("config"));
    manifest.tool_version = j.at("tool_version").get<std::string>();
    manifest.started = j.at("started").get<std::string>();
    manifest.finished = j.at("finished").get<std::string>();
    for (const auto& f : j.at("failure_counts")) {
        CellFailureCount c;
        c.phi = f.at("phi").get<double>();
        c.dropout = f.at("dropout").get<double>();
        c.method = parse_fill_method(f.at("method").get<std::string>());
        c.failed = f.at("failed").get<std::size_t>();
        manifest.failure_counts.push_back(c);
    }
    return manifest;
}

void write_results(const GridResult& result, const RunManifest& manifest,
                   const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory '" + out_dir.string() + "': " +
                          ec.message());

    write_file(out_dir / "aggregate.csv", aggregate_csv(result.aggregates));
    write_file(out_dir / "replicates.csv", replicates_csv(result.replicates));
    write_file(out_dir / "manifest.json", manifest_json(manifest).dump(2) + "\n");

    bool all_methods = true;
    for (FillMethod m : kAllFillMethods)
        all_methods = all_methods && std::any_of(manifest.config.methods.begin(),
                                                 manifest.config.methods.end(),
                                                 [m](FillMethod x) { return x == m; });
    if (!all_methods) return;
    std::vector<double> rates;
    for (const AggregateResult& a : result.aggregates) rates.push_back(a.dropout);
    std::sort(rates.begin(), rates.end());
    rates.erase(std::unique(rates.begin(), rates.end()), rates.end());
    for (double rate : rates)
        write_file(out_dir / ("plot_dropout_" + format_real_short(rate) + ".csv"),
                   plot_table_csv(result.aggregates, rate));
}

nlohmann::json demo_single(double phi, double dropout, std::uint64_t seed,
                           const ExperimentConfig& settings) {
    const ArModel model{{phi}, 1.0};
    const Series original =
        simulate(SimulationSpec{settings.series_length, derive_seed(seed, {0}), model});
    const double original_pacf1 =
        sample_pacf1(original, settings.estimator, settings.normalization);
    const double reference = (settings.baseline == BaselineMode::TheoreticalPhi)
                                 ? theoretical_pacf(model, 1)[0]
                                 : original_pacf1;
    const MaskedSeries masked = drop_values(original, DropoutSpec{dropout, derive_seed(seed, {1})});

    json record{{"phi", phi},
                {"dropout", dropout},
                {"seed", seed},
                {"length", settings.series_length},
                {"baseline", to_string(settings.baseline)},
                {"estimator", to_string(settings.estimator)},
                {"normalization", to_string(settings.normalization)},
                {"reference_pacf1", reference},
                {"original", original},
                {"missing_indices", masked.missing()}};
    record["pacf1"]["original"] = original_pacf1;
    for (FillMethod method : kAllFillMethods) {
        const Series restored = impute(masked, method);
        const double pacf1 =
            sample_pacf1(restored, settings.estimator, settings.normalization);
        const std::string name = to_string(method);
        record["restored"][name] = restored;
        record["pacf1"][name] = pacf1;
        record["scores"][name] = accuracy_score(pacf1, reference);
    }
    return record;
}

std::vector<std::optional<double>> read_series_column(const std::filesystem::path& path,
                                                      bool header) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::vector<std::optional<double>> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (lineno == 1 && header) continue;
        if (line.empty()) {
            out.push_back(std::nullopt);
            continue;
        }
        double value = 0.0;
        const auto res = std::from_chars(line.data(), line.data() + line.size(), value);
        if (res.ec != std::errc{} || res.ptr != line.data() + line.size())
            throw IoError(path.string() + " line " + std::to_string(lineno) +
                          ": cannot parse '" + line + "'");
        if (std::isnan(value))
            out.push_back(std::nullopt);
        else
            out.push_back(value);
    }
    return out;
}

void write_series_column(const std::filesystem::path& path, std::span<const double> series) {
    std::string content;
    for (double v : series) {
        content += format_real(v);
        content += '\n';
    }
    write_file(path, content);
}

}  // namespace tsfill
