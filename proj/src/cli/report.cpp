#include "crf/cli/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace crf::cli {

using nlohmann::json;

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc() ? std::string(buf, ptr) : std::to_string(v);
}

void Report::number(std::string name, double v) { results.push_back({std::move(name), "float", format_double(v)}); }

bool Report::all_passed() const {
    for (const auto& v : verdicts)
        if (!v.passed) return false;
    return true;
}

namespace {

json to_json(const Report& r) {
    json j;
    j["schema_version"] = r.schema_version;
    j["command"] = r.command;
    j["args"] = r.args;
    j["field"] = r.field;
    j["inputs"] = r.inputs;
    j["results"] = json::array();
    for (const auto& v : r.results) j["results"].push_back({{"name", v.name}, {"kind", v.kind}, {"value", v.value}});
    j["verdicts"] = json::array();
    for (const auto& v : r.verdicts)
        j["verdicts"].push_back({{"name", v.name}, {"passed", v.passed}, {"detail", v.detail}});
    if (r.timings) j["timings"] = *r.timings;
    return j;
}

} // namespace

std::string emit_report(const Report& r, Format format) {
    if (format == Format::Json) return to_json(r).dump(2) + "\n";
    std::ostringstream os;
    os << "command: " << r.command << "\n";
    os << "field: " << r.field << "\n";
    if (!r.inputs.empty()) {
        os << "inputs:\n";
        for (const auto& [k, v] : r.inputs) os << "  " << k << " = " << v << "\n";
    }
    if (!r.results.empty()) {
        os << "results:\n";
        for (const auto& v : r.results) os << "  " << v.name << " [" << v.kind << "] = " << v.value << "\n";
    }
    if (!r.verdicts.empty()) {
        os << "verdicts:\n";
        for (const auto& v : r.verdicts) {
            os << "  " << (v.passed ? "PASS" : "FAIL") << " " << v.name;
            if (!v.detail.empty()) os << ": " << v.detail;
            os << "\n";
        }
    }
    if (r.timings)
        for (const auto& [k, v] : *r.timings) os << "timing " << k << " = " << format_double(v) << "\n";
    return os.str();
}

Report report_from_json(const std::string& text) {
    json j = json::parse(text);
    Report r;
    r.schema_version = j.at("schema_version").get<int>();
    r.command = j.at("command").get<std::string>();
    r.args = j.at("args").get<std::map<std::string, std::string>>();
    r.field = j.at("field").get<std::string>();
    r.inputs = j.at("inputs").get<std::map<std::string, std::string>>();
    for (const auto& v : j.at("results"))
        r.results.push_back({v.at("name").get<std::string>(), v.at("kind").get<std::string>(),
                             v.at("value").get<std::string>()});
    for (const auto& v : j.at("verdicts"))
        r.verdicts.push_back({v.at("name").get<std::string>(), v.at("passed").get<bool>(),
                              v.at("detail").get<std::string>()});
    if (j.contains("timings")) r.timings = j.at("timings").get<std::map<std::string, double>>();
    return r;
}

} // namespace crf::cli
