#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crf/field.hpp"
#include "crf/padic.hpp"
#include "crf/rational.hpp"

namespace crf::cli {

inline constexpr int kSchemaVersion = 1;

struct ReportValue {
    std::string name;
    std::string kind;  // "exact", "padic", "float" or "text"
    std::string value;

    friend bool operator==(const ReportValue&, const ReportValue&) = default;
};

struct Verdict {
    std::string name;
    bool passed = false;
    std::string detail;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct Report {
    int schema_version = kSchemaVersion;
    std::string command;
    std::map<std::string, std::string> args;
    std::string field = "real";
    std::map<std::string, std::string> inputs;
    std::vector<ReportValue> results;
    std::vector<Verdict> verdicts;
    std::optional<std::map<std::string, double>> timings;

    void exact(std::string name, const Rational& v) { results.push_back({std::move(name), "exact", v.to_string()}); }
    void exact(std::string name, std::string v) { results.push_back({std::move(name), "exact", std::move(v)}); }
    void padic(std::string name, const PadicNumber& v) { results.push_back({std::move(name), "padic", v.to_string()}); }
    void number(std::string name, double v);
    void text(std::string name, std::string v) { results.push_back({std::move(name), "text", std::move(v)}); }
    void check(std::string name, bool passed, std::string detail = "") {
        verdicts.push_back({std::move(name), passed, std::move(detail)});
    }
    bool all_passed() const;

    friend bool operator==(const Report&, const Report&) = default;
};

/// Shortest decimal text that reads back to the same double.
std::string format_double(double v);

enum class Format { Json, Text };

/// JSON with sorted keys and two-space indentation, or a plain-text summary.
std::string emit_report(const Report& r, Format format);
Report report_from_json(const std::string& text);

} // namespace crf::cli
