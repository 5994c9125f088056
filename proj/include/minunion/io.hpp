#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "minunion/core.hpp"
#include "minunion/solvers.hpp"

namespace minunion {

// Instance files: one `set <label> : <int> [<int> ...]` line per set,
// `#` starts a comment, labels match [A-Za-z0-9_()-]+.
Instance parse_instance(std::string_view text);
std::string render_instance(const Instance& instance);

// Graph files: optional leading `vertices <n>` line, then `edge <u> <v>`
// lines with positive integer vertex names.
Graph parse_graph(std::string_view text);

// Certificate files: `tree <a> <b> <weight>` lines (weight meaning the
// oriented difference t_a - t_b) plus one `budget <int>` line.
struct ParsedCertificate {
    std::vector<std::tuple<std::string, std::string, Value>> edges;
    std::optional<Value> budget;
};

ParsedCertificate parse_certificate(std::string_view text);
std::string render_certificate(const Certificate& certificate);

// Resolves the certificate against an instance's labels; the override wins
// over the file's budget line.
Certificate bind_certificate(const ParsedCertificate& parsed, const Instance& instance,
                             std::optional<Value> budget_override = {});

// FNV-1a 64 over the raw input bytes, rendered as 16 hex digits.
std::string input_digest(std::string_view bytes);

nlohmann::json shifts_to_json(const ShiftVector& shifts);
ShiftVector shifts_from_json(const nlohmann::json& j);

// One JSON object per run; field names are stable interface.
struct RunReport {
    std::string command;
    std::string digest;
    std::string method;
    std::int64_t value = 0;
    ShiftVector shifts;
    std::uint64_t explored = 0;
    double wall_ms = 0.0;
    bool optimal = false;
    std::optional<std::vector<Value>> cover;

    nlohmann::json to_json() const;
};

// Re-evaluates the result's shifts against the instance; a disagreement with
// the solver's reported value is an internal error.
RunReport make_run_report(const std::string& command, const std::string& digest,
                          const Instance& instance, const SolveResult& result, double wall_ms);

}  // namespace minunion
