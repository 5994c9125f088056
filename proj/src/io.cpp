#include "minunion/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <unordered_set>

namespace minunion {

namespace {

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) lines.push_back(std::move(current));
    return lines;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::string token;
    for (char c : line) {
        if (c == '#') break;  // comment runs to end of line
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!token.empty()) tokens.push_back(std::move(token)), token.clear();
        } else {
            token += c;
        }
    }
    if (!token.empty()) tokens.push_back(std::move(token));
    return tokens;
}

bool valid_label(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(' ||
                        c == ')' || c == '-';
        if (!ok) return false;
    }
    return true;
}

Value parse_int(const std::string& token, std::size_t line) {
    Value v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec == std::errc::result_out_of_range)
        throw ParseError(line, "integer '" + token + "' out of 64-bit range");
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line, "'" + token + "' is not an integer");
    return v;
}

}  // namespace

Instance parse_instance(std::string_view text) {
    std::vector<std::pair<std::string, std::vector<Value>>> named;
    std::unordered_set<std::string> seen;
    const auto lines = split_lines(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::size_t line = li + 1;
        const auto tokens = tokenize(lines[li]);
        if (tokens.empty()) continue;
        if (tokens[0] != "set")
            throw ParseError(line, "expected 'set', got '" + tokens[0] + "'");
        if (tokens.size() < 2) throw ParseError(line, "missing label after 'set'");
        const std::string& label = tokens[1];
        if (!valid_label(label))
            throw ParseError(line, "invalid label '" + label + "' (allowed: [A-Za-z0-9_()-]+)");
        if (!seen.insert(label).second) throw ParseError(line, "duplicate label '" + label + "'");
        if (tokens.size() < 3 || tokens[2] != ":")
            throw ParseError(line, "expected ':' after label");
        if (tokens.size() == 3) throw ParseError(line, "empty set '" + label + "'");
        std::vector<Value> elems;
        elems.reserve(tokens.size() - 3);
        for (std::size_t i = 3; i < tokens.size(); ++i)
            elems.push_back(parse_int(tokens[i], line));
        named.emplace_back(label, std::move(elems));
    }
    if (named.empty()) throw ParseError(1, "no sets defined");
    return Instance::create(std::move(named));
}

std::string render_instance(const Instance& instance) {
    std::string out;
    for (std::size_t i = 0; i < instance.size(); ++i) {
        out += "set " + instance.label(i) + " :";
        for (Value x : instance.set(i)) out += " " + std::to_string(x);
        out += "\n";
    }
    return out;
}

Graph parse_graph(std::string_view text) {
    std::optional<Value> declared;
    std::vector<std::pair<Value, Value>> edges;
    std::set<std::pair<Value, Value>> seen;
    std::set<Value> endpoints;
    const auto lines = split_lines(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::size_t line = li + 1;
        const auto tokens = tokenize(lines[li]);
        if (tokens.empty()) continue;
        if (tokens[0] == "vertices") {
            if (declared) throw ParseError(line, "duplicate 'vertices' line");
            if (!edges.empty()) throw ParseError(line, "'vertices' must precede edges");
            if (tokens.size() != 2) throw ParseError(line, "expected 'vertices <n>'");
            const Value n = parse_int(tokens[1], line);
            if (n < 0) throw ParseError(line, "vertex count must be non-negative");
            declared = n;
        } else if (tokens[0] == "edge") {
            if (tokens.size() != 3) throw ParseError(line, "expected 'edge <u> <v>'");
            const Value u = parse_int(tokens[1], line);
            const Value v = parse_int(tokens[2], line);
            if (u < 1 || v < 1) throw ParseError(line, "vertex names must be positive");
            if (u == v) throw ParseError(line, "loop edge at " + std::to_string(u));
            if (declared && (u > *declared || v > *declared))
                throw ParseError(line, "edge endpoint exceeds declared vertex count");
            const auto key = std::minmax(u, v);
            if (!seen.insert({key.first, key.second}).second)
                throw ParseError(line, "duplicate edge {" + std::to_string(u) + ", " +
                                           std::to_string(v) + "}");
            edges.emplace_back(u, v);
            endpoints.insert(u);
            endpoints.insert(v);
        } else {
            throw ParseError(line, "expected 'vertices' or 'edge', got '" + tokens[0] + "'");
        }
    }
    std::vector<std::string> vertices;
    if (declared) {
        vertices.reserve(static_cast<std::size_t>(*declared));
        for (Value v = 1; v <= *declared; ++v) vertices.push_back(std::to_string(v));
    } else {
        for (Value v : endpoints) vertices.push_back(std::to_string(v));
    }
    std::vector<std::pair<std::string, std::string>> labeled;
    labeled.reserve(edges.size());
    for (const auto& [u, v] : edges)
        labeled.emplace_back(std::to_string(u), std::to_string(v));
    return Graph::create(std::move(vertices), std::move(labeled));
}

ParsedCertificate parse_certificate(std::string_view text) {
    ParsedCertificate parsed;
    const auto lines = split_lines(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::size_t line = li + 1;
        const auto tokens = tokenize(lines[li]);
        if (tokens.empty()) continue;
        if (tokens[0] == "tree") {
            if (tokens.size() != 4) throw ParseError(line, "expected 'tree <a> <b> <weight>'");
            if (!valid_label(tokens[1]) || !valid_label(tokens[2]))
                throw ParseError(line, "invalid label in tree edge");
            if (tokens[1] == tokens[2]) throw ParseError(line, "loop edge in certificate");
            parsed.edges.emplace_back(tokens[1], tokens[2], parse_int(tokens[3], line));
        } else if (tokens[0] == "budget") {
            if (parsed.budget) throw ParseError(line, "duplicate 'budget' line");
            if (tokens.size() != 2) throw ParseError(line, "expected 'budget <int>'");
            const Value k = parse_int(tokens[1], line);
            if (k < 0) throw ParseError(line, "budget must be non-negative");
            parsed.budget = k;
        } else {
            throw ParseError(line, "expected 'tree' or 'budget', got '" + tokens[0] + "'");
        }
    }
    return parsed;
}

std::string render_certificate(const Certificate& certificate) {
    std::string out;
    for (const auto& [edge, w] : certificate.tree.weights().canonical())
        out += "tree " + edge.first + " " + edge.second + " " + std::to_string(w) + "\n";
    out += "budget " + std::to_string(certificate.budget) + "\n";
    return out;
}

Certificate bind_certificate(const ParsedCertificate& parsed, const Instance& instance,
                             std::optional<Value> budget_override) {
    Value budget = 0;
    if (budget_override)
        budget = *budget_override;
    else if (parsed.budget)
        budget = *parsed.budget;
    else
        throw InvalidArgumentError("certificate has no budget and none was supplied");

    EdgeWeights weights;
    std::vector<std::pair<std::string, std::string>> edges;
    edges.reserve(parsed.edges.size());
    for (const auto& [a, b, w] : parsed.edges) {
        if (!instance.index_of(a))
            throw InvalidArgumentError("certificate names unknown label '" + a + "'");
        if (!instance.index_of(b))
            throw InvalidArgumentError("certificate names unknown label '" + b + "'");
        edges.emplace_back(a, b);
        weights.set(a, b, w);
    }
    Graph tree = Graph::create(instance.labels(), std::move(edges));
    return Certificate{WeightedTree::create(std::move(tree), std::move(weights)), budget};
}

std::string input_digest(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

nlohmann::json shifts_to_json(const ShiftVector& shifts) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [label, value] : shifts.entries()) j[label] = value;
    return j;
}

ShiftVector shifts_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InvalidArgumentError("shift vector JSON must be an object");
    std::vector<std::pair<std::string, Value>> entries;
    for (const auto& [label, value] : j.items()) {
        if (!value.is_number_integer())
            throw InvalidArgumentError("shift for '" + label + "' is not an integer");
        entries.emplace_back(label, value.get<Value>());
    }
    return ShiftVector::create(std::move(entries));
}

nlohmann::json RunReport::to_json() const {
    nlohmann::json j{{"command", command},
                     {"input_digest", digest},
                     {"method", method},
                     {"value", value},
                     {"shifts", shifts_to_json(shifts)},
                     {"explored", explored},
                     {"wall_ms", wall_ms},
                     {"optimal", optimal}};
    if (cover) j["cover"] = *cover;
    return j;
}

RunReport make_run_report(const std::string& command, const std::string& digest,
                          const Instance& instance, const SolveResult& result, double wall_ms) {
    const Objective check = evaluate(instance, result.shifts);
    if (check.value != result.value)
        throw Error("internal error: result value " + std::to_string(result.value) +
                    " does not match re-evaluation " + std::to_string(check.value));
    RunReport report;
    report.command = command;
    report.digest = digest;
    report.method = std::string(method_name(result.method));
    report.value = result.value;
    report.shifts = result.shifts;
    report.explored = result.explored;
    report.wall_ms = wall_ms;
    report.optimal = result.optimal;
    return report;
}

}  // namespace minunion
