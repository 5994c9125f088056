#include "minunion/reductions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace minunion {

Ruler ruler(Value n) {
    if (n < 1) throw InvalidArgumentError("ruler size must be positive");
    Ruler r;
    r.n = n;
    r.elements.reserve(static_cast<std::size_t>(n));
    const Value n2 = checked_mul(n, n);
    for (Value i = 1; i <= n; ++i)
        r.elements.push_back(checked_add(checked_mul(i - 1, n2), checked_mul(i, i)));
    return r;
}

bool is_golomb(const std::vector<Value>& elements) {
    std::vector<Value> r = elements;
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    std::unordered_set<Value> seen;
    seen.reserve(r.size() * r.size() / 2 + 1);
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j)
            if (!seen.insert(checked_sub(r[j], r[i])).second) return false;
    return true;
}

Value Rational::as_integer() const {
    if (den != 1) throw InvalidArgumentError("rational " + str() + " is not an integer");
    return num;
}

std::string Rational::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

bool abs_within(Value v, const Rational& bound) {
    using i128 = __int128;
    const i128 magnitude = v < 0 ? -static_cast<i128>(v) : static_cast<i128>(v);
    return magnitude * bound.den <= static_cast<i128>(bound.num);
}

Rational aux_bound(Value x) {
    if (x < 0) throw InvalidArgumentError("aux bound argument must be non-negative");
    const Value a = checked_add(x, 8);
    const Value cube = checked_mul(checked_mul(a, a), a);
    const Value num = checked_sub(checked_add(cube, checked_mul(32, x)), 256);
    const Value g = std::gcd(num, Value{64});
    return Rational{num / g, 64 / g};
}

bool is_aux(const Instance& instance) {
    std::size_t max_card = 0;
    for (const auto& s : instance.sets()) max_card = std::max(max_card, s.size());
    const Rational bound = aux_bound(static_cast<Value>(max_card));
    for (const auto& s : instance.sets())
        for (Value x : s)
            if (!abs_within(x, bound)) return false;
    return true;
}

namespace {

// Vertex names sort numerically when all of them parse as integers,
// lexicographically otherwise.
std::vector<std::string> ordered_vertex_names(const Graph& g) {
    std::vector<std::string> names = g.vertices();
    std::vector<Value> parsed(names.size());
    bool numeric = !names.empty();
    for (std::size_t i = 0; i < names.size(); ++i) {
        const auto& s = names[i];
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), parsed[i]);
        if (ec != std::errc{} || ptr != s.data() + s.size()) {
            numeric = false;
            break;
        }
    }
    if (numeric) {
        std::vector<std::size_t> order(names.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return parsed[a] < parsed[b]; });
        std::vector<std::string> out;
        out.reserve(names.size());
        for (std::size_t i : order) out.push_back(names[i]);
        return out;
    }
    std::sort(names.begin(), names.end());
    return names;
}

std::string render_values(const std::vector<Value>& values) {
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(values[i]);
    }
    return out + "}";
}

}  // namespace

ReducedInstance encode_vc(const Graph& g, Value k) {
    if (k < 0) throw InvalidArgumentError("cover budget must be non-negative");
    ReducedInstance ri;
    ri.source = g;
    ri.k = k;
    ri.vertex_names = ordered_vertex_names(g);
    const Value n = static_cast<Value>(ri.vertex_names.size());
    ri.n = n;
    ri.trivially_yes = k >= n;
    const Value base = checked_add(n, 4);
    ri.s = checked_mul(base, checked_mul(base, base));
    ri.ruler = ruler(base);

    std::unordered_map<std::string, Value> number;
    for (std::size_t i = 0; i < ri.vertex_names.size(); ++i)
        number.emplace(ri.vertex_names[i], static_cast<Value>(i) + 1);

    const auto& r = ri.ruler.elements;
    const Value sn = checked_add(ri.s, n);
    std::vector<Value> x_root;
    x_root.reserve(static_cast<std::size_t>(4 * n + 8));
    for (Value v = 1; v <= n; ++v) x_root.push_back(checked_sub(v, sn));
    for (Value e : r) x_root.push_back(checked_sub(e, ri.s));
    for (Value e : r) x_root.push_back(checked_add(e, n));
    for (Value v = 1; v <= n; ++v) x_root.push_back(checked_add(v, sn));
    std::sort(x_root.begin(), x_root.end());

    std::vector<std::pair<Value, Value>> numbered;
    numbered.reserve(g.edge_count());
    for (const auto& [a, b] : g.edges()) {
        const Value na = number.at(a);
        const Value nb = number.at(b);
        numbered.emplace_back(std::min(na, nb), std::max(na, nb));
    }
    std::sort(numbered.begin(), numbered.end());

    std::vector<std::pair<std::string, std::vector<Value>>> named;
    named.reserve(numbered.size() + 1);
    named.emplace_back(kRootLabel, x_root);
    for (const auto& [y, z] : numbered) {
        std::string label = "e(" + std::to_string(y) + "-" + std::to_string(z) + ")";
        std::vector<Value> x_e;
        x_e.reserve(r.size() + 2);
        x_e.push_back(checked_sub(z, n));
        x_e.insert(x_e.end(), r.begin(), r.end());
        x_e.push_back(checked_add(y, ri.s));
        ri.edges.push_back({label, y, z});
        named.emplace_back(std::move(label), std::move(x_e));
    }
    ri.instance = Instance::create(std::move(named));
    ri.threshold = checked_add(static_cast<Value>(x_root.size()), k);
    return ri;
}

ShiftVector construct_solution_from_cover(const ReducedInstance& ri,
                                          const std::vector<Value>& cover) {
    std::unordered_set<Value> covered(cover.begin(), cover.end());
    for (Value v : covered)
        if (v < 1 || v > ri.n)
            throw InvalidArgumentError("cover vertex " + std::to_string(v) + " out of range");
    for (const auto& e : ri.edges)
        if (!covered.count(e.y) && !covered.count(e.z))
            throw InvalidArgumentError("cover misses edge " + e.label);

    std::vector<std::pair<std::string, Value>> entries;
    entries.reserve(ri.edges.size() + 1);
    entries.emplace_back(kRootLabel, 0);
    for (const auto& e : ri.edges)
        entries.emplace_back(e.label, covered.count(e.y) ? checked_neg(ri.s) : ri.n);
    return ShiftVector::create(std::move(entries));
}

std::vector<Value> decode_cover(const ReducedInstance& ri, const ShiftVector& shifts) {
    const Objective objective = evaluate(ri.instance, shifts);
    const Value k = objective.value - static_cast<Value>(ri.root_set().size());
    if (k >= ri.n) {
        std::vector<Value> all;
        all.reserve(static_cast<std::size_t>(ri.n));
        for (Value v = 1; v <= ri.n; ++v) all.push_back(v);
        return all;
    }
    const Value t_root = shifts.at(kRootLabel);
    const std::unordered_set<Value> root(ri.root_set().begin(), ri.root_set().end());
    std::vector<Value> cover;
    for (const auto& e : ri.edges) {
        const Value t_e = checked_sub(shifts.at(e.label), t_root);
        for (Value x : ri.instance.set(e.label)) {
            const Value moved = checked_add(x, t_e);
            if (!root.count(moved) && moved >= 1 && moved <= ri.n) cover.push_back(moved);
        }
    }
    std::sort(cover.begin(), cover.end());
    cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
    return cover;
}

GadgetReport check_gadget_lemmas(const ReducedInstance& ri) {
    GadgetReport report;
    const std::unordered_set<Value> root(ri.root_set().begin(), ri.root_set().end());

    auto leftover = [&](const std::vector<Value>& xs, Value t) {
        std::vector<Value> out;
        for (Value x : xs) {
            const Value moved = checked_add(x, t);
            if (!root.count(moved)) out.push_back(moved);
        }
        return out;
    };

    for (const auto& e : ri.edges) {
        const auto& x_e = ri.instance.set(e.label);
        ++report.checks;
        if (const auto got = leftover(x_e, checked_neg(ri.s)); got != std::vector<Value>{e.y})
            report.violations.push_back("edge " + e.label + ": (X_e - s) \\ X_root = " +
                                        render_values(got) + ", expected {" +
                                        std::to_string(e.y) + "}");
        ++report.checks;
        if (const auto got = leftover(x_e, ri.n); got != std::vector<Value>{e.z})
            report.violations.push_back("edge " + e.label + ": (X_e + n) \\ X_root = " +
                                        render_values(got) + ", expected {" +
                                        std::to_string(e.z) + "}");
    }

    const Value window = checked_mul(2, checked_add(ri.s, ri.n));
    for (Value t = checked_neg(window); t <= window; ++t) {
        ++report.checks;
        Value outside = 0;
        for (Value r : ri.ruler.elements) outside += !root.count(checked_add(r, t));
        if (outside < ri.n && t != checked_neg(ri.s) && t != ri.n)
            report.violations.push_back(
                "ruler translate t=" + std::to_string(t) + " leaves only " +
                std::to_string(outside) + " elements outside X_root (needs >= " +
                std::to_string(ri.n) + ")");
    }
    return report;
}

}  // namespace minunion
