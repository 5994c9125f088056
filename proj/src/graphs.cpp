#include "minunion/graphs.hpp"

#include <algorithm>
#include <limits>

namespace minunion {

Graph Graph::create(std::vector<std::string> vertices,
                    std::vector<std::pair<std::string, std::string>> edges) {
    Graph g;
    g.vertices_.reserve(vertices.size());
    for (auto& v : vertices) {
        if (v.empty()) throw InvalidArgumentError("empty vertex label");
        if (g.index_.count(v)) throw InvalidArgumentError("duplicate vertex '" + v + "'");
        g.index_.emplace(v, g.vertices_.size());
        g.vertices_.push_back(std::move(v));
    }
    g.adj_.resize(g.vertices_.size());
    g.edges_.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        const auto ia = g.index_.find(a);
        const auto ib = g.index_.find(b);
        if (ia == g.index_.end()) throw InvalidArgumentError("edge endpoint '" + a + "' is not a vertex");
        if (ib == g.index_.end()) throw InvalidArgumentError("edge endpoint '" + b + "' is not a vertex");
        if (ia->second == ib->second)
            throw InvalidArgumentError("loop edge at '" + a + "' is not allowed");
        g.edges_.emplace_back(std::min(ia->second, ib->second), std::max(ia->second, ib->second));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    if (std::adjacent_find(g.edges_.begin(), g.edges_.end()) != g.edges_.end())
        throw InvalidArgumentError("duplicate edge");
    for (const auto& [i, j] : g.edges_) {
        g.adj_[i].push_back(j);
        g.adj_[j].push_back(i);
    }
    return g;
}

std::vector<std::pair<std::string, std::string>> Graph::edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(edges_.size());
    for (const auto& [i, j] : edges_) out.emplace_back(vertices_[i], vertices_[j]);
    return out;
}

bool Graph::has_vertex(const std::string& v) const { return index_.count(v) != 0; }

bool Graph::has_edge(const std::string& a, const std::string& b) const {
    const auto ia = index_.find(a);
    const auto ib = index_.find(b);
    if (ia == index_.end() || ib == index_.end()) return false;
    const auto key = std::make_pair(std::min(ia->second, ib->second),
                                    std::max(ia->second, ib->second));
    return std::binary_search(edges_.begin(), edges_.end(), key);
}

std::size_t Graph::index_of(const std::string& v) const {
    const auto it = index_.find(v);
    if (it == index_.end()) throw InvalidArgumentError("unknown vertex '" + v + "'");
    return it->second;
}

void EdgeWeights::set(const std::string& b, const std::string& c, Value w) {
    if (b == c) throw InvalidArgumentError("weight on loop edge at '" + b + "'");
    if (b < c)
        canonical_[{b, c}] = w;
    else
        canonical_[{c, b}] = checked_neg(w);
}

bool EdgeWeights::has(const std::string& b, const std::string& c) const {
    return canonical_.count(b < c ? std::make_pair(b, c) : std::make_pair(c, b)) != 0;
}

Value EdgeWeights::get(const std::string& b, const std::string& c) const {
    const auto it = canonical_.find(b < c ? std::make_pair(b, c) : std::make_pair(c, b));
    if (it == canonical_.end())
        throw InvalidArgumentError("no weight for edge {" + b + ", " + c + "}");
    return b < c ? it->second : checked_neg(it->second);
}

namespace {

// Every edge of g weighted, no weights on non-edges.
void check_weight_coverage(const Graph& g, const EdgeWeights& weights) {
    for (const auto& [a, b] : g.edges())
        if (!weights.has(a, b))
            throw InvalidArgumentError("missing weight for edge {" + a + ", " + b + "}");
    if (weights.size() != g.edge_count())
        throw InvalidArgumentError("weights assigned to non-edges");
}

std::vector<std::size_t> bfs_component(const Graph& g, std::size_t start) {
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<std::size_t> queue{start};
    seen[start] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (std::size_t w : g.neighbors(queue[qi]))
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    return queue;
}

}  // namespace

WeightedTree WeightedTree::create(Graph tree, EdgeWeights weights) {
    if (tree.vertex_count() == 0) throw InvalidArgumentError("tree must have at least one vertex");
    if (tree.edge_count() + 1 != tree.vertex_count())
        throw InvalidArgumentError("not a tree: " + std::to_string(tree.vertex_count()) +
                                   " vertices but " + std::to_string(tree.edge_count()) + " edges");
    if (find_disconnection(tree)) throw InvalidArgumentError("not a tree: disconnected");
    check_weight_coverage(tree, weights);
    return WeightedTree(std::move(tree), std::move(weights));
}

namespace {

bool sorted_intersects(const std::vector<Value>& a, const std::vector<Value>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return false;
}

}  // namespace

Graph intersection_graph(const Instance& family) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (sorted_intersects(family.set(i), family.set(j)))
                edges.emplace_back(family.label(i), family.label(j));
    return Graph::create(family.labels(), std::move(edges));
}

Graph intersection_graph(const Instance& instance, const ShiftVector& shifts) {
    return intersection_graph(apply_shifts(instance, shifts));
}

std::optional<Disconnection> find_disconnection(const Graph& g) {
    if (g.vertex_count() == 0) throw InvalidArgumentError("graph has no vertices");
    std::size_t start = 0;
    for (std::size_t v = 1; v < g.vertex_count(); ++v)
        if (g.vertices()[v] < g.vertices()[start]) start = v;
    const std::vector<std::size_t> component = bfs_component(g, start);
    if (component.size() == g.vertex_count()) return std::nullopt;

    std::vector<char> in_b(g.vertex_count(), 0);
    for (std::size_t v : component) in_b[v] = 1;
    std::vector<std::string> side_b, side_c;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        (in_b[v] ? side_b : side_c).push_back(g.vertices()[v]);
    std::sort(side_b.begin(), side_b.end());
    std::sort(side_c.begin(), side_c.end());
    return Disconnection{std::move(side_b), std::move(side_c)};
}

Graph spanning_tree(const Graph& g) {
    if (g.vertex_count() == 0) throw InvalidArgumentError("graph has no vertices");
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<std::size_t> queue{0};
    seen[0] = 1;
    std::vector<std::pair<std::string, std::string>> tree_edges;
    tree_edges.reserve(g.vertex_count() - 1);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const std::size_t v = queue[qi];
        for (std::size_t w : g.neighbors(v)) {
            if (seen[w]) continue;
            seen[w] = 1;
            tree_edges.emplace_back(g.vertices()[v], g.vertices()[w]);
            queue.push_back(w);
        }
    }
    if (queue.size() != g.vertex_count()) {
        auto witness = find_disconnection(g);
        throw DisconnectedError(witness->first, witness->second);
    }
    return Graph::create(g.vertices(), std::move(tree_edges));
}

namespace detail {

std::vector<std::pair<std::size_t, std::size_t>> prufer_decode_indices(
    std::size_t n, const std::vector<std::size_t>& code) {
    if (n < 2) throw InvalidArgumentError("Prüfer decode requires at least 2 vertices");
    if (code.size() != n - 2)
        throw InvalidArgumentError("Prüfer code must have length " + std::to_string(n - 2) +
                                   ", got " + std::to_string(code.size()));
    for (std::size_t c : code)
        if (c >= n) throw InvalidArgumentError("Prüfer code entry out of range");

    std::vector<std::size_t> degree(n, 1);
    for (std::size_t c : code) ++degree[c];

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(n - 1);
    std::size_t ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    std::size_t leaf = ptr;
    for (std::size_t c : code) {
        edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
        --degree[leaf];
        if (--degree[c] == 1 && c < ptr) {
            leaf = c;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(std::min(leaf, n - 1), std::max(leaf, n - 1));
    return edges;
}

}  // namespace detail

Graph prufer_decode(const std::vector<std::string>& alphabet,
                    const std::vector<std::string>& code) {
    std::unordered_map<std::string, std::size_t> index;
    for (const auto& label : alphabet) {
        if (!index.emplace(label, index.size()).second)
            throw InvalidArgumentError("duplicate label '" + label + "' in alphabet");
    }
    std::vector<std::size_t> code_idx;
    code_idx.reserve(code.size());
    for (const auto& label : code) {
        const auto it = index.find(label);
        if (it == index.end())
            throw InvalidArgumentError("code entry '" + label + "' is not in the alphabet");
        code_idx.push_back(it->second);
    }
    const auto edges = detail::prufer_decode_indices(alphabet.size(), code_idx);
    std::vector<std::pair<std::string, std::string>> labeled;
    labeled.reserve(edges.size());
    for (const auto& [i, j] : edges) labeled.emplace_back(alphabet[i], alphabet[j]);
    return Graph::create(alphabet, std::move(labeled));
}

namespace {

struct Propagation {
    bool feasible = true;
    std::vector<Value> potential;           // defined for every vertex
    std::vector<std::size_t> parent;        // BFS forest, self-parent at roots
    std::size_t bad_u = 0, bad_v = 0;       // inconsistent non-tree edge, if any
};

Propagation propagate(const Graph& g, const EdgeWeights& weights, std::size_t root) {
    Propagation p;
    const std::size_t n = g.vertex_count();
    p.potential.assign(n, 0);
    p.parent.assign(n, std::numeric_limits<std::size_t>::max());
    std::vector<char> seen(n, 0);

    std::vector<std::size_t> order;
    order.push_back(root);
    for (std::size_t v = 0; v < n; ++v) order.push_back(v);

    for (std::size_t start : order) {
        if (seen[start]) continue;
        seen[start] = 1;
        p.parent[start] = start;
        std::vector<std::size_t> queue{start};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const std::size_t v = queue[qi];
            for (std::size_t w : g.neighbors(v)) {
                const Value pi = weights.get(g.vertices()[v], g.vertices()[w]);  // t_v - t_w
                if (!seen[w]) {
                    seen[w] = 1;
                    p.parent[w] = v;
                    p.potential[w] = checked_sub(p.potential[v], pi);
                    queue.push_back(w);
                } else if (checked_sub(p.potential[v], p.potential[w]) != pi) {
                    p.feasible = false;
                    p.bad_u = v;
                    p.bad_v = w;
                    return p;
                }
            }
        }
    }
    return p;
}

// Closed walk u -> ... -> lca -> ... -> v -> u through the BFS forest plus
// the edge (v, u).
std::vector<std::string> violated_cycle(const Graph& g, const Propagation& p, std::size_t u,
                                        std::size_t v) {
    auto chain = [&](std::size_t x) {
        std::vector<std::size_t> c{x};
        while (p.parent[c.back()] != c.back()) c.push_back(p.parent[c.back()]);
        return c;
    };
    const std::vector<std::size_t> cu = chain(u);
    const std::vector<std::size_t> cv = chain(v);
    std::vector<std::size_t> pos(g.vertex_count(), std::numeric_limits<std::size_t>::max());
    for (std::size_t i = 0; i < cu.size(); ++i) pos[cu[i]] = i;
    std::size_t meet = 0;
    while (pos[cv[meet]] == std::numeric_limits<std::size_t>::max()) ++meet;

    std::vector<std::string> cycle;
    for (std::size_t i = 0; i <= pos[cv[meet]]; ++i) cycle.push_back(g.vertices()[cu[i]]);
    for (std::size_t i = meet; i-- > 0;) cycle.push_back(g.vertices()[cv[i]]);
    cycle.push_back(g.vertices()[u]);
    return cycle;
}

Value cycle_weight(const EdgeWeights& weights, const std::vector<std::string>& cycle) {
    Value sum = 0;
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i)
        sum = checked_add(sum, weights.get(cycle[i], cycle[i + 1]));
    return sum;
}

}  // namespace

bool weight_system_feasible(const Graph& g, const EdgeWeights& weights) {
    check_weight_coverage(g, weights);
    if (g.vertex_count() == 0) return true;
    return propagate(g, weights, 0).feasible;
}

ShiftVector solve_weight_system(const Graph& g, const EdgeWeights& weights,
                                const std::string& anchor_label, Value anchor_value) {
    check_weight_coverage(g, weights);
    const std::size_t root = g.index_of(anchor_label);
    if (auto witness = find_disconnection(g))
        throw DisconnectedError(witness->first, witness->second);
    Propagation p = propagate(g, weights, root);
    if (!p.feasible) {
        const auto cycle = violated_cycle(g, p, p.bad_u, p.bad_v);
        throw InfeasibleSystemError(cycle, cycle_weight(weights, cycle));
    }
    std::vector<Value> values;
    values.reserve(g.vertex_count());
    const Value base = p.potential[root];
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        values.push_back(checked_add(checked_sub(p.potential[v], base), anchor_value));
    return ShiftVector::create(g.vertices(), values);
}

}  // namespace minunion
