#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minunion/core.hpp"

namespace minunion {

// Undirected simple graph over string-labeled vertices.
class Graph {
public:
    Graph() = default;

    // Rejects duplicate vertices, unknown endpoints, loops, duplicate edges.
    static Graph create(std::vector<std::string> vertices,
                        std::vector<std::pair<std::string, std::string>> edges);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }

    // Index pairs (i, j) with i < j, sorted ascending.
    const std::vector<std::pair<std::size_t, std::size_t>>& edge_indices() const {
        return edges_;
    }
    std::vector<std::pair<std::string, std::string>> edges() const;

    bool has_vertex(const std::string& v) const;
    bool has_edge(const std::string& a, const std::string& b) const;
    std::size_t index_of(const std::string& v) const;
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    std::vector<std::string> vertices_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<std::size_t>> adj_;
};

// Antisymmetric edge weights.  Each edge is stored once, lexicographically
// smaller label first; the sign flips on reversed lookup.
class EdgeWeights {
public:
    void set(const std::string& b, const std::string& c, Value w);
    bool has(const std::string& b, const std::string& c) const;
    Value get(const std::string& b, const std::string& c) const;
    std::size_t size() const { return canonical_.size(); }
    const std::map<std::pair<std::string, std::string>, Value>& canonical() const {
        return canonical_;
    }

    friend bool operator==(const EdgeWeights&, const EdgeWeights&) = default;

private:
    std::map<std::pair<std::string, std::string>, Value> canonical_;
};

// A tree together with antisymmetric weights on exactly its edges.
class WeightedTree {
public:
    WeightedTree() = default;

    static WeightedTree create(Graph tree, EdgeWeights weights);

    const Graph& tree() const { return tree_; }
    const EdgeWeights& weights() const { return weights_; }
    Value weight(const std::string& b, const std::string& c) const { return weights_.get(b, c); }

private:
    WeightedTree(Graph tree, EdgeWeights weights)
        : tree_(std::move(tree)), weights_(std::move(weights)) {}

    Graph tree_;
    EdgeWeights weights_;
};

// Vertex set = labels; edge {b, c} present iff the sets intersect.
Graph intersection_graph(const Instance& family);
Graph intersection_graph(const Instance& instance, const ShiftVector& shifts);

// Partition (B, C) with no crossing edge; B is the component of the
// lexicographically smallest vertex, both sides sorted.  Empty result means
// the graph is connected.
using Disconnection = std::pair<std::vector<std::string>, std::vector<std::string>>;
std::optional<Disconnection> find_disconnection(const Graph& g);

// A tree on the same vertex set whose edges are a subset of g's edges.
// Throws DisconnectedError (with witness) on disconnected input.
Graph spanning_tree(const Graph& g);

// The unique tree over `alphabet` whose Prüfer code (relative to the
// alphabet's order) is `code`; code length must be |alphabet| - 2.
Graph prufer_decode(const std::vector<std::string>& alphabet,
                    const std::vector<std::string>& code);

// True iff the difference system t_b - t_c = w(b, c) over all edges has a
// solution.  Decided by per-component propagation plus consistency checks on
// non-tree edges.
bool weight_system_feasible(const Graph& g, const EdgeWeights& weights);

// The unique solution with t[anchor_label] = anchor_value.  Throws
// DisconnectedError or InfeasibleSystemError (with a violated cycle).
ShiftVector solve_weight_system(const Graph& g, const EdgeWeights& weights,
                                const std::string& anchor_label, Value anchor_value);

namespace detail {
// Tree edges for a Prüfer code over vertex indices 0..n-1 (code length n-2).
// Returned pairs have the smaller index first.
std::vector<std::pair<std::size_t, std::size_t>> prufer_decode_indices(
    std::size_t n, const std::vector<std::size_t>& code);
}  // namespace detail

}  // namespace minunion
