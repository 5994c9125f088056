#include <doctest.h>

#include <random>
#include <set>

#include "minunion/corpus.hpp"
#include "minunion/graphs.hpp"
#include "test_util.hpp"

using namespace minunion;

namespace {

Graph graph(std::vector<std::string> vertices,
            std::vector<std::pair<std::string, std::string>> edges) {
    return Graph::create(std::move(vertices), std::move(edges));
}

}  // namespace

TEST_CASE("graph construction enforces simplicity") {
    const Graph g = graph({"a", "b", "c"}, {{"b", "a"}, {"b", "c"}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge("a", "b"));
    CHECK(g.has_edge("b", "a"));
    CHECK_FALSE(g.has_edge("a", "c"));

    CHECK_THROWS_AS(graph({"a", "a"}, {}), InvalidArgumentError);
    CHECK_THROWS_AS(graph({"a"}, {{"a", "a"}}), InvalidArgumentError);
    CHECK_THROWS_AS(graph({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InvalidArgumentError);
    CHECK_THROWS_AS(graph({"a"}, {{"a", "x"}}), InvalidArgumentError);
}

TEST_CASE("edge weights are antisymmetric with canonical storage") {
    EdgeWeights w;
    w.set("b", "a", 7);
    CHECK(w.get("b", "a") == 7);
    CHECK(w.get("a", "b") == -7);
    CHECK(w.size() == 1);
    CHECK(w.canonical().begin()->first == std::make_pair(std::string("a"), std::string("b")));
    CHECK(w.canonical().begin()->second == -7);
    CHECK_THROWS_AS(w.get("a", "c"), InvalidArgumentError);
    CHECK_THROWS_AS(w.set("a", "a", 1), InvalidArgumentError);
}

TEST_CASE("weighted tree validation") {
    EdgeWeights w;
    w.set("a", "b", 1);
    w.set("b", "c", 2);
    CHECK_NOTHROW(WeightedTree::create(graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}), w));

    // cycle: 3 edges on 3 vertices
    EdgeWeights w3 = w;
    w3.set("a", "c", 0);
    CHECK_THROWS_AS(
        WeightedTree::create(graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}), w3),
        InvalidArgumentError);

    // missing weight
    EdgeWeights partial;
    partial.set("a", "b", 1);
    CHECK_THROWS_AS(
        WeightedTree::create(graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}), partial),
        InvalidArgumentError);

    // disconnected with matching edge count: two components, one with a cycle
    EdgeWeights wd;
    wd.set("a", "b", 1);
    wd.set("b", "c", 1);
    wd.set("a", "c", 1);
    CHECK_THROWS_AS(WeightedTree::create(graph({"a", "b", "c", "d"},
                                               {{"a", "b"}, {"b", "c"}, {"a", "c"}}),
                                         wd),
                    InvalidArgumentError);
}

TEST_CASE("intersection graph examples") {
    const Instance disjoint = Instance::create({{"a", {0}}, {"b", {5}}});
    CHECK(intersection_graph(disjoint).edge_count() == 0);

    const Instance touching = Instance::create({{"a", {0, 1}}, {"b", {1, 2}}});
    const Graph g = intersection_graph(touching);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge("a", "b"));
}

TEST_CASE("intersection graph matches the quadratic oracle") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        CorpusParams params;
        params.min_labels = 4;
        params.max_labels = 4;
        const Instance inst = random_instance(rng, params);
        const Graph g = intersection_graph(inst);
        for (std::size_t i = 0; i < inst.size(); ++i)
            for (std::size_t j = i + 1; j < inst.size(); ++j)
                CHECK(g.has_edge(inst.label(i), inst.label(j)) ==
                      testutil::naive_intersects(inst.set(i), inst.set(j)));
    }
}

TEST_CASE("intersection graph of a shifted family") {
    const Instance inst = Instance::create({{"a", {0, 1}}, {"b", {10, 11}}});
    CHECK(intersection_graph(inst, ShiftVector::create({{"a", 0}, {"b", 0}})).edge_count() == 0);
    CHECK(intersection_graph(inst, ShiftVector::create({{"a", 0}, {"b", -10}})).edge_count() == 1);
}

TEST_CASE("find_disconnection examples") {
    const auto split = find_disconnection(graph({"b", "a"}, {}));
    REQUIRE(split.has_value());
    CHECK(split->first == std::vector<std::string>{"a"});  // component of lex-smallest vertex
    CHECK(split->second == std::vector<std::string>{"b"});

    CHECK_FALSE(find_disconnection(graph({"a", "b"}, {{"a", "b"}})).has_value());
}

TEST_CASE("find_disconnection agrees with a union-find oracle") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = random_graph(rng, 6, 8);
        const auto split = find_disconnection(g);
        const std::size_t components = testutil::component_count(g);
        CHECK(split.has_value() == (components > 1));
        if (split) {
            CHECK_FALSE(split->first.empty());
            CHECK_FALSE(split->second.empty());
            CHECK(split->first.size() + split->second.size() == g.vertex_count());
            const std::set<std::string> b(split->first.begin(), split->first.end());
            for (const auto& [u, v] : g.edges()) {
                const bool cross = b.count(u) != b.count(v);
                CHECK_FALSE(cross);
            }
        }
    }
}

TEST_CASE("spanning tree of a tree is the tree itself") {
    const Graph t = graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"b", "d"}});
    CHECK(spanning_tree(t) == t);
}

TEST_CASE("spanning tree of a triangle") {
    const Graph g = graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    const Graph t = spanning_tree(g);
    CHECK(t.vertex_count() == 3);
    CHECK(t.edge_count() == 2);
    for (const auto& [u, v] : t.edges()) CHECK(g.has_edge(u, v));
    CHECK(testutil::is_tree_shape(t));
}

TEST_CASE("spanning tree properties on random connected graphs") {
    std::mt19937_64 rng(31);
    int done = 0;
    while (done < 100) {
        const Graph g = random_graph(rng, 6, 12);
        if (testutil::component_count(g) != 1) continue;
        ++done;
        const Graph t = spanning_tree(g);
        CHECK(testutil::is_tree_shape(t));
        CHECK(t.vertices() == g.vertices());
        for (const auto& [u, v] : t.edges()) CHECK(g.has_edge(u, v));
    }
}

TEST_CASE("spanning tree rejects disconnected graphs with a witness") {
    try {
        spanning_tree(graph({"a", "b", "c"}, {{"a", "b"}}));
        FAIL("expected DisconnectedError");
    } catch (const DisconnectedError& e) {
        CHECK(e.side_b() == std::vector<std::string>{"a", "b"});
        CHECK(e.side_c() == std::vector<std::string>{"c"});
    }
}

TEST_CASE("prufer decode: base cases and errors") {
    const Graph two = prufer_decode({"a", "b"}, {});
    CHECK(two.edge_count() == 1);
    CHECK(two.has_edge("a", "b"));

    CHECK_THROWS_AS(prufer_decode({"a"}, {}), InvalidArgumentError);
    CHECK_THROWS_AS(prufer_decode({"a", "b", "c"}, {"x"}), InvalidArgumentError);
    CHECK_THROWS_AS(prufer_decode({"a", "b", "c"}, {"a", "b"}), InvalidArgumentError);
    CHECK_THROWS_AS(prufer_decode({"a", "a", "b"}, {"a"}), InvalidArgumentError);
}

TEST_CASE("prufer decode enumerates exactly the labeled trees") {
    // n=3: 3 codes, 3 distinct trees; n=4: 16; n=5: 125
    const std::vector<std::string> alphabet{"a", "b", "c", "d", "e"};
    for (std::size_t n = 3; n <= 5; ++n) {
        const std::vector<std::string> labels(alphabet.begin(), alphabet.begin() + n);
        std::set<std::string> seen;
        std::vector<std::size_t> digits(n - 2, 0);
        std::size_t total = 0;
        for (;;) {
            std::vector<std::string> code;
            for (std::size_t d : digits) code.push_back(labels[d]);
            const Graph t = prufer_decode(labels, code);
            CHECK(testutil::is_tree_shape(t));
            seen.insert(testutil::edge_fingerprint(t));
            ++total;
            std::size_t pos = 0;
            while (pos < digits.size() && ++digits[pos] == n) digits[pos++] = 0;
            if (pos == digits.size()) break;
        }
        std::size_t expect = 1;
        for (std::size_t e = 0; e + 2 < n; ++e) expect *= n;
        CHECK(total == expect);
        CHECK(seen.size() == expect);
    }
}

TEST_CASE("prufer decode round-trips against a test-side encoder") {
    std::mt19937_64 rng(37);
    const std::size_t n = 6;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::size_t> code(n - 2);
        for (auto& c : code) c = testutil::draw(rng, n);
        const auto edges = detail::prufer_decode_indices(n, code);
        CHECK(testutil::prufer_encode_indices(n, edges) == code);
    }
}

TEST_CASE("weight systems on trees are always feasible") {
    EdgeWeights w;
    w.set("a", "b", 41);
    w.set("b", "c", -17);
    CHECK(weight_system_feasible(graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}), w));
}

TEST_CASE("triangle cycle weight decides feasibility") {
    const Graph g = graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    EdgeWeights bad;
    bad.set("a", "b", 1);
    bad.set("b", "c", 1);
    bad.set("c", "a", 1);
    CHECK_FALSE(weight_system_feasible(g, bad));

    EdgeWeights good;
    good.set("a", "b", 1);
    good.set("b", "c", 1);
    good.set("c", "a", -2);
    CHECK(weight_system_feasible(g, good));
}

TEST_CASE("feasibility matches brute-force existence over a bounded box") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 2 + testutil::draw(rng, 3);  // 2..4 vertices
        const Graph g = random_graph(rng, n, 6);
        EdgeWeights w;
        for (const auto& [a, b] : g.edges())
            w.set(a, b, static_cast<Value>(testutil::draw(rng, 5)) - 2);

        // Oracle: per component, anchor the smallest member at 0 and scan a
        // box wide enough to contain any anchored solution.
        const Value bound = 3 * static_cast<Value>(n);
        testutil::UnionFind uf(n);
        for (const auto& [i, j] : g.edge_indices()) uf.unite(i, j);
        bool oracle_feasible = true;
        for (std::size_t root = 0; root < n && oracle_feasible; ++root) {
            std::vector<std::size_t> members;
            for (std::size_t v = 0; v < n; ++v)
                if (uf.find(v) == uf.find(root)) members.push_back(v);
            if (members.front() != root) continue;  // each component handled once
            std::vector<std::size_t> slot(n, 0);
            for (std::size_t s = 0; s < members.size(); ++s) slot[members[s]] = s;
            std::vector<Value> assign(members.size(), -bound);
            assign[0] = 0;  // anchor
            bool found = false;
            for (;;) {
                bool ok = true;
                for (const auto& [i, j] : g.edge_indices()) {
                    if (uf.find(i) != uf.find(root)) continue;
                    if (assign[slot[i]] - assign[slot[j]] !=
                        w.get(g.vertices()[i], g.vertices()[j])) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    found = true;
                    break;
                }
                std::size_t pos = 1;  // keep the anchor fixed
                while (pos < assign.size() && ++assign[pos] > bound) assign[pos++] = -bound;
                if (pos == assign.size()) break;
            }
            oracle_feasible = found;
        }
        CHECK(weight_system_feasible(g, w) == oracle_feasible);
    }
}

TEST_CASE("solve_weight_system examples") {
    EdgeWeights w;
    w.set("a", "b", 3);
    const ShiftVector t =
        solve_weight_system(graph({"a", "b"}, {{"a", "b"}}), w, "a", 0);
    CHECK(t == ShiftVector::create({{"a", 0}, {"b", -3}}));

    EdgeWeights zeros;
    zeros.set("r", "x", 0);
    zeros.set("r", "y", 0);
    const ShiftVector all_zero =
        solve_weight_system(graph({"r", "x", "y"}, {{"r", "x"}, {"r", "y"}}), zeros, "r", 0);
    for (const auto& [label, v] : all_zero.entries()) CHECK(v == 0);
}

TEST_CASE("solve_weight_system satisfies every edge equation") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        // random potentials on a random connected graph induce a feasible system
        const std::size_t n = 3 + testutil::draw(rng, 4);
        Graph g = random_graph(rng, n, 2 * n);
        if (testutil::component_count(g) != 1) continue;
        std::vector<Value> potential(n);
        for (auto& p : potential) p = static_cast<Value>(testutil::draw(rng, 41)) - 20;
        EdgeWeights w;
        for (const auto& [i, j] : g.edge_indices())
            w.set(g.vertices()[i], g.vertices()[j], potential[i] - potential[j]);

        const std::string anchor = g.vertices()[testutil::draw(rng, n)];
        const Value anchor_value = static_cast<Value>(testutil::draw(rng, 11)) - 5;
        const ShiftVector t = solve_weight_system(g, w, anchor, anchor_value);
        CHECK(t.at(anchor) == anchor_value);
        for (const auto& [a, b] : g.edges()) CHECK(t.at(a) - t.at(b) == w.get(a, b));

        // re-anchoring yields a pure translate
        const ShiftVector t2 = solve_weight_system(g, w, anchor, anchor_value + 100);
        for (const auto& [label, v] : t.entries()) CHECK(t2.at(label) - v == 100);
    }
}

TEST_CASE("solve_weight_system reports a violated cycle") {
    const Graph g = graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    EdgeWeights bad;
    bad.set("a", "b", 1);
    bad.set("b", "c", 1);
    bad.set("c", "a", 1);
    try {
        solve_weight_system(g, bad, "a", 0);
        FAIL("expected InfeasibleSystemError");
    } catch (const InfeasibleSystemError& e) {
        REQUIRE(e.cycle().size() >= 4);
        CHECK(e.cycle().front() == e.cycle().back());
        CHECK(e.cycle_weight() != 0);
    }
}

TEST_CASE("solve_weight_system rejects disconnected graphs") {
    EdgeWeights w;
    w.set("a", "b", 1);
    CHECK_THROWS_AS(solve_weight_system(graph({"a", "b", "c"}, {{"a", "b"}}), w, "a", 0),
                    DisconnectedError);
}
