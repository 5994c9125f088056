#include "minunion/corpus.hpp"

#include <algorithm>

namespace minunion {

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return n ? rng() % n : 0; }

}  // namespace

Instance random_instance(std::mt19937_64& rng, const CorpusParams& params) {
    if (params.min_labels < 1 || params.max_labels < params.min_labels ||
        params.max_set_size < 1 || params.max_element < 0)
        throw InvalidArgumentError("bad corpus parameters");
    const std::size_t m =
        params.min_labels + draw(rng, params.max_labels - params.min_labels + 1);
    std::vector<std::pair<std::string, std::vector<Value>>> named;
    named.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::string label =
            i < 26 ? std::string(1, static_cast<char>('a' + i)) : "s" + std::to_string(i);
        const std::size_t size = 1 + draw(rng, params.max_set_size);
        std::vector<Value> elems;
        elems.reserve(size);
        for (std::size_t j = 0; j < size; ++j)
            elems.push_back(static_cast<Value>(
                draw(rng, static_cast<std::uint64_t>(params.max_element) + 1)));
        named.emplace_back(std::move(label), std::move(elems));
    }
    return Instance::create(std::move(named));
}

Graph random_graph(std::mt19937_64& rng, std::size_t vertex_count, std::size_t max_edges) {
    std::vector<std::string> vertices;
    vertices.reserve(vertex_count);
    for (std::size_t v = 1; v <= vertex_count; ++v) vertices.push_back(std::to_string(v));

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < vertex_count; ++i)
        for (std::size_t j = i + 1; j < vertex_count; ++j) pairs.emplace_back(i, j);
    // Fisher-Yates with raw draws
    for (std::size_t i = pairs.size(); i > 1; --i)
        std::swap(pairs[i - 1], pairs[draw(rng, i)]);

    const std::size_t count = draw(rng, std::min(max_edges, pairs.size()) + 1);
    std::vector<std::pair<std::string, std::string>> edges;
    edges.reserve(count);
    for (std::size_t e = 0; e < count; ++e)
        edges.emplace_back(vertices[pairs[e].first], vertices[pairs[e].second]);
    return Graph::create(std::move(vertices), std::move(edges));
}

}  // namespace minunion
