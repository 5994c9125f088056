#pragma once

#include <random>

#include "minunion/core.hpp"
#include "minunion/graphs.hpp"

namespace minunion {

// Draw helpers use raw engine output only, so seeded corpora are identical
// across standard libraries.

struct CorpusParams {
    std::size_t min_labels = 2;
    std::size_t max_labels = 4;
    Value max_element = 10;  // elements drawn from [0, max_element]
    std::size_t max_set_size = 4;
};

Instance random_instance(std::mt19937_64& rng, const CorpusParams& params = {});

// Simple graph on vertices "1".."n" with an edge count drawn from
// [0, min(max_edges, n*(n-1)/2)].
Graph random_graph(std::mt19937_64& rng, std::size_t vertex_count, std::size_t max_edges);

}  // namespace minunion
