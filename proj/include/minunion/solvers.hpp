#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string_view>

#include "minunion/core.hpp"
#include "minunion/graphs.hpp"

namespace minunion {

struct SolveOptions {
    std::uint64_t guard_limit = 100'000'000;    // max candidates before refusing
    std::optional<Value> radius;                // box radius override (oracle only)
    unsigned threads = 0;                       // 0 = hardware concurrency
    const std::atomic<bool>* cancel = nullptr;  // cooperative cancellation
};

enum class Method { exact, oracle, greedy, local };

std::string_view method_name(Method m);

struct SolveResult {
    ShiftVector shifts;           // normalized: first label at shift 0
    std::int64_t value = 0;       // equals evaluate(instance, shifts).value
    Method method = Method::exact;
    std::uint64_t explored = 0;   // (tree, weights) pairs or box points examined
    bool optimal = false;         // search completed and proves global optimality
};

// NP witness: a weighted spanning tree over the labels plus a budget.
struct Certificate {
    WeightedTree tree;
    Value budget = 0;
};

// Global optimum by enumerating every Prüfer code over the labels and every
// assignment of edge weights from the instance's difference set, solving each
// tree system anchored at (first label, 0).  Ties broken by lexicographically
// smallest normalized shift vector, labels in declared order.
SolveResult solve_exact(const Instance& instance, const SolveOptions& options = {});

// Exhaustive search over all shift vectors with the first label fixed at 0
// and every other shift in [-radius, +radius].  The default radius
// (|A|-1) * (max U - min U) is large enough to contain an optimum.
SolveResult solve_oracle(const Instance& instance, const SolveOptions& options = {});

// Cluster-merge heuristic: repeatedly merge the two clusters whose best
// relative shift yields the largest overlap, then run the disconnection
// improvement to a fixed point.  Never below the optimum value.
SolveResult solve_greedy(const Instance& instance, const SolveOptions& options = {});

// True iff all weights lie in the instance's difference set and the induced
// solution achieves value <= budget.  Throws DomainMismatchError when the
// tree does not span exactly the instance's labels.
bool verify_certificate(const Instance& instance, const Certificate& certificate);

// If the intersection graph of the shifted sets is disconnected, a strictly
// better shift vector obtained by translating each side so that the minimum
// elements of both sides land on 0; otherwise absent.
std::optional<ShiftVector> improve_disconnected(const Instance& instance,
                                                const ShiftVector& shifts);

// Witness for a solution whose shifted intersection graph is connected:
// a spanning tree of that graph weighted by the shift differences.
Certificate make_certificate(const Instance& instance, const ShiftVector& shifts, Value budget);

}  // namespace minunion
