#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minunion/core.hpp"
#include "minunion/graphs.hpp"

namespace minunion {

// Label of the distinguished anchor set in reduced instances.
inline const std::string kRootLabel = "root";

// The explicit ruler {(i-1)*n^2 + i^2 : i in [1, n]}: spans [1, n^3], has n
// elements, consecutive gaps >= n^2 + 3, and all pairwise differences are
// distinct.
struct Ruler {
    Value n = 0;
    std::vector<Value> elements;  // sorted ascending
};

Ruler ruler(Value n);

// True iff all pairwise differences within the set are distinct;
// equivalently, every nonzero translate overlaps it in at most one point.
bool is_golomb(const std::vector<Value>& elements);

// Exact rational, reduced, positive denominator.
struct Rational {
    Value num = 0;
    Value den = 1;

    bool is_integer() const { return den == 1; }
    Value as_integer() const;
    std::string str() const;

    friend bool operator==(const Rational&, const Rational&) = default;
};

// |v| <= bound, exact comparison.
bool abs_within(Value v, const Rational& bound);

// f(x) = (x/4 + 2)^3 + x/2 - 4 as an exact rational.
Rational aux_bound(Value x);

// Every element magnitude is at most f(max_a |X_a|).
bool is_aux(const Instance& instance);

// Instance produced from a graph by the vertex-cover encoder, with enough
// back-references to decode solutions.
struct ReducedInstance {
    Instance instance;  // labels: "root" first, then one label per edge
    Value n = 0;        // source vertex count
    Value s = 0;        // (n + 4)^3
    Ruler ruler;        // the (n + 4)-element ruler embedded in every set
    Value threshold = 0;  // |X_root| + k
    Value k = 0;
    bool trivially_yes = false;  // k >= n: every such input has a cover
    Graph source;                // the graph as given
    std::vector<std::string> vertex_names;  // vertex number i+1 had this original label

    struct EdgeGadget {
        std::string label;  // "e(y-z)"
        Value y = 0, z = 0;  // renumbered endpoints, y < z
    };
    std::vector<EdgeGadget> edges;  // ordered by (y, z)

    const std::vector<Value>& root_set() const { return instance.set(kRootLabel); }
};

// Vertex-cover instance (g, k) -> shifted-union instance over {root} + edges:
//   X_root = (V - s - n) u (R - s) u (R + n) u (V + s + n)
//   X_e    = {z_e - n} u R u {y_e + s}
// with V = [1, n] after renumbering, s = (n+4)^3, R the (n+4)-ruler, and
// (y_e, z_e) = (smaller, larger) endpoint.
ReducedInstance encode_vc(const Graph& g, Value k);

// t_root = 0; t_e = -s when y_e is covered, +n otherwise.  The cover must
// cover every edge.  Achieves value <= |X_root| + |cover|.
ShiftVector construct_solution_from_cover(const ReducedInstance& ri,
                                          const std::vector<Value>& cover);

// Reads a vertex cover back out of any shift vector: with
// k = value - |X_root|, returns all vertices when k >= n, otherwise
// union_e (X_e + t_e - t_root) \ X_root clipped to [1, n].
std::vector<Value> decode_cover(const ReducedInstance& ri, const ShiftVector& shifts);

struct GadgetReport {
    std::uint64_t checks = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

// Verifies, by direct set arithmetic, that each edge gadget leaves exactly
// its chosen endpoint outside X_root under the -s and +n translates, and that
// no ruler translate other than -s and +n keeps more than |R| - n points
// inside X_root.  The translate scan covers [-(2s+2n), +(2s+2n)]; beyond that
// window R + t misses X_root entirely.
GadgetReport check_gadget_lemmas(const ReducedInstance& ri);

}  // namespace minunion
