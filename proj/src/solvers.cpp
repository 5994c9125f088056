#include "minunion/solvers.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace minunion {

std::string_view method_name(Method m) {
    switch (m) {
        case Method::exact: return "exact";
        case Method::oracle: return "oracle";
        case Method::greedy: return "greedy";
        case Method::local: return "local";
    }
    return "unknown";
}

namespace {

using u128 = unsigned __int128;

constexpr u128 kU128Max = ~u128{0};

u128 sat_mul(u128 a, u128 b) {
    if (a == 0 || b == 0) return 0;
    if (a > kU128Max / b) return kU128Max;
    return a * b;
}

u128 sat_pow(u128 base, std::size_t exp) {
    u128 r = 1;
    while (exp--) r = sat_mul(r, base);
    return r;
}

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s += static_cast<char>('0' + static_cast<int>(v % 10));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

std::string count_string(u128 total, const std::string& factored) {
    return total == kU128Max ? factored : u128_to_string(total);
}

struct Dense {
    std::size_t m = 0;
    std::vector<Value> elems;
    std::vector<std::size_t> off;
};

Dense flatten(const Instance& inst) {
    Dense d;
    d.m = inst.size();
    d.off.push_back(0);
    for (const auto& s : inst.sets()) {
        d.elems.insert(d.elems.end(), s.begin(), s.end());
        d.off.push_back(d.elems.size());
    }
    return d;
}

std::int64_t shifted_union_size(const Dense& d, const std::vector<Value>& t,
                                std::vector<Value>& buf) {
    buf.clear();
    for (std::size_t a = 0; a < d.m; ++a) {
        const Value ta = t[a];
        for (std::size_t i = d.off[a]; i < d.off[a + 1]; ++i)
            buf.push_back(checked_add(d.elems[i], ta));
    }
    std::sort(buf.begin(), buf.end());
    std::int64_t distinct = 0;
    for (std::size_t i = 0; i < buf.size(); ++i)
        distinct += (i == 0 || buf[i] != buf[i - 1]);
    return distinct;
}

// Total order on candidates: value first, then the anchored shift vector
// itself.  Associative across enumeration chunks.
struct Best {
    bool has = false;
    std::int64_t value = 0;
    std::vector<Value> shifts;

    void offer(std::int64_t v, const std::vector<Value>& t) {
        if (!has || v < value || (v == value && t < shifts)) {
            has = true;
            value = v;
            shifts = t;
        }
    }
    void merge(const Best& other) {
        if (other.has) offer(other.value, other.shifts);
    }
};

struct PropagationStep {
    std::size_t vertex = 0;
    std::size_t parent = 0;
    std::size_t edge_slot = 0;  // index into the tree's edge list
    bool parent_is_first = false;
};

// BFS order from vertex 0.  Weight w on edge (i, j), i < j, means
// t_i - t_j = w.
std::vector<PropagationStep> plan_tree(
    std::size_t m, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(m);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        adj[edges[e].first].emplace_back(edges[e].second, e);
        adj[edges[e].second].emplace_back(edges[e].first, e);
    }
    std::vector<PropagationStep> steps;
    steps.reserve(m - 1);
    std::vector<char> seen(m, 0);
    std::vector<std::size_t> queue{0};
    seen[0] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const std::size_t v = queue[qi];
        for (const auto& [w, e] : adj[v]) {
            if (seen[w]) continue;
            seen[w] = 1;
            steps.push_back({w, v, e, edges[e].first == v});
            queue.push_back(w);
        }
    }
    return steps;
}

struct WorkerOut {
    Best best;
    std::uint64_t examined = 0;
    bool cancelled = false;
    std::exception_ptr error;
};

constexpr std::uint64_t kCancelCheckMask = 1023;

void exact_worker(const Dense& dense, const std::vector<Value>& diffs, std::size_t m,
                  std::uint64_t weight_tuples, const std::atomic<bool>* cancel, std::uint64_t lo,
                  std::uint64_t hi, WorkerOut& out) {
    try {
        std::vector<std::size_t> code(m - 2);
        std::vector<std::size_t> widx(m - 1);
        std::vector<Value> w(m - 1), t(m), buf;
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        std::vector<PropagationStep> plan;
        std::uint64_t current_code = std::numeric_limits<std::uint64_t>::max();

        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            const std::uint64_t ci = idx / weight_tuples;
            if (ci != current_code) {
                current_code = ci;
                std::uint64_t rest = ci;
                for (auto& digit : code) {
                    digit = static_cast<std::size_t>(rest % m);
                    rest /= m;
                }
                edges = detail::prufer_decode_indices(m, code);
                plan = plan_tree(m, edges);
                std::uint64_t wrest = idx % weight_tuples;
                for (std::size_t d = 0; d < m - 1; ++d) {
                    widx[d] = static_cast<std::size_t>(wrest % diffs.size());
                    wrest /= diffs.size();
                }
            } else {
                for (std::size_t d = 0; d < m - 1; ++d) {
                    if (++widx[d] < diffs.size()) break;
                    widx[d] = 0;
                }
            }
            for (std::size_t e = 0; e < m - 1; ++e) w[e] = diffs[widx[e]];
            t[0] = 0;
            for (const auto& st : plan)
                t[st.vertex] = st.parent_is_first ? checked_sub(t[st.parent], w[st.edge_slot])
                                                  : checked_add(t[st.parent], w[st.edge_slot]);
            out.best.offer(shifted_union_size(dense, t, buf), t);
            ++out.examined;
            if (cancel && ((idx - lo) & kCancelCheckMask) == kCancelCheckMask &&
                cancel->load(std::memory_order_relaxed)) {
                out.cancelled = true;
                return;
            }
        }
    } catch (...) {
        out.error = std::current_exception();
    }
}

void oracle_worker(const Dense& dense, Value radius, std::size_t m, std::uint64_t side,
                   const std::atomic<bool>* cancel, std::uint64_t lo, std::uint64_t hi,
                   WorkerOut& out) {
    try {
        std::vector<std::uint64_t> digit(m - 1);
        std::vector<Value> t(m, 0), buf;
        std::uint64_t rest = lo;
        for (std::size_t d = 0; d < m - 1; ++d) {
            digit[d] = rest % side;
            rest /= side;
        }
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            if (idx != lo) {
                for (std::size_t d = 0; d < m - 1; ++d) {
                    if (++digit[d] < side) break;
                    digit[d] = 0;
                }
            }
            for (std::size_t d = 0; d < m - 1; ++d)
                t[d + 1] = static_cast<Value>(digit[d]) - radius;
            out.best.offer(shifted_union_size(dense, t, buf), t);
            ++out.examined;
            if (cancel && ((idx - lo) & kCancelCheckMask) == kCancelCheckMask &&
                cancel->load(std::memory_order_relaxed)) {
                out.cancelled = true;
                return;
            }
        }
    } catch (...) {
        out.error = std::current_exception();
    }
}

template <typename Worker>
SolveResult run_chunked(const Instance& inst, u128 total, const std::string& factored,
                        Method method, bool provably_complete, const SolveOptions& opt,
                        Worker&& worker) {
    if (total > opt.guard_limit)
        throw GuardLimitError(count_string(total, factored), opt.guard_limit);
    const std::uint64_t total64 = static_cast<std::uint64_t>(total);

    unsigned threads = opt.threads;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (total64 < 4096) threads = 1;
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total64));

    std::vector<WorkerOut> outs(threads);
    if (threads == 1) {
        worker(0, total64, outs[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned k = 0; k < threads; ++k) {
            const std::uint64_t lo = total64 / threads * k + std::min<std::uint64_t>(k, total64 % threads);
            const std::uint64_t hi =
                total64 / threads * (k + 1) + std::min<std::uint64_t>(k + 1, total64 % threads);
            pool.emplace_back([&, k, lo, hi] { worker(lo, hi, outs[k]); });
        }
        for (auto& th : pool) th.join();
    }

    Best best;
    std::uint64_t examined = 0;
    bool cancelled = false;
    for (const auto& o : outs) {
        if (o.error) std::rethrow_exception(o.error);
        best.merge(o.best);
        examined += o.examined;
        cancelled = cancelled || o.cancelled;
    }

    SolveResult result;
    result.shifts = ShiftVector::create(inst.labels(), best.shifts);
    result.value = best.value;
    result.method = method;
    result.explored = examined;
    result.optimal = !cancelled && provably_complete;
    return result;
}

SolveResult trivial_single_label(const Instance& inst, Method method) {
    SolveResult result;
    result.shifts = ShiftVector::create(inst.labels(), {0});
    result.value = static_cast<std::int64_t>(inst.set(std::size_t{0}).size());
    result.method = method;
    result.explored = 1;
    result.optimal = true;
    return result;
}

}  // namespace

SolveResult solve_exact(const Instance& instance, const SolveOptions& options) {
    const std::size_t m = instance.size();
    if (m == 1) return trivial_single_label(instance, Method::exact);

    const std::vector<Value> diffs = difference_set(instance);
    const u128 trees = sat_pow(m, m - 2);
    const u128 tuples = sat_pow(diffs.size(), m - 1);
    const u128 total = sat_mul(trees, tuples);
    const std::string factored = std::to_string(m) + "^" + std::to_string(m - 2) + " * " +
                                 std::to_string(diffs.size()) + "^" + std::to_string(m - 1);
    if (tuples > options.guard_limit)
        throw GuardLimitError(count_string(total, factored), options.guard_limit);
    const std::uint64_t weight_tuples = static_cast<std::uint64_t>(tuples);

    const Dense dense = flatten(instance);
    return run_chunked(instance, total, factored, Method::exact, true, options,
                       [&](std::uint64_t lo, std::uint64_t hi, WorkerOut& out) {
                           exact_worker(dense, diffs, m, weight_tuples, options.cancel, lo, hi,
                                        out);
                       });
}

SolveResult solve_oracle(const Instance& instance, const SolveOptions& options) {
    const std::size_t m = instance.size();
    if (m == 1) return trivial_single_label(instance, Method::oracle);

    Value min_u = instance.set(std::size_t{0}).front();
    Value max_u = min_u;
    for (const auto& s : instance.sets()) {
        min_u = std::min(min_u, s.front());
        max_u = std::max(max_u, s.back());
    }
    const Value default_radius =
        checked_mul(static_cast<Value>(m - 1), checked_sub(max_u, min_u));
    const Value radius = options.radius.value_or(default_radius);
    if (radius < 0) throw InvalidArgumentError("oracle radius must be non-negative");

    const u128 side = sat_mul(2, static_cast<u128>(radius)) + 1;
    const u128 total = sat_pow(side, m - 1);
    const std::string factored =
        "(2*" + std::to_string(radius) + "+1)^" + std::to_string(m - 1);
    if (total > options.guard_limit)
        throw GuardLimitError(count_string(total, factored), options.guard_limit);
    const std::uint64_t side64 = static_cast<std::uint64_t>(side);

    const Dense dense = flatten(instance);
    return run_chunked(instance, total, factored, Method::oracle, radius >= default_radius,
                       options, [&](std::uint64_t lo, std::uint64_t hi, WorkerOut& out) {
                           oracle_worker(dense, radius, m, side64, options.cancel, lo, hi, out);
                       });
}

bool verify_certificate(const Instance& instance, const Certificate& certificate) {
    const Graph& tree = certificate.tree.tree();
    std::vector<std::string> missing, extra;
    for (const auto& label : instance.labels())
        if (!tree.has_vertex(label)) missing.push_back(label);
    for (const auto& vertex : tree.vertices())
        if (!instance.index_of(vertex)) extra.push_back(vertex);
    if (!missing.empty() || !extra.empty())
        throw DomainMismatchError(std::move(missing), std::move(extra));

    const std::vector<Value> diffs = difference_set(instance);
    for (const auto& [edge, w] : certificate.tree.weights().canonical())
        if (!std::binary_search(diffs.begin(), diffs.end(), w)) return false;

    const ShiftVector shifts =
        solve_weight_system(tree, certificate.tree.weights(), instance.label(0), 0);
    return evaluate(instance, shifts).value <= certificate.budget;
}

std::optional<ShiftVector> improve_disconnected(const Instance& instance,
                                                const ShiftVector& shifts) {
    const Instance shifted = apply_shifts(instance, shifts);
    const auto split = find_disconnection(intersection_graph(shifted));
    if (!split) return std::nullopt;
    const auto& [side_b, side_c] = *split;

    auto min_of = [&](const std::vector<std::string>& side) {
        Value lo = shifted.set(side.front()).front();
        for (const auto& label : side) lo = std::min(lo, shifted.set(label).front());
        return lo;
    };
    const Value r = min_of(side_b);
    const Value s = min_of(side_c);

    std::vector<std::pair<std::string, Value>> out;
    out.reserve(shifts.size());
    for (const auto& [label, t] : shifts.entries()) {
        const bool in_b = std::binary_search(side_b.begin(), side_b.end(), label);
        out.emplace_back(label, checked_sub(t, in_b ? r : s));
    }
    return ShiftVector::create(std::move(out));
}

Certificate make_certificate(const Instance& instance, const ShiftVector& shifts, Value budget) {
    const Instance shifted = apply_shifts(instance, shifts);
    Graph tree = spanning_tree(intersection_graph(shifted));
    EdgeWeights weights;
    for (const auto& [a, b] : tree.edges())
        weights.set(a, b, checked_sub(shifts.at(a), shifts.at(b)));
    return Certificate{WeightedTree::create(std::move(tree), std::move(weights)), budget};
}

namespace {

struct Cluster {
    std::vector<std::size_t> members;  // label indices
    std::vector<Value> rel;            // shift of each member relative to the cluster anchor
    std::vector<Value> uni;            // union of shifted member sets, sorted
};

std::vector<Value> merged_union(const std::vector<Value>& a, const std::vector<Value>& b,
                                Value b_shift) {
    std::vector<Value> out;
    out.reserve(a.size() + b.size());
    for (Value x : a) out.push_back(x);
    for (Value x : b) out.push_back(checked_add(x, b_shift));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Largest-overlap relative shift of q against p, searched over the
// difference set of the two unions; ties broken by the smaller shift.
std::pair<Value, std::int64_t> best_relative_shift(const Cluster& p, const Cluster& q,
                                                   std::uint64_t& explored) {
    std::unordered_map<Value, std::int64_t> overlap;
    overlap.reserve(p.uni.size() * q.uni.size());
    for (Value x : p.uni)
        for (Value y : q.uni) ++overlap[checked_sub(x, y)];
    explored += overlap.size();
    Value best_d = 0;
    std::int64_t best_count = -1;
    for (const auto& [d, count] : overlap)
        if (count > best_count || (count == best_count && d < best_d)) {
            best_d = d;
            best_count = count;
        }
    return {best_d, best_count};
}

}  // namespace

SolveResult solve_greedy(const Instance& instance, const SolveOptions& options) {
    (void)options;
    const std::size_t m = instance.size();
    std::vector<Cluster> clusters;
    clusters.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        clusters.push_back(Cluster{{i}, {0}, instance.set(i)});

    std::uint64_t explored = 0;
    while (clusters.size() > 1) {
        std::size_t best_i = 0, best_j = 1;
        Value best_d = 0;
        std::int64_t best_overlap = -1;
        for (std::size_t i = 0; i < clusters.size(); ++i)
            for (std::size_t j = i + 1; j < clusters.size(); ++j) {
                const auto [d, count] = best_relative_shift(clusters[i], clusters[j], explored);
                if (count > best_overlap) {
                    best_overlap = count;
                    best_i = i;
                    best_j = j;
                    best_d = d;
                }
            }
        Cluster& p = clusters[best_i];
        Cluster& q = clusters[best_j];
        p.uni = merged_union(p.uni, q.uni, best_d);
        for (std::size_t k = 0; k < q.members.size(); ++k) {
            p.members.push_back(q.members[k]);
            p.rel.push_back(checked_add(q.rel[k], best_d));
        }
        clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(best_j));
    }

    std::vector<Value> t(m, 0);
    for (std::size_t k = 0; k < clusters[0].members.size(); ++k)
        t[clusters[0].members[k]] = clusters[0].rel[k];
    ShiftVector shifts = normalize(ShiftVector::create(instance.labels(), t));
    while (auto better = improve_disconnected(instance, shifts)) shifts = normalize(*better);

    SolveResult result;
    result.value = evaluate(instance, shifts).value;
    result.shifts = std::move(shifts);
    result.method = Method::greedy;
    result.explored = explored;
    result.optimal = false;
    return result;
}

}  // namespace minunion
