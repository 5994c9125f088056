#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "minunion/checked.hpp"
#include "minunion/errors.hpp"

namespace minunion {

// An ordered family of non-empty finite integer sets indexed by distinct
// string labels.  Iteration order over labels is the declared order and is
// stable.
class Instance {
public:
    Instance() = default;

    // Sorts and deduplicates each set.  Rejects an empty family, duplicate
    // labels, and empty sets.
    static Instance create(std::vector<std::pair<std::string, std::vector<Value>>> named_sets);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::vector<Value>>& sets() const { return sets_; }
    const std::vector<Value>& set(std::size_t i) const { return sets_.at(i); }
    const std::vector<Value>& set(const std::string& label) const;
    std::optional<std::size_t> index_of(const std::string& label) const;

    friend bool operator==(const Instance& a, const Instance& b) {
        return a.labels_ == b.labels_ && a.sets_ == b.sets_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Value>> sets_;  // parallel to labels_; sorted, unique, non-empty
    std::unordered_map<std::string, std::size_t> index_;
};

// One integer shift per label.  Carries its own label order so that
// normalization is defined without reference to an instance.
class ShiftVector {
public:
    ShiftVector() = default;

    static ShiftVector create(std::vector<std::pair<std::string, Value>> entries);
    static ShiftVector create(const std::vector<std::string>& labels,
                              const std::vector<Value>& values);

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const std::vector<std::pair<std::string, Value>>& entries() const { return entries_; }
    bool contains(const std::string& label) const;
    Value at(const std::string& label) const;

    friend bool operator==(const ShiftVector& a, const ShiftVector& b) = default;

private:
    std::vector<std::pair<std::string, Value>> entries_;
};

struct Objective {
    std::int64_t value = 0;        // cardinality of the union of shifted sets
    std::vector<Value> union_set;  // the realized union, sorted ascending
};

// |union_a (X_a + t_a)| together with the union itself.  The shift domain
// must equal the instance's label set.
Objective evaluate(const Instance& instance, const ShiftVector& shifts);

// Translate so that the first entry (in the vector's own order) becomes zero.
ShiftVector normalize(const ShiftVector& shifts);

// U - U for U = union of all sets.  Sorted, symmetric, always contains 0.
std::vector<Value> difference_set(const Instance& instance);

// The instance with each set translated by its shift.
Instance apply_shifts(const Instance& instance, const ShiftVector& shifts);

}  // namespace minunion
