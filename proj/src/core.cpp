#include "minunion/core.hpp"

#include <algorithm>
#include <unordered_set>

namespace minunion {

Instance Instance::create(std::vector<std::pair<std::string, std::vector<Value>>> named_sets) {
    if (named_sets.empty()) throw InvalidArgumentError("instance must contain at least one set");
    Instance inst;
    inst.labels_.reserve(named_sets.size());
    inst.sets_.reserve(named_sets.size());
    for (auto& [label, elems] : named_sets) {
        if (label.empty()) throw InvalidArgumentError("empty label");
        if (inst.index_.count(label)) throw InvalidArgumentError("duplicate label '" + label + "'");
        if (elems.empty()) throw InvalidArgumentError("set '" + label + "' is empty");
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        inst.index_.emplace(label, inst.labels_.size());
        inst.labels_.push_back(std::move(label));
        inst.sets_.push_back(std::move(elems));
    }
    return inst;
}

const std::vector<Value>& Instance::set(const std::string& label) const {
    const auto it = index_.find(label);
    if (it == index_.end()) throw InvalidArgumentError("unknown label '" + label + "'");
    return sets_[it->second];
}

std::optional<std::size_t> Instance::index_of(const std::string& label) const {
    const auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

ShiftVector ShiftVector::create(std::vector<std::pair<std::string, Value>> entries) {
    std::unordered_set<std::string> seen;
    for (const auto& [label, value] : entries) {
        (void)value;
        if (label.empty()) throw InvalidArgumentError("empty label in shift vector");
        if (!seen.insert(label).second)
            throw InvalidArgumentError("duplicate label '" + label + "' in shift vector");
    }
    ShiftVector sv;
    sv.entries_ = std::move(entries);
    return sv;
}

ShiftVector ShiftVector::create(const std::vector<std::string>& labels,
                                const std::vector<Value>& values) {
    if (labels.size() != values.size())
        throw InvalidArgumentError("label/value count mismatch in shift vector");
    std::vector<std::pair<std::string, Value>> entries;
    entries.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) entries.emplace_back(labels[i], values[i]);
    return create(std::move(entries));
}

bool ShiftVector::contains(const std::string& label) const {
    for (const auto& [l, v] : entries_)
        if (l == label) return true;
    return false;
}

Value ShiftVector::at(const std::string& label) const {
    for (const auto& [l, v] : entries_)
        if (l == label) return v;
    throw InvalidArgumentError("unknown label '" + label + "' in shift vector");
}

namespace {

void check_domain(const Instance& instance, const ShiftVector& shifts) {
    std::vector<std::string> missing, extra;
    for (const auto& label : instance.labels())
        if (!shifts.contains(label)) missing.push_back(label);
    for (const auto& [label, value] : shifts.entries())
        if (!instance.index_of(label)) extra.push_back(label);
    if (!missing.empty() || !extra.empty())
        throw DomainMismatchError(std::move(missing), std::move(extra));
}

}  // namespace

Objective evaluate(const Instance& instance, const ShiftVector& shifts) {
    check_domain(instance, shifts);
    std::size_t total = 0;
    for (const auto& s : instance.sets()) total += s.size();
    std::vector<Value> u;
    u.reserve(total);
    for (std::size_t i = 0; i < instance.size(); ++i) {
        const Value t = shifts.at(instance.label(i));
        for (Value x : instance.set(i)) u.push_back(checked_add(x, t));
    }
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    Objective obj;
    obj.value = static_cast<std::int64_t>(u.size());
    obj.union_set = std::move(u);
    return obj;
}

ShiftVector normalize(const ShiftVector& shifts) {
    if (shifts.empty()) return shifts;
    const Value base = shifts.entries().front().second;
    std::vector<std::pair<std::string, Value>> out;
    out.reserve(shifts.size());
    for (const auto& [label, value] : shifts.entries())
        out.emplace_back(label, checked_sub(value, base));
    return ShiftVector::create(std::move(out));
}

std::vector<Value> difference_set(const Instance& instance) {
    std::vector<Value> u;
    for (const auto& s : instance.sets()) u.insert(u.end(), s.begin(), s.end());
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());

    std::vector<Value> diffs;
    diffs.reserve(u.size() * u.size());
    for (Value x : u)
        for (Value y : u) diffs.push_back(checked_sub(x, y));
    std::sort(diffs.begin(), diffs.end());
    diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
    return diffs;
}

Instance apply_shifts(const Instance& instance, const ShiftVector& shifts) {
    check_domain(instance, shifts);
    std::vector<std::pair<std::string, std::vector<Value>>> named;
    named.reserve(instance.size());
    for (std::size_t i = 0; i < instance.size(); ++i) {
        const Value t = shifts.at(instance.label(i));
        std::vector<Value> moved;
        moved.reserve(instance.set(i).size());
        for (Value x : instance.set(i)) moved.push_back(checked_add(x, t));
        named.emplace_back(instance.label(i), std::move(moved));
    }
    return Instance::create(std::move(named));
}

}  // namespace minunion
