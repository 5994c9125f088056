#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minunion {

// Base type for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// 64-bit integer arithmetic left the representable range.  Overflow is a hard
// error everywhere in this library, never wraparound.
class OverflowError : public Error {
public:
    using Error::Error;
};

// A call violated its contract (unknown label, malformed structure, ...).
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

namespace detail {
inline std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += ", ";
        out += p;
    }
    return out;
}
}  // namespace detail

// A shift vector's domain differs from the instance's label set.
class DomainMismatchError : public Error {
public:
    DomainMismatchError(std::vector<std::string> missing, std::vector<std::string> extra)
        : Error("shift domain mismatch: missing [" + detail::join(missing) + "], extra [" +
                detail::join(extra) + "]"),
          missing_(std::move(missing)),
          extra_(std::move(extra)) {}

    const std::vector<std::string>& missing() const { return missing_; }
    const std::vector<std::string>& extra() const { return extra_; }

private:
    std::vector<std::string> missing_;
    std::vector<std::string> extra_;
};

// The search space is larger than the configured guard limit.
class GuardLimitError : public Error {
public:
    GuardLimitError(std::string candidate_count, std::uint64_t limit)
        : Error("search space of " + candidate_count + " candidates exceeds guard limit " +
                std::to_string(limit)),
          candidate_count_(std::move(candidate_count)),
          limit_(limit) {}

    const std::string& candidate_count() const { return candidate_count_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::string candidate_count_;
    std::uint64_t limit_ = 0;
};

// Operation requires a connected graph; carries a disconnection witness.
class DisconnectedError : public Error {
public:
    DisconnectedError(std::vector<std::string> side_b, std::vector<std::string> side_c)
        : Error("graph is disconnected: {" + detail::join(side_b) + "} | {" +
                detail::join(side_c) + "}"),
          side_b_(std::move(side_b)),
          side_c_(std::move(side_c)) {}

    const std::vector<std::string>& side_b() const { return side_b_; }
    const std::vector<std::string>& side_c() const { return side_c_; }

private:
    std::vector<std::string> side_b_;
    std::vector<std::string> side_c_;
};

// A difference system has no solution; carries a cycle of nonzero weight.
class InfeasibleSystemError : public Error {
public:
    InfeasibleSystemError(std::vector<std::string> cycle, std::int64_t cycle_weight)
        : Error("weight system infeasible: cycle [" + detail::join(cycle) + "] has weight " +
                std::to_string(cycle_weight)),
          cycle_(std::move(cycle)),
          cycle_weight_(cycle_weight) {}

    // Closed vertex sequence, first element repeated at the end.
    const std::vector<std::string>& cycle() const { return cycle_; }
    std::int64_t cycle_weight() const { return cycle_weight_; }

private:
    std::vector<std::string> cycle_;
    std::int64_t cycle_weight_ = 0;
};

// Text input was rejected; line numbers are 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_ = 0;
};

}  // namespace minunion
