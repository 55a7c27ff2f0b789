#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twistcat {

// One axiom violation: a machine-readable tag, the ids of the offending
// morphisms/objects, and a human-readable message.
struct Violation {
    std::string tag;
    std::vector<int> witness;
    std::string message;

    bool operator==(const Violation&) const = default;
};

struct ValidationReport {
    std::vector<Violation> items;

    bool ok() const { return items.empty(); }
    std::size_t size() const { return items.size(); }

    void add(std::string tag, std::vector<int> witness, std::string message) {
        items.push_back({std::move(tag), std::move(witness), std::move(message)});
    }
    void merge(const ValidationReport& other) {
        items.insert(items.end(), other.items.begin(), other.items.end());
    }
    bool has_tag_prefix(const std::string& prefix) const {
        for (const auto& v : items)
            if (v.tag.rfind(prefix, 0) == 0) return true;
        return false;
    }
};

// Result of an operation that either produces a value or a report saying
// why the input was rejected.
template <typename T>
struct Checked {
    std::optional<T> value;
    ValidationReport report;

    bool ok() const { return value.has_value(); }
    const T& operator*() const { return *value; }
    T& operator*() { return *value; }
    const T* operator->() const { return &*value; }

    static Checked accept(T v) { return {std::move(v), {}}; }
    static Checked reject(ValidationReport r) { return {std::nullopt, std::move(r)}; }
};

// Structurally bad input (schema errors, non-dense ids, shape mismatches).
// Distinct from ValidationReport, which covers semantic axiom failures.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration refused to start because the assignment-space bound
// exceeds the caller's limit.
struct SearchSpaceError : std::runtime_error {
    unsigned long long bound;
    unsigned long long limit;
    SearchSpaceError(unsigned long long bound_, unsigned long long limit_)
        : std::runtime_error("search space bound " + std::to_string(bound_) +
                             " exceeds limit " + std::to_string(limit_)),
          bound(bound_), limit(limit_) {}
};

}  // namespace twistcat
