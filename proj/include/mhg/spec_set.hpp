#pragma once

#include <string>
#include <vector>

namespace mhg {

// A target feasible set: strictly decreasing integers n1 > n2 > ... > ns >= 2.
// Construction sorts the input and rejects duplicates, values below 2 and
// empty input.
class SpecSet {
public:
    explicit SpecSet(std::vector<int> values);

    const std::vector<int>& values() const { return values_; }
    int size() const { return static_cast<int>(values_.size()); }

    // 1-based accessor: value(1) = n1, ..., value(size()) = ns.
    int value(int i) const;
    int largest() const { return values_.front(); }
    int smallest() const { return values_.back(); }

    bool contains(int k) const;

    // "{7,5,3}"
    std::string to_string() const;

    bool operator==(const SpecSet&) const = default;

private:
    std::vector<int> values_;
};

SpecSet validate_spec_set(std::vector<int> values);

}  // namespace mhg
