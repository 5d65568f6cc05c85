#include "mhg/spec_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace mhg {

SpecSet::SpecSet(std::vector<int> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw std::invalid_argument("spec set: empty input");
    }
    std::sort(values_.begin(), values_.end(), std::greater<int>());
    for (std::size_t i = 0; i + 1 < values_.size(); ++i) {
        if (values_[i] == values_[i + 1]) {
            throw std::invalid_argument("spec set: duplicate value " +
                                        std::to_string(values_[i]));
        }
    }
    if (values_.back() < 2) {
        throw std::invalid_argument("spec set: value " + std::to_string(values_.back()) +
                                    " is below 2");
    }
}

int SpecSet::value(int i) const {
    if (i < 1 || i > size()) {
        throw std::invalid_argument("spec set: index " + std::to_string(i) +
                                    " out of range");
    }
    return values_[static_cast<std::size_t>(i - 1)];
}

bool SpecSet::contains(int k) const {
    return std::binary_search(values_.rbegin(), values_.rend(), k);
}

std::string SpecSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values_[i]);
    }
    out += '}';
    return out;
}

SpecSet validate_spec_set(std::vector<int> values) { return SpecSet(std::move(values)); }

}  // namespace mhg
