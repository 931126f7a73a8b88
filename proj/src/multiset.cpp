#include "stablerep/multiset.hpp"

#include "stablerep/errors.hpp"

namespace stablerep {

IntMultiset::IntMultiset(std::initializer_list<int> elems) {
    for (int x : elems) add(x);
}

void IntMultiset::add(int x, long long count) {
    require(count > 0, "IntMultiset::add: count must be positive");
    counts_[x] += count;
    size_ += count;
}

void IntMultiset::remove_one(int x) {
    auto it = counts_.find(x);
    require(it != counts_.end(), "IntMultiset::remove_one: element " + std::to_string(x) + " absent");
    if (--it->second == 0) counts_.erase(it);
    --size_;
}

long long IntMultiset::multiplicity(int x) const {
    auto it = counts_.find(x);
    return it == counts_.end() ? 0 : it->second;
}

int IntMultiset::min() const {
    require(!counts_.empty(), "IntMultiset::min on empty multiset");
    return counts_.begin()->first;
}

int IntMultiset::max() const {
    require(!counts_.empty(), "IntMultiset::max on empty multiset");
    return counts_.rbegin()->first;
}

std::string IntMultiset::to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [x, n] : counts_) {
        for (long long i = 0; i < n; ++i) {
            if (!first) s += ",";
            s += std::to_string(x);
            first = false;
        }
    }
    return s + "}";
}

IntMultiset fold(const IntMultiset& m, int p) {
    IntMultiset r;
    for (const auto& [x, n] : m.counts()) {
        require(x >= 1 && x <= p - 1,
                "fold: element " + std::to_string(x) + " outside [1, p-1]");
        r.add(x <= (p - 1) / 2 ? x : p - x, n);
    }
    return r;
}

} // namespace stablerep
