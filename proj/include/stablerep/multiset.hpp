#pragma once

#include <initializer_list>
#include <map>
#include <string>

namespace stablerep {

// Finite multiset of integers, kept as a sorted element -> multiplicity map so
// that equality is structural.
class IntMultiset {
public:
    IntMultiset() = default;
    IntMultiset(std::initializer_list<int> elems);

    void add(int x, long long count = 1);
    // Removes one occurrence; removing an absent element is a domain error.
    void remove_one(int x);

    long long multiplicity(int x) const;
    bool contains(int x) const { return multiplicity(x) > 0; }
    long long size() const { return size_; }
    bool empty() const { return counts_.empty(); }
    int min() const; // domain error on empty
    int max() const; // domain error on empty

    const std::map<int, long long>& counts() const { return counts_; }

    friend bool operator==(const IntMultiset& a, const IntMultiset& b) {
        return a.counts_ == b.counts_;
    }
    friend bool operator!=(const IntMultiset& a, const IntMultiset& b) { return !(a == b); }

    std::string to_string() const; // "{1,1,2,3}"

private:
    std::map<int, long long> counts_;
    long long size_ = 0;
};

// Image of a multiset with elements in [1, p-1] under i -> min(i, p-i).
// Elements outside [1, p-1] are a domain error.
IntMultiset fold(const IntMultiset& m, int p);

} // namespace stablerep
