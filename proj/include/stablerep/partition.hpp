#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "stablerep/multiset.hpp"

namespace stablerep {

// Integer partition: weakly decreasing positive parts. Trailing zeros are
// stripped on construction; the empty partition is a first-class value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Parses "4,3,1"; the empty string is the empty partition.
    static Partition parse(const std::string& csv);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long long size() const { return size_; }
    bool empty() const { return parts_.empty(); }
    int first() const { return parts_.empty() ? 0 : parts_[0]; } // largest part
    int part(int i) const { return i < length() ? parts_[i] : 0; } // 0-based, 0 beyond length

    Partition conjugate() const;
    bool contains(const Partition& inner) const; // Young-diagram inclusion

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

    std::string to_string() const; // "(4,3,1)", "()" for the empty partition

private:
    std::vector<int> parts_;
    long long size_ = 0;
};

IntMultiset hooks(const Partition& nu);
IntMultiset shifted_contents(const Partition& nu, int s);

bool is_p_small(const Partition& nu, int p);
// |nu| < p together with nu_1 <= p-l-2 and length(nu) <= l; requires 0 <= l <= p-2.
bool is_pl_small(const Partition& nu, int p, int l);

Partition remove_first_column(const Partition& nu); // domain error on empty
Partition remove_first_row(const Partition& nu);    // domain error on empty

// All partitions of exactly n, descending lexicographic order.
std::vector<Partition> partitions_of(long long n);
// All partitions of size < bound (the p-small ones for bound = p), by size then lex.
std::vector<Partition> partitions_smaller_than(long long bound);

// Weight census of semistandard Young tableaux of shape nu with entries in
// {1..m}: for each weight vector (w_1..w_m), the number of tableaux with w_i
// boxes equal to i. Weights are packed 4 bits per entry, so the census is
// restricted to m <= 16 and |nu| <= 15 (it exists as a desk-scale oracle).
struct SsytCensus {
    int m = 0;
    long long total = 0;
    std::unordered_map<uint64_t, long long> by_weight;
};

SsytCensus ssyt_count_by_weight(const Partition& nu, int m);

uint64_t ssyt_weight_pack(const std::vector<int>& weight);
std::vector<int> ssyt_weight_unpack(uint64_t key, int m);

} // namespace stablerep
