#include "stablerep/partition.hpp"

#include <algorithm>
#include <functional>

#include "stablerep/errors.hpp"

namespace stablerep {

Partition::Partition(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i < parts.size(); ++i) {
        require(parts[i] > 0, "Partition: parts must be positive");
        require(i == 0 || parts[i - 1] >= parts[i], "Partition: parts must be weakly decreasing");
        size_ += parts[i];
    }
    parts_ = std::move(parts);
}

Partition Partition::parse(const std::string& csv) {
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < csv.size()) {
        size_t comma = csv.find(',', pos);
        std::string tok = csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        require(!tok.empty(), "Partition::parse: empty component in '" + csv + "'");
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw domain_error("Partition::parse: invalid integer '" + tok + "'");
        }
        require(used == tok.size(), "Partition::parse: invalid integer '" + tok + "'");
        parts.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Partition(parts);
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (!parts_.empty()) {
        c.assign(parts_[0], 0);
        for (int part : parts_) {
            for (int j = 0; j < part; ++j) ++c[j];
        }
    }
    return Partition(c);
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i) {
        if (parts_[i] < inner.parts_[i]) return false;
    }
    return true;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

IntMultiset hooks(const Partition& nu) {
    IntMultiset h;
    Partition conj = nu.conjugate();
    for (int i = 1; i <= nu.length(); ++i) {
        for (int j = 1; j <= nu.part(i - 1); ++j) {
            h.add(nu.part(i - 1) + conj.part(j - 1) - i - j + 1);
        }
    }
    return h;
}

IntMultiset shifted_contents(const Partition& nu, int s) {
    IntMultiset c;
    for (int i = 1; i <= nu.length(); ++i) {
        for (int j = 1; j <= nu.part(i - 1); ++j) {
            c.add(j - i + s);
        }
    }
    return c;
}

bool is_p_small(const Partition& nu, int p) { return nu.size() < p; }

bool is_pl_small(const Partition& nu, int p, int l) {
    require(l >= 0 && l <= p - 2, "is_pl_small: l outside [0, p-2]");
    return is_p_small(nu, p) && nu.first() <= p - l - 2 && nu.length() <= l;
}

Partition remove_first_column(const Partition& nu) {
    require(!nu.empty(), "remove_first_column: empty partition");
    std::vector<int> parts;
    for (int part : nu.parts()) {
        if (part > 1) parts.push_back(part - 1);
    }
    return Partition(parts);
}

Partition remove_first_row(const Partition& nu) {
    require(!nu.empty(), "remove_first_row: empty partition");
    return Partition(std::vector<int>(nu.parts().begin() + 1, nu.parts().end()));
}

std::vector<Partition> partitions_of(long long n) {
    require(n >= 0, "partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(long long, int)> rec = [&](long long rest, int cap) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int next = std::min<long long>(cap, rest); next >= 1; --next) {
            cur.push_back(next);
            rec(rest - next, next);
            cur.pop_back();
        }
    };
    rec(n, static_cast<int>(n));
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return b < a; // descending lex: (n) first, (1^n) last
    });
    return out;
}

std::vector<Partition> partitions_smaller_than(long long bound) {
    std::vector<Partition> out;
    for (long long n = 0; n < bound; ++n) {
        auto ps = partitions_of(n);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

uint64_t ssyt_weight_pack(const std::vector<int>& weight) {
    internal_check(weight.size() <= 16, "ssyt weight pack: too many entries");
    uint64_t key = 0;
    for (size_t i = 0; i < weight.size(); ++i) {
        internal_check(weight[i] >= 0 && weight[i] < 16, "ssyt weight pack: entry out of range");
        key |= static_cast<uint64_t>(weight[i]) << (4 * i);
    }
    return key;
}

std::vector<int> ssyt_weight_unpack(uint64_t key, int m) {
    std::vector<int> w(m, 0);
    for (int i = 0; i < m; ++i) w[i] = static_cast<int>((key >> (4 * i)) & 0xf);
    return w;
}

SsytCensus ssyt_count_by_weight(const Partition& nu, int m) {
    require(m >= 1, "ssyt_count_by_weight: m must be positive");
    require(m <= 16 && nu.size() <= 15, "ssyt_count_by_weight: census limited to m <= 16, |nu| <= 15");
    SsytCensus census;
    census.m = m;
    if (nu.length() > m) return census; // first column cannot be filled strictly
    if (nu.empty()) {
        census.total = 1;
        census.by_weight[0] = 1;
        return census;
    }

    const int rows = nu.length();
    std::vector<std::vector<int>> fill(rows);
    for (int i = 0; i < rows; ++i) fill[i].assign(nu.part(i), 0);
    std::vector<int> weight(m, 0);

    // Box-by-box DFS in row-major order; rows weakly increase, columns strictly.
    std::function<void(int, int)> rec = [&](int i, int j) {
        if (i == rows) {
            ++census.total;
            ++census.by_weight[ssyt_weight_pack(weight)];
            return;
        }
        int ni = i, nj = j + 1;
        if (nj == nu.part(i)) {
            ++ni;
            nj = 0;
        }
        int lo = 1;
        if (j > 0) lo = std::max(lo, fill[i][j - 1]);
        if (i > 0 && j < nu.part(i - 1)) lo = std::max(lo, fill[i - 1][j] + 1);
        for (int v = lo; v <= m; ++v) {
            fill[i][j] = v;
            ++weight[v - 1];
            rec(ni, nj);
            --weight[v - 1];
        }
    };
    rec(0, 0);
    return census;
}

} // namespace stablerep
