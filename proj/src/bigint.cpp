#include "stablerep/bigint.hpp"

#include <algorithm>
#include <ostream>

#include "stablerep/errors.hpp"

namespace stablerep {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid UB on LLONG_MIN
    unsigned long long u = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                 : static_cast<unsigned long long>(v);
    while (u != 0) {
        mag_.push_back(static_cast<uint32_t>(u & 0xffffffffULL));
        u >>= 32;
    }
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const std::vector<uint32_t>& lo = a.size() < b.size() ? a : b;
    const std::vector<uint32_t>& hi = a.size() < b.size() ? b : a;
    std::vector<uint32_t> r(hi.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        r[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    r[hi.size()] = static_cast<uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = static_cast<int64_t>(a[i]) - (i < b.size() ? b[i] : 0) - borrow;
        if (d < 0) {
            d += (1LL << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(d);
    }
    internal_check(borrow == 0, "BigInt::sub_mag underflow");
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

int BigInt::cmp(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c : -c;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) return *this = o;
    if (sign_ == o.sign_) {
        mag_ = add_mag(mag_, o.mag_);
        return *this;
    }
    int c = cmp_mag(mag_, o.mag_);
    if (c == 0) {
        sign_ = 0;
        mag_.clear();
    } else if (c > 0) {
        mag_ = sub_mag(mag_, o.mag_);
    } else {
        mag_ = sub_mag(o.mag_, mag_);
        sign_ = o.sign_;
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (size_t i = 0; i < a.mag_.size(); ++i) {
        uint64_t carry = 0;
        uint64_t ai = a.mag_[i];
        for (size_t j = 0; j < b.mag_.size(); ++j) {
            uint64_t cur = r.mag_[i + j] + ai * b.mag_[j] + carry;
            r.mag_[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + b.mag_.size();
        while (carry != 0) {
            uint64_t cur = r.mag_[k] + carry;
            r.mag_[k] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

BigInt& BigInt::operator*=(const BigInt& o) { return *this = *this * o; }

BigInt BigInt::divmod_u32(uint32_t d, uint32_t& rem) const {
    require(d != 0, "BigInt: division by zero");
    BigInt q;
    q.mag_.assign(mag_.size(), 0);
    uint64_t r = 0;
    for (size_t i = mag_.size(); i-- > 0;) {
        uint64_t cur = (r << 32) | mag_[i];
        q.mag_[i] = static_cast<uint32_t>(cur / d);
        r = cur % d;
    }
    rem = static_cast<uint32_t>(r);
    q.sign_ = sign_;
    q.trim();
    return q;
}

BigInt BigInt::div_exact_u32(uint32_t d) const {
    uint32_t rem = 0;
    BigInt q = divmod_u32(d, rem);
    internal_check(rem == 0, "BigInt: division expected to be exact");
    return q;
}

std::optional<long long> BigInt::to_i64() const {
    if (mag_.size() > 2) return std::nullopt;
    unsigned long long u = 0;
    for (size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
    if (sign_ >= 0) {
        if (u > 0x7fffffffffffffffULL) return std::nullopt;
        return static_cast<long long>(u);
    }
    if (u > 0x8000000000000000ULL) return std::nullopt;
    return -static_cast<long long>(u - 1) - 1;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> chunks;
    BigInt t = *this;
    t.sign_ = 1;
    while (!t.is_zero()) {
        uint32_t rem = 0;
        t = t.divmod_u32(1000000000u, rem);
        chunks.push_back(rem);
    }
    std::string s = sign_ < 0 ? "-" : "";
    s += std::to_string(chunks.back());
    for (size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        s += std::string(9 - part.size(), '0') + part;
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt r(1);
    for (long long i = 1; i <= k; ++i) {
        r *= BigInt(n - k + i);
        r = r.div_exact_u32(static_cast<uint32_t>(i));
    }
    return r;
}

} // namespace stablerep
