#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace stablerep {

// Arbitrary-precision signed integer, sign + little-endian base-2^32 magnitude.
// Only the operations the exact-arithmetic layers need: ring operations,
// comparisons and single-limb division (binomials, decimal printing).
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v); // NOLINT(google-explicit-constructor)

    int sgn() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    bool is_negative() const { return sign_ < 0; }

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);
    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    // Quotient by a single limb; remainder out. Divisor must be nonzero.
    BigInt divmod_u32(uint32_t d, uint32_t& rem) const;
    // Exact division by a single limb; throws internal_error on nonzero remainder.
    BigInt div_exact_u32(uint32_t d) const;

    std::optional<long long> to_i64() const;
    std::string to_string() const;

    static int cmp(const BigInt& a, const BigInt& b);

private:
    int sign_ = 0;                  // -1, 0, +1; 0 iff mag_ empty
    std::vector<uint32_t> mag_;     // little-endian, no trailing zero limb

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // Requires |a| >= |b|.
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

// n choose k as an exact integer; 0 when k < 0 or k > n.
BigInt binomial(long long n, long long k);

} // namespace stablerep
