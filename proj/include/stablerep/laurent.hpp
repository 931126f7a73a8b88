#pragma once

#include <map>
#include <string>

#include "stablerep/bigint.hpp"

namespace stablerep {

// Laurent polynomial over Z in one variable q, sparse exponent -> coefficient
// map with no stored zeros.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly monomial(int exp, BigInt coeff = BigInt(1));
    static LaurentPoly one() { return monomial(0); }

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, BigInt>& coeffs() const { return coeffs_; }
    BigInt coeff(int exp) const;
    int min_exp() const; // domain error on zero polynomial
    int max_exp() const;

    void add_term(int exp, const BigInt& coeff);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // The involution q -> q^{-1}.
    LaurentPoly substitute_q_inverse() const;

    // Division that must be exact. The divisor's leading coefficient must be
    // +-1 (all uses divide by binomials q^h - q^{-h}); a nonzero remainder is
    // an internal consistency failure, not a valid input condition.
    LaurentPoly div_exact(const LaurentPoly& divisor) const;

    BigInt eval_at_one() const;

    std::string to_string() const;

private:
    std::map<int, BigInt> coeffs_;
};

// q^e - q^{-e}; the zero polynomial when e = 0.
LaurentPoly q_binomial_factor(int e);

} // namespace stablerep
