#pragma once

#include <string>
#include <vector>

#include "stablerep/bigint.hpp"
#include "stablerep/laurent.hpp"

namespace stablerep {

bool is_odd_prime(int p);

// Element of Z[zeta_p] for an odd prime p, stored as p integer coefficients in
// the exponent basis zeta^0..zeta^{p-1} and kept in the canonical form with
// coefficient p-1 equal to zero (the relation sum_j zeta^j = 0 is used to
// clear it). Canonical vectors are unique, so equality is structural.
class CycInt {
public:
    explicit CycInt(int p);
    static CycInt zeta_power(int p, long long e);
    static CycInt from_integer(int p, const BigInt& n);

    int p() const { return p_; }
    bool is_zero() const;
    const BigInt& coeff(int j) const; // 0 <= j <= p-1; coeff(p-1) is always 0

    CycInt operator-() const;
    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(const CycInt& a, const CycInt& b);
    CycInt& operator*=(const CycInt& o) { return *this = *this * o; }
    CycInt scaled(const BigInt& k) const;
    void add_zeta_multiple(long long e, const BigInt& k); // += k * zeta^e

    friend bool operator==(const CycInt& a, const CycInt& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }
    friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }

    CycInt conjugate() const; // zeta -> zeta^{-1}
    bool is_real() const { return conjugate() == *this; }
    bool is_integer() const; // lies in Z
    BigInt integer_value() const; // domain error unless is_integer()

    std::string to_string() const;

private:
    int p_;
    std::vector<BigInt> c_; // length p, c_[p-1] == 0 after canonicalize()
    void canonicalize();
};

// The element zeta^{-j+1} + zeta^{-j+3} + ... + zeta^{j-1}; p-periodic in j,
// zero at j = 0, and satisfies g_j * (zeta - zeta^{-1}) = zeta^j - zeta^{-j}.
CycInt g_unit(int p, long long j);

// Specialization q -> zeta_p of a Laurent polynomial.
CycInt specialize_at_zeta(const LaurentPoly& f, int p);

// Coordinates of a real cyclotomic integer in the free basis
// g_1, g_3, ..., g_{p-2} of the subring Z[zeta + zeta^{-1}]
// (g_{2i+1} = zeta^{-2i} + ... + zeta^{2i}, coordinate i).
struct RealCycCoords {
    int p = 0;
    std::vector<BigInt> coords; // length (p-1)/2
};

// Basis element g_{2i+1} for coordinate i.
CycInt real_basis_element(int p, int i);

// Unique coordinates of x in the basis above; domain error (carrying the
// conjugation residual) when x is not fixed by zeta -> zeta^{-1}.
RealCycCoords real_coords(const CycInt& x);
CycInt from_real_coords(const RealCycCoords& rc);

} // namespace stablerep
