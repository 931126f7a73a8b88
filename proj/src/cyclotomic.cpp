#include "stablerep/cyclotomic.hpp"

#include "stablerep/errors.hpp"

namespace stablerep {

bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int d = 3; static_cast<long long>(d) * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

CycInt::CycInt(int p) : p_(p) {
    require(is_odd_prime(p), "CycInt: p must be an odd prime, got " + std::to_string(p));
    c_.assign(p, BigInt(0));
}

CycInt CycInt::zeta_power(int p, long long e) {
    CycInt x(p);
    x.add_zeta_multiple(e, BigInt(1));
    return x;
}

CycInt CycInt::from_integer(int p, const BigInt& n) {
    CycInt x(p);
    x.c_[0] = n;
    return x;
}

void CycInt::canonicalize() {
    if (c_[p_ - 1].is_zero()) return;
    BigInt top = c_[p_ - 1];
    for (BigInt& v : c_) v -= top;
}

bool CycInt::is_zero() const {
    for (const BigInt& v : c_) {
        if (!v.is_zero()) return false;
    }
    return true;
}

const BigInt& CycInt::coeff(int j) const {
    require(j >= 0 && j < p_, "CycInt::coeff: index out of range");
    return c_[j];
}

CycInt CycInt::operator-() const {
    CycInt r(p_);
    for (int j = 0; j < p_; ++j) r.c_[j] = -c_[j];
    return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
    require(p_ == o.p_, "CycInt: mixed primes");
    for (int j = 0; j < p_; ++j) c_[j] += o.c_[j];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
    require(p_ == o.p_, "CycInt: mixed primes");
    for (int j = 0; j < p_; ++j) c_[j] -= o.c_[j];
    return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
    require(a.p_ == b.p_, "CycInt: mixed primes");
    const int p = a.p_;
    CycInt r(p);
    for (int i = 0; i < p; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; j < p; ++j) {
            if (b.c_[j].is_zero()) continue;
            int k = i + j;
            if (k >= p) k -= p;
            r.c_[k] += a.c_[i] * b.c_[j];
        }
    }
    r.canonicalize();
    return r;
}

CycInt CycInt::scaled(const BigInt& k) const {
    CycInt r(p_);
    if (k.is_zero()) return r;
    for (int j = 0; j < p_; ++j) r.c_[j] = c_[j] * k;
    return r;
}

void CycInt::add_zeta_multiple(long long e, const BigInt& k) {
    int j = static_cast<int>(((e % p_) + p_) % p_);
    c_[j] += k;
    canonicalize();
}

CycInt CycInt::conjugate() const {
    CycInt r(p_);
    for (int j = 0; j < p_; ++j) r.c_[(p_ - j) % p_] = c_[j];
    r.canonicalize();
    return r;
}

bool CycInt::is_integer() const {
    for (int j = 1; j < p_; ++j) {
        if (!c_[j].is_zero()) return false;
    }
    return true;
}

BigInt CycInt::integer_value() const {
    require(is_integer(), "CycInt::integer_value: element not in Z");
    return c_[0];
}

std::string CycInt::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int j = p_ - 2; j >= 0; --j) {
        const BigInt& c = c_[j];
        if (c.is_zero()) continue;
        if (!s.empty()) s += c.is_negative() ? " - " : " + ";
        else if (c.is_negative()) s += "-";
        BigInt a = c.is_negative() ? -c : c;
        if (j == 0) {
            s += a.to_string();
        } else {
            if (!a.is_one()) s += a.to_string() + "*";
            s += j == 1 ? "z" : "z^" + std::to_string(j);
        }
    }
    return s;
}

CycInt g_unit(int p, long long j) {
    CycInt x(p);
    int r = static_cast<int>(((j % p) + p) % p);
    for (int t = 0; t < r; ++t) x.add_zeta_multiple(-r + 1 + 2LL * t, BigInt(1));
    return x;
}

CycInt specialize_at_zeta(const LaurentPoly& f, int p) {
    CycInt x(p);
    for (const auto& [e, c] : f.coeffs()) x.add_zeta_multiple(e, c);
    return x;
}

CycInt real_basis_element(int p, int i) {
    require(i >= 0 && i <= (p - 3) / 2, "real_basis_element: index out of range");
    return g_unit(p, 2 * i + 1);
}

RealCycCoords real_coords(const CycInt& x) {
    const int p = x.p();
    if (!x.is_real()) {
        throw domain_error("real_coords: element not fixed by conjugation, residual " +
                           (x.conjugate() - x).to_string());
    }
    // Canonical real vectors satisfy a[1] = 0 and a[j] = a[p-j], so x equals
    // a[0] + sum_{j=2}^{(p-1)/2} a[j] * (zeta^j + zeta^{-j}).  With
    // theta_i := g_{2i+1} the pair sums satisfy zeta^j + zeta^{-j} =
    // theta_i - theta_{i-1} where 2i = j or 2i = p - j, and 1 = theta_0.
    internal_check(x.coeff(1).is_zero(), "real_coords: canonical real form violated");
    RealCycCoords rc;
    rc.p = p;
    rc.coords.assign((p - 1) / 2, BigInt(0));
    rc.coords[0] = x.coeff(0);
    for (int j = 2; j <= (p - 1) / 2; ++j) {
        internal_check(x.coeff(j) == x.coeff(p - j), "real_coords: canonical real form violated");
        const BigInt& v = x.coeff(j);
        if (v.is_zero()) continue;
        int i = (j % 2 == 0) ? j / 2 : (p - j) / 2;
        rc.coords[i] += v;
        rc.coords[i - 1] -= v;
    }
    return rc;
}

CycInt from_real_coords(const RealCycCoords& rc) {
    CycInt x(rc.p);
    require(static_cast<int>(rc.coords.size()) == (rc.p - 1) / 2,
            "from_real_coords: coordinate vector has wrong length");
    for (int i = 0; i < static_cast<int>(rc.coords.size()); ++i) {
        if (rc.coords[i].is_zero()) continue;
        x += real_basis_element(rc.p, i).scaled(rc.coords[i]);
    }
    return x;
}

} // namespace stablerep
