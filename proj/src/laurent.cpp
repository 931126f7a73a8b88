#include "stablerep/laurent.hpp"

#include <vector>

#include "stablerep/errors.hpp"

namespace stablerep {

LaurentPoly LaurentPoly::monomial(int exp, BigInt coeff) {
    LaurentPoly p;
    p.add_term(exp, coeff);
    return p;
}

BigInt LaurentPoly::coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_exp() const {
    require(!is_zero(), "LaurentPoly::min_exp on zero polynomial");
    return coeffs_.begin()->first;
}

int LaurentPoly::max_exp() const {
    require(!is_zero(), "LaurentPoly::max_exp on zero polynomial");
    return coeffs_.rbegin()->first;
}

void LaurentPoly::add_term(int exp, const BigInt& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ea, ca] : a.coeffs_) {
        for (const auto& [eb, cb] : b.coeffs_) {
            r.add_term(ea + eb, ca * cb);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::substitute_q_inverse() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(-e, c);
    return r;
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& divisor) const {
    require(!divisor.is_zero(), "LaurentPoly::div_exact: zero divisor");
    const BigInt& lead = divisor.coeffs_.rbegin()->second;
    require(lead.is_one() || (-lead).is_one(),
            "LaurentPoly::div_exact: divisor leading coefficient must be +-1");
    if (is_zero()) return LaurentPoly();

    // Shift both operands to ordinary polynomials and run dense long division.
    const int num_min = min_exp();
    const int den_min = divisor.min_exp();
    const int num_deg = max_exp() - num_min;
    const int den_deg = divisor.max_exp() - den_min;
    internal_check(num_deg >= den_deg, "LaurentPoly::div_exact: degree drop, division not exact");

    std::vector<BigInt> rem(num_deg + 1);
    for (const auto& [e, c] : coeffs_) rem[e - num_min] = c;
    std::vector<BigInt> den(den_deg + 1);
    for (const auto& [e, c] : divisor.coeffs_) den[e - den_min] = c;

    const bool lead_negative = lead.is_negative();
    std::vector<BigInt> quot(num_deg - den_deg + 1);
    for (int i = num_deg - den_deg; i >= 0; --i) {
        BigInt q = rem[i + den_deg];
        if (lead_negative) q = -q;
        if (q.is_zero()) continue;
        quot[i] = q;
        for (int j = 0; j <= den_deg; ++j) rem[i + j] -= q * den[j];
    }
    for (const BigInt& c : rem) {
        internal_check(c.is_zero(), "LaurentPoly::div_exact: nonzero remainder");
    }

    LaurentPoly result;
    for (int i = 0; i <= num_deg - den_deg; ++i) {
        if (!quot[i].is_zero()) result.coeffs_.emplace(i + num_min - den_min, quot[i]);
    }
    return result;
}

BigInt LaurentPoly::eval_at_one() const {
    BigInt s(0);
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!s.empty()) s += c.is_negative() ? " - " : " + ";
        else if (c.is_negative()) s += "-";
        BigInt a = c.is_negative() ? -c : c;
        if (e == 0) {
            s += a.to_string();
        } else {
            if (!a.is_one()) s += a.to_string() + "*";
            s += e == 1 ? "q" : "q^" + std::to_string(e);
        }
    }
    return s;
}

LaurentPoly q_binomial_factor(int e) {
    LaurentPoly p;
    if (e == 0) return p;
    p.add_term(e, BigInt(1));
    p.add_term(-e, BigInt(-1));
    return p;
}

} // namespace stablerep
