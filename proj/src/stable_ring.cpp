#include "stablerep/stable_ring.hpp"

#include <algorithm>

#include "stablerep/errors.hpp"

namespace stablerep {

StableElement::StableElement(int p) : p_(p) {
    require(is_odd_prime(p), "StableElement: p must be an odd prime");
}

StableElement StableElement::basis(int p, int l, int m) {
    StableElement e(p);
    e.add_term(l, m, BigInt(1));
    return e;
}

BigInt StableElement::coeff(int l, int m) const {
    auto it = terms_.find({m, l});
    return it == terms_.end() ? BigInt(0) : it->second;
}

void StableElement::add_term(int l, int m, const BigInt& coeff) {
    require(l >= 0 && l <= p_ - 2, "StableElement: l outside [0, p-2]");
    m = ((m % (p_ - 1)) + (p_ - 1)) % (p_ - 1);
    if (coeff.is_zero()) return;
    auto key = std::make_pair(m, l);
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<BasisIndex> StableElement::single_basis_term() const {
    if (terms_.size() != 1 || !terms_.begin()->second.is_one()) return std::nullopt;
    return BasisIndex{terms_.begin()->first.second, terms_.begin()->first.first};
}

bool StableElement::has_negative_coeff() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second.is_negative(); });
}

StableElement StableElement::operator-() const {
    StableElement r(p_);
    for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
    return r;
}

StableElement& StableElement::operator+=(const StableElement& o) {
    require(p_ == o.p_, "StableElement: mixed primes");
    for (const auto& [key, c] : o.terms_) add_term(key.second, key.first, c);
    return *this;
}

StableElement& StableElement::operator-=(const StableElement& o) {
    require(p_ == o.p_, "StableElement: mixed primes");
    for (const auto& [key, c] : o.terms_) add_term(key.second, key.first, -c);
    return *this;
}

StableElement StableElement::scaled(const BigInt& k) const {
    StableElement r(p_);
    if (k.is_zero()) return r;
    for (const auto& [key, c] : terms_) r.terms_.emplace(key, c * k);
    return r;
}

std::string StableElement::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (const auto& [key, c] : terms_) {
        if (!s.empty()) s += " \xE2\x8A\x95 "; // circled plus
        std::string label = render_basis_label(key.second, key.first);
        if (c.is_one()) {
            s += label;
        } else {
            s += c.to_string() + "\xC2\xB7" + label; // middle dot
        }
    }
    return s;
}

StableElement cg_multiply(const StableElement& a, const StableElement& b) {
    require(a.p() == b.p(), "cg_multiply: mixed primes");
    const int p = a.p();
    StableElement r(p);
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            const int i = std::min(ka.second, kb.second);
            const int j = std::max(ka.second, kb.second);
            const int m = ka.first + kb.first;
            const int top = std::min(i + j, 2 * p - 4 - i - j);
            const BigInt prod = ca * cb;
            for (int k = j - i; k <= top; k += 2) r.add_term(k, m, prod);
        }
    }
    return r;
}

StableElement heller(const StableElement& a, long long n) {
    const int mod = a.p() - 1;
    int shift = static_cast<int>(((n % mod) + mod) % mod);
    StableElement r(a.p());
    for (const auto& [key, c] : a.terms()) r.add_term(key.second, key.first + shift, c);
    return r;
}

StableElement dual(const StableElement& a) {
    StableElement r(a.p());
    for (const auto& [key, c] : a.terms()) r.add_term(key.second, -key.first, c);
    return r;
}

bool is_endotrivial(const StableElement& a) {
    require(a.single_basis_term().has_value(), "is_endotrivial: expected a basis element");
    return cg_multiply(a, dual(a)) == StableElement::one(a.p());
}

CycInt theta(const StableElement& a) {
    CycInt x(a.p());
    for (const auto& [key, c] : a.terms()) {
        require(key.first == 0, "theta: element has a term of nonzero height");
        x += g_unit(a.p(), key.second + 1).scaled(c);
    }
    return x;
}

StableElement theta_invert_parity(const CycInt& x, int parity) {
    require(parity == 0 || parity == 1, "theta_invert_parity: parity must be 0 or 1");
    const int p = x.p();
    RealCycCoords rc = real_coords(x);
    StableElement r(p);
    for (int i = 0; i < (p - 1) / 2; ++i) {
        if (rc.coords[i].is_zero()) continue;
        // theta(U_{2i}) = g_{2i+1} = -g_{p-2i-1} = -theta(U_{p-2-2i})
        if (parity == 0) {
            r.add_term(2 * i, 0, rc.coords[i]);
        } else {
            r.add_term(p - 2 - 2 * i, 0, -rc.coords[i]);
        }
    }
    return r;
}

PresentationPoly::PresentationPoly(int p) : p_(p) {
    require(is_odd_prime(p), "PresentationPoly: p must be an odd prime");
}

PresentationPoly PresentationPoly::one(int p) {
    PresentationPoly f(p);
    f.add_term(0, 0, CycInt::from_integer(p, BigInt(1)));
    return f;
}

PresentationPoly PresentationPoly::x_power(int p, long long a) {
    PresentationPoly f(p);
    f.add_term(a, 0, CycInt::from_integer(p, BigInt(1)));
    return f;
}

PresentationPoly PresentationPoly::y(int p) {
    PresentationPoly f(p);
    f.add_term(0, 1, CycInt::from_integer(p, BigInt(1)));
    return f;
}

void PresentationPoly::add_term(long long x_exp, long long y_exp, const CycInt& coeff) {
    require(coeff.p() == p_, "PresentationPoly: mixed primes");
    if (coeff.is_zero()) return;
    const int mod = p_ - 1;
    auto key = std::make_pair(static_cast<int>(((x_exp % mod) + mod) % mod),
                              static_cast<int>(((y_exp % 2) + 2) % 2));
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PresentationPoly operator*(const PresentationPoly& a, const PresentationPoly& b) {
    require(a.p_ == b.p_, "PresentationPoly: mixed primes");
    PresentationPoly r(a.p_);
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        }
    }
    return r;
}

PresentationPoly operator+(PresentationPoly a, const PresentationPoly& b) {
    require(a.p_ == b.p_, "PresentationPoly: mixed primes");
    for (const auto& [k, c] : b.terms_) a.add_term(k.first, k.second, c);
    return a;
}

std::string PresentationPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (const auto& [key, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.to_string() + ")";
        if (key.first > 0) s += "*X" + (key.first > 1 ? "^" + std::to_string(key.first) : "");
        if (key.second > 0) s += "*Y";
    }
    return s;
}

PresentationPoly psi_to_presentation(const StableElement& a) {
    const int p = a.p();
    PresentationPoly f(p);
    for (const auto& [key, c] : a.terms()) {
        const int l = key.second;
        const int eps = l % 2;
        const int even_l = eps ? p - 2 - l : l;
        f.add_term(key.first, eps, real_basis_element(p, even_l / 2).scaled(c));
    }
    return f;
}

StableElement psi_from_presentation(const PresentationPoly& f) {
    const int p = f.p();
    StableElement a(p);
    for (const auto& [key, c] : f.terms()) {
        RealCycCoords rc = real_coords(c);
        for (int i = 0; i < (p - 1) / 2; ++i) {
            if (rc.coords[i].is_zero()) continue;
            const int l = key.second ? p - 2 - 2 * i : 2 * i;
            a.add_term(l, key.first, rc.coords[i]);
        }
    }
    return a;
}

HeightPositionTables height_position_tables(int p) {
    require(is_odd_prime(p), "height_position_tables: p must be an odd prime");
    HeightPositionTables t;
    t.p = p;
    for (int table = 0; table < 2; ++table) {
        t.cells[table].assign(p - 1, std::vector<BasisIndex>((p - 1) / 2));
        for (int h = 0; h <= p - 2; ++h) {
            for (int c = 0; c <= (p - 3) / 2; ++c) {
                t.cells[table][h][c] = BasisIndex{table == 0 ? 2 * c : p - 2 * c - 2, h};
            }
        }
    }
    return t;
}

int table_of(int l) { return l % 2 == 0 ? 0 : 1; }

int position_of(int l, int p) { return l % 2 == 0 ? l / 2 : (p - 2 - l) / 2; }

std::string render_basis_label(int l, int m) {
    std::string base = l == 0 ? "k" : l == 1 ? "E" : "Sym^" + std::to_string(l) + " E";
    if (m == 0) return base;
    std::string omega = m == 1 ? "\xCE\xA9" : "\xCE\xA9^" + std::to_string(m);
    if (l >= 2) return omega + "(" + base + ")";
    return omega + " " + base;
}

BasisIndex parse_basis_label(const std::string& label, int p) {
    std::string s = label;
    int m = 0;
    if (s.rfind("\xCE\xA9", 0) == 0) {
        s = s.substr(2);
        if (!s.empty() && s[0] == '^') {
            size_t pos = 1;
            size_t used = 0;
            m = std::stoi(s.substr(pos), &used);
            s = s.substr(pos + used);
        } else {
            m = 1;
        }
        if (!s.empty() && s[0] == ' ') s = s.substr(1);
        if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    }
    int l = -1;
    if (s == "k") {
        l = 0;
    } else if (s == "E") {
        l = 1;
    } else if (s.rfind("Sym^", 0) == 0 && s.size() > 6 && s.substr(s.size() - 2) == " E") {
        try {
            l = std::stoi(s.substr(4, s.size() - 6));
        } catch (const std::exception&) {
            l = -1;
        }
    }
    require(l >= 0 && l <= p - 2 && m >= 0 && m <= p - 2,
            "parse_basis_label: unrecognized label '" + label + "'");
    return BasisIndex{l, m};
}

} // namespace stablerep
