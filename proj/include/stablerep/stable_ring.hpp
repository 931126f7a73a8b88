#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stablerep/bigint.hpp"
#include "stablerep/cyclotomic.hpp"

namespace stablerep {

// Basis symbol (l, m): the class of the m-th Heller translate of the l-th
// symmetric power of the natural module, l in [0, p-2], m a residue mod p-1.
struct BasisIndex {
    int l = 0;
    int m = 0;
    friend bool operator==(const BasisIndex& a, const BasisIndex& b) {
        return a.l == b.l && a.m == b.m;
    }
};

// Integer linear combination of basis symbols: an element of the stable
// representation ring. Projective classes are not representable.
class StableElement {
public:
    explicit StableElement(int p);
    static StableElement basis(int p, int l, int m);
    static StableElement one(int p) { return basis(p, 0, 0); }

    int p() const { return p_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    BigInt coeff(int l, int m) const;
    // The (m, l) -> coefficient map; keys ordered by (m, l), coefficients nonzero.
    const std::map<std::pair<int, int>, BigInt>& terms() const { return terms_; }

    void add_term(int l, int m, const BigInt& coeff);

    // The basis symbol when the element is a single term with coefficient 1.
    std::optional<BasisIndex> single_basis_term() const;
    bool has_negative_coeff() const;

    StableElement operator-() const;
    StableElement& operator+=(const StableElement& o);
    StableElement& operator-=(const StableElement& o);
    friend StableElement operator+(StableElement a, const StableElement& b) { return a += b; }
    friend StableElement operator-(StableElement a, const StableElement& b) { return a -= b; }
    StableElement scaled(const BigInt& k) const;

    friend bool operator==(const StableElement& a, const StableElement& b) {
        return a.p_ == b.p_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const StableElement& a, const StableElement& b) { return !(a == b); }

    std::string to_string() const; // direct-sum rendering, "0" when zero

private:
    int p_;
    std::map<std::pair<int, int>, BigInt> terms_;
};

// Tensor-product multiplication: heights add mod p-1, the l-parts multiply by
// the truncated Clebsch-Gordan rule U_i U_j = U_{j-i} + U_{j-i+2} + ... up to
// min(i+j, 2p-4-i-j).
StableElement cg_multiply(const StableElement& a, const StableElement& b);

// Shift every height by n (mod p-1); n = p-1 is the identity.
StableElement heller(const StableElement& a, long long n);

// Contragredient: negates heights.
StableElement dual(const StableElement& a);

// Requires a basis element; true when a * dual(a) is the identity.
bool is_endotrivial(const StableElement& a);

// Ring homomorphism on the height-0 slice: U_l -> g_{l+1}. Any term with a
// nonzero height is a domain error.
CycInt theta(const StableElement& a);

// The unique height-0 element supported on l == parity (mod 2) mapping to x
// under theta. Coefficients may be negative; effectivity is the caller's
// concern.
StableElement theta_invert_parity(const CycInt& x, int parity);

// Element of Z[zeta+zeta^{-1}][X, Y] / (X^{p-1} - 1, Y^2 - 1).
class PresentationPoly {
public:
    explicit PresentationPoly(int p);
    static PresentationPoly one(int p);
    static PresentationPoly x_power(int p, long long a);
    static PresentationPoly y(int p);

    int p() const { return p_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<int, int>, CycInt>& terms() const { return terms_; }
    void add_term(long long x_exp, long long y_exp, const CycInt& coeff);

    friend PresentationPoly operator*(const PresentationPoly& a, const PresentationPoly& b);
    friend PresentationPoly operator+(PresentationPoly a, const PresentationPoly& b);
    friend bool operator==(const PresentationPoly& a, const PresentationPoly& b) {
        return a.p_ == b.p_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const PresentationPoly& a, const PresentationPoly& b) { return !(a == b); }

    std::string to_string() const;

private:
    int p_;
    std::map<std::pair<int, int>, CycInt> terms_; // (x exp mod p-1, y exp mod 2) -> coefficient
};

// The presentation isomorphism and its inverse: basis (l, m) corresponds to
// X^m Y^(l mod 2) times the real-subring coordinate of the even part of U_l.
PresentationPoly psi_to_presentation(const StableElement& a);
StableElement psi_from_presentation(const PresentationPoly& f);

// The two height/position tables: table 0 holds (2c, h), table 1 holds
// (p-2c-2, h) for heights h in [0, p-2] and positions c in [0, (p-3)/2].
// Together the tables list every basis symbol exactly once.
struct HeightPositionTables {
    int p = 0;
    // [table][h][c]
    std::array<std::vector<std::vector<BasisIndex>>, 2> cells;
};

HeightPositionTables height_position_tables(int p);

// Which table (0 or 1) and position hold U_l.
int table_of(int l);
int position_of(int l, int p);

// "k", "E", "Sym^l E", "Ω^m(Sym^l E)", "Ω^m k", ...
std::string render_basis_label(int l, int m);
// Inverse of render_basis_label; domain error on unrecognized labels.
BasisIndex parse_basis_label(const std::string& label, int p);

} // namespace stablerep
