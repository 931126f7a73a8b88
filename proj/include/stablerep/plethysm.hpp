#pragma once

#include <optional>
#include <string>
#include <utility>

#include "stablerep/partition.hpp"
#include "stablerep/schur_eval.hpp"
#include "stablerep/stable_ring.hpp"

namespace stablerep {

// Outcome of matching (nu, l) against the classification case lists. The
// flags on PlethysmResult carry the semantics; the label names the first
// matching family.
enum class ClassCase {
    // full (p-small) case list
    ElementaryRows,    // nu = ((p-l-1)^b, 1) or ((p-l-1)^b)
    ElementaryColumns, // nu = (a+1, a^l) or (a^{l+1})
    AugmentedRow,      // nu = ((p-l-1)^b, p-l-2), or l = 1 and nu inside 2 x (p-2)
    AugmentedColumn,   // nu = ((a+1)^l, a), or l = p-3 and nu inside (p-2) x 2
    Hook,              // nu = (p-l-1, 1^l)
    Rectangular,       // p = 7, nu = (2,2,2) with l = 3 or (3,3) with l = 2
    // reduced ((p,l)-small) case list
    Elementary, // nu = () or (1)
    Row,        // nu = (p-l-2) or l = 1
    Column,     // nu = (1^l) or l = p-3
    // no family matched
    Neither,
};

const char* class_case_label(ClassCase c);

struct PlethysmResult {
    int p = 0;
    Partition nu;
    int l = 0;
    int twist = 0; // the input was the twist-th Heller translate of Sym^l E
    StableElement decomposition;
    bool projective = false;
    bool stably_irreducible = false;
    std::optional<BasisIndex> witness; // the surviving symbol when stably irreducible
    std::string theorem_case;          // class label, "projective", or "neither"

    PlethysmResult() : decomposition(3) {}
};

// Decomposition of the nu-th Schur functor applied to Sym^l E, modulo
// projectives: invert theta on the Schur value at roots of unity, on the
// parity l*|nu| slice. Requires nu p-small and 0 <= l <= p-2.
PlethysmResult decompose_plethysm(const Partition& nu, int l, int p);

// Same for the omega-fold Heller translate of Sym^l E as input.
PlethysmResult decompose_twisted(const Partition& nu, int l, int omega, int p);

// Closed-form projectivity predicate: nu_1 >= p-l or length(nu) >= l+2.
bool is_projective_closed_form(const Partition& nu, int l, int p);

// First matching family of the six-case stable-irreducibility list, or
// Neither. Requires nu p-small and 0 <= l <= p-2.
ClassCase classify_stably_irreducible(const Partition& nu, int l, int p);

// Four-case list on the (p,l)-small domain (domain error outside it).
ClassCase classify_pl_small(const Partition& nu, int l, int p);

// The integer i with C_{l+1}^F = (H^F u {i}) \ {1} when it exists (folded
// into [1,(p-1)/2]); its presence is equivalent to stable irreducibility.
// Requires nu (p,l)-small.
std::optional<int> multiset_criterion(const Partition& nu, int l, int p);

// Column reduction: requires length(nu) = l+1; the decomposition is unchanged.
Partition reduce_column(const Partition& nu, int l, int p);
// Row reduction: requires nu_1 = p-l-1; second component tells whether the
// reduced plethysm picks up a U_{p-2} twist.
std::pair<Partition, bool> reduce_row(const Partition& nu, int l, int p);

// Decomposition of the nu-th Schur functor applied to the basis symbol
// (l, omega): conjugate nu when omega is odd, then shift by omega*|nu|.
StableElement heller_interchange(const Partition& nu, int l, int omega, int p);

// Twisted-input predicates in closed form.
bool is_projective_twisted(const Partition& nu, int l, int omega, int p);
bool is_stably_irreducible_twisted(const Partition& nu, int l, int omega, int p);

// n-th tensor power of an endotrivial basis symbol (l in {0, p-2}); n < p.
StableElement endotrivial_power(int l, int m, int n, int p);

// Littlewood-Richardson coefficient by the lattice-word tableau rule.
long long lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu);

// Schur functor of an arbitrary effective stable element, via the LR
// expansion over direct-sum splittings. Requires |nu| < p.
StableElement schur_of_stable(const Partition& nu, const StableElement& e);

// LR expansion of the Schur functor of a direct sum a (+) b.
StableElement expand_sum(const Partition& nu, const StableElement& a, const StableElement& b);

} // namespace stablerep
