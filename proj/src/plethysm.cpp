#include "stablerep/plethysm.hpp"

#include <algorithm>
#include <functional>

#include "stablerep/errors.hpp"

namespace stablerep {

const char* class_case_label(ClassCase c) {
    switch (c) {
        case ClassCase::ElementaryRows: return "elementary-rows";
        case ClassCase::ElementaryColumns: return "elementary-columns";
        case ClassCase::AugmentedRow: return "augmented-row";
        case ClassCase::AugmentedColumn: return "augmented-column";
        case ClassCase::Hook: return "hook";
        case ClassCase::Rectangular: return "rectangular";
        case ClassCase::Elementary: return "elementary";
        case ClassCase::Row: return "row";
        case ClassCase::Column: return "column";
        case ClassCase::Neither: return "neither";
    }
    return "neither";
}

namespace {

void check_domain(const Partition& nu, int l, int p) {
    require(is_odd_prime(p), "p must be an odd prime, got " + std::to_string(p));
    require(l >= 0 && l <= p - 2, "l outside [0, p-2]");
    require(is_p_small(nu, p), "partition " + nu.to_string() + " not p-small for p = " +
                                   std::to_string(p));
}

// nu == (w^b) for some b >= 0 (the empty partition matches).
bool is_rectangle_of(const Partition& nu, int w) {
    return std::all_of(nu.parts().begin(), nu.parts().end(), [&](int x) { return x == w; });
}

// nu == (w^b, tail) with b >= 0 and the given nonzero tail part.
bool is_rectangle_plus_tail(const Partition& nu, int w, int tail) {
    if (tail == 0) return is_rectangle_of(nu, w);
    if (nu.empty() || nu.parts().back() != tail) return false;
    for (int i = 0; i + 1 < nu.length(); ++i) {
        if (nu.part(i) != w) return false;
    }
    return true;
}

} // namespace

bool is_projective_closed_form(const Partition& nu, int l, int p) {
    check_domain(nu, l, p);
    return nu.first() >= p - l || nu.length() >= l + 2;
}

ClassCase classify_stably_irreducible(const Partition& nu, int l, int p) {
    check_domain(nu, l, p);
    const int w = p - l - 1;

    // (w^b, 1) or (w^b)
    if (is_rectangle_plus_tail(nu, w, 1) || is_rectangle_of(nu, w)) {
        return ClassCase::ElementaryRows;
    }
    // (a+1, a^l) or (a^{l+1})
    {
        bool match = nu == Partition({1});
        if (!match && l == 0 && nu.length() == 1) match = true; // (a+1) alone
        if (!match && nu.length() == l + 1) {
            const int a = nu.part(l);
            bool ok = nu.part(0) == a + 1 || nu.part(0) == a;
            for (int i = 1; i <= l && ok; ++i) ok = nu.part(i) == a;
            match = ok;
        }
        if (match) return ClassCase::ElementaryColumns;
    }
    // (w^b, w-1), or l = 1 with nu inside the 2 x (p-2) box
    if (is_rectangle_plus_tail(nu, w, w - 1) ||
        (l == 1 && nu.length() <= 2 && nu.first() <= p - 2)) {
        return ClassCase::AugmentedRow;
    }
    // ((a+1)^l, a), or l = p-3 with nu inside the (p-2) x 2 box
    {
        bool match = false;
        if (l >= 1) {
            if (nu.length() == l && is_rectangle_of(nu, 1)) {
                match = true; // a = 0
            } else if (nu.length() == l + 1) {
                const int a = nu.part(l);
                bool ok = a >= 1;
                for (int i = 0; i < l && ok; ++i) ok = nu.part(i) == a + 1;
                match = ok;
            }
        } else {
            match = nu.length() <= 1; // ((a+1)^0, a) = (a)
        }
        if (match || (l == p - 3 && nu.first() <= 2 && nu.length() <= p - 2)) {
            return ClassCase::AugmentedColumn;
        }
    }
    // hook (w, 1^l)
    {
        bool match = nu.length() == l + 1 && nu.first() == w;
        for (int i = 1; i <= l && match; ++i) match = nu.part(i) == 1;
        if (l == 0) match = nu == Partition({w});
        if (match) return ClassCase::Hook;
    }
    if (p == 7 && ((nu == Partition({2, 2, 2}) && l == 3) || (nu == Partition({3, 3}) && l == 2))) {
        return ClassCase::Rectangular;
    }
    return ClassCase::Neither;
}

ClassCase classify_pl_small(const Partition& nu, int l, int p) {
    require(is_odd_prime(p), "p must be an odd prime");
    require(is_pl_small(nu, p, l),
            "partition " + nu.to_string() + " not (p,l)-small for p = " + std::to_string(p) +
                ", l = " + std::to_string(l));
    if (nu.empty() || nu == Partition({1})) return ClassCase::Elementary;
    if ((p - l - 2 > 0 && nu == Partition({p - l - 2})) || l == 1) return ClassCase::Row;
    if ((l >= 1 && nu.length() == l && is_rectangle_of(nu, 1)) || l == p - 3) {
        return ClassCase::Column;
    }
    if (p == 7 && ((nu == Partition({2, 2, 2}) && l == 3) || (nu == Partition({3, 3}) && l == 2))) {
        return ClassCase::Rectangular;
    }
    return ClassCase::Neither;
}

std::optional<int> multiset_criterion(const Partition& nu, int l, int p) {
    require(is_odd_prime(p), "p must be an odd prime");
    require(is_pl_small(nu, p, l),
            "multiset_criterion: partition not (p,l)-small");
    const IntMultiset h = fold(hooks(nu), p);
    const IntMultiset c = fold(shifted_contents(nu, l + 1), p);

    // c = (h u {i}) \ {1} holds iff the signed difference c - h is either
    // empty (then i = 1) or exactly {+i, -1}.
    std::map<int, long long> diff;
    for (const auto& [x, n] : c.counts()) diff[x] += n;
    for (const auto& [x, n] : h.counts()) diff[x] -= n;
    std::erase_if(diff, [](const auto& kv) { return kv.second == 0; });

    if (diff.empty()) return 1;
    if (diff.size() == 2) {
        auto first = diff.begin();
        auto second = std::next(first);
        if (first->first == 1 && first->second == -1 && second->second == 1) {
            return second->first;
        }
    }
    return std::nullopt;
}

Partition reduce_column(const Partition& nu, int l, int p) {
    check_domain(nu, l, p);
    require(nu.length() == l + 1, "reduce_column: length(nu) must equal l+1");
    return remove_first_column(nu);
}

std::pair<Partition, bool> reduce_row(const Partition& nu, int l, int p) {
    check_domain(nu, l, p);
    require(nu.first() == p - l - 1, "reduce_row: nu_1 must equal p-l-1");
    Partition mu = remove_first_row(nu);
    // The U_{p-2} twist appears exactly when |nu| and |mu| have different
    // parities, i.e. when the removed row p-l-1 is odd.
    return {mu, (nu.size() - mu.size()) % 2 == 1};
}

StableElement heller_interchange(const Partition& nu, int l, int omega, int p) {
    check_domain(nu, l, p);
    const Partition& lambda = omega % 2 == 0 ? nu : nu.conjugate();
    StableElement d = decompose_plethysm(lambda, l, p).decomposition;
    return heller(d, static_cast<long long>(omega) * nu.size());
}

bool is_projective_twisted(const Partition& nu, int l, int omega, int p) {
    check_domain(nu, l, p);
    const Partition lambda = omega % 2 == 0 ? nu : nu.conjugate();
    return is_projective_closed_form(lambda, l, p);
}

bool is_stably_irreducible_twisted(const Partition& nu, int l, int omega, int p) {
    check_domain(nu, l, p);
    const Partition lambda = omega % 2 == 0 ? nu : nu.conjugate();
    if ((static_cast<long long>(omega) * nu.size()) % (p - 1) != 0) return false;
    return classify_stably_irreducible(lambda, l, p) != ClassCase::Neither;
}

PlethysmResult decompose_twisted(const Partition& nu, int l, int omega, int p) {
    check_domain(nu, l, p);
    require(omega >= 0 && omega <= p - 2, "twist outside [0, p-2]");
    PlethysmResult r;
    r.p = p;
    r.nu = nu;
    r.l = l;
    r.twist = omega;
    r.decomposition = heller_interchange(nu, l, omega, p);
    internal_check(!r.decomposition.has_negative_coeff(),
                   "decompose: negative multiplicity after theta inversion");
    r.projective = r.decomposition.is_zero();
    auto single = r.decomposition.single_basis_term();
    r.stably_irreducible = single.has_value() && single->m == 0;
    if (r.stably_irreducible) r.witness = single;

    if (r.projective) {
        r.theorem_case = "projective";
    } else {
        const Partition lambda = omega % 2 == 0 ? nu : nu.conjugate();
        if ((static_cast<long long>(omega) * nu.size()) % (p - 1) != 0) {
            r.theorem_case = "neither";
        } else {
            r.theorem_case = class_case_label(classify_stably_irreducible(lambda, l, p));
        }
    }
    return r;
}

PlethysmResult decompose_plethysm(const Partition& nu, int l, int p) {
    check_domain(nu, l, p);
    PlethysmResult r;
    r.p = p;
    r.nu = nu;
    r.l = l;
    r.twist = 0;
    const int parity = static_cast<int>((static_cast<long long>(l) * nu.size()) % 2);
    r.decomposition = theta_invert_parity(schur_at_roots(nu, l, p), parity);
    internal_check(!r.decomposition.has_negative_coeff(),
                   "decompose_plethysm: negative multiplicity after theta inversion");
    r.projective = r.decomposition.is_zero();
    auto single = r.decomposition.single_basis_term();
    r.stably_irreducible = single.has_value() && single->m == 0;
    if (r.stably_irreducible) r.witness = single;
    r.theorem_case = r.projective
                         ? "projective"
                         : class_case_label(classify_stably_irreducible(nu, l, p));
    return r;
}

StableElement endotrivial_power(int l, int m, int n, int p) {
    require(is_odd_prime(p), "p must be an odd prime");
    require(l == 0 || l == p - 2, "endotrivial_power: basis symbol is not endotrivial");
    require(n >= 0 && n < p, "endotrivial_power: n outside [0, p-1]");
    StableElement r = StableElement::one(p);
    const StableElement v = StableElement::basis(p, l, m);
    for (int i = 0; i < n; ++i) r = cg_multiply(r, v);
    return r;
}

long long lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu) {
    if (lambda.size() + mu.size() != nu.size()) return 0;
    if (!nu.contains(lambda)) return 0;
    if (mu.empty()) return 1; // sizes force lambda == nu

    // Count lattice-word skew tableaux of shape nu/lambda and weight mu: fill
    // rows top to bottom, each row right to left (the reverse reading order),
    // keeping rows weakly increasing, columns strictly increasing and the
    // running content a ballot sequence.
    const int rows = nu.length();
    const int values = mu.length();
    std::vector<std::vector<int>> val(rows);
    for (int i = 0; i < rows; ++i) val[i].assign(nu.part(i), 0);
    std::vector<long long> count(values + 1, 0);
    long long total = 0;

    std::function<void(int, int)> rec = [&](int i, int j) {
        while (i < rows && j < lambda.part(i)) {
            ++i;
            j = i < rows ? nu.part(i) - 1 : 0;
        }
        if (i == rows) {
            ++total;
            return;
        }
        const int right = j + 1 < nu.part(i) ? val[i][j + 1] : values;
        const bool above_filled = i > 0 && j < nu.part(i - 1) && j >= lambda.part(i - 1);
        const int lo = above_filled ? val[i - 1][j] + 1 : 1;
        int ni = i, nj = j - 1;
        if (nj < 0) {
            ++ni;
            nj = ni < rows ? nu.part(ni) - 1 : 0;
        }
        for (int v = lo; v <= right; ++v) {
            if (count[v] >= mu.part(v - 1)) continue;
            if (v >= 2 && count[v] + 1 > count[v - 1]) continue; // ballot violation
            val[i][j] = v;
            ++count[v];
            rec(ni, nj);
            --count[v];
        }
    };
    rec(0, nu.part(0) - 1);
    return total;
}

StableElement schur_of_stable(const Partition& nu, const StableElement& e) {
    const int p = e.p();
    require(is_p_small(nu, p), "schur_of_stable: partition not p-small");
    require(!e.has_negative_coeff(), "schur_of_stable: element must be effective");
    if (nu.empty()) return StableElement::one(p);
    if (e.is_zero()) return StableElement(p);
    if (auto single = e.single_basis_term()) {
        return heller_interchange(nu, single->l, single->m, p);
    }
    // Split off one copy of the first symbol and expand over the direct sum.
    const auto& [key, coeff] = *e.terms().begin();
    StableElement head = StableElement::basis(p, key.second, key.first);
    StableElement rest = e;
    rest.add_term(key.second, key.first, BigInt(-1));
    return expand_sum(nu, head, rest);
}

StableElement expand_sum(const Partition& nu, const StableElement& a, const StableElement& b) {
    require(a.p() == b.p(), "expand_sum: mixed primes");
    const int p = a.p();
    require(is_p_small(nu, p), "expand_sum: partition not p-small");
    StableElement out(p);
    for (long long k = 0; k <= nu.size(); ++k) {
        for (const Partition& lambda : partitions_of(k)) {
            if (!nu.contains(lambda)) continue;
            for (const Partition& mu : partitions_of(nu.size() - k)) {
                const long long c = lr_coefficient(nu, lambda, mu);
                if (c == 0) continue;
                StableElement term =
                    cg_multiply(schur_of_stable(lambda, a), schur_of_stable(mu, b));
                out += term.scaled(BigInt(c));
            }
        }
    }
    return out;
}

} // namespace stablerep
