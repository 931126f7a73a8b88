#include "stablerep/schur_eval.hpp"

#include <functional>
#include <vector>

#include "stablerep/errors.hpp"

namespace stablerep {

LaurentPoly shcf_laurent(const Partition& nu, int l, int p) {
    require(is_odd_prime(p), "shcf_laurent: p must be an odd prime");
    require(l >= 0 && l <= p - 2, "shcf_laurent: l outside [0, p-2]");
    if (nu.length() > l + 1) return LaurentPoly();

    // All shifted contents are >= 1 here, so no factor vanishes.
    const IntMultiset contents = shifted_contents(nu, l + 1);
    const IntMultiset hook_lengths = hooks(nu);
    LaurentPoly num = LaurentPoly::one();
    for (const auto& [c, mult] : contents.counts()) {
        LaurentPoly factor = q_binomial_factor(c);
        for (long long k = 0; k < mult; ++k) num *= factor;
    }
    for (const auto& [h, mult] : hook_lengths.counts()) {
        LaurentPoly factor = q_binomial_factor(h);
        for (long long k = 0; k < mult; ++k) num = num.div_exact(factor);
    }
    return num;
}

LaurentPoly ssyt_specialization(const Partition& nu, int l) {
    require(l >= 0, "ssyt_specialization: l must be nonnegative");
    const int m = l + 1;
    if (nu.length() > m) return LaurentPoly();
    if (nu.empty()) return LaurentPoly::one();

    // Tableaux of shape nu with entries in {1..m} are sequences of
    // interlacing partitions: the boxes holding values <= k form a partition
    // mu with mu <= lambda row by row and lambda_{i+1} <= mu_i (the boxes
    // holding k+1..m make horizontal strips). Summing q-weights stage by
    // stage evaluates the same tableau sum as the census, without
    // materializing it; nothing here touches hooks, contents or division.
    std::map<std::vector<int>, LaurentPoly> stage;
    stage.emplace(nu.parts(), LaurentPoly::one());
    for (int k = m; k >= 1; --k) {
        const int exponent = 2 * k - l - 2; // value k contributes q^(2k-l-2) per box
        std::map<std::vector<int>, LaurentPoly> prev;
        for (const auto& [lambda, weight] : stage) {
            // enumerate mu with lambda_{i+1} <= mu_i <= lambda_i, dropping
            // shapes that cannot be filled by the remaining k-1 values
            std::vector<int> mu(lambda.size(), 0);
            long long lambda_size = 0;
            for (int part : lambda) lambda_size += part;
            std::function<void(size_t, long long)> rec = [&](size_t i, long long mu_size) {
                if (i == lambda.size()) {
                    std::vector<int> trimmed = mu;
                    while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
                    if (static_cast<int>(trimmed.size()) > k - 1) return;
                    LaurentPoly term = weight;
                    term *= LaurentPoly::monomial(
                        static_cast<int>((lambda_size - mu_size) * exponent));
                    auto [it, inserted] = prev.try_emplace(std::move(trimmed), term);
                    if (!inserted) it->second += term;
                    return;
                }
                const int lo = i + 1 < lambda.size() ? lambda[i + 1] : 0;
                for (int v = lo; v <= lambda[i]; ++v) {
                    mu[i] = v;
                    rec(i + 1, mu_size + v);
                }
            };
            rec(0, 0);
        }
        stage.swap(prev);
    }
    auto it = stage.find({});
    return it == stage.end() ? LaurentPoly() : it->second;
}

CycInt schur_at_roots(const Partition& nu, int l, int p) {
    require(is_p_small(nu, p), "schur_at_roots: partition not p-small");
    CycInt value = specialize_at_zeta(shcf_laurent(nu, l, p), p);
    internal_check(value.is_real(), "schur_at_roots: value escaped the real subring");
    return value;
}

PowerMultiset::PowerMultiset(int p) : p_(p) {
    require(is_odd_prime(p), "PowerMultiset: p must be an odd prime");
}

void PowerMultiset::add(long long exponent, long long count) {
    require(count > 0, "PowerMultiset::add: count must be positive");
    int j = static_cast<int>(((exponent % p_) + p_) % p_);
    counts_[j] += count;
    size_ += count;
}

CycInt PowerMultiset::value() const {
    CycInt x(p_);
    for (const auto& [e, n] : counts_) x.add_zeta_multiple(e, BigInt(n));
    return x;
}

PowerMultiset PowerMultiset::from_cycint(const CycInt& x) {
    PowerMultiset f(x.p());
    for (int j = 0; j < x.p(); ++j) {
        const BigInt& c = x.coeff(j);
        if (c.is_zero()) continue;
        require(!c.is_negative(), "PowerMultiset: canonical coefficient of zeta^" +
                                      std::to_string(j) + " is negative, not a power multiset");
        auto n = c.to_i64();
        require(n.has_value(), "PowerMultiset: multiplicity too large");
        f.add(j, *n);
    }
    return f;
}

CycInt lambda_op(const PowerMultiset& f, int i) {
    const int p = f.p();
    require(i >= 0 && i < p, "lambda_op: index outside [0, p-1]");
    // Coefficient of t^i in prod over powers zeta^e of (1 + t*zeta^e), grouped
    // as (1 + t*zeta^e)^m with binomial weights.
    std::vector<CycInt> et(static_cast<size_t>(i) + 1, CycInt(p));
    et[0] = CycInt::from_integer(p, BigInt(1));
    for (const auto& [e, m] : f.counts()) {
        std::vector<CycInt> next(et.size(), CycInt(p));
        for (int d = 0; d <= i; ++d) {
            if (et[d].is_zero()) continue;
            for (int k = 0; d + k <= i && k <= m; ++k) {
                CycInt term = et[d].scaled(binomial(m, k));
                next[d + k] += term * CycInt::zeta_power(p, static_cast<long long>(e) * k);
            }
        }
        et.swap(next);
    }
    return et[i];
}

namespace {

// Division-free determinant of a small CycInt matrix: Laplace expansion down
// the rows with memoization over column subsets.
CycInt subset_determinant(const std::vector<std::vector<CycInt>>& a, int p) {
    const int n = static_cast<int>(a.size());
    require(n <= 20, "determinant: matrix too large for subset expansion");
    if (n == 0) return CycInt::from_integer(p, BigInt(1));
    std::vector<CycInt> dp(static_cast<size_t>(1) << n, CycInt(p));
    dp[0] = CycInt::from_integer(p, BigInt(1));
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        const int row = __builtin_popcount(mask);
        if (row >= n || dp[mask].is_zero()) continue;
        int chosen_below = 0;
        for (int col = 0; col < n; ++col) {
            if (mask & (1u << col)) {
                ++chosen_below;
                continue;
            }
            if (!a[row][col].is_zero()) {
                // inversions added: the chosen columns above col
                CycInt term = dp[mask] * a[row][col];
                if ((row - chosen_below) % 2 != 0) term = -term;
                dp[mask | (1u << col)] += term;
            }
        }
    }
    return dp[(1u << n) - 1];
}

} // namespace

CycInt giambelli_op(const Partition& nu, const PowerMultiset& f) {
    const int p = f.p();
    require(nu.first() + nu.length() - 1 < p,
            "giambelli_op: nu_1 + length(nu) - 1 must be below p");
    const int n = nu.first();
    const Partition conj = nu.conjugate();

    // Cache lambda_op values; indices range over [0, p-1], others vanish.
    std::vector<CycInt> lam(p, CycInt(p));
    std::vector<bool> have(p, false);
    auto lam_at = [&](int k) -> CycInt {
        if (k < 0 || k >= p) return CycInt(p);
        if (!have[k]) {
            lam[k] = lambda_op(f, k);
            have[k] = true;
        }
        return lam[k];
    };

    std::vector<std::vector<CycInt>> a(n, std::vector<CycInt>(n, CycInt(p)));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            a[i - 1][j - 1] = lam_at(conj.part(i - 1) + j - i);
        }
    }
    return subset_determinant(a, p);
}

} // namespace stablerep
