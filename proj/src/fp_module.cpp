#include "stablerep/fp_module.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

#include "stablerep/cyclotomic.hpp"
#include "stablerep/errors.hpp"

namespace stablerep {

namespace {

int mod_pow(long long base, long long exp, int mod) {
    long long r = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return static_cast<int>(r);
}

int mod_inverse(int a, int p) { return mod_pow(a, p - 2, p); }

int canon_weight(long long w, int p) {
    const int mod = p - 1;
    return static_cast<int>(((w % mod) + mod) % mod);
}

// C = A * B mod p; A is ra x n, B is n x cb, both row-major and reduced.
// Accumulates in int32 and reduces once per output row; n * (p-1)^2 stays
// far below 2^31 at the supported sizes.
std::vector<int32_t> gemm_mod(const std::vector<int32_t>& a, int ra, int n,
                              const std::vector<int32_t>& b, int cb, int p) {
    std::vector<int32_t> c(static_cast<size_t>(ra) * cb, 0);
    for (int i = 0; i < ra; ++i) {
        int32_t* crow = &c[static_cast<size_t>(i) * cb];
        const int32_t* arow = &a[static_cast<size_t>(i) * n];
        for (int k = 0; k < n; ++k) {
            const int32_t av = arow[k];
            if (av == 0) continue;
            const int32_t* brow = &b[static_cast<size_t>(k) * cb];
            for (int j = 0; j < cb; ++j) crow[j] += av * brow[j];
        }
        for (int j = 0; j < cb; ++j) crow[j] %= p;
    }
    return c;
}

std::vector<int32_t> identity_matrix(int n) {
    std::vector<int32_t> m(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] = 1;
    return m;
}

std::vector<int32_t> matrix_power(std::vector<int32_t> base, int n, long long e, int p) {
    std::vector<int32_t> r = identity_matrix(n);
    while (e > 0) {
        if (e & 1) r = gemm_mod(r, n, n, base, n, p);
        base = gemm_mod(base, n, n, base, n, p);
        e >>= 1;
    }
    return r;
}

// Incremental row-space basis over F_p. Rows are kept pivot-normalized; with
// full_rref the basis stays fully reduced so expressing a vector is a pivot
// lookup per basis row.
class RowBasis {
public:
    RowBasis(int p, int cols, bool full_rref) : p_(p), cols_(cols), full_rref_(full_rref) {}

    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<int32_t>& row(int i) const { return rows_[i]; }
    int pivot(int i) const { return pivots_[i]; }

    // Reduces v in place against the basis (deferred modular reduction);
    // returns true and absorbs the remainder when it is independent.
    bool add(std::vector<int32_t>& v) {
        reduce(v);
        int piv = first_nonzero(v);
        if (piv < 0) return false;
        const int32_t inv = static_cast<int32_t>(mod_inverse(v[piv], p_));
        for (int32_t& x : v) x = static_cast<int32_t>(static_cast<int64_t>(x) * inv % p_);
        if (full_rref_) {
            for (size_t r = 0; r < rows_.size(); ++r) {
                const int32_t cpiv = rows_[r][piv];
                if (cpiv == 0) continue;
                const int32_t mult = p_ - cpiv;
                for (int k = 0; k < cols_; ++k) {
                    rows_[r][k] = static_cast<int32_t>((rows_[r][k] +
                                                        static_cast<int64_t>(mult) * v[k]) % p_);
                }
            }
        }
        rows_.push_back(v);
        pivots_.push_back(piv);
        return true;
    }

    // v may hold unreduced nonnegative accumulations.
    void reduce(std::vector<int32_t>& v) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const int32_t c = v[pivots_[r]] % p_;
            if (c == 0) continue;
            const int32_t mult = p_ - c;
            const int32_t* brow = rows_[r].data();
            for (int k = 0; k < cols_; ++k) v[k] += mult * brow[k];
        }
        for (int32_t& x : v) x %= p_;
    }

    int first_nonzero(const std::vector<int32_t>& v) const {
        for (int k = 0; k < cols_; ++k) {
            if (v[k] % p_ != 0) return k;
        }
        return -1;
    }

private:
    int p_;
    int cols_;
    bool full_rref_;
    std::vector<std::vector<int32_t>> rows_;
    std::vector<int> pivots_;
};

// v -> v * g^{tensor n} through n Kronecker passes, O(n * D * d).
void apply_tensor_generator(const FpModule& factor, int n, std::vector<int32_t>& v) {
    const int d = factor.dim;
    const long long total = static_cast<long long>(v.size());
    std::vector<int32_t> tmp(v.size());
    long long inner = 1;
    for (int k = n - 1; k >= 0; --k) {
        const long long outer = total / (inner * d);
        std::fill(tmp.begin(), tmp.end(), 0);
        for (long long o = 0; o < outer; ++o) {
            const long long base = o * d * inner;
            for (int a = 0; a < d; ++a) {
                const int32_t* src = &v[base + a * inner];
                for (int b = 0; b < d; ++b) {
                    const int32_t gv = factor.at(a, b);
                    if (gv == 0) continue;
                    int32_t* dst = &tmp[base + b * inner];
                    for (long long t = 0; t < inner; ++t) dst[t] += gv * src[t];
                }
            }
        }
        for (size_t t = 0; t < tmp.size(); ++t) v[t] = tmp[t] % factor.p;
        inner *= d;
    }
}

std::vector<std::vector<int>> block_permutations(const std::vector<std::vector<int>>& blocks, int n) {
    std::vector<std::vector<int>> perms;
    std::vector<int> cur(n);
    std::iota(cur.begin(), cur.end(), 0);
    std::function<void(size_t)> rec = [&](size_t bi) {
        if (bi == blocks.size()) {
            perms.push_back(cur);
            return;
        }
        std::vector<int> order = blocks[bi];
        std::sort(order.begin(), order.end());
        do {
            for (size_t t = 0; t < order.size(); ++t) cur[blocks[bi][t]] = order[t];
            rec(bi + 1);
        } while (std::next_permutation(order.begin(), order.end()));
    };
    rec(0);
    return perms;
}

int permutation_sign(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    int sign = 1;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

} // namespace

int smallest_primitive_root(int p) {
    require(is_odd_prime(p), "smallest_primitive_root: p must be an odd prime");
    std::vector<int> prime_factors;
    int n = p - 1;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            prime_factors.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) prime_factors.push_back(n);
    for (int c = 2; c < p; ++c) {
        bool primitive = true;
        for (int q : prime_factors) {
            if (mod_pow(c, (p - 1) / q, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return c;
    }
    throw internal_error("smallest_primitive_root: none found");
}

FpModule trivial_module(int p) { return build_sym(0, p); }

FpModule build_sym(int l, int p) {
    require(is_odd_prime(p), "build_sym: p must be an odd prime");
    require(l >= 0 && l <= p - 1, "build_sym: l outside [0, p-1]");
    FpModule m;
    m.p = p;
    m.c = smallest_primitive_root(p);
    m.dim = l + 1;
    m.g.assign(static_cast<size_t>(m.dim) * m.dim, 0);
    m.hw.assign(m.dim, 0);
    // Basis x^a y^{l-a}; the unipotent generator fixes x and sends y to x+y.
    for (int a = 0; a <= l; ++a) {
        BigInt cmk(1);
        for (int k = 0; a + k <= l; ++k) {
            if (k > 0) {
                cmk *= BigInt(l - a - k + 1);
                cmk = cmk.div_exact_u32(static_cast<uint32_t>(k));
            }
            uint32_t rem = 0;
            cmk.divmod_u32(static_cast<uint32_t>(p), rem);
            m.at(a, a + k) = static_cast<int32_t>(rem);
        }
        m.hw[a] = canon_weight(l - 2LL * a, p);
    }
    return m;
}

FpModule tensor(const FpModule& a, const FpModule& b) {
    require(a.p == b.p, "tensor: mixed primes");
    FpModule m;
    m.p = a.p;
    m.c = a.c;
    m.dim = a.dim * b.dim;
    m.g.assign(static_cast<size_t>(m.dim) * m.dim, 0);
    m.hw.assign(m.dim, 0);
    for (int r1 = 0; r1 < a.dim; ++r1) {
        for (int r2 = 0; r2 < b.dim; ++r2) {
            const int r = r1 * b.dim + r2;
            m.hw[r] = canon_weight(a.hw[r1] + b.hw[r2], m.p);
            for (int c1 = 0; c1 < a.dim; ++c1) {
                if (a.at(r1, c1) == 0) continue;
                for (int c2 = 0; c2 < b.dim; ++c2) {
                    m.at(r, c1 * b.dim + c2) =
                        static_cast<int32_t>(static_cast<int64_t>(a.at(r1, c1)) * b.at(r2, c2) % m.p);
                }
            }
        }
    }
    return m;
}

FpModule direct_sum(const FpModule& a, const FpModule& b) {
    require(a.p == b.p, "direct_sum: mixed primes");
    FpModule m;
    m.p = a.p;
    m.c = a.c;
    m.dim = a.dim + b.dim;
    m.g.assign(static_cast<size_t>(m.dim) * m.dim, 0);
    m.hw.assign(m.dim, 0);
    for (int r = 0; r < a.dim; ++r) {
        m.hw[r] = a.hw[r];
        for (int col = 0; col < a.dim; ++col) m.at(r, col) = a.at(r, col);
    }
    for (int r = 0; r < b.dim; ++r) {
        m.hw[a.dim + r] = b.hw[r];
        for (int col = 0; col < b.dim; ++col) m.at(a.dim + r, a.dim + col) = b.at(r, col);
    }
    return m;
}

FpModule contragredient(const FpModule& m) {
    // Dual-basis action of x is (A_x^{-1}) transposed; torus weights negate.
    const int n = m.dim;
    std::vector<int32_t> a = m.g;
    std::vector<int32_t> inv = identity_matrix(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r) {
            if (a[static_cast<size_t>(r) * n + col] != 0) {
                piv = r;
                break;
            }
        }
        internal_check(piv >= 0, "contragredient: generator matrix singular");
        if (piv != col) {
            for (int k = 0; k < n; ++k) {
                std::swap(a[static_cast<size_t>(piv) * n + k], a[static_cast<size_t>(col) * n + k]);
                std::swap(inv[static_cast<size_t>(piv) * n + k], inv[static_cast<size_t>(col) * n + k]);
            }
        }
        const int64_t s = mod_inverse(a[static_cast<size_t>(col) * n + col], m.p);
        for (int k = 0; k < n; ++k) {
            a[static_cast<size_t>(col) * n + k] =
                static_cast<int32_t>(a[static_cast<size_t>(col) * n + k] * s % m.p);
            inv[static_cast<size_t>(col) * n + k] =
                static_cast<int32_t>(inv[static_cast<size_t>(col) * n + k] * s % m.p);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const int64_t f = a[static_cast<size_t>(r) * n + col];
            if (f == 0) continue;
            for (int k = 0; k < n; ++k) {
                a[static_cast<size_t>(r) * n + k] = static_cast<int32_t>(
                    ((a[static_cast<size_t>(r) * n + k] -
                      f * a[static_cast<size_t>(col) * n + k]) % m.p + m.p) % m.p);
                inv[static_cast<size_t>(r) * n + k] = static_cast<int32_t>(
                    ((inv[static_cast<size_t>(r) * n + k] -
                      f * inv[static_cast<size_t>(col) * n + k]) % m.p + m.p) % m.p);
            }
        }
    }
    FpModule d;
    d.p = m.p;
    d.c = m.c;
    d.dim = n;
    d.g.assign(static_cast<size_t>(n) * n, 0);
    d.hw.assign(n, 0);
    for (int r = 0; r < n; ++r) {
        d.hw[r] = canon_weight(-m.hw[r], m.p);
        for (int col = 0; col < n; ++col) d.at(r, col) = inv[static_cast<size_t>(col) * n + r];
    }
    return d;
}

void check_module_relations(const FpModule& m) {
    const int n = m.dim;
    internal_check(static_cast<long long>(m.g.size()) == static_cast<long long>(n) * n,
                   "module: generator matrix has wrong size");
    for (int32_t v : m.g) internal_check(v >= 0 && v < m.p, "module: entry out of range");
    for (int w : m.hw) internal_check(w >= 0 && w < m.p - 1, "module: weight out of range");

    internal_check(matrix_power(m.g, n, m.p, m.p) == identity_matrix(n),
                   "module: unipotent generator does not have order dividing p");

    const long long c2 = static_cast<long long>(m.c) * m.c % m.p;
    std::vector<int32_t> lhs(m.g.size());
    for (int r = 0; r < n; ++r) {
        for (int col = 0; col < n; ++col) {
            const int scale = mod_pow(m.c, canon_weight(m.hw[r] - m.hw[col], m.p), m.p);
            lhs[static_cast<size_t>(r) * n + col] =
                static_cast<int32_t>(static_cast<int64_t>(m.at(r, col)) * scale % m.p);
        }
    }
    internal_check(lhs == matrix_power(m.g, n, c2, m.p),
                   "module: torus conjugation relation fails");
}

long long schur_dimension_cap() {
    if (const char* env = std::getenv("STABLEREP_MAX_DIM")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end != env && v > 0) return v;
    }
    return 200000;
}

FpModule schur_apply(const Partition& nu, const FpModule& v) {
    return schur_apply(nu, v, schur_dimension_cap());
}

FpModule schur_apply(const Partition& nu, const FpModule& v, long long max_dim) {
    const int p = v.p;
    require(nu.size() < p, "schur_apply: |nu| must be below p");
    const int n = static_cast<int>(nu.size());
    if (n == 0) return trivial_module(p);
    const int d = v.dim;
    if (d == 0) return FpModule{p, v.c, 0, {}, {}};
    if (nu == Partition({1})) return v;

    long long dims = 1;
    for (int k = 0; k < n; ++k) {
        dims *= d;
        require(dims <= max_dim, "schur_apply: tensor dimension exceeds the cap " +
                                     std::to_string(max_dim));
    }
    const long long big_dim = dims;

    // Canonical tableau: boxes numbered row by row, left to right.
    std::vector<std::vector<int>> row_blocks(nu.length());
    std::vector<std::vector<int>> col_blocks(nu.first());
    {
        int box = 0;
        for (int i = 0; i < nu.length(); ++i) {
            for (int j = 0; j < nu.part(i); ++j) {
                row_blocks[i].push_back(box);
                col_blocks[j].push_back(box);
                ++box;
            }
        }
    }
    const auto row_perms = block_permutations(row_blocks, n);
    const auto col_perms = block_permutations(col_blocks, n);
    std::vector<int> col_signs(col_perms.size());
    for (size_t t = 0; t < col_perms.size(); ++t) col_signs[t] = permutation_sign(col_perms[t]);

    // Tuple bookkeeping: digits are factor indices, most significant first.
    std::vector<long long> stride(n);
    stride[n - 1] = 1;
    for (int k = n - 2; k >= 0; --k) stride[k] = stride[k + 1] * d;

    std::vector<int> weight_of(big_dim);
    std::vector<int32_t> local_of(big_dim);
    std::vector<std::vector<long long>> bucket(p - 1);
    {
        std::vector<int> digits(n, 0);
        for (long long t = 0; t < big_dim; ++t) {
            int w = 0;
            for (int k = 0; k < n; ++k) w += v.hw[digits[k]];
            const int s = canon_weight(w, p);
            weight_of[t] = s;
            local_of[t] = static_cast<int32_t>(bucket[s].size());
            bucket[s].push_back(t);
            for (int k = n - 1; k >= 0; --k) {
                if (++digits[k] < d) break;
                digits[k] = 0;
            }
        }
    }

    // Generators of the image: one symmetrizer row per tuple, one canonical
    // representative per row-stabilizer orbit. Everything stays inside its
    // weight bucket, so elimination runs bucket by bucket.
    std::vector<RowBasis> bases;
    bases.reserve(p - 1);
    for (int s = 0; s < p - 1; ++s) {
        bases.emplace_back(p, static_cast<int>(bucket[s].size()), true);
    }

    std::vector<int> digits(n), permuted(n);
    auto is_row_canonical = [&](const std::vector<int>& dig) {
        for (const auto& block : row_blocks) {
            for (size_t t = 0; t + 1 < block.size(); ++t) {
                if (dig[block[t]] > dig[block[t + 1]]) return false;
            }
        }
        return true;
    };

    for (int s = 0; s < p - 1; ++s) {
        const auto& tuples = bucket[s];
        std::vector<int32_t> row;
        for (long long gidx : tuples) {
            long long rest = gidx;
            for (int k = 0; k < n; ++k) {
                digits[k] = static_cast<int>(rest / stride[k]);
                rest %= stride[k];
            }
            if (!is_row_canonical(digits)) continue;
            row.assign(tuples.size(), 0);
            for (const auto& sigma : row_perms) {
                for (int k = 0; k < n; ++k) permuted[k] = digits[sigma[k]];
                for (size_t ct = 0; ct < col_perms.size(); ++ct) {
                    const auto& tau = col_perms[ct];
                    long long flat = 0;
                    for (int k = 0; k < n; ++k) {
                        flat += static_cast<long long>(permuted[tau[k]]) * stride[k];
                    }
                    internal_check(weight_of[flat] == s, "schur_apply: symmetrizer left its weight space");
                    row[local_of[flat]] += col_signs[ct] > 0 ? 1 : p - 1;
                }
            }
            for (int32_t& x : row) x %= p;
            bases[s].add(row);
        }
    }

    int r = 0;
    std::vector<int> row_weight;
    std::vector<long long> pivot_global;
    std::vector<std::pair<int, int>> basis_loc; // (weight, index within bucket basis)
    for (int s = 0; s < p - 1; ++s) {
        for (int i = 0; i < bases[s].rank(); ++i) {
            row_weight.push_back(s);
            basis_loc.emplace_back(s, i);
            pivot_global.push_back(bucket[s][bases[s].pivot(i)]);
            ++r;
        }
    }
    if (r == 0) return FpModule{p, v.c, 0, {}, {}};

    std::vector<int> basis_offset(p - 1, 0);
    for (int s = 1; s < p - 1; ++s) basis_offset[s] = basis_offset[s - 1] + bases[s - 1].rank();

    // Restrict the unipotent action: image rows are expanded to the full
    // tensor space, pushed through the Kronecker action and re-expressed in
    // the reduced bucket bases; a nonzero remainder would mean the image is
    // not stable, which cannot happen.
    FpModule out;
    out.p = p;
    out.c = v.c;
    out.dim = r;
    out.g.assign(static_cast<size_t>(r) * r, 0);
    out.hw = row_weight;

    std::vector<int32_t> full(big_dim);
    std::vector<int32_t> slice;
    for (int bi = 0; bi < r; ++bi) {
        const auto [s, li] = basis_loc[bi];
        std::fill(full.begin(), full.end(), 0);
        const auto& brow = bases[s].row(li);
        for (size_t k = 0; k < bucket[s].size(); ++k) full[bucket[s][k]] = brow[k];
        apply_tensor_generator(v, n, full);
        for (int s2 = 0; s2 < p - 1; ++s2) {
            const auto& tuples = bucket[s2];
            if (tuples.empty()) continue;
            slice.assign(tuples.size(), 0);
            bool nonzero = false;
            for (size_t k = 0; k < tuples.size(); ++k) {
                slice[k] = full[tuples[k]];
                nonzero |= slice[k] != 0;
            }
            if (!nonzero) continue;
            for (int i = 0; i < bases[s2].rank(); ++i) {
                const int32_t coeff = slice[bases[s2].pivot(i)] % p;
                if (coeff == 0) continue;
                out.at(bi, basis_offset[s2] + i) = coeff;
                const auto& red = bases[s2].row(i);
                const int32_t mult = p - coeff;
                for (size_t k = 0; k < tuples.size(); ++k) slice[k] += mult * red[k];
            }
            for (size_t k = 0; k < tuples.size(); ++k) {
                internal_check(slice[k] % p == 0, "schur_apply: image not stable under the action");
            }
        }
    }
    return out;
}

long long KNDecomposition::total_dimension() const {
    long long total = 0;
    for (const auto& [key, mult] : summands) total += static_cast<long long>(key.second + 1) * mult;
    return total;
}

std::map<std::pair<int, int>, long long> KNDecomposition::non_projective() const {
    std::map<std::pair<int, int>, long long> out;
    for (const auto& [key, mult] : summands) {
        if (key.second < p - 1) out.emplace(key, mult);
    }
    return out;
}

std::map<std::pair<int, int>, long long> KNDecomposition::projective_part() const {
    std::map<std::pair<int, int>, long long> out;
    for (const auto& [key, mult] : summands) {
        if (key.second == p - 1) out.emplace(key, mult);
    }
    return out;
}

KNDecomposition decompose_kN(const FpModule& m) {
    const int p = m.p;
    const int r = m.dim;
    KNDecomposition out;
    out.p = p;
    if (r == 0) return out;

    // nil = g - 1. For each torus weight s the graded kernel dimensions
    //   a_t(s) = dim of weight-s vectors killed by nil^t
    // come from rank chains of the weight-s row slice of nil^t. A block
    // (i, j) contributes one new kernel vector at each level t <= j+1, of
    // weight i - 2j + 2(t-1); blocks of exact length t have top weight i at
    // level t. So with b_t(s) = a_t(s) - a_{t-1}(s), the multiplicity of
    // (i = s, j = t-1) is b_t(s) - b_{t+1}(s + 2).
    std::vector<int32_t> nil = m.g;
    for (int i = 0; i < r; ++i) {
        int32_t& x = nil[static_cast<size_t>(i) * r + i];
        x = (x + p - 1) % p;
    }

    const int mod = p - 1;
    std::vector<int> count_s(mod, 0);
    for (int w : m.hw) ++count_s[w];

    // b[t][s], t = 1..p+1 (level p+1 forced empty).
    std::vector<std::vector<long long>> b(p + 2, std::vector<long long>(mod, 0));
    for (int s = 0; s < mod; ++s) {
        const int rs = count_s[s];
        if (rs == 0) continue;
        std::vector<int32_t> cur(static_cast<size_t>(rs) * r, 0);
        {
            int idx = 0;
            for (int i = 0; i < r; ++i) {
                if (m.hw[i] != s) continue;
                std::copy(nil.begin() + static_cast<size_t>(i) * r,
                          nil.begin() + static_cast<size_t>(i + 1) * r,
                          cur.begin() + static_cast<size_t>(idx) * r);
                ++idx;
            }
        }
        long long prev_a = 0;
        int cur_rows = rs;
        for (int t = 1; t <= p + 1; ++t) {
            if (cur_rows == 0) {
                b[t][s] = rs - prev_a;
                prev_a = rs;
                continue;
            }
            RowBasis basis(p, r, false);
            std::vector<int32_t> vrow(r);
            for (int i = 0; i < cur_rows; ++i) {
                std::copy(cur.begin() + static_cast<size_t>(i) * r,
                          cur.begin() + static_cast<size_t>(i + 1) * r, vrow.begin());
                basis.add(vrow);
            }
            const int rank = basis.rank();
            internal_check(t <= p || rank == 0,
                           "decompose: unipotent generator not of order dividing p");
            const long long a_t = rs - rank;
            b[t][s] = a_t - prev_a;
            prev_a = a_t;
            if (rank == 0) {
                cur_rows = 0;
                continue;
            }
            std::vector<int32_t> reduced(static_cast<size_t>(rank) * r);
            for (int i = 0; i < rank; ++i) {
                std::copy(basis.row(i).begin(), basis.row(i).end(),
                          reduced.begin() + static_cast<size_t>(i) * r);
            }
            cur = gemm_mod(reduced, rank, r, nil, r, p);
            cur_rows = rank;
        }
    }

    for (int t = 1; t <= p; ++t) {
        for (int s = 0; s < mod; ++s) {
            const long long mult = b[t][s] - b[t + 1][(s + 2) % mod];
            internal_check(mult >= 0, "decompose: negative block multiplicity");
            if (mult > 0) out.summands[{s, t - 1}] += mult;
        }
    }
    internal_check(out.total_dimension() == r, "decompose: dimension bookkeeping failed");
    return out;
}

StableElement green_transport(const KNDecomposition& d) {
    StableElement e(d.p);
    const int mod = d.p - 1;
    for (const auto& [key, mult] : d.summands) {
        const auto [i, j] = key;
        if (j == d.p - 1) continue; // projective
        const int m = ((j - i) % mod + mod) % mod;
        const int l = (i - j) % 2 == 0 ? j : d.p - 2 - j;
        e.add_term(l, m, BigInt(mult));
    }
    return e;
}

std::pair<int, int> omega_uniserial(int i, int j, int p) {
    require(j >= 0 && j <= p - 2, "omega_uniserial: j outside [0, p-2]");
    const int mod = p - 1;
    return {((i - 2 * j - 2) % mod + mod) % mod, p - j - 2};
}

} // namespace stablerep
