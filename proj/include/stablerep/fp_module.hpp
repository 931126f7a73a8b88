#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "stablerep/partition.hpp"
#include "stablerep/stable_ring.hpp"

namespace stablerep {

// Explicit module over the Sylow normalizer, given by the action of its two
// generators. Row-vector convention throughout: a group element x acts by
// v -> v * A_x. The unipotent generator acts by the dense matrix g; the torus
// generator acts diagonally, multiplying the i-th basis vector by c^{hw[i]}.
// Keeping the torus action diagonal is a structural invariant all
// constructors preserve.
struct FpModule {
    int p = 0;
    int c = 0;   // fixed generator of the multiplicative group mod p
    int dim = 0;
    std::vector<int32_t> g; // dim x dim row-major, entries in [0, p)
    std::vector<int> hw;    // torus weights, canonical residues mod p-1

    int32_t at(int r, int col) const { return g[static_cast<size_t>(r) * dim + col]; }
    int32_t& at(int r, int col) { return g[static_cast<size_t>(r) * dim + col]; }
};

int smallest_primitive_root(int p);

FpModule trivial_module(int p);
// Symmetric power of the natural module on the monomial basis, 0 <= l <= p-1.
FpModule build_sym(int l, int p);
FpModule tensor(const FpModule& a, const FpModule& b);
FpModule direct_sum(const FpModule& a, const FpModule& b);
FpModule contragredient(const FpModule& m);

// Exact matrix checks: unipotent generator has order dividing p, and torus
// conjugation raises it to the power c^2. Cost grows with dim^3; intended for
// test-scale modules.
void check_module_relations(const FpModule& m);

// Dimension cap for schur_apply; default 200000, overridable through the
// STABLEREP_MAX_DIM environment variable.
long long schur_dimension_cap();

// Image of the Young symmetrizer (row sums times signed column sums for the
// canonical tableau of shape nu) acting on the |nu|-th tensor power by place
// permutation, with the module action restricted to the image.
// Requires |nu| < p and dim^|nu| within the dimension cap.
FpModule schur_apply(const Partition& nu, const FpModule& v);
FpModule schur_apply(const Partition& nu, const FpModule& v, long long max_dim);

// Multiset of uniserial summands: (i, j) labels the length-(j+1) block whose
// composition factors run S_i, S_{i-2}, ..., S_{i-2j} top to bottom;
// j = p-1 labels the projective blocks.
struct KNDecomposition {
    int p = 0;
    std::map<std::pair<int, int>, long long> summands;

    long long total_dimension() const;
    std::map<std::pair<int, int>, long long> non_projective() const;
    std::map<std::pair<int, int>, long long> projective_part() const;
};

// Jordan filtration of the unipotent action with torus-weight tracking on the
// graded kernels.
KNDecomposition decompose_kN(const FpModule& m);

// Drops projective summands and rewrites each U_{i,j} as the Heller-orbit
// label (l, m): m = j - i mod p-1, l = j when i and j agree mod 2 and
// l = p-2-j otherwise.
StableElement green_transport(const KNDecomposition& d);

// The syzygy step on uniserial labels: (i, j) -> (i-2j-2, p-j-2), j <= p-2.
std::pair<int, int> omega_uniserial(int i, int j, int p);

} // namespace stablerep
