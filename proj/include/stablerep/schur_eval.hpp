#pragma once

#include <map>

#include "stablerep/cyclotomic.hpp"
#include "stablerep/laurent.hpp"
#include "stablerep/partition.hpp"

namespace stablerep {

// The principal specialization s_nu(q^{-l}, q^{-l+2}, ..., q^l) as an exact
// Laurent polynomial: the hook/content quotient
//   prod_{c in C_{l+1}} (q^c - q^{-c}) / prod_{h in H} (q^h - q^{-h}),
// dividing by one hook factor at a time so an exactness failure pinpoints the
// offending factor. Zero when length(nu) > l+1. Requires 0 <= l <= p-2.
LaurentPoly shcf_laurent(const Partition& nu, int l, int p);

// Independent route to the same polynomial: the SSYT weight census of nu with
// entries in {1..l+1}, specialized at x_i = q^{2i-l-2}.
LaurentPoly ssyt_specialization(const Partition& nu, int l);

// s_nu(zeta^{-l}, zeta^{-l+2}, ..., zeta^l): shcf_laurent specialized at
// q = zeta_p. Requires nu p-small; the result lies in the real subring.
CycInt schur_at_roots(const Partition& nu, int l, int p);

// A sum of powers of zeta_p presented explicitly as a multiset of exponents;
// the lambda operations below are defined on such presentations.
class PowerMultiset {
public:
    explicit PowerMultiset(int p);
    void add(long long exponent, long long count = 1);

    int p() const { return p_; }
    long long size() const { return size_; }
    const std::map<int, long long>& counts() const { return counts_; }

    CycInt value() const;

    // Reads a canonical cyclotomic integer as a power multiset; a negative
    // canonical coefficient is a domain error (no such presentation).
    static PowerMultiset from_cycint(const CycInt& x);

private:
    int p_;
    std::map<int, long long> counts_; // exponent residue -> multiplicity > 0
    long long size_ = 0;
};

// Elementary symmetric polynomial e_i evaluated at the powers of f.
// Requires 0 <= i < p.
CycInt lambda_op(const PowerMultiset& f, int i);

// Schur evaluation s_nu at the powers of f, as the determinant
// det(lambda^{nu'_i + j - i}(f)) of size nu_1. Requires nu_1 + length(nu) - 1 < p.
CycInt giambelli_op(const Partition& nu, const PowerMultiset& f);

} // namespace stablerep
