#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stablerep::verify {

struct CheckResult {
    std::string name;
    long long points = 0;
    std::vector<std::string> failures; // verbatim counterexamples, deterministic order
    double seconds = 0.0;

    bool ok() const { return failures.empty(); }
    void merge(const CheckResult& other);
};

// Closed-form projectivity predicate against the computed decomposition,
// exhaustive over p-small partitions and all l.
CheckResult check_projectivity(int p);

// Six-family case list against the computed stable-irreducibility flag,
// including the conjugation involution (nu, l) <-> (nu', p-l-2).
CheckResult check_case_list_full(int p);

// Four-family reduced case list on the (p,l)-small domain.
CheckResult check_case_list_reduced(int p);

// Folded hook/content multiset criterion on the (p,l)-small domain.
CheckResult check_multiset_criterion(int p);

// Twisted-input projectivity: conjugation dispatch by twist parity.
CheckResult check_twisted_projectivity(int p);

// Twisted-input stable irreducibility: height divisibility plus the pair
// condition; also the interchange identity for one extra twist.
CheckResult check_twisted_irreducibility(int p);

// Hook/content quotient equals the tableau-census specialization for every
// p-small shape and every l; the quotient path divides exactly throughout.
CheckResult check_hook_content_paths(int p);

// Matrix-level pipeline (symmetrizer image -> graded Jordan analysis ->
// transport) against the ring-level decomposition, for every (nu, l) with
// |nu| <= max_size and tensor dimension (l+1)^|nu| <= budget; also the
// tensor-product transport for all basis pairs when p <= 7.
CheckResult check_oracle(int p, long long budget, int max_size, int jobs);

// Ring structure: presentation isomorphism round trip and multiplicativity
// on random elements, the height-0 ring homomorphism property, unit
// identities, and the syzygy orbit structure on uniserial labels.
CheckResult check_ring_structure(int p, uint64_t seed, int random_elements = 1000);

// The worked examples, pinned exactly.
CheckResult check_worked_examples();

} // namespace stablerep::verify
