#pragma once

#include <optional>
#include <vector>

#include "cyclequiv/cyclic_code.hpp"

namespace cyclequiv {

/// Partition of Z_n into classes of equal coefficient value: a and b share a
/// class iff e_a = e_b.
struct CoefficientPartition {
    /// (value, sorted members), ordered by value.
    std::vector<std::pair<Elem, std::vector<int>>> classes;

    /// Multiset of class sizes, sorted — a cheap comparison invariant.
    std::vector<size_t> size_multiset() const;
};

CoefficientPartition coefficient_partition(const RingElement& e);

/// i -> m*i (mod n); requires gcd(m, n) = 1 (NotAUnit otherwise).
Permutation multiplier_perm(long m, int n);

/// Units of Z_n in ascending order; {1} for n = 1.
std::vector<long> units_mod(int n);
long euler_phi(int n);

bool is_square_free(long n);
/// True iff n is square-free, or n = 2m with m odd and square-free —
/// the orders whose multiplier set is a complete solving set.
bool is_ci_certified(long n);

struct SolvingSet {
    int n = 0;
    std::vector<long> multipliers; // ascending units mod n
    bool certified = false;

    std::vector<Permutation> perms() const;
};

SolvingSet multiplier_solving_set(int n);

/// O(n) screen: true iff f_{m*a mod n} = e_a for all a, i.e. the multiplier
/// permutation is a color isomorphism from the Cayley coloring of e to the
/// one of f.
bool cayley_multiplier_match(const RingElement& e, const RingElement& f, long m);

enum class EquivStatus { EquivalentVia, NotEquivalent, Inconclusive };
enum class EquivMethod { Invariant, Multiplier, Oracle };

const char* to_string(EquivStatus s);
const char* to_string(EquivMethod m);

struct EquivalenceVerdict {
    EquivStatus status = EquivStatus::Inconclusive;
    std::optional<Permutation> witness;
    std::optional<long> witness_multiplier;
    EquivMethod method = EquivMethod::Multiplier;
    long candidates_checked = 0; // multiplier candidates tried, <= phi(n)
    bool ci_certified = false;
    double elapsed_ms = 0.0;
};

struct EquivOptions {
    bool oracle_escalation = false;      // fall back to brute force when inconclusive
    long long oracle_cap = 4'000'000;    // max n! for the fallback
};

/// Decision procedure: invariant screen, then the multiplier solving set in
/// ascending order (Cayley-level O(n) screen before the code-level check),
/// then NotEquivalent on certified orders, Inconclusive otherwise. Every
/// EquivalentVia witness is re-verified against the canonical bases.
EquivalenceVerdict test_equivalence(const CyclicCode& left, const CyclicCode& right,
                                    const EquivOptions& options = {});

} // namespace cyclequiv
