#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclequiv/cyclic_code.hpp"
#include "cyclequiv/perm_scan.hpp"

namespace cyclequiv::oracle {

constexpr long long kDefaultScanCap = 4'000'000;

bool factorial_at_most(int n, long long cap);

/// Finite permutation group as an explicit, lexicographically sorted element
/// list. Desk scale only.
class PermGroup {
  public:
    static PermGroup from_elements(int degree, std::vector<Permutation> elements);
    static PermGroup from_generators(int degree, const std::vector<Permutation>& gens,
                                     std::size_t cap = 1u << 22);
    static PermGroup symmetric(int n, long long cap = kDefaultScanCap);
    /// The regular cyclic group generated by the shift.
    static PermGroup cyclic_shift(int n);
    static PermGroup trivial(int n);

    int degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    bool contains(const Permutation& g) const;
    bool is_subgroup_of(const PermGroup& other) const;

  private:
    PermGroup(int degree, std::vector<Permutation> sorted)
        : degree_(degree), elements_(std::move(sorted)) {}
    int degree_ = 0;
    std::vector<Permutation> elements_;
};

/// Orbit partition of Omega x Omega under the diagonal action, as a class-id
/// matrix (ids assigned in first-visit order, so equal partitions compare
/// equal directly).
struct TwoOrbitPartition {
    int degree = 0;
    int num_classes = 0;
    std::vector<int> class_of; // degree*degree

    int at(int a, int b) const { return class_of[a * degree + b]; }
    bool operator==(const TwoOrbitPartition& other) const {
        return degree == other.degree && class_of == other.class_of;
    }
};

TwoOrbitPartition two_orbits(const PermGroup& g);

/// Largest group with the same 2-orbits, computed by filtering Sym(n) for
/// permutations preserving every class. Asserts 2-equivalence of input and
/// output. Degree <= 10.
PermGroup two_closure(const PermGroup& g, Exec exec = Exec::Parallel);

struct SearchReport {
    std::uint64_t checked = 0; // perms up to and including the witness, or n!
    std::optional<Permutation> witness;
    double elapsed_ms = 0.0;
};

/// Lexicographically-first g with permute_code(c, g) = d.
SearchReport equivalence_bruteforce(const LinearCode& c, const LinearCode& d,
                                    long long cap = kDefaultScanCap, Exec exec = Exec::Parallel);

PermGroup paut_bruteforce(const LinearCode& c, long long cap = kDefaultScanCap,
                          Exec exec = Exec::Parallel);

/// True iff every regular cyclic subgroup of z (generated by the full cycles
/// in z) has a z-conjugate inside y. Requires y <= z.
bool fusion_control_check(const PermGroup& y, const PermGroup& z, int n);

struct CiCounterexample {
    Permutation witness;
    RowList image_basis;
    RowList original_basis;
};

struct CiReport {
    std::uint64_t perms_scanned = 0;
    std::uint64_t cyclic_images = 0; // permutations whose image is again shift/translation invariant
    std::vector<CiCounterexample> counterexamples;
    double elapsed_ms = 0.0;

    bool pass() const { return counterexamples.empty(); }
};

/// Scans Sym(n): whenever the permuted code is again shift-invariant, some
/// multiplier must map the original onto it; records counterexamples.
CiReport verify_ci_code(const CyclicCode& code, long long cap = kDefaultScanCap,
                        Exec exec = Exec::Parallel);

/// True iff every element of two_closure(g) fixes the code. Preconditions:
/// g <= paut(code), |g| coprime to the field characteristic, degree <= 8.
bool verify_theorem_2closed(const LinearCode& code, const PermGroup& g, Exec exec = Exec::Parallel);

} // namespace cyclequiv::oracle
