#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclequiv/oracle.hpp"

namespace cyclequiv::groupcode {

/// (Z_p)^d with elements indexed 0..p^d-1. Index <-> vector bijection: the
/// first coordinate is the most significant base-p digit, so ascending index
/// order is lexicographic order on coordinate vectors.
struct ElemAbelianGroup {
    long p = 0;
    int d = 0;

    long order() const;
    std::vector<long> vec(long index) const;
    long index(const std::vector<long>& v) const;
    long add(long a, long b) const;
    long sub(long a, long b) const;
};

ElemAbelianGroup make_group(long p, int d);

/// x -> x + h under the fixed indexing.
Permutation translation_perm(const ElemAbelianGroup& g, long h);
std::vector<Permutation> translation_generators(const ElemAbelianGroup& g);

/// Group-algebra convolution: (a*b)[x] = sum_y a[y] b[x-y].
std::vector<Elem> group_convolve(const ElemAbelianGroup& g, const Field& f,
                                 const std::vector<Elem>& a, const std::vector<Elem>& b);

struct GroupCode {
    ElemAbelianGroup group;
    Field field;
    LinearCode code;                // length p^d, RREF basis
    std::vector<Elem> idempotent;   // unique generating idempotent
    std::string provenance;

    GroupCode(ElemAbelianGroup g, Field f)
        : group(g), field(f), code(LinearCode::zero(f, g.order())) {}
};

/// Span of all translates of v, with the idempotent solved for.
GroupCode ideal_from_element(const ElemAbelianGroup& g, const Field& f, const std::vector<Elem>& v);

/// The unique element of the ideal acting as its identity, found by a linear
/// solve constrained to the ideal; verified idempotent. Throws NotInvariant
/// when the code is not translation-invariant, SolverInconsistent when the
/// solve fails (a bug signal, never expected on valid input).
std::vector<Elem> idempotent_of_ideal(const ElemAbelianGroup& g, const Field& f,
                                      const LinearCode& code);

/// d x d matrices over F_p in flattened lexicographic order, invertible only.
std::vector<std::vector<std::vector<long>>> enumerate_gl(long p, int d);
Permutation gl_induced_perm(const ElemAbelianGroup& g, const std::vector<std::vector<long>>& a);

/// First automorphism of the group (identity first, then GL in lex order)
/// carrying one ideal onto the other, or nullopt.
std::optional<std::vector<std::vector<long>>> cayley_equivalent_groupcodes(const GroupCode& lhs,
                                                                           const GroupCode& rhs);

/// All ideals of F_q[(Z_p)^d]: primitive idempotents are Frobenius-orbit
/// character sums; one ideal per orbit subset (mask order).
std::vector<GroupCode> enumerate_group_ideals(const ElemAbelianGroup& g, const Field& f,
                                              long cap = 4096);

/// Scans Sym(p^d): every translation-invariant image must be a GL-image.
oracle::CiReport verify_ci_groupcode(const GroupCode& code,
                                     long long cap = oracle::kDefaultScanCap,
                                     Exec exec = Exec::Parallel);

} // namespace cyclequiv::groupcode
