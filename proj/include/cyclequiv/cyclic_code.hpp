#pragma once

#include <string>
#include <vector>

#include "cyclequiv/linear_code.hpp"

namespace cyclequiv {

/// Orbits of j -> q*j (mod n) on Z_n, sorted by minimal element. Requires
/// gcd(n, q) = 1 (throws NotCoprime otherwise — the non-semisimple case is
/// rejected everywhere).
std::vector<std::vector<int>> cyclotomic_cosets(int n, long q);

/// Monic irreducible factors of x^n - 1 over F_q (Berlekamp), sorted by
/// degree then coefficients. Requires gcd(n, q) = 1.
std::vector<Poly> factor_xn_minus_1(int n, const Field& field);

/// Berlekamp factorization of a monic squarefree polynomial; exposed for the
/// group-code module, which factors cyclotomic polynomials the same way.
std::vector<Poly> berlekamp_factor_squarefree(const Poly& f);

/// The n-th cyclotomic polynomial reduced into F_q[x].
Poly cyclotomic_polynomial(int n, const Field& field);

/// Factorization of x^n - 1 together with the coset <-> factor pairing. All
/// factors are matched against the powers of a single root alpha of order n,
/// realized in the splitting field F_q[x]/(f1) where f1 is the
/// lexicographically smallest irreducible factor of the n-th cyclotomic
/// polynomial. Build once per (n, field) and share.
class CyclicContext {
  public:
    static CyclicContext build(int n, const Field& field);

    int n() const { return n_; }
    const Field& field() const { return field_; }
    const std::vector<std::vector<int>>& cosets() const { return cosets_; }
    /// factors()[i] has root exponents exactly cosets()[i].
    const std::vector<Poly>& factors() const { return factors_; }
    const std::string& pairing_method() const { return pairing_method_; }
    const Poly& xn_minus_1() const { return xn1_; }

    /// Index into cosets() of the coset containing j.
    int coset_index_of(int j) const { return coset_of_[j]; }
    /// Matches a set of exponent sets against the genuine cosets; throws
    /// NotACoset on anything else. Returns sorted coset indices.
    std::vector<int> coset_indices(const std::vector<std::vector<int>>& sets) const;

  private:
    int n_ = 0;
    Field field_;
    std::vector<std::vector<int>> cosets_;
    std::vector<Poly> factors_;
    std::vector<int> coset_of_; // Z_n -> coset index
    Poly xn1_;
    std::string pairing_method_;

    CyclicContext(int n, Field f) : n_(n), field_(std::move(f)), xn1_(field_) {}
};

/// Semisimple cyclic code: zeros (as q-cyclotomic cosets), monic generator
/// dividing x^n - 1, generating idempotent, and the cached canonical basis.
struct CyclicCode {
    int n = 0;
    Field field;
    std::vector<std::vector<int>> zero_cosets; // sorted by minimal element
    Poly generator;
    RingElement idempotent;
    int dim = 0;
    LinearCode code;
    std::string pairing; // provenance of the coset<->factor pairing

    CyclicCode(Field f, int n_) : n(n_), field(f), generator(f), idempotent(f, n_), code(LinearCode::zero(f, n_)) {}
};

/// e = u*g reduced in R_n, where u*g + v*h = 1 and h = (x^n - 1)/g.
/// The unique idempotent with ideal(e) = ideal(g).
RingElement generator_to_idempotent(const Poly& g, int n, const Field& field);

CyclicCode code_from_cosets(const CyclicContext& ctx, const std::vector<std::vector<int>>& zeros);
CyclicCode code_from_generator(const CyclicContext& ctx, const Poly& g);
CyclicCode code_from_idempotent(const CyclicContext& ctx, const RingElement& e);

constexpr long kDefaultEnumerationCap = 4096;

/// One code per subset of cosets, ordered by subset bitmask (bit i = coset i).
/// Throws TooManyCodes when 2^#cosets exceeds the cap.
std::vector<CyclicCode> enumerate_cyclic_codes(const CyclicContext& ctx,
                                               long cap = kDefaultEnumerationCap);

} // namespace cyclequiv
