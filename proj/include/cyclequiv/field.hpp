#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "cyclequiv/errors.hpp"

namespace cyclequiv {

/// Element of a finite field, encoded as an integer in [0, q).
/// The base-p digits of the code are the coordinates in the power basis of
/// the modulus (constant term first), so the encoding is the coefficient
/// vector in packed form. For prime fields the code is the residue itself.
using Elem = std::uint16_t;

/// F_q with q = p^k, p prime. Immutable after construction and cheap to
/// copy (shared internals); safe to share across threads.
class Field {
  public:
    /// Default modulus: the lexicographically smallest monic irreducible of
    /// degree k over F_p, coefficients compared ascending from the constant
    /// term. For k = 1 the modulus is x.
    static Field make(long p, int k);
    static Field make(long p, int k, const std::vector<long>& modulus_ascending);

    /// Parses a prime power q = p^k. Throws NotPrime when q is not one.
    static Field from_order(long q);

    long p() const { return impl_->p; }
    int k() const { return impl_->k; }
    long q() const { return impl_->q; }
    /// Ascending coefficients, length k+1, leading coefficient 1.
    const std::vector<long>& modulus() const { return impl_->modulus; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const; // throws ZeroInverse on a = 0
    Elem pow(Elem a, long long e) const;

    /// Embeds an integer via its residue mod p (constant polynomial).
    Elem from_int(long v) const;
    Elem from_coeffs(const std::vector<long>& coeffs) const;
    std::vector<long> to_coeffs(Elem a) const;

    bool same(const Field& other) const;

  private:
    struct Impl {
        long p = 0;
        int k = 0;
        long q = 0;
        std::vector<long> modulus;      // ascending, length k+1
        std::vector<Elem> add_table;    // q*q, empty when not cached
        std::vector<Elem> mul_table;    // q*q
        std::vector<Elem> neg_table;    // q
        std::vector<Elem> inv_table;    // q, inv_table[0] unused
        bool cached = false;

        Elem add_direct(Elem a, Elem b) const;
        Elem neg_direct(Elem a) const;
        Elem mul_direct(Elem a, Elem b) const;
    };

    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    std::shared_ptr<const Impl> impl_;
};

bool is_prime(long n);

} // namespace cyclequiv
