#pragma once

#include <vector>

#include "cyclequiv/poly.hpp"

namespace cyclequiv {

/// Element of R_n = F_q[x]/(x^n - 1), stored as exactly n coefficients
/// (zero-padded). Coefficient i is both the coefficient of x^i and the color
/// of the group element h^i in the associated Cayley coloring.
class RingElement {
  public:
    RingElement(Field field, int n) : field_(std::move(field)), coeffs_(n, 0) {}
    RingElement(Field field, std::vector<Elem> coeffs)
        : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

    static RingElement from_poly(const Poly& p, int n);
    static RingElement one(const Field& f, int n);

    const Field& field() const { return field_; }
    int n() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Elem>& coeffs() const { return coeffs_; }
    Elem coeff(int i) const { return coeffs_[i]; }
    void set_coeff(int i, Elem v) { coeffs_[i] = v; }
    bool is_zero() const;

    Poly to_poly() const { return Poly(field_, coeffs_); }
    /// Multiplication by x^k, i.e. a cyclic shift of the coefficients.
    RingElement shift(int k) const;

    bool operator==(const RingElement& other) const {
        return field_.same(other.field_) && coeffs_ == other.coeffs_;
    }
    bool operator!=(const RingElement& other) const { return !(*this == other); }

  private:
    Field field_;
    std::vector<Elem> coeffs_;
};

/// Cyclic convolution: coefficient t of a*b is sum over i+j = t (mod n).
RingElement ring_mul(const RingElement& a, const RingElement& b);
RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_scalar_mul(const RingElement& a, Elem c);
bool ring_is_idempotent(const RingElement& a);

/// The n cyclic shifts g, xg, ..., x^{n-1}g.
std::vector<RingElement> ring_ideal_basis(const RingElement& g);

} // namespace cyclequiv
