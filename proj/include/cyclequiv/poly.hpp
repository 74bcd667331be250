#pragma once

#include <utility>
#include <vector>

#include "cyclequiv/field.hpp"

namespace cyclequiv {

/// Univariate polynomial over F_q, ascending coefficients, canonical form
/// (no trailing zeros; the zero polynomial has an empty coefficient list).
class Poly {
  public:
    explicit Poly(Field field) : field_(std::move(field)) {}
    Poly(Field field, std::vector<Elem> coeffs);

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly one(const Field& f) { return Poly(f, {f.one()}); }
    static Poly x(const Field& f) { return Poly(f, {0, f.one()}); }
    /// x^n + c
    static Poly xn_plus_const(const Field& f, int n, Elem c);

    const Field& field() const { return field_; }
    const std::vector<Elem>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Elem coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : 0;
    }
    Elem lead() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

    bool operator==(const Poly& other) const {
        return field_.same(other.field_) && coeffs_ == other.coeffs_;
    }
    bool operator!=(const Poly& other) const { return !(*this == other); }

    /// Ordering used for deterministic factor lists: by degree, then by
    /// coefficients ascending from the constant term.
    bool lex_less(const Poly& other) const;

    Poly monic() const;
    Elem eval(Elem at) const;

  private:
    Field field_;
    std::vector<Elem> coeffs_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, Elem c);

/// a = q*b + r with deg r < deg b. Throws DivisionByZeroPoly when b = 0.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b); // monic

struct XgcdResult {
    Poly d; // monic gcd
    Poly u;
    Poly v; // d = u*a + v*b
};
XgcdResult poly_xgcd(const Poly& a, const Poly& b);

/// base^e mod m (m nonconstant).
Poly poly_powmod(Poly base, long long e, const Poly& m);

} // namespace cyclequiv
