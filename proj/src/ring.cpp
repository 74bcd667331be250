#include "cyclequiv/ring.hpp"

#include <algorithm>

namespace cyclequiv {

namespace {

void require_compatible(const RingElement& a, const RingElement& b) {
    if (a.n() != b.n())
        throw Error(ErrorCode::LengthMismatch, "ring elements of different length");
    if (!a.field().same(b.field()))
        throw Error(ErrorCode::FieldMismatch, "ring elements over different fields");
}

} // namespace

RingElement RingElement::from_poly(const Poly& p, int n) {
    RingElement out(p.field(), n);
    const Field& f = p.field();
    for (int i = 0; i <= p.degree(); ++i) {
        int t = i % n;
        out.coeffs_[t] = f.add(out.coeffs_[t], p.coeff(i));
    }
    return out;
}

RingElement RingElement::one(const Field& f, int n) {
    RingElement out(f, n);
    out.coeffs_[0] = f.one();
    return out;
}

bool RingElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Elem c) { return c == 0; });
}

RingElement RingElement::shift(int k) const {
    const int len = n();
    k = ((k % len) + len) % len;
    RingElement out(field_, len);
    for (int i = 0; i < len; ++i) out.coeffs_[(i + k) % len] = coeffs_[i];
    return out;
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
    require_compatible(a, b);
    const Field& f = a.field();
    const int n = a.n();
    RingElement out(f, n);
    for (int i = 0; i < n; ++i) {
        Elem ai = a.coeff(i);
        if (ai == 0) continue;
        for (int j = 0; j < n; ++j) {
            Elem bj = b.coeff(j);
            if (bj == 0) continue;
            int t = i + j;
            if (t >= n) t -= n;
            out.set_coeff(t, f.add(out.coeff(t), f.mul(ai, bj)));
        }
    }
    return out;
}

RingElement ring_add(const RingElement& a, const RingElement& b) {
    require_compatible(a, b);
    const Field& f = a.field();
    RingElement out(f, a.n());
    for (int i = 0; i < a.n(); ++i) out.set_coeff(i, f.add(a.coeff(i), b.coeff(i)));
    return out;
}

RingElement ring_scalar_mul(const RingElement& a, Elem c) {
    const Field& f = a.field();
    RingElement out(f, a.n());
    for (int i = 0; i < a.n(); ++i) out.set_coeff(i, f.mul(a.coeff(i), c));
    return out;
}

bool ring_is_idempotent(const RingElement& a) { return ring_mul(a, a) == a; }

std::vector<RingElement> ring_ideal_basis(const RingElement& g) {
    std::vector<RingElement> out;
    out.reserve(g.n());
    for (int k = 0; k < g.n(); ++k) out.push_back(g.shift(k));
    return out;
}

} // namespace cyclequiv
