#include "cyclequiv/poly.hpp"

#include <algorithm>

namespace cyclequiv {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
    if (!a.field().same(b.field()))
        throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
}

std::vector<Elem> trim(std::vector<Elem> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

} // namespace

Poly::Poly(Field field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(trim(std::move(coeffs))) {}

Poly Poly::xn_plus_const(const Field& f, int n, Elem c) {
    std::vector<Elem> v(n + 1, 0);
    v[0] = c;
    v[n] = f.one();
    return Poly(f, std::move(v));
}

bool Poly::lex_less(const Poly& other) const {
    if (degree() != other.degree()) return degree() < other.degree();
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != other.coeffs_[i]) return coeffs_[i] < other.coeffs_[i];
    }
    return false;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    if (lead() == field_.one()) return *this;
    return poly_scale(*this, field_.inv(lead()));
}

Elem Poly::eval(Elem at) const {
    Elem acc = 0;
    for (int i = degree(); i >= 0; --i) acc = field_.add(field_.mul(acc, at), coeffs_[i]);
    return acc;
}

Poly poly_add(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const Field& f = a.field();
    std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly(f, std::move(out));
}

Poly poly_sub(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const Field& f = a.field();
    std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly(f, std::move(out));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const Field& f = a.field();
    if (a.is_zero() || b.is_zero()) return Poly::zero(f);
    std::vector<Elem> out(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        Elem ai = a.coeffs()[i];
        if (ai == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j) {
            out[i + j] = f.add(out[i + j], f.mul(ai, b.coeffs()[j]));
        }
    }
    return Poly(f, std::move(out));
}

Poly poly_scale(const Poly& a, Elem c) {
    const Field& f = a.field();
    if (c == 0) return Poly::zero(f);
    std::vector<Elem> out(a.coeffs());
    for (auto& t : out) t = f.mul(t, c);
    return Poly(f, std::move(out));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const Field& f = a.field();
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "division by the zero polynomial");
    if (a.degree() < b.degree()) return {Poly::zero(f), a};

    std::vector<Elem> rem(a.coeffs());
    std::vector<Elem> quot(a.degree() - b.degree() + 1, 0);
    const Elem lead_inv = f.inv(b.lead());
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        Elem c = rem[i];
        if (c == 0) continue;
        Elem factor = f.mul(c, lead_inv);
        quot[i - db] = factor;
        for (int j = 0; j <= db; ++j) {
            rem[i - db + j] = f.sub(rem[i - db + j], f.mul(factor, b.coeff(j)));
        }
    }
    return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

Poly poly_gcd(Poly a, Poly b) {
    require_same_field(a, b);
    while (!b.is_zero()) {
        Poly r = poly_mod(a, b);
        a = b;
        b = r;
    }
    return a.monic();
}

XgcdResult poly_xgcd(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const Field& f = a.field();
    if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0) is undefined");

    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(f), s1 = Poly::zero(f);
    Poly t0 = Poly::zero(f), t1 = Poly::one(f);
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        r0 = r1;
        r1 = r;
        Poly s = poly_sub(s0, poly_mul(q, s1));
        s0 = s1;
        s1 = s;
        Poly t = poly_sub(t0, poly_mul(q, t1));
        t0 = t1;
        t1 = t;
    }
    Elem scale = f.inv(r0.lead());
    return {poly_scale(r0, scale), poly_scale(s0, scale), poly_scale(t0, scale)};
}

Poly poly_powmod(Poly base, long long e, const Poly& m) {
    const Field& f = base.field();
    if (m.degree() < 1) throw Error(ErrorCode::DivisionByZeroPoly, "modulus must be nonconstant");
    Poly out = Poly::one(f);
    base = poly_mod(base, m);
    while (e > 0) {
        if (e & 1) out = poly_mod(poly_mul(out, base), m);
        base = poly_mod(poly_mul(base, base), m);
        e >>= 1;
    }
    return out;
}

} // namespace cyclequiv
