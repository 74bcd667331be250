#include "cyclequiv/cyclic_code.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cyclequiv {

namespace {

long gcd_long(long a, long b) { return std::gcd(a, b); }

void require_semisimple(int n, long q) {
    if (n < 1) throw Error(ErrorCode::InvalidInput, "length must be positive");
    if (gcd_long(n, q) != 1)
        throw Error(ErrorCode::NotCoprime,
                    "gcd(" + std::to_string(n) + ", " + std::to_string(q) + ") != 1");
}

} // namespace

std::vector<std::vector<int>> cyclotomic_cosets(int n, long q) {
    require_semisimple(n, q);
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> cosets;
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<int> orbit;
        long j = start;
        do {
            seen[j] = 1;
            orbit.push_back(static_cast<int>(j));
            j = (j * (q % n)) % n;
        } while (!seen[j]);
        std::sort(orbit.begin(), orbit.end());
        cosets.push_back(std::move(orbit));
    }
    return cosets;
}

std::vector<Poly> berlekamp_factor_squarefree(const Poly& f) {
    const Field& fld = f.field();
    const long q = fld.q();
    const int deg = f.degree();
    if (deg <= 1) return deg == 1 ? std::vector<Poly>{f.monic()} : std::vector<Poly>{};

    // Frobenius matrix: row i holds x^(i*q) mod f
    Poly xq = poly_powmod(Poly::x(fld), q, f);
    RowList frob(deg, Row(deg, 0));
    Poly cur = Poly::one(fld);
    for (int i = 0; i < deg; ++i) {
        for (int j = 0; j <= cur.degree(); ++j) frob[i][j] = cur.coeff(j);
        if (i + 1 < deg) cur = poly_mod(poly_mul(cur, xq), f);
    }
    // v is in the Berlekamp subalgebra iff v*(frob - I) = 0
    RowList m = mat_transpose(frob, deg);
    for (int i = 0; i < deg; ++i) m[i][i] = fld.sub(m[i][i], fld.one());
    RowList basis = kernel_basis(fld, m, deg);
    const size_t target = basis.size();

    std::vector<Poly> factors{f.monic()};
    for (const Row& vrow : basis) {
        if (factors.size() >= target) break;
        Poly v(fld, vrow);
        if (v.degree() < 1) continue;
        std::vector<Poly> next;
        for (const Poly& g : factors) {
            if (g.degree() <= 1) {
                next.push_back(g);
                continue;
            }
            Poly rest = g;
            for (long c = 0; c < q && rest.degree() > 0; ++c) {
                Poly shifted = poly_sub(v, Poly(fld, {static_cast<Elem>(c)}));
                Poly d = poly_gcd(rest, shifted);
                if (d.degree() > 0) {
                    next.push_back(d);
                    rest = poly_divmod(rest, d).first;
                }
            }
            if (rest.degree() > 0) next.push_back(rest.monic());
        }
        factors = std::move(next);
    }
    if (factors.size() != target)
        throw Error(ErrorCode::Internal, "Berlekamp split incomplete");
    std::sort(factors.begin(), factors.end(),
              [](const Poly& a, const Poly& b) { return a.lex_less(b); });
    return factors;
}

std::vector<Poly> factor_xn_minus_1(int n, const Field& field) {
    require_semisimple(n, field.q());
    Poly xn1 = Poly::xn_plus_const(field, n, field.neg(field.one()));
    return berlekamp_factor_squarefree(xn1);
}

Poly cyclotomic_polynomial(int n, const Field& field) {
    std::map<int, Poly> cache;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        Poly num = Poly::xn_plus_const(field, d, field.neg(field.one()));
        for (int e = 1; e < d; ++e) {
            if (d % e != 0) continue;
            auto [quot, rem] = poly_divmod(num, cache.at(e));
            if (!rem.is_zero()) throw Error(ErrorCode::Internal, "cyclotomic division not exact");
            num = quot;
        }
        cache.emplace(d, std::move(num));
    }
    return cache.at(n);
}

CyclicContext CyclicContext::build(int n, const Field& field) {
    require_semisimple(n, field.q());
    CyclicContext ctx(n, field);
    ctx.cosets_ = cyclotomic_cosets(n, field.q());
    ctx.coset_of_.assign(n, -1);
    for (size_t i = 0; i < ctx.cosets_.size(); ++i)
        for (int j : ctx.cosets_[i]) ctx.coset_of_[j] = static_cast<int>(i);
    ctx.xn1_ = Poly::xn_plus_const(field, n, field.neg(field.one()));
    std::vector<Poly> factors = berlekamp_factor_squarefree(ctx.xn1_);

    // Fix a root alpha of order exactly n: alpha = x in K = F_q[x]/(f1),
    // f1 the lex-least irreducible factor of the n-th cyclotomic polynomial.
    Poly phi = cyclotomic_polynomial(n, field);
    const Poly* f1 = nullptr;
    for (const Poly& f : factors) {
        if (!poly_mod(phi, f).is_zero()) continue;
        if (f1 == nullptr || f.lex_less(*f1)) f1 = &f;
    }
    if (f1 == nullptr) throw Error(ErrorCode::Internal, "no factor of the cyclotomic part");

    std::vector<Poly> alpha_pow;
    alpha_pow.reserve(n);
    alpha_pow.push_back(Poly::one(field));
    for (int j = 1; j < n; ++j)
        alpha_pow.push_back(poly_mod(poly_mul(alpha_pow.back(), Poly::x(field)), *f1));

    // factor -> exponent set {j : f(alpha^j) = 0}, evaluated in K
    ctx.factors_.assign(ctx.cosets_.size(), Poly(field));
    std::vector<char> assigned(ctx.cosets_.size(), 0);
    for (const Poly& f : factors) {
        std::vector<int> roots;
        for (int j = 0; j < n; ++j) {
            Poly acc = Poly::zero(field);
            for (int i = f.degree(); i >= 0; --i) {
                acc = poly_mod(poly_mul(acc, alpha_pow[j]), *f1);
                acc = poly_add(acc, Poly(field, {f.coeff(i)}));
            }
            if (acc.is_zero()) roots.push_back(j);
        }
        if (static_cast<int>(roots.size()) != f.degree())
            throw Error(ErrorCode::Internal, "factor root count differs from degree");
        int idx = ctx.coset_of_[roots[0]];
        if (assigned[idx] || ctx.cosets_[idx] != roots)
            throw Error(ErrorCode::Internal, "factor roots do not form the expected coset");
        ctx.factors_[idx] = f;
        assigned[idx] = 1;
    }
    ctx.pairing_method_ = "splitting_field";
    return ctx;
}

std::vector<int> CyclicContext::coset_indices(const std::vector<std::vector<int>>& sets) const {
    std::vector<int> out;
    std::vector<char> used(cosets_.size(), 0);
    for (const auto& s : sets) {
        if (s.empty()) throw Error(ErrorCode::NotACoset, "empty exponent set");
        std::vector<int> sorted = s;
        std::sort(sorted.begin(), sorted.end());
        if (sorted.front() < 0 || sorted.back() >= n_)
            throw Error(ErrorCode::NotACoset, "exponent out of range");
        int idx = coset_of_[sorted[0]];
        if (cosets_[idx] != sorted)
            throw Error(ErrorCode::NotACoset, "set is not a q-cyclotomic coset mod n");
        if (used[idx]) throw Error(ErrorCode::NotACoset, "coset listed twice");
        used[idx] = 1;
        out.push_back(idx);
    }
    std::sort(out.begin(), out.end());
    return out;
}

RingElement generator_to_idempotent(const Poly& g, int n, const Field& field) {
    require_semisimple(n, field.q());
    Poly xn1 = Poly::xn_plus_const(field, n, field.neg(field.one()));
    auto [h, rem] = poly_divmod(xn1, g.monic());
    if (!rem.is_zero() || g.is_zero())
        throw Error(ErrorCode::NotADivisor, "generator does not divide x^n - 1");
    XgcdResult bez = poly_xgcd(g.monic(), h);
    if (bez.d.degree() != 0)
        throw Error(ErrorCode::Internal, "generator and cofactor are not coprime");
    RingElement e = RingElement::from_poly(poly_mul(bez.u, g.monic()), n);
    if (!ring_is_idempotent(e)) throw Error(ErrorCode::Internal, "computed element is not idempotent");
    return e;
}

namespace {

CyclicCode code_from_indices(const CyclicContext& ctx, std::vector<int> idx) {
    std::sort(idx.begin(), idx.end());
    const Field& f = ctx.field();
    CyclicCode out(f, ctx.n());
    Poly gen = Poly::one(f);
    int degsum = 0;
    for (int i : idx) {
        out.zero_cosets.push_back(ctx.cosets()[i]);
        gen = poly_mul(gen, ctx.factors()[i]);
        degsum += static_cast<int>(ctx.cosets()[i].size());
    }
    out.generator = gen;
    out.idempotent = generator_to_idempotent(gen, ctx.n(), f);
    out.dim = ctx.n() - degsum;
    out.code = span_of_shifts(out.idempotent);
    out.pairing = ctx.pairing_method();
    if (out.code.dim() != out.dim)
        throw Error(ErrorCode::Internal, "idempotent span dimension mismatch");
    return out;
}

} // namespace

CyclicCode code_from_cosets(const CyclicContext& ctx, const std::vector<std::vector<int>>& zeros) {
    return code_from_indices(ctx, ctx.coset_indices(zeros));
}

CyclicCode code_from_generator(const CyclicContext& ctx, const Poly& g) {
    if (g.is_zero()) throw Error(ErrorCode::NotADivisor, "zero generator");
    Poly gm = g.monic();
    if (!poly_mod(ctx.xn_minus_1(), gm).is_zero())
        throw Error(ErrorCode::NotADivisor, "generator does not divide x^n - 1");
    std::vector<int> idx;
    Poly prod = Poly::one(ctx.field());
    for (size_t i = 0; i < ctx.factors().size(); ++i) {
        if (poly_mod(gm, ctx.factors()[i]).is_zero()) {
            idx.push_back(static_cast<int>(i));
            prod = poly_mul(prod, ctx.factors()[i]);
        }
    }
    if (prod != gm) throw Error(ErrorCode::NotADivisor, "generator is not a product of factors");
    return code_from_indices(ctx, std::move(idx));
}

CyclicCode code_from_idempotent(const CyclicContext& ctx, const RingElement& e) {
    if (e.n() != ctx.n()) throw Error(ErrorCode::LengthMismatch, "idempotent length differs from n");
    if (!e.field().same(ctx.field())) throw Error(ErrorCode::FieldMismatch, "idempotent field differs");
    if (!ring_is_idempotent(e)) throw Error(ErrorCode::InvalidInput, "element is not idempotent");
    if (e.is_zero()) return code_from_generator(ctx, ctx.xn_minus_1());
    Poly g = poly_gcd(e.to_poly(), ctx.xn_minus_1());
    CyclicCode out = code_from_generator(ctx, g);
    if (out.idempotent != e)
        throw Error(ErrorCode::Internal, "idempotent does not regenerate itself");
    return out;
}

std::vector<CyclicCode> enumerate_cyclic_codes(const CyclicContext& ctx, long cap) {
    const int c = static_cast<int>(ctx.cosets().size());
    if (c > 30) throw Error(ErrorCode::TooManyCodes, "too many cosets to enumerate");
    const long count = 1L << c;
    if (count > cap)
        throw Error(ErrorCode::TooManyCodes,
                    std::to_string(count) + " codes exceed cap " + std::to_string(cap));
    std::vector<CyclicCode> out;
    out.reserve(count);
    for (long mask = 0; mask < count; ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < c; ++i)
            if (mask & (1L << i)) idx.push_back(i);
        out.push_back(code_from_indices(ctx, std::move(idx)));
    }
    return out;
}

} // namespace cyclequiv
