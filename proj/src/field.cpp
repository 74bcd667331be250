#include "cyclequiv/field.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace cyclequiv {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::ReducibleModulus: return "ReducibleModulus";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::ZeroInverse: return "ZeroInverse";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::DivisionByZeroPoly: return "DivisionByZeroPoly";
        case ErrorCode::BothZero: return "BothZero";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::NotACoset: return "NotACoset";
        case ErrorCode::NotADivisor: return "NotADivisor";
        case ErrorCode::TooManyCodes: return "TooManyCodes";
        case ErrorCode::NotAUnit: return "NotAUnit";
        case ErrorCode::NotSemisimple: return "NotSemisimple";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::NotASubgroup: return "NotASubgroup";
        case ErrorCode::PreconditionFailed: return "PreconditionFailed";
        case ErrorCode::NotAnElement: return "NotAnElement";
        case ErrorCode::NotInvariant: return "NotInvariant";
        case ErrorCode::SolverInconsistent: return "SolverInconsistent";
        case ErrorCode::GroupMismatch: return "GroupMismatch";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

bool is_prime(long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Raw polynomial arithmetic over Z/p, coefficients ascending, used only for
// modulus validation and the default-modulus search (runs before any Field
// exists).
using ZpPoly = std::vector<long>;

ZpPoly zp_trim(ZpPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// remainder of a by monic b
ZpPoly zp_mod(ZpPoly a, const ZpPoly& b, long p) {
    const int db = static_cast<int>(b.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        long c = a[i] % p;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) {
            long& t = a[i - db + j];
            t = ((t - c * b[j]) % p + p) % p;
        }
    }
    for (auto& c : a) c = ((c % p) + p) % p;
    return zp_trim(std::move(a));
}

bool zp_is_irreducible(const ZpPoly& f, long p) {
    const int k = static_cast<int>(f.size()) - 1;
    if (k < 1) return false;
    if (k == 1) return true;
    // trial division by every monic polynomial of degree 1..k/2
    for (int d = 1; 2 * d <= k; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            ZpPoly g(d + 1, 0);
            long c = code;
            for (int i = 0; i < d; ++i) {
                g[i] = c % p;
                c /= p;
            }
            g[d] = 1;
            if (zp_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

// Enumerates monic degree-k candidates so that the coefficient tuples
// (c_0, ..., c_{k-1}) come out in ascending lexicographic order.
ZpPoly default_modulus(long p, int k) {
    if (k == 1) return {0, 1};
    long count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
        ZpPoly f(k + 1, 0);
        long c = idx;
        for (int i = k - 1; i >= 0; --i) {
            f[i] = c % p;
            c /= p;
        }
        f[k] = 1;
        if (zp_is_irreducible(f, p)) return f;
    }
    throw Error(ErrorCode::Internal, "no irreducible of degree " + std::to_string(k) +
                                         " over F_" + std::to_string(p));
}

constexpr long kTableCacheMaxQ = 64;
constexpr int kMaxExtensionDegree = 16;

} // namespace

Elem Field::Impl::add_direct(Elem a, Elem b) const {
    long out = 0, mult = 1, x = a, y = b;
    for (int i = 0; i < k; ++i) {
        out += ((x % p + y % p) % p) * mult;
        x /= p;
        y /= p;
        mult *= p;
    }
    return static_cast<Elem>(out);
}

Elem Field::Impl::neg_direct(Elem a) const {
    long out = 0, mult = 1, x = a;
    for (int i = 0; i < k; ++i) {
        out += ((p - x % p) % p) * mult;
        x /= p;
        mult *= p;
    }
    return static_cast<Elem>(out);
}

Elem Field::Impl::mul_direct(Elem a, Elem b) const {
    std::array<long, 2 * kMaxExtensionDegree> prod{};
    std::array<long, kMaxExtensionDegree> da{}, db{};
    long x = a, y = b;
    for (int i = 0; i < k; ++i) {
        da[i] = x % p;
        db[i] = y % p;
        x /= p;
        y /= p;
    }
    for (int i = 0; i < k; ++i) {
        if (da[i] == 0) continue;
        for (int j = 0; j < k; ++j) prod[i + j] += da[i] * db[j];
    }
    // reduce by the monic modulus: x^k = -(m_0 + ... + m_{k-1} x^{k-1})
    for (int i = 2 * k - 2; i >= k; --i) {
        long c = prod[i] % p;
        if (c == 0) continue;
        prod[i] = 0;
        for (int j = 0; j < k; ++j) {
            prod[i - k + j] = ((prod[i - k + j] - c * modulus[j]) % p + p) % p;
        }
    }
    long out = 0, mult = 1;
    for (int i = 0; i < k; ++i) {
        out += (((prod[i] % p) + p) % p) * mult;
        mult *= p;
    }
    return static_cast<Elem>(out);
}

Field Field::make(long p, int k) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (k < 1) throw Error(ErrorCode::DegreeMismatch, "extension degree must be >= 1");
    std::vector<long> mod = default_modulus(p, k);
    return make(p, k, mod);
}

Field Field::make(long p, int k, const std::vector<long>& modulus_ascending) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (k < 1 || k > kMaxExtensionDegree)
        throw Error(ErrorCode::DegreeMismatch, "extension degree out of range: " + std::to_string(k));
    if (static_cast<int>(modulus_ascending.size()) != k + 1)
        throw Error(ErrorCode::DegreeMismatch, "modulus must have degree exactly " + std::to_string(k));

    ZpPoly mod(modulus_ascending.size());
    for (size_t i = 0; i < mod.size(); ++i) mod[i] = ((modulus_ascending[i] % p) + p) % p;
    if (mod.back() != 1)
        throw Error(ErrorCode::DegreeMismatch, "modulus must be monic");
    if (k > 1 && !zp_is_irreducible(mod, p))
        throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));

    long q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > 65535) throw Error(ErrorCode::InvalidInput, "field order exceeds 2^16");
    }

    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->k = k;
    impl->q = q;
    impl->modulus = mod;
    if (q <= kTableCacheMaxQ) {
        impl->cached = true;
        impl->add_table.resize(q * q);
        impl->mul_table.resize(q * q);
        impl->neg_table.resize(q);
        impl->inv_table.assign(q, 0);
        for (long a = 0; a < q; ++a) {
            impl->neg_table[a] = impl->neg_direct(static_cast<Elem>(a));
            for (long b = 0; b < q; ++b) {
                impl->add_table[a * q + b] = impl->add_direct(static_cast<Elem>(a), static_cast<Elem>(b));
                Elem m = impl->mul_direct(static_cast<Elem>(a), static_cast<Elem>(b));
                impl->mul_table[a * q + b] = m;
                if (m == 1) impl->inv_table[a] = static_cast<Elem>(b);
            }
        }
    }
    return Field(std::move(impl));
}

Field Field::from_order(long q) {
    if (q < 2) throw Error(ErrorCode::NotPrime, "field order must be >= 2");
    for (long p = 2; p <= q; ++p) {
        if (!is_prime(p)) continue;
        if (q % p != 0) continue;
        long m = q;
        int k = 0;
        while (m % p == 0) {
            m /= p;
            ++k;
        }
        if (m != 1)
            throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
        return make(p, k);
    }
    throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
}

Elem Field::add(Elem a, Elem b) const {
    const Impl& f = *impl_;
    return f.cached ? f.add_table[static_cast<long>(a) * f.q + b] : f.add_direct(a, b);
}

Elem Field::neg(Elem a) const {
    const Impl& f = *impl_;
    return f.cached ? f.neg_table[a] : f.neg_direct(a);
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
    const Impl& f = *impl_;
    return f.cached ? f.mul_table[static_cast<long>(a) * f.q + b] : f.mul_direct(a, b);
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw Error(ErrorCode::ZeroInverse, "zero has no multiplicative inverse");
    const Impl& f = *impl_;
    if (f.cached) return f.inv_table[a];
    return pow(a, f.q - 2);
}

Elem Field::pow(Elem a, long long e) const {
    if (a == 0) {
        if (e < 0) throw Error(ErrorCode::ZeroInverse, "zero has no negative power");
        return e == 0 ? one() : zero();
    }
    const long long group = impl_->q - 1;
    long long r = e % group;
    if (r < 0) r += group;
    Elem base = a, out = one();
    while (r > 0) {
        if (r & 1) out = mul(out, base);
        base = mul(base, base);
        r >>= 1;
    }
    return out;
}

Elem Field::from_int(long v) const {
    long r = ((v % impl_->p) + impl_->p) % impl_->p;
    return static_cast<Elem>(r);
}

Elem Field::from_coeffs(const std::vector<long>& coeffs) const {
    if (static_cast<int>(coeffs.size()) != impl_->k)
        throw Error(ErrorCode::DegreeMismatch, "coefficient vector must have length k");
    long out = 0, mult = 1;
    for (int i = 0; i < impl_->k; ++i) {
        out += (((coeffs[i] % impl_->p) + impl_->p) % impl_->p) * mult;
        mult *= impl_->p;
    }
    return static_cast<Elem>(out);
}

std::vector<long> Field::to_coeffs(Elem a) const {
    std::vector<long> out(impl_->k);
    long x = a;
    for (int i = 0; i < impl_->k; ++i) {
        out[i] = x % impl_->p;
        x /= impl_->p;
    }
    return out;
}

bool Field::same(const Field& other) const {
    if (impl_ == other.impl_) return true;
    return impl_->p == other.impl_->p && impl_->k == other.impl_->k &&
           impl_->modulus == other.impl_->modulus;
}

} // namespace cyclequiv
