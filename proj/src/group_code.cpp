#include "cyclequiv/group_code.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <unordered_set>

#include "cyclequiv/cyclic_code.hpp"

namespace cyclequiv::groupcode {

namespace {

double ms_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void require_semisimple(const ElemAbelianGroup& g, const Field& f) {
    if (f.p() == g.p)
        throw Error(ErrorCode::NotSemisimple, "field characteristic divides the group order");
}

} // namespace

long ElemAbelianGroup::order() const {
    long out = 1;
    for (int i = 0; i < d; ++i) out *= p;
    return out;
}

std::vector<long> ElemAbelianGroup::vec(long index) const {
    std::vector<long> v(d);
    for (int i = d - 1; i >= 0; --i) {
        v[i] = index % p;
        index /= p;
    }
    return v;
}

long ElemAbelianGroup::index(const std::vector<long>& v) const {
    long out = 0;
    for (int i = 0; i < d; ++i) out = out * p + (((v[i] % p) + p) % p);
    return out;
}

long ElemAbelianGroup::add(long a, long b) const {
    long out = 0, mult = 1;
    for (int i = 0; i < d; ++i) {
        out += ((a % p) + (b % p)) % p * mult;
        a /= p;
        b /= p;
        mult *= p;
    }
    return out;
}

long ElemAbelianGroup::sub(long a, long b) const {
    long out = 0, mult = 1;
    for (int i = 0; i < d; ++i) {
        out += (((a % p) - (b % p)) % p + p) % p * mult;
        a /= p;
        b /= p;
        mult *= p;
    }
    return out;
}

ElemAbelianGroup make_group(long p, int d) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (d < 1 || d > 10) throw Error(ErrorCode::InvalidInput, "rank out of range");
    return ElemAbelianGroup{p, d};
}

Permutation translation_perm(const ElemAbelianGroup& g, long h) {
    if (h < 0 || h >= g.order())
        throw Error(ErrorCode::NotAnElement, std::to_string(h) + " is not a group element index");
    std::vector<int> img(g.order());
    for (long x = 0; x < g.order(); ++x) img[x] = static_cast<int>(g.add(x, h));
    return Permutation(std::move(img));
}

std::vector<Permutation> translation_generators(const ElemAbelianGroup& g) {
    std::vector<Permutation> out;
    long unit = 1;
    for (int i = 0; i < g.d; ++i) {
        out.push_back(translation_perm(g, unit));
        unit *= g.p;
    }
    return out;
}

std::vector<Elem> group_convolve(const ElemAbelianGroup& g, const Field& f,
                                 const std::vector<Elem>& a, const std::vector<Elem>& b) {
    const long n = g.order();
    if (static_cast<long>(a.size()) != n || static_cast<long>(b.size()) != n)
        throw Error(ErrorCode::LengthMismatch, "coefficient vector length differs from group order");
    std::vector<Elem> out(n, 0);
    for (long y = 0; y < n; ++y) {
        Elem ay = a[y];
        if (ay == 0) continue;
        for (long z = 0; z < n; ++z) {
            Elem bz = b[z];
            if (bz == 0) continue;
            long x = g.add(y, z);
            out[x] = f.add(out[x], f.mul(ay, bz));
        }
    }
    return out;
}

std::vector<Elem> idempotent_of_ideal(const ElemAbelianGroup& g, const Field& f,
                                      const LinearCode& code) {
    require_semisimple(g, f);
    const long n = g.order();
    if (code.n() != n) throw Error(ErrorCode::LengthMismatch, "code length differs from group order");
    for (const Permutation& t : translation_generators(g)) {
        if (!permutation_maps_code(code, t, code))
            throw Error(ErrorCode::NotInvariant, "code is not translation-invariant");
    }
    const int k = code.dim();
    if (k == 0) return std::vector<Elem>(n, 0);

    // e = sum c_i b_i with e * b_j = b_j for every basis element b_j.
    const RowList& basis = code.basis();
    RowList lhs;
    Row rhs;
    lhs.reserve(static_cast<size_t>(k) * n);
    for (int j = 0; j < k; ++j) {
        RowList conv(k, Row(n));
        for (int i = 0; i < k; ++i) {
            std::vector<Elem> prod = group_convolve(g, f, basis[i], basis[j]);
            std::copy(prod.begin(), prod.end(), conv[i].begin());
        }
        for (long x = 0; x < n; ++x) {
            Row eq(k);
            for (int i = 0; i < k; ++i) eq[i] = conv[i][x];
            lhs.push_back(std::move(eq));
            rhs.push_back(basis[j][x]);
        }
    }
    std::optional<Row> coeffs = solve_linear(f, lhs, k, rhs);
    if (!coeffs) throw Error(ErrorCode::SolverInconsistent, "identity-element solve failed");

    std::vector<Elem> e(n, 0);
    for (int i = 0; i < k; ++i) {
        for (long x = 0; x < n; ++x) e[x] = f.add(e[x], f.mul((*coeffs)[i], basis[i][x]));
    }
    if (group_convolve(g, f, e, e) != e)
        throw Error(ErrorCode::SolverInconsistent, "solved element is not idempotent");
    return e;
}

GroupCode ideal_from_element(const ElemAbelianGroup& g, const Field& f,
                             const std::vector<Elem>& v) {
    require_semisimple(g, f);
    const long n = g.order();
    if (static_cast<long>(v.size()) != n)
        throw Error(ErrorCode::LengthMismatch, "generator length differs from group order");
    RowList rows;
    rows.reserve(n);
    for (long h = 0; h < n; ++h) {
        Row r(n);
        for (long x = 0; x < n; ++x) r[g.add(x, h)] = v[x];
        rows.push_back(std::move(r));
    }
    GroupCode out(g, f);
    out.code = LinearCode::from_span(f, static_cast<int>(n), std::move(rows));
    out.idempotent = idempotent_of_ideal(g, f, out.code);
    out.provenance = "translate_span";
    return out;
}

std::vector<std::vector<std::vector<long>>> enumerate_gl(long p, int d) {
    const long cells = static_cast<long>(d) * d;
    long count = 1;
    for (long i = 0; i < cells; ++i) count *= p;
    Field fp = Field::make(p, 1);
    std::vector<std::vector<std::vector<long>>> out;
    for (long code = 0; code < count; ++code) {
        std::vector<std::vector<long>> a(d, std::vector<long>(d));
        long c = code;
        for (long cell = cells - 1; cell >= 0; --cell) {
            a[cell / d][cell % d] = c % p;
            c /= p;
        }
        RowList rows(d, Row(d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) rows[i][j] = static_cast<Elem>(a[i][j]);
        if (static_cast<int>(rref_dense(fp, rows).size()) == d) out.push_back(std::move(a));
    }
    return out;
}

Permutation gl_induced_perm(const ElemAbelianGroup& g, const std::vector<std::vector<long>>& a) {
    std::vector<int> img(g.order());
    for (long x = 0; x < g.order(); ++x) {
        std::vector<long> v = g.vec(x);
        std::vector<long> w(g.d, 0);
        for (int i = 0; i < g.d; ++i) {
            long acc = 0;
            for (int j = 0; j < g.d; ++j) acc += a[i][j] * v[j];
            w[i] = acc % g.p;
        }
        img[x] = static_cast<int>(g.index(w));
    }
    return Permutation(std::move(img));
}

std::optional<std::vector<std::vector<long>>> cayley_equivalent_groupcodes(const GroupCode& lhs,
                                                                           const GroupCode& rhs) {
    if (lhs.group.p != rhs.group.p || lhs.group.d != rhs.group.d || !lhs.field.same(rhs.field))
        throw Error(ErrorCode::GroupMismatch, "group codes over different groups or fields");
    if (lhs.code.dim() != rhs.code.dim()) return std::nullopt;

    std::vector<std::vector<long>> identity(lhs.group.d, std::vector<long>(lhs.group.d, 0));
    for (int i = 0; i < lhs.group.d; ++i) identity[i][i] = 1;
    if (permutation_maps_code(lhs.code, gl_induced_perm(lhs.group, identity), rhs.code))
        return identity;
    for (const auto& a : enumerate_gl(lhs.group.p, lhs.group.d)) {
        if (a == identity) continue;
        if (permutation_maps_code(lhs.code, gl_induced_perm(lhs.group, a), rhs.code)) return a;
    }
    return std::nullopt;
}

std::vector<GroupCode> enumerate_group_ideals(const ElemAbelianGroup& g, const Field& f,
                                              long cap) {
    require_semisimple(g, f);
    const long n = g.order();
    const long p = g.p;

    // Splitting field for the p-th roots of unity: K = F_q[t]/(f1), f1 the
    // lex-least irreducible factor of Phi_p over F_q; zeta = t.
    Poly phi = cyclotomic_polynomial(static_cast<int>(p), f);
    std::vector<Poly> phi_factors = berlekamp_factor_squarefree(phi);
    const Poly& f1 = phi_factors.front(); // sorted by degree then lex
    std::vector<Poly> zeta_pow;
    zeta_pow.push_back(Poly::one(f));
    for (long s = 1; s < p; ++s)
        zeta_pow.push_back(poly_mod(poly_mul(zeta_pow.back(), Poly::x(f)), f1));

    // Frobenius orbits of the dual group under v -> q*v.
    const long qmodp = f.q() % p;
    std::vector<char> seen(n, 0);
    std::vector<std::vector<long>> orbits;
    for (long v = 0; v < n; ++v) {
        if (seen[v]) continue;
        std::vector<long> orbit;
        long cur = v;
        while (!seen[cur]) {
            seen[cur] = 1;
            orbit.push_back(cur);
            std::vector<long> scaled = g.vec(cur);
            for (auto& c : scaled) c = (c * qmodp) % p;
            cur = g.index(scaled);
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    if ((1L << orbits.size()) > cap)
        throw Error(ErrorCode::TooManyCodes, "ideal count exceeds cap");

    // Primitive idempotent per orbit: e_O[h] = |H|^-1 sum_{v in O} zeta^{-<v,h>}.
    const Elem inv_order = f.inv(f.from_int(n % f.p()));
    std::vector<std::vector<Elem>> primitive;
    for (const auto& orbit : orbits) {
        std::vector<Elem> e(n, 0);
        for (long h = 0; h < n; ++h) {
            Poly acc = Poly::zero(f);
            std::vector<long> hv = g.vec(h);
            for (long v : orbit) {
                std::vector<long> vv = g.vec(v);
                long dot = 0;
                for (int i = 0; i < g.d; ++i) dot += vv[i] * hv[i];
                long expo = ((p - (dot % p)) % p);
                acc = poly_add(acc, zeta_pow[expo]);
            }
            if (acc.degree() > 0)
                throw Error(ErrorCode::Internal, "character-orbit sum left the base field");
            e[h] = f.mul(inv_order, acc.coeff(0));
        }
        primitive.push_back(std::move(e));
    }

    std::vector<GroupCode> out;
    const long total = 1L << orbits.size();
    for (long mask = 0; mask < total; ++mask) {
        std::vector<Elem> idem(n, 0);
        for (size_t i = 0; i < orbits.size(); ++i) {
            if (!(mask & (1L << i))) continue;
            for (long h = 0; h < n; ++h) idem[h] = f.add(idem[h], primitive[i][h]);
        }
        GroupCode gc(g, f);
        RowList rows;
        for (long h = 0; h < n; ++h) {
            Row r(n);
            for (long x = 0; x < n; ++x) r[g.add(x, h)] = idem[x];
            rows.push_back(std::move(r));
        }
        gc.code = LinearCode::from_span(f, static_cast<int>(n), std::move(rows));
        gc.idempotent = idem;
        gc.provenance = "character_orbits";
        if (group_convolve(g, f, idem, idem) != idem)
            throw Error(ErrorCode::Internal, "orbit-sum idempotent failed its square check");
        out.push_back(std::move(gc));
    }
    return out;
}

oracle::CiReport verify_ci_groupcode(const GroupCode& code, long long cap, Exec exec) {
    const auto t0 = std::chrono::steady_clock::now();
    const ElemAbelianGroup& g = code.group;
    const int n = static_cast<int>(g.order());
    if (n > 20 || !oracle::factorial_at_most(n, cap))
        throw Error(ErrorCode::CapExceeded, "degree exceeds the permutation scan cap");

    std::unordered_set<std::string> gl_orbit;
    for (const auto& a : enumerate_gl(g.p, g.d)) {
        gl_orbit.insert(permute_code(code.code, gl_induced_perm(g, a)).key());
    }
    const std::vector<Permutation> translations = translation_generators(g);
    const Field f = code.field;
    const LinearCode& base = code.code;

    const std::uint64_t total = factorial(n);
    const std::uint64_t chunk = 4096;
    const std::uint64_t chunks = (total + chunk - 1) / chunk;
    std::vector<std::uint64_t> counts(chunks, 0);
    std::vector<std::vector<std::pair<std::uint64_t, std::vector<int>>>> bad_per(chunks);

    auto work = [&](std::size_t ci) {
        const std::uint64_t start = static_cast<std::uint64_t>(ci) * chunk;
        const std::uint64_t end = std::min<std::uint64_t>(start + chunk, total);
        std::vector<int> v = unrank_permutation(n, start);
        RowList rows(base.dim(), Row(n));
        for (std::uint64_t r = start; r < end; ++r) {
            for (int bi = 0; bi < base.dim(); ++bi) {
                const Row& src = base.basis()[bi];
                for (int i = 0; i < n; ++i) rows[bi][v[i]] = src[i];
            }
            LinearCode image = LinearCode::from_span(f, n, rows);
            bool invariant = true;
            for (const Permutation& t : translations) {
                if (!permutation_maps_code(image, t, image)) {
                    invariant = false;
                    break;
                }
            }
            if (invariant) {
                ++counts[ci];
                if (!gl_orbit.count(image.key())) bad_per[ci].emplace_back(r, v);
            }
            std::next_permutation(v.begin(), v.end());
        }
    };
    for_each_index(chunks, work, exec);

    oracle::CiReport report;
    report.perms_scanned = total;
    for (std::uint64_t c : counts) report.cyclic_images += c;
    std::vector<std::pair<std::uint64_t, std::vector<int>>> bad;
    for (auto& b : bad_per)
        bad.insert(bad.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
    std::sort(bad.begin(), bad.end());
    for (auto& [rank, images] : bad) {
        Permutation perm{images};
        LinearCode image = permute_code(base, perm);
        report.counterexamples.push_back(oracle::CiCounterexample{perm, image.basis(), base.basis()});
    }
    report.elapsed_ms = ms_since(t0);
    return report;
}

} // namespace cyclequiv::groupcode
