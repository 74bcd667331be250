#include "cyclequiv/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <unordered_set>

#include "cyclequiv/solving.hpp"

namespace cyclequiv::oracle {

namespace {

double ms_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void require_cap(int n, long long cap) {
    if (n > 20 || !factorial_at_most(n, cap))
        throw Error(ErrorCode::CapExceeded,
                    "degree " + std::to_string(n) + " exceeds the permutation scan cap");
}

} // namespace

bool factorial_at_most(int n, long long cap) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= i;
        if (f > cap) return false;
    }
    return f <= cap;
}

PermGroup PermGroup::from_elements(int degree, std::vector<Permutation> elements) {
    for (const Permutation& g : elements) {
        if (g.degree() != degree)
            throw Error(ErrorCode::LengthMismatch, "group element of wrong degree");
    }
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty()) elements.push_back(Permutation::identity(degree));
    return PermGroup(degree, std::move(elements));
}

PermGroup PermGroup::from_generators(int degree, const std::vector<Permutation>& gens,
                                     std::size_t cap) {
    std::set<Permutation> closed;
    closed.insert(Permutation::identity(degree));
    std::vector<Permutation> frontier(closed.begin(), closed.end());
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const Permutation& g : frontier) {
            for (const Permutation& h : gens) {
                Permutation prod = compose(g, h);
                if (closed.insert(prod).second) {
                    next.push_back(std::move(prod));
                    if (closed.size() > cap)
                        throw Error(ErrorCode::CapExceeded, "group closure exceeds cap");
                }
            }
        }
        frontier = std::move(next);
    }
    return PermGroup(degree, std::vector<Permutation>(closed.begin(), closed.end()));
}

PermGroup PermGroup::symmetric(int n, long long cap) {
    require_cap(n, cap);
    std::vector<Permutation> elems;
    elems.reserve(factorial(n));
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    do {
        elems.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return PermGroup(n, std::move(elems));
}

PermGroup PermGroup::cyclic_shift(int n) {
    std::vector<Permutation> elems;
    Permutation s = Permutation::shift(n);
    Permutation cur = Permutation::identity(n);
    for (int i = 0; i < n; ++i) {
        elems.push_back(cur);
        cur = compose(cur, s);
    }
    return from_elements(n, std::move(elems));
}

PermGroup PermGroup::trivial(int n) { return PermGroup(n, {Permutation::identity(n)}); }

bool PermGroup::contains(const Permutation& g) const {
    return std::binary_search(elements_.begin(), elements_.end(), g);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
    if (degree_ != other.degree_) return false;
    for (const Permutation& g : elements_)
        if (!other.contains(g)) return false;
    return true;
}

TwoOrbitPartition two_orbits(const PermGroup& g) {
    const int n = g.degree();
    TwoOrbitPartition part;
    part.degree = n;
    part.class_of.assign(static_cast<size_t>(n) * n, -1);
    int next_id = 0;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (part.class_of[a * n + b] >= 0) continue;
            const int id = next_id++;
            for (const Permutation& p : g.elements()) {
                part.class_of[p[a] * n + p[b]] = id;
            }
        }
    }
    part.num_classes = next_id;
    return part;
}

PermGroup two_closure(const PermGroup& g, Exec exec) {
    const int n = g.degree();
    if (n > 10) throw Error(ErrorCode::CapExceeded, "two_closure limited to degree 10");
    const TwoOrbitPartition part = two_orbits(g);
    auto pred = [&part, n](const std::vector<int>& v) {
        for (int a = 0; a < n; ++a) {
            const int va = v[a];
            for (int b = 0; b < n; ++b) {
                if (part.class_of[va * n + v[b]] != part.class_of[a * n + b]) return false;
            }
        }
        return true;
    };
    std::vector<std::vector<int>> images = scan_collect(n, pred, exec);
    std::vector<Permutation> elems;
    elems.reserve(images.size());
    for (auto& img : images) elems.push_back(Permutation(std::move(img)));
    PermGroup closure = PermGroup::from_elements(n, std::move(elems));
    if (!(two_orbits(closure) == part))
        throw Error(ErrorCode::Internal, "two-closure is not 2-equivalent to its input");
    if (!g.is_subgroup_of(closure))
        throw Error(ErrorCode::Internal, "two-closure does not contain its input");
    return closure;
}

SearchReport equivalence_bruteforce(const LinearCode& c, const LinearCode& d, long long cap,
                                    Exec exec) {
    if (c.n() != d.n()) throw Error(ErrorCode::LengthMismatch, "codes of different length");
    if (!c.field().same(d.field())) throw Error(ErrorCode::FieldMismatch, "codes over different fields");
    const auto t0 = std::chrono::steady_clock::now();
    const int n = c.n();
    require_cap(n, cap);

    SearchReport report;
    if (c.dim() != d.dim()) {
        report.checked = 0;
        report.elapsed_ms = ms_since(t0);
        return report;
    }
    const Field f = c.field();
    auto pred = [&](const std::vector<int>& v) {
        Row buf(n);
        for (const Row& r : c.basis()) {
            for (int i = 0; i < n; ++i) buf[v[i]] = r[i];
            Row copy = buf;
            if (!reduce_against_rref(f, d.basis(), copy)) return false;
        }
        return true;
    };
    ScanHit hit = scan_first(n, pred, exec);
    if (hit.found) {
        report.witness = Permutation(hit.images);
        report.checked = hit.rank + 1;
    } else {
        report.checked = factorial(n);
    }
    report.elapsed_ms = ms_since(t0);
    return report;
}

PermGroup paut_bruteforce(const LinearCode& c, long long cap, Exec exec) {
    const int n = c.n();
    require_cap(n, cap);
    const Field f = c.field();
    auto pred = [&](const std::vector<int>& v) {
        Row buf(n);
        for (const Row& r : c.basis()) {
            for (int i = 0; i < n; ++i) buf[v[i]] = r[i];
            Row copy = buf;
            if (!reduce_against_rref(f, c.basis(), copy)) return false;
        }
        return true;
    };
    std::vector<std::vector<int>> images = scan_collect(n, pred, exec);
    std::vector<Permutation> elems;
    elems.reserve(images.size());
    for (auto& img : images) elems.push_back(Permutation(std::move(img)));
    return PermGroup::from_elements(n, std::move(elems));
}

bool fusion_control_check(const PermGroup& y, const PermGroup& z, int n) {
    if (y.degree() != n || z.degree() != n)
        throw Error(ErrorCode::LengthMismatch, "group degree differs from n");
    if (!y.is_subgroup_of(z)) throw Error(ErrorCode::NotASubgroup, "Y is not a subgroup of Z");
    for (const Permutation& cand : z.elements()) {
        if (!cand.is_full_cycle()) continue;
        if (y.contains(cand)) continue;
        bool pushed = false;
        for (const Permutation& t : z.elements()) {
            if (y.contains(conjugate(cand, t))) {
                pushed = true;
                break;
            }
        }
        if (!pushed) return false;
    }
    return true;
}

CiReport verify_ci_code(const CyclicCode& code, long long cap, Exec exec) {
    const auto t0 = std::chrono::steady_clock::now();
    const int n = code.n;
    require_cap(n, cap);

    // Images of the code under every multiplier — the certified targets.
    std::unordered_set<std::string> multiplier_orbit;
    for (long m : units_mod(n)) {
        multiplier_orbit.insert(permute_code(code.code, multiplier_perm(m, n)).key());
    }
    const Permutation shift = Permutation::shift(n);
    const Field f = code.field;
    const LinearCode& base = code.code;

    CiReport report;
    report.perms_scanned = factorial(n);
    std::uint64_t cyclic_count = 0;
    std::vector<std::pair<std::uint64_t, std::vector<int>>> bad;

    const std::uint64_t total = factorial(n);
    const std::uint64_t chunk = 4096;
    const std::uint64_t chunks = (total + chunk - 1) / chunk;
    std::vector<std::uint64_t> counts(chunks, 0);
    std::vector<std::vector<std::pair<std::uint64_t, std::vector<int>>>> bad_per(chunks);

    auto work = [&](std::size_t ci) {
        const std::uint64_t start = static_cast<std::uint64_t>(ci) * chunk;
        const std::uint64_t end = std::min(start + chunk, total);
        std::vector<int> v = unrank_permutation(n, start);
        RowList rows(base.dim(), Row(n));
        for (std::uint64_t r = start; r < end; ++r) {
            for (int bi = 0; bi < base.dim(); ++bi) {
                const Row& src = base.basis()[bi];
                for (int i = 0; i < n; ++i) rows[bi][v[i]] = src[i];
            }
            LinearCode image = LinearCode::from_span(f, n, rows);
            if (permutation_maps_code(image, shift, image)) {
                ++counts[ci];
                if (!multiplier_orbit.count(image.key())) bad_per[ci].emplace_back(r, v);
            }
            std::next_permutation(v.begin(), v.end());
        }
    };
    for_each_index(chunks, work, exec);

    for (std::uint64_t c : counts) cyclic_count += c;
    for (auto& b : bad_per)
        bad.insert(bad.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
    std::sort(bad.begin(), bad.end());

    report.cyclic_images = cyclic_count;
    for (auto& [rank, images] : bad) {
        Permutation g{images};
        LinearCode image = permute_code(base, g);
        report.counterexamples.push_back(CiCounterexample{g, image.basis(), base.basis()});
    }
    report.elapsed_ms = ms_since(t0);
    return report;
}

bool verify_theorem_2closed(const LinearCode& code, const PermGroup& g, Exec exec) {
    if (code.n() > 8) throw Error(ErrorCode::CapExceeded, "theorem check limited to degree 8");
    if (g.degree() != code.n())
        throw Error(ErrorCode::LengthMismatch, "group degree differs from code length");
    for (const Permutation& p : g.elements()) {
        if (!permutation_maps_code(code, p, code))
            throw Error(ErrorCode::PreconditionFailed, "G does not fix the code");
    }
    if (g.order() % static_cast<std::size_t>(code.field().p()) == 0)
        throw Error(ErrorCode::PreconditionFailed, "group order not coprime to the characteristic");
    PermGroup closure = two_closure(g, exec);
    for (const Permutation& p : closure.elements()) {
        if (!permutation_maps_code(code, p, code)) return false;
    }
    return true;
}

} // namespace cyclequiv::oracle
