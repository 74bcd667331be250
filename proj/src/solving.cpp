#include "cyclequiv/solving.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>

#include "cyclequiv/oracle.hpp"

namespace cyclequiv {

std::vector<size_t> CoefficientPartition::size_multiset() const {
    std::vector<size_t> out;
    out.reserve(classes.size());
    for (const auto& [value, members] : classes) out.push_back(members.size());
    std::sort(out.begin(), out.end());
    return out;
}

CoefficientPartition coefficient_partition(const RingElement& e) {
    std::map<Elem, std::vector<int>> by_value;
    for (int i = 0; i < e.n(); ++i) by_value[e.coeff(i)].push_back(i);
    CoefficientPartition out;
    for (auto& [value, members] : by_value) out.classes.emplace_back(value, std::move(members));
    return out;
}

Permutation multiplier_perm(long m, int n) {
    if (n == 1) return Permutation::identity(1);
    long mm = ((m % n) + n) % n;
    if (std::gcd(mm, static_cast<long>(n)) != 1)
        throw Error(ErrorCode::NotAUnit, std::to_string(m) + " is not a unit mod " + std::to_string(n));
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = static_cast<int>((mm * i) % n);
    return Permutation(std::move(img));
}

std::vector<long> units_mod(int n) {
    if (n == 1) return {1};
    std::vector<long> out;
    for (long m = 1; m < n; ++m)
        if (std::gcd(m, static_cast<long>(n)) == 1) out.push_back(m);
    return out;
}

long euler_phi(int n) { return static_cast<long>(units_mod(n).size()); }

bool is_square_free(long n) {
    if (n < 1) return false;
    for (long d = 2; d * d <= n; ++d) {
        if (n % (d * d) == 0) return false;
    }
    return true;
}

bool is_ci_certified(long n) {
    if (n < 1) return false;
    if (is_square_free(n)) return true;
    if (n % 2 == 0) {
        long m = n / 2;
        if (m % 2 == 1 && is_square_free(m)) return true;
    }
    return false;
}

std::vector<Permutation> SolvingSet::perms() const {
    std::vector<Permutation> out;
    out.reserve(multipliers.size());
    for (long m : multipliers) out.push_back(multiplier_perm(m, n));
    return out;
}

SolvingSet multiplier_solving_set(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidInput, "length must be positive");
    return SolvingSet{n, units_mod(n), is_ci_certified(n)};
}

bool cayley_multiplier_match(const RingElement& e, const RingElement& f, long m) {
    if (e.n() != f.n()) throw Error(ErrorCode::LengthMismatch, "colorings of different length");
    if (!e.field().same(f.field())) throw Error(ErrorCode::FieldMismatch, "colorings over different fields");
    const int n = e.n();
    if (n == 1) return e.coeff(0) == f.coeff(0);
    long mm = ((m % n) + n) % n;
    if (std::gcd(mm, static_cast<long>(n)) != 1)
        throw Error(ErrorCode::NotAUnit, std::to_string(m) + " is not a unit mod " + std::to_string(n));
    for (int a = 0; a < n; ++a) {
        if (f.coeff(static_cast<int>((mm * a) % n)) != e.coeff(a)) return false;
    }
    return true;
}

const char* to_string(EquivStatus s) {
    switch (s) {
        case EquivStatus::EquivalentVia: return "EquivalentVia";
        case EquivStatus::NotEquivalent: return "NotEquivalent";
        case EquivStatus::Inconclusive: return "Inconclusive";
    }
    return "?";
}

const char* to_string(EquivMethod m) {
    switch (m) {
        case EquivMethod::Invariant: return "invariant";
        case EquivMethod::Multiplier: return "multiplier";
        case EquivMethod::Oracle: return "oracle";
    }
    return "?";
}

EquivalenceVerdict test_equivalence(const CyclicCode& left, const CyclicCode& right,
                                    const EquivOptions& options) {
    if (left.n != right.n) throw Error(ErrorCode::LengthMismatch, "codes of different length");
    if (!left.field.same(right.field)) throw Error(ErrorCode::FieldMismatch, "codes over different fields");
    if (std::gcd(static_cast<long>(left.n), left.field.q()) != 1)
        throw Error(ErrorCode::NotSemisimple, "length not coprime to field order");

    const auto t0 = std::chrono::steady_clock::now();
    auto finish = [&](EquivalenceVerdict v) {
        v.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return v;
    };

    const int n = left.n;
    EquivalenceVerdict verdict;
    verdict.ci_certified = is_ci_certified(n);

    // Permutation-invariant screen. Dimension mismatch settles the question;
    // the coset-size and partition-class multisets are multiplier invariants
    // and only feed reports.
    if (left.dim != right.dim) {
        verdict.status = EquivStatus::NotEquivalent;
        verdict.method = EquivMethod::Invariant;
        return finish(verdict);
    }

    for (long m : units_mod(n)) {
        ++verdict.candidates_checked;
        if (!cayley_multiplier_match(left.idempotent, right.idempotent, m)) continue;
        Permutation g = multiplier_perm(m, n);
        if (!permutation_maps_code(left.code, g, right.code))
            throw Error(ErrorCode::Internal, "Cayley match without code match");
        verdict.status = EquivStatus::EquivalentVia;
        verdict.witness = g;
        verdict.witness_multiplier = m;
        verdict.method = EquivMethod::Multiplier;
        return finish(verdict);
    }

    if (verdict.ci_certified) {
        verdict.status = EquivStatus::NotEquivalent;
        verdict.method = EquivMethod::Multiplier;
        return finish(verdict);
    }

    if (options.oracle_escalation && oracle::factorial_at_most(n, options.oracle_cap)) {
        auto report = oracle::equivalence_bruteforce(left.code, right.code, options.oracle_cap);
        verdict.method = EquivMethod::Oracle;
        if (report.witness) {
            if (!permutation_maps_code(left.code, *report.witness, right.code))
                throw Error(ErrorCode::Internal, "oracle witness failed re-verification");
            verdict.status = EquivStatus::EquivalentVia;
            verdict.witness = report.witness;
        } else {
            verdict.status = EquivStatus::NotEquivalent;
        }
        return finish(verdict);
    }

    verdict.status = EquivStatus::Inconclusive;
    verdict.method = EquivMethod::Multiplier;
    return finish(verdict);
}

} // namespace cyclequiv
