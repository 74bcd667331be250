#pragma once

#include <map>
#include <string>
#include <vector>

#include "cyclequiv/group_code.hpp"
#include "cyclequiv/solving.hpp"

namespace cyclequiv::suites {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string details;
};

struct SuiteReport {
    std::string suite;
    bool exploratory = false; // findings informational (order not certified)
    std::vector<CheckResult> checks;
    std::map<std::string, long long> stats;
    double elapsed_ms = 0.0;

    size_t failed() const;
    bool pass() const { return failed() == 0; }
    void add(std::string name, bool ok, std::string details = "");
};

/// Every code of length n: whenever a permuted image is again cyclic, a
/// multiplier witness exists. Exploratory when n is not certified.
SuiteReport ci_cyclic(int n, const Field& field, long long cap = oracle::kDefaultScanCap,
                      long enum_cap = kDefaultEnumerationCap, Exec exec = Exec::Parallel);

/// Every ideal of F_q[(Z_p)^d]: translation-invariant images are GL-images.
SuiteReport ci_groupcode(long p, int d, const Field& field,
                         long long cap = oracle::kDefaultScanCap, Exec exec = Exec::Parallel);

/// Every code of length n, G = shift group: each element of two_closure(G)
/// fixes the code.
SuiteReport two_closure_codes(int n, const Field& field,
                              long enum_cap = kDefaultEnumerationCap, Exec exec = Exec::Parallel);

/// Every code: circulant(e) is an idempotent matrix, its column space is the
/// code, and it commutes with the shift.
SuiteReport projector(int n, const Field& field, long enum_cap = kDefaultEnumerationCap,
                      Exec exec = Exec::Parallel);

/// Every code: Aut(Cay(Z_n, e)) sits inside paut and controls fusion of the
/// shift group there.
SuiteReport fusion(int n, const Field& field, long long cap = oracle::kDefaultScanCap,
                   long enum_cap = kDefaultEnumerationCap, Exec exec = Exec::Parallel);

/// Every code: e^2 = e, span equality with the generator shifts, generating
/// idempotent unique (exhaustive when q^dim <= uniqueness_cap), factor count
/// equals coset count, primitive idempotents sum to 1.
SuiteReport idempotent(int n, const Field& field, long enum_cap = kDefaultEnumerationCap,
                       long long uniqueness_cap = 1 << 16, Exec exec = Exec::Parallel);

/// All pairs of codes: the multiplier engine's verdict equals the full-Sym(n)
/// brute-force verdict.
SuiteReport engine_oracle_agreement(int n, const Field& field,
                                    long long cap = oracle::kDefaultScanCap,
                                    long enum_cap = kDefaultEnumerationCap,
                                    Exec exec = Exec::Parallel);

/// permute_code(code(S), mu_m) = code(m^-1 S) for every coset subset S and
/// unit m.
SuiteReport multiplier_transport(int n, const Field& field,
                                 long enum_cap = kDefaultEnumerationCap);

} // namespace cyclequiv::suites
