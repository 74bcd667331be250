// Timing harness for the hot kernels: canonical-form row reduction
// (bit-packed vs dense) and the exhaustive permutation scans (serial vs
// OpenMP), plus the headline engine-vs-brute-force contrast.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include <omp.h>

#include "cyclequiv/oracle.hpp"
#include "cyclequiv/solving.hpp"

using namespace cyclequiv;

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn, int reps) {
    auto t0 = Clock::now();
    for (int i = 0; i < reps; ++i) fn();
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count() / reps;
}

void bench_rref() {
    std::printf("== rref canonical form, random GF(2) matrices ==\n");
    std::printf("%10s %12s %12s %9s\n", "rows x cols", "bitpacked", "dense", "speedup");
    Field f2 = Field::make(2, 1);
    std::mt19937_64 rng(1);
    for (auto [rows, cols] : {std::pair{64, 128}, {128, 256}, {256, 512}, {512, 1024}}) {
        RowList m(rows, Row(cols));
        for (auto& r : m)
            for (auto& c : r) c = static_cast<Elem>(rng() & 1);
        const int reps = 20;
        double packed = time_ms(
            [&] {
                BitRows b = pack_gf2(m, cols);
                rref_gf2_inplace(b);
            },
            reps);
        double dense = time_ms([&] { rref_dense(f2, m); }, reps);
        std::printf("%5dx%-5d %10.3fms %10.3fms %8.1fx\n", rows, cols, packed, dense,
                    dense / packed);
    }
}

void bench_scans() {
    std::printf("\n== permutation scans, serial vs parallel (%d threads) ==\n",
                omp_get_max_threads());
    Field f2 = Field::make(2, 1);
    CyclicContext ctx = CyclicContext::build(7, f2);
    CyclicCode ham = code_from_cosets(ctx, {{1, 2, 4}});

    Field f3 = Field::make(3, 1);
    CyclicContext ctx8 = CyclicContext::build(8, f3);
    CyclicCode c8 = code_from_cosets(ctx8, {{1, 3}});

    struct Item {
        const char* name;
        std::function<void(Exec)> run;
    };
    Item items[] = {
        {"paut [7,4] Hamming (5040 perms)",
         [&](Exec e) { oracle::paut_bruteforce(ham.code, oracle::kDefaultScanCap, e); }},
        {"paut n=8 over F_3 (40320 perms)",
         [&](Exec e) { oracle::paut_bruteforce(c8.code, oracle::kDefaultScanCap, e); }},
        {"verify_ci_code Hamming (5040 perms)",
         [&](Exec e) { oracle::verify_ci_code(ham, oracle::kDefaultScanCap, e); }},
        {"two_closure Z_8 (40320 perms)",
         [&](Exec e) { oracle::two_closure(oracle::PermGroup::cyclic_shift(8), e); }},
    };
    std::printf("%-38s %12s %12s %9s\n", "kernel", "serial", "parallel", "speedup");
    for (auto& item : items) {
        double serial = time_ms([&] { item.run(Exec::Serial); }, 3);
        double parallel = time_ms([&] { item.run(Exec::Parallel); }, 3);
        std::printf("%-38s %10.1fms %10.1fms %8.2fx\n", item.name, serial, parallel,
                    serial / parallel);
    }
}

long inverse_mod(long m, long n) {
    long inv = 1;
    while ((inv * m) % n != 1) ++inv;
    return inv;
}

void bench_engine() {
    std::printf("\n== solving-set engine vs factorial search ==\n");
    Field f2 = Field::make(2, 1);

    {
        // inequivalent dim-7 pair: the whole 8! space must be scanned
        CyclicContext ctx = CyclicContext::build(8, Field::make(3, 1));
        CyclicCode a = code_from_cosets(ctx, {{0}});
        CyclicCode b = code_from_cosets(ctx, {{4}});
        double engine = time_ms([&] { test_equivalence(a, b); }, 50);
        double brute =
            time_ms([&] { oracle::equivalence_bruteforce(a.code, b.code); }, 3);
        std::printf("n=8:   engine %8.3fms   brute force over 8! %10.3fms\n", engine, brute);
    }
    {
        auto t0 = Clock::now();
        CyclicContext ctx = CyclicContext::build(105, f2);
        double build = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        CyclicCode a = code_from_cosets(ctx, {ctx.cosets()[1], ctx.cosets()[3]});
        std::vector<std::vector<int>> moved;
        for (const auto& c : a.zero_cosets) {
            std::vector<int> s;
            for (int j : c) s.push_back(static_cast<int>((inverse_mod(2, 105) * j) % 105));
            std::sort(s.begin(), s.end());
            moved.push_back(s);
        }
        CyclicCode b = code_from_cosets(ctx, moved);
        double engine = time_ms([&] { test_equivalence(a, b); }, 10);
        double log10_fact = std::lgamma(106.0) / std::log(10.0);
        std::printf("n=105: context build %.1fms, engine %8.3fms; 105! ~ 10^%.0f permutations\n",
                    build, engine, log10_fact);
    }
}

} // namespace

int main() {
    bench_rref();
    bench_scans();
    bench_engine();
    return 0;
}
