#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cyclequiv/cyclic_code.hpp"
#include "cyclequiv/linear_code.hpp"
#include "cyclequiv/oracle.hpp"

using namespace cyclequiv;

namespace {

LinearCode random_code(const Field& f, int n, int rows, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(0, f.q() - 1);
    RowList r(rows, Row(n));
    for (auto& row : r)
        for (auto& c : row) c = static_cast<Elem>(dist(rng));
    return LinearCode::from_span(f, n, std::move(r));
}

Permutation random_perm(int n, std::mt19937_64& rng) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(std::move(img));
}

} // namespace

TEST_CASE("rref canonical form") {
    Field f2 = Field::make(2, 1);
    LinearCode c = LinearCode::from_span(f2, 3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(c.dim() == 2);
    CHECK(c.basis() == RowList{{1, 0, 1}, {0, 1, 1}});

    CHECK(LinearCode::from_span(f2, 3, {{0, 0, 0}}).dim() == 0);
    CHECK(LinearCode::full(f2, 3).dim() == 3);
    CHECK(LinearCode::full(f2, 3).basis() == RowList{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

TEST_CASE("two spanning sets of the same space canonicalize identically") {
    std::mt19937_64 rng(42);
    for (long q : {2L, 3L, 5L}) {
        Field f = Field::from_order(q);
        for (int trial = 0; trial < 50; ++trial) {
            LinearCode c = random_code(f, 6, 3, rng);
            // perturb the spanning set with row operations
            RowList rows = c.basis();
            if (rows.size() >= 2) {
                for (size_t j = 0; j < rows[0].size(); ++j)
                    rows[0][j] = f.add(rows[0][j], rows[1][j]);
                std::swap(rows[0], rows[1]);
            }
            rows.push_back(rows.empty() ? Row(6, 0) : rows[0]);
            CHECK(LinearCode::from_span(f, 6, rows) == c);
        }
    }
}

TEST_CASE("bitpacked GF(2) rref agrees with the dense kernel") {
    std::mt19937_64 rng(7);
    Field f2 = Field::make(2, 1);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 90);
        int m = 1 + static_cast<int>(rng() % 40);
        RowList rows(m, Row(n));
        for (auto& r : rows)
            for (auto& c : r) c = static_cast<Elem>(bit(rng));
        BitRows packed = pack_gf2(rows, n);
        rref_gf2_inplace(packed);
        CHECK(unpack_gf2(packed) == rref_dense(f2, rows));
    }
}

TEST_CASE("permute_code basics and the action axiom") {
    Field f2 = Field::make(2, 1);
    LinearCode even = LinearCode::from_span(f2, 3, {{1, 1, 0}, {0, 1, 1}});
    CHECK(permute_code(even, Permutation::identity(3)) == even);
    // even-weight code is Sym(3)-invariant
    CHECK(permute_code(even, Permutation({1, 0, 2})) == even);
    CHECK(permute_code(even, Permutation({2, 0, 1})) == even);

    std::mt19937_64 rng(99);
    for (long q : {2L, 3L, 4L}) {
        Field f = Field::from_order(q);
        for (int trial = 0; trial < 40; ++trial) {
            LinearCode c = random_code(f, 6, 3, rng);
            Permutation g = random_perm(6, rng);
            Permutation h = random_perm(6, rng);
            CHECK(permute_code(permute_code(c, g), h) == permute_code(c, compose(g, h)));
            CHECK(permute_code(c, Permutation::identity(6)) == c);
        }
    }
}

TEST_CASE("multiplier transports the Hamming code defining set") {
    Field f2 = Field::make(2, 1);
    CyclicContext ctx = CyclicContext::build(7, f2);
    CyclicCode h124 = code_from_cosets(ctx, {{1, 2, 4}});
    CyclicCode h356 = code_from_cosets(ctx, {{3, 5, 6}});
    // mu_3 sends zeros {1,2,4} to 3^-1{1,2,4} = 5*{1,2,4} = {5,3,6}
    Permutation mu3({0, 3, 6, 2, 5, 1, 4});
    CHECK(permute_code(h124.code, mu3) == h356.code);
}

TEST_CASE("code_equal") {
    Field f2 = Field::make(2, 1);
    LinearCode zero = LinearCode::zero(f2, 3);
    LinearCode full = LinearCode::full(f2, 3);
    CHECK(code_equal(zero, zero));
    CHECK_FALSE(code_equal(zero, full));
    // span of shifts of g = x+1 equals span of shifts of e = x+x^2 (n=3)
    RingElement g(f2, {1, 1, 0});
    RingElement e(f2, {0, 1, 1});
    CHECK(code_equal(span_of_shifts(g), span_of_shifts(e)));
    CHECK_THROWS_AS(code_equal(zero, LinearCode::zero(f2, 4)), Error);
}

TEST_CASE("circulant matrices") {
    Field f2 = Field::make(2, 1);
    CirculantMatrix id = circulant(RingElement::one(f2, 3));
    CHECK(id.rows() == RowList{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});

    CirculantMatrix shift = circulant(RingElement(f2, {0, 1, 0}));
    CHECK(shift.rows() == RowList{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});

    CirculantMatrix ham = circulant(RingElement(f2, {0, 1, 1}));
    CHECK(ham.rows() == RowList{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
}

TEST_CASE("circulant is an algebra homomorphism") {
    std::mt19937_64 rng(5);
    for (long q : {2L, 3L, 5L}) {
        Field f = Field::from_order(q);
        std::uniform_int_distribution<long> dist(0, q - 1);
        for (int trial = 0; trial < 30; ++trial) {
            int n = 2 + static_cast<int>(rng() % 9);
            std::vector<Elem> ca(n), cb(n);
            for (auto& c : ca) c = static_cast<Elem>(dist(rng));
            for (auto& c : cb) c = static_cast<Elem>(dist(rng));
            RingElement a(f, ca), b(f, cb);
            RowList lhs = mat_mul(f, circulant(a).rows(), circulant(b).rows());
            CHECK(lhs == circulant(ring_mul(a, b)).rows());
        }
    }
}

TEST_CASE("projector verification") {
    Field f2 = Field::make(2, 1);
    CyclicContext ctx = CyclicContext::build(7, f2);
    CyclicCode ham = code_from_cosets(ctx, {{1, 2, 4}});
    CHECK(projector_verify(ham.idempotent, ham.code));
    // x is not idempotent
    CHECK_FALSE(projector_verify(RingElement(f2, {0, 1, 0, 0, 0, 0, 0}), ham.code));
    CHECK(projector_verify(RingElement(f2, 4), LinearCode::zero(f2, 4)));
}

TEST_CASE("centralizer check") {
    Field f2 = Field::make(2, 1);
    std::mt19937_64 rng(13);
    for (int n : {3, 4, 6}) {
        std::uniform_int_distribution<long> dist(0, 1);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Elem> c(n);
            for (auto& x : c) x = static_cast<Elem>(dist(rng));
            RingElement e(f2, c);
            CHECK(centralizer_check(e, Permutation::shift(n)));
        }
    }
    // constants commute with everything
    std::mt19937_64 rng2(17);
    for (int trial = 0; trial < 10; ++trial) {
        Permutation g = random_perm(5, rng2);
        CHECK(centralizer_check(RingElement(f2, 5), g));
        CHECK(centralizer_check(RingElement(f2, {1, 1, 1, 1, 1}), g));
    }
    // e = x, n=4, transposition (0 1)
    CHECK_FALSE(centralizer_check(RingElement(f2, {0, 1, 0, 0}), Permutation({1, 0, 2, 3})));
}

TEST_CASE("centralizer membership implies code automorphism, exhaustively to n=6") {
    struct Case {
        int n;
        long q;
    };
    for (Case c : {Case{3, 2}, Case{4, 3}, Case{5, 2}, Case{6, 5}}) {
        Field f = Field::from_order(c.q);
        CyclicContext ctx = CyclicContext::build(c.n, f);
        auto codes = enumerate_cyclic_codes(ctx);
        auto sym = oracle::PermGroup::symmetric(c.n);
        for (const CyclicCode& code : codes) {
            for (const Permutation& g : sym.elements()) {
                if (centralizer_check(code.idempotent, g)) {
                    CHECK(permute_code(code.code, g) == code.code);
                }
            }
        }
    }
}
