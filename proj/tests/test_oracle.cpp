#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cyclequiv/oracle.hpp"
#include "cyclequiv/solving.hpp"
#include "cyclequiv/suites.hpp"

using namespace cyclequiv;
using oracle::PermGroup;

TEST_CASE("perm group construction") {
    PermGroup sym3 = PermGroup::symmetric(3);
    CHECK(sym3.order() == 6);
    PermGroup z6 = PermGroup::cyclic_shift(6);
    CHECK(z6.order() == 6);
    CHECK(z6.is_subgroup_of(PermGroup::symmetric(6)));
    CHECK(PermGroup::trivial(4).order() == 1);

    PermGroup gen = PermGroup::from_generators(4, {Permutation({1, 0, 2, 3}),
                                                   Permutation({0, 2, 1, 3})});
    CHECK(gen.order() == 6); // Sym({0,1,2}) fixing 3
}

TEST_CASE("equivalence bruteforce") {
    Field f2 = Field::make(2, 1);
    CyclicContext ctx = CyclicContext::build(7, f2);
    CyclicCode left = code_from_cosets(ctx, {{1, 2, 4}});
    CyclicCode right = code_from_cosets(ctx, {{3, 5, 6}});

    auto self = oracle::equivalence_bruteforce(left.code, left.code);
    REQUIRE(self.witness.has_value());
    CHECK(self.witness->is_identity());
    CHECK(self.checked == 1);

    auto pair = oracle::equivalence_bruteforce(left.code, right.code);
    REQUIRE(pair.witness.has_value());
    CHECK(permute_code(left.code, *pair.witness) == right.code);
    // agreement with the multiplier engine
    CHECK(test_equivalence(left, right).status == EquivStatus::EquivalentVia);

    LinearCode even = LinearCode::from_span(f2, 3, {{1, 1, 0}, {0, 1, 1}});
    auto none = oracle::equivalence_bruteforce(even, LinearCode::zero(f2, 3));
    CHECK_FALSE(none.witness.has_value());

    CHECK_THROWS_AS(oracle::equivalence_bruteforce(left.code, right.code, 100), Error);
}

TEST_CASE("paut bruteforce") {
    Field f2 = Field::make(2, 1);
    CHECK(oracle::paut_bruteforce(LinearCode::zero(f2, 4)).order() == 24);

    LinearCode even = LinearCode::from_span(f2, 3, {{1, 1, 0}, {0, 1, 1}});
    CHECK(oracle::paut_bruteforce(even).order() == 6);

    CyclicContext ctx = CyclicContext::build(7, f2);
    CyclicCode ham = code_from_cosets(ctx, {{1, 2, 4}});
    PermGroup aut = oracle::paut_bruteforce(ham.code);
    CHECK(aut.order() == 168);
    // cyclic codes keep the full cycle
    CHECK(aut.contains(Permutation::shift(7)));
}

TEST_CASE("two orbits") {
    PermGroup sym4 = PermGroup::symmetric(4);
    CHECK(oracle::two_orbits(sym4).num_classes == 2);
    CHECK(oracle::two_orbits(PermGroup::trivial(3)).num_classes == 9);
    CHECK(oracle::two_orbits(PermGroup::cyclic_shift(7)).num_classes == 7);
}

TEST_CASE("two closure basics") {
    PermGroup sym4 = PermGroup::symmetric(4);
    CHECK(oracle::two_closure(sym4).order() == 24);
    CHECK(oracle::two_closure(PermGroup::trivial(5)).order() == 1);

    PermGroup z4 = PermGroup::cyclic_shift(4);
    PermGroup closure = oracle::two_closure(z4);
    CHECK(z4.is_subgroup_of(closure));
    // 2-closure of a 2-group is a 2-group
    size_t order = closure.order();
    while (order % 2 == 0) order /= 2;
    CHECK(order == 1);

    // closure operator laws
    PermGroup twice = oracle::two_closure(closure);
    CHECK(twice.order() == closure.order());
    CHECK(closure.is_subgroup_of(twice));
}

TEST_CASE("two closure respects monotone orbits") {
    // shift group inside its own closure inside Sym: orbits refine
    PermGroup z5 = PermGroup::cyclic_shift(5);
    PermGroup sym5 = PermGroup::symmetric(5);
    PermGroup c1 = oracle::two_closure(z5);
    PermGroup c2 = oracle::two_closure(sym5);
    CHECK(c1.is_subgroup_of(c2));
}

TEST_CASE("fusion control") {
    PermGroup sym5 = PermGroup::symmetric(5);
    PermGroup z5 = PermGroup::cyclic_shift(5);
    CHECK(oracle::fusion_control_check(sym5, sym5, 5));
    CHECK(oracle::fusion_control_check(z5, sym5, 5));

    PermGroup z4 = PermGroup::cyclic_shift(4);
    PermGroup sym4 = PermGroup::symmetric(4);
    CHECK(oracle::fusion_control_check(z4, sym4, 4));

    CHECK_THROWS_AS(oracle::fusion_control_check(sym5, z5, 5), Error);
}

TEST_CASE("verify_ci_code on certified orders") {
    Field f2 = Field::make(2, 1);
    CyclicContext ctx = CyclicContext::build(5, f2);
    for (const CyclicCode& code : enumerate_cyclic_codes(ctx)) {
        oracle::CiReport r = oracle::verify_ci_code(code);
        CHECK(r.pass());
        CHECK(r.perms_scanned == 120);
        CHECK(r.cyclic_images >= 1);
    }
}

TEST_CASE("verify_theorem_2closed") {
    Field f5 = Field::make(5, 1);
    CyclicContext ctx6 = CyclicContext::build(6, f5);
    PermGroup z6 = PermGroup::cyclic_shift(6);
    for (const CyclicCode& code : enumerate_cyclic_codes(ctx6)) {
        CHECK(oracle::verify_theorem_2closed(code.code, z6));
    }

    Field f2 = Field::make(2, 1);
    CyclicCode ham = code_from_cosets(CyclicContext::build(7, f2), {{1, 2, 4}});
    CHECK(oracle::verify_theorem_2closed(ham.code, PermGroup::cyclic_shift(7)));

    // full space: paut is everything (|Sym(4)| = 24 is coprime to 5)
    CHECK(oracle::verify_theorem_2closed(LinearCode::full(f5, 4), PermGroup::symmetric(4)));

    // violated preconditions
    CHECK_THROWS_AS(oracle::verify_theorem_2closed(ham.code, PermGroup::symmetric(7)), Error);
    LinearCode even4 = LinearCode::from_span(f2, 4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}});
    // shift group of order 4 over F_2: order not coprime to char
    CHECK_THROWS_AS(oracle::verify_theorem_2closed(even4, PermGroup::cyclic_shift(4)), Error);
}

TEST_CASE("engine agrees with the oracle on every small certified order") {
    struct Case {
        int n;
        long q;
    };
    for (Case c : {Case{3, 2}, Case{3, 5}, Case{5, 2}, Case{5, 3}, Case{6, 5}, Case{7, 3},
                   Case{7, 5}}) {
        CAPTURE(c.n);
        CAPTURE(c.q);
        suites::SuiteReport report = suites::engine_oracle_agreement(c.n, Field::from_order(c.q));
        CHECK(report.pass());
    }
}

TEST_CASE("sylow corollary at n = 4 over an odd field") {
    Field f3 = Field::make(3, 1);
    CyclicContext ctx = CyclicContext::build(4, f3);
    PermGroup z4 = PermGroup::cyclic_shift(4);
    for (const CyclicCode& code : enumerate_cyclic_codes(ctx)) {
        PermGroup closure = oracle::two_closure(z4);
        size_t order = closure.order();
        while (order % 2 == 0) order /= 2;
        CHECK(order == 1);
        CHECK(oracle::verify_theorem_2closed(code.code, z4));
    }
}
