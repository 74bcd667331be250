#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cyclequiv/json_io.hpp"

using namespace cyclequiv;
using nlohmann::json;

TEST_CASE("field round trip") {
    for (long q : {2L, 5L, 4L, 9L, 27L}) {
        Field f = Field::from_order(q);
        Field back = jsonio::field_from_json(jsonio::field_to_json(f));
        CHECK(back.same(f));
    }
    // prime-field elements serialize as integers, extension elements as arrays
    Field f5 = Field::make(5, 1);
    CHECK(jsonio::elem_to_json(f5, 3) == json(3));
    Field f4 = Field::make(2, 2);
    CHECK(jsonio::elem_to_json(f4, f4.from_coeffs({0, 1})) == json({0, 1}));
    CHECK(jsonio::elem_from_json(f4, json({1, 1})) == f4.from_coeffs({1, 1}));
}

TEST_CASE("cyclic code round trip, including extension fields") {
    struct Case {
        int n;
        long q;
    };
    for (Case c : {Case{7, 2}, Case{6, 5}, Case{5, 4}, Case{8, 9}}) {
        CAPTURE(c.n);
        CAPTURE(c.q);
        Field f = Field::from_order(c.q);
        CyclicContext ctx = CyclicContext::build(c.n, f);
        for (const CyclicCode& code : enumerate_cyclic_codes(ctx)) {
            json j = jsonio::cyclic_code_to_json(code);
            CyclicCode back = jsonio::cyclic_code_from_json(j);
            CHECK(back.code == code.code);
            CHECK(back.idempotent == code.idempotent);
            CHECK(back.generator == code.generator);
            CHECK(back.zero_cosets == code.zero_cosets);
            CHECK(back.dim == code.dim);
        }
    }
}

TEST_CASE("partial specs reconstruct the same code") {
    Field f4 = Field::make(2, 2);
    CyclicContext ctx = CyclicContext::build(5, f4);
    CyclicCode code = code_from_cosets(ctx, {{1, 4}});
    json full = jsonio::cyclic_code_to_json(code);

    for (const char* keep : {"cosets", "generator", "idempotent"}) {
        json partial{{"n", full["n"]}, {"field", full["field"]}, {keep, full[keep]}};
        CyclicCode back = jsonio::cyclic_code_from_json(partial);
        CHECK(back.code == code.code);
        CHECK(back.idempotent == code.idempotent);
    }

    // conflicting inputs are rejected
    json conflict = full;
    conflict["cosets"] = json::array({json::array({0})});
    CHECK_THROWS_AS(jsonio::cyclic_code_from_json(conflict), Error);
}

TEST_CASE("linear code and permutation round trip") {
    Field f3 = Field::make(3, 1);
    LinearCode code = LinearCode::from_span(f3, 4, {{1, 2, 0, 1}, {0, 1, 1, 1}});
    CHECK(jsonio::linear_code_from_json(jsonio::linear_code_to_json(code)) == code);

    Permutation g({2, 0, 3, 1});
    CHECK(jsonio::permutation_from_json(jsonio::permutation_to_json(g)) == g);
    CHECK_THROWS_AS(jsonio::permutation_from_json(json({0, 0, 1})), Error);
}

TEST_CASE("group code round trip") {
    groupcode::ElemAbelianGroup grp = groupcode::make_group(2, 2);
    Field f3 = Field::make(3, 1);
    for (const groupcode::GroupCode& gc : groupcode::enumerate_group_ideals(grp, f3)) {
        json j = jsonio::group_code_to_json(gc);
        groupcode::GroupCode back = jsonio::group_code_from_json(j);
        CHECK(back.code == gc.code);
        CHECK(back.idempotent == gc.idempotent);
    }
}

TEST_CASE("verdict serialization carries the contract fields") {
    Field f2 = Field::make(2, 1);
    CyclicContext ctx = CyclicContext::build(7, f2);
    CyclicCode left = code_from_cosets(ctx, {{1, 2, 4}});
    CyclicCode right = code_from_cosets(ctx, {{3, 5, 6}});
    EquivalenceVerdict v = test_equivalence(left, right);

    json with = jsonio::verdict_to_json(v, true);
    CHECK(with["schema"] == 1);
    CHECK(with["status"] == "EquivalentVia");
    CHECK(with["witness"].is_array());
    CHECK(with["elapsed_ms"].is_number());

    json without = jsonio::verdict_to_json(v, false);
    CHECK(without["elapsed_ms"].is_null());
}
