#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dmm/catalog.hpp"
#include "dmm/classify.hpp"
#include "dmm/constructions.hpp"
#include "dmm/json_io.hpp"
#include "dmm/morphisms.hpp"
#include "dmm/term.hpp"

#include <numeric>

using namespace dmm;
using catalog::build;

TEST_CASE("unary product is an isomorphic copy") {
    auto p = direct_product({build("C4")});
    CHECK(is_isomorphic(p.algebra, build("C4")));
}

TEST_CASE("product lower bounds multiply") {
    auto p = direct_product({build("C4"), build("C4")});
    CHECK(p.algebra.size == 16);
    CHECK(p.algebra.down_set(p.algebra.e).size() == 4);
    CHECK(validate(to_raw(p.algebra), AlgebraClass::DMM).ok());
}

TEST_CASE("mixed signatures cannot be multiplied") {
    CHECK_THROWS_AS(direct_product({build("C4"), build("S3_plus")}), signature_mismatch);
}

TEST_CASE("generated subalgebras") {
    auto core = subalgebra_generated(build("C4"), {});
    CHECK(core.algebra.size == 4);  // C4 is 0-generated

    auto a2 = catalog::build_Ap(2);
    CHECK(subalgebra_generated(a2, {2}).algebra.size == a2.size);  // generated by 2

    auto a4 = catalog::build_Ap(4);
    auto s = subalgebra_generated(a4, {3});  // the element 4 = 2^2
    CHECK(s.algebra.size == 5);
    CHECK(s.embedding == std::vector<int>{0, 1, 3, 5, 6});  // 0, 1, 4, 16, 32
    CHECK(validate(to_raw(s.algebra), AlgebraClass::DMM).ok());
}

TEST_CASE("filter enumeration: fast path and general path agree") {
    for (const auto& name : catalog::names()) {
        const auto& a = build(name);
        INFO(name);
        CHECK(deductive_filters(a) == deductive_filters_general(a));
    }
}

TEST_CASE("filter counts on chains and covers") {
    CHECK(deductive_filters(build("C4")).size() == 2);
    CHECK(deductive_filters(build("trivial")).size() == 1);
    CHECK(deductive_filters(build("G4")).size() == 3);
    // C4_sharp: lower bounds of e are bot < 0 < e
    CHECK(deductive_filters(build("C4_sharp")).size() == 3);
}

TEST_CASE("smallest and largest filters give the identity and total congruences") {
    const auto& c4 = build("C4");
    auto filters = deductive_filters(c4);
    auto id = congruence_of_filter(c4, filters.front());
    CHECK(id.block_count == 4);
    auto total = congruence_of_filter(c4, filters.back());
    CHECK(total.block_count == 1);
}

TEST_CASE("filter/congruence round-trips are the identity on the catalog") {
    for (const auto& name : catalog::names()) {
        const auto& a = build(name);
        for (const auto& g : deductive_filters(a)) {
            auto theta = congruence_of_filter(a, g);
            CHECK(filter_of_congruence(a, theta).members == g.members);
        }
    }
}

TEST_CASE("quotients: identity filter, total filter, and the middle of G1") {
    const auto& g1 = build("G1");
    auto filters = deductive_filters(g1);
    REQUIRE(filters.size() == 3);
    CHECK(is_isomorphic(quotient(g1, filters[0]).algebra, g1));
    CHECK(is_isomorphic(quotient(g1, filters[1]).algebra, build("C4")));
    CHECK(quotient(g1, filters[2]).algebra.size == 1);

    auto a2 = catalog::build_Ap(2);
    DeductiveFilter full;
    full.members.resize(a2.size);
    std::iota(full.members.begin(), full.members.end(), 0);
    CHECK(quotient(a2, full).algebra.size == 1);
}

TEST_CASE("skew reflection of the trivial RL gives D4 or C4 depending on the order") {
    RawTables r;
    r.size = 1;
    r.meet = {{0}};
    r.join = {{0}};
    r.fusion = {{0}};
    r.e = 0;
    auto triv = validate_or_throw(r, AlgebraClass::Dunn, "trivial RL");

    auto d4 = skew_reflection(triv, skew_order_from_upset(triv, {}));
    CHECK(is_isomorphic(d4, build("D4")));
    auto c4 = skew_reflection(triv, skew_order_from_upset(triv, {0}));
    CHECK(is_isomorphic(c4, build("C4")));
}

TEST_CASE("the case-I order over S3_plus yields the eight-element cover") {
    std::string base;
    auto spec = catalog::case_order("case1", &base);
    CHECK(base == "S3_plus");
    auto a = skew_reflection(build(base), spec);
    CHECK(a.size == 8);
    CHECK(is_isomorphic(a, build("G3")));
    CHECK_FALSE(is_isomorphic(a, build("G2")));  // same size, different order
}

TEST_CASE("skew order specs violating (iv) are rejected with the clause id") {
    const auto& s3p = build("S3_plus");
    auto spec = skew_order_from_upset(s3p, {0, 1});
    spec.order[spec.prime(2)][0] = true;  // top' below bot
    try {
        skew_reflection(s3p, spec);
        FAIL("expected spec_violation");
    } catch (const spec_violation& v) {
        CHECK((v.clause == "iv" || v.clause == "i"));
    }
}

TEST_CASE("skew order specs violating (iii) are rejected") {
    const auto& s3p = build("S3_plus");
    auto spec = skew_order_from_upset(s3p, {0, 1});
    // claim e <= top' although e*top = top is not in the chosen up-set
    spec.order[1][spec.prime(2)] = true;
    try {
        skew_reflection(s3p, spec);
        FAIL("expected spec_violation");
    } catch (const spec_violation& v) {
        CHECK((v.clause == "iii" || v.clause == "i"));
    }
}

TEST_CASE("skew reflections are anti-idempotent and rigorously compact") {
    for (const auto& g : {"G1", "G2", "G3", "G4", "G5", "G6"}) {
        const auto& a = build(g);
        auto rep = classify(a);
        INFO(g);
        CHECK(rep.is_anti_idempotent.value);
        CHECK(rep.is_rigorously_compact.value);
        auto d = derive(a);
        CHECK(d.one == a.top());
        CHECK(a.down_set(a.e).size() == 3);  // 0 < bot_B < e
    }
}

TEST_CASE("reflection keeps congruences: R(theta) and the quotient isomorphism") {
    const auto& s3p = build("S3_plus");
    auto rb = reflection(s3p);
    auto congs = congruence_lattice(s3p);
    for (const auto& theta : congs) {
        auto rtheta = congruence_reflect(s3p, theta);
        CHECK(is_congruence(rb, rtheta));
        auto q = quotient(rb, filter_of_congruence(rb, rtheta)).algebra;
        auto bq = quotient(s3p, filter_of_congruence(s3p, theta)).algebra;
        CHECK(is_isomorphic(q, reflection(bq)));
    }
    // the identity congruence reflects to the identity
    Congruence id = normalize_partition([&] {
        std::vector<int> v(s3p.size);
        std::iota(v.begin(), v.end(), 0);
        return v;
    }());
    CHECK(congruence_reflect(s3p, id).block_count == rb.size);
}

TEST_CASE("rigorous extension of C4") {
    auto sharp = rigorous_extension(build("C4"));
    CHECK(sharp.size == 6);
    CHECK(sharp.e == build("C4").e);
    CHECK(classify(sharp).is_rigorously_compact.value);
    // old algebra survives as the subalgebra without the new bounds
    auto sub = subalgebra_generated(sharp, {0, 1, 2, 3});
    CHECK(sub.algebra.size == 4);
    CHECK(is_isomorphic(sub.algebra, build("C4")));

    auto prod = direct_product({build("C4"), sharp}).algebra;
    auto x = t_var(0);
    auto lhs = t_arrow(t_join(t_arrow(t_f(), x), t_arrow(x, t_e())), t_zero());
    CHECK_FALSE(check_equation(prod, lhs, t_zero()).holds);  // (22) fails
}

TEST_CASE("decompose_crystalline round-trips and refuses honestly") {
    for (const auto& g : {"C4", "G1", "G2", "G3", "G4", "G5", "G6"}) {
        const auto& a = build(g);
        auto dec = decompose_crystalline(a);
        INFO(g);
        CHECK(is_isomorphic(skew_reflection(dec.base, dec.spec), a));
        CHECK(a.meet_irreducible(derive(a).zero));
    }
    CHECK(is_isomorphic(decompose_crystalline(build("G1")).base, build("two_plus")));
    CHECK(decompose_crystalline(build("C4")).base.size == 1);
    CHECK_THROWS_AS(decompose_crystalline(build("D4")), not_crystalline);
    CHECK_THROWS_AS(decompose_crystalline(build("S3")), not_crystalline);
    // not rigorously compact: refuse rather than pick among homs
    auto prod = direct_product({build("C4"), build("C4")}).algebra;
    CHECK_THROWS_AS(decompose_crystalline(prod), not_crystalline);
}

TEST_CASE("skew order spec JSON round trip") {
    auto spec = catalog::case_order("case4");
    auto j = skew_order_to_json(spec);
    auto back = skew_order_from_json(j);
    CHECK(back.b_size == spec.b_size);
    CHECK(back.order == spec.order);
}

TEST_CASE("skew lower-bound rule: one new lower bound of e") {
    for (const auto& g : {"G1", "G2", "G3", "G4", "G5", "G6"}) {
        const auto& a = build(g);
        auto dec = decompose_crystalline(a);
        CHECK(a.down_set(a.e).size() == dec.base.down_set(dec.base.e).size() + 1);
    }
}
