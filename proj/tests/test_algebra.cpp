#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dmm/catalog.hpp"
#include "dmm/classify.hpp"
#include "dmm/laws.hpp"
#include "dmm/term.hpp"

using namespace dmm;
using catalog::build;

TEST_CASE("C4 validates as a De Morgan monoid") {
    const auto& c4 = build("C4");
    auto outcome = validate(to_raw(c4), AlgebraClass::DMM);
    CHECK(outcome.ok());
    auto d = derive(c4);
    CHECK(d.f == 2);
    CHECK(d.one == 3);
    CHECK(d.zero == 0);
    CHECK(d.top == 3);
    CHECK(d.bottom == 0);
}

TEST_CASE("the trivial algebra is a De Morgan monoid") {
    const auto& t = build("trivial");
    CHECK(validate(to_raw(t), AlgebraClass::DMM).ok());
    auto d = derive(t);
    CHECK(d.f == t.e);
    CHECK(d.one == t.e);
    CHECK(d.zero == t.e);
}

TEST_CASE("D4 derived constants: e and f incomparable atoms") {
    const auto& d4 = build("D4");
    auto d = derive(d4);
    CHECK(d.one == d4.top());
    CHECK(d.zero == d4.bottom());
    CHECK_FALSE(d4.leq(d4.e, d.f));
    CHECK_FALSE(d4.leq(d.f, d4.e));
    auto atoms = d4.atoms();
    CHECK(atoms == std::vector<int>{1, 2});
}

TEST_CASE("corrupting the C4 fusion table trips the involution law") {
    RawTables raw = to_raw(build("C4"));
    raw.fusion[2][2] = 2;  // f*f demoted from f^2 to f
    raw.arrow.reset();
    auto outcome = validate(raw, AlgebraClass::DMM);
    REQUIRE_FALSE(outcome.ok());
    bool involution_violated = false;
    for (const auto& v : outcome.violations) {
        if (v.law != "involution.law") continue;
        involution_violated = true;
        // the witness must re-check against the tables
        REQUIRE(v.witness.size() == 3);
        int x = v.witness[0], y = v.witness[1], z = v.witness[2];
        auto leq = [&](int a, int b) { return raw.meet[a][b] == a; };
        const auto& neg = *raw.neg;
        bool l = leq(raw.fusion[x][y], z);
        bool r = leq(raw.fusion[neg[z]][y], neg[x]);
        CHECK(l != r);
    }
    CHECK(involution_violated);
}

TEST_CASE("ragged tables are rejected as malformed") {
    RawTables raw = to_raw(build("C4"));
    raw.meet[1].pop_back();
    CHECK_THROWS_AS(validate(raw, AlgebraClass::DMM), malformed_table);
    raw = to_raw(build("C4"));
    raw.e = 9;
    CHECK_THROWS_AS(validate(raw, AlgebraClass::DMM), malformed_table);
}

TEST_CASE("a user-supplied arrow table is cross-checked") {
    RawTables raw = to_raw(build("C4"));
    (*raw.arrow)[2][2] = 3;  // f->f is e, not f^2
    auto outcome = validate(raw, AlgebraClass::DMM);
    REQUIRE_FALSE(outcome.ok());
    CHECK(outcome.violations.front().law == "arrow.consistency");
}

TEST_CASE("equation checking: anti-idempotence and the e laws") {
    const auto& c4 = build("C4");
    auto x = t_var(0);
    CHECK(check_equation(c4, x, t_one(), Relation::Leq).holds);
    CHECK(check_equation(c4, t_arrow(t_e(), x), x).holds);

    const auto& d4 = build("D4");
    auto v = check_equation(d4, t_e(), t_f(), Relation::Leq);
    CHECK_FALSE(v.holds);
    CHECK(v.witness.empty());  // ground terms: the empty assignment witnesses
}

TEST_CASE("undefined connectives are reported") {
    const auto& s3p = build("S3_plus");
    CHECK_THROWS_AS(check_equation(s3p, t_neg(t_var(0)), t_var(0)), undefined_connective);
}

TEST_CASE("order utilities on C4 and a case-I cover") {
    const auto& c4 = build("C4");
    CHECK(c4.covers_of(c4.e) == std::vector<int>{2});
    CHECK(c4.interval(0, 3).size() == 4);
    for (int a = 0; a < c4.size; ++a) {
        auto down = c4.down_set(a);
        auto up = c4.up_set(a);
        CHECK(std::find(down.begin(), down.end(), a) != down.end());
        CHECK(std::find(up.begin(), up.end(), a) != up.end());
    }
    const auto& g3 = build("G3");
    CHECK(g3.down_set(g3.e).size() == 3);
}

TEST_CASE("derived law battery holds on every catalog algebra") {
    for (const auto& name : catalog::names()) {
        const auto& a = build(name);
        auto rep = classify(a);
        for (const auto& law : derived_laws()) {
            if (law.irl_only && !a.involutive()) continue;
            if (law.square_increasing_only && !rep.is_square_increasing.value) continue;
            INFO(name, " / ", law.name);
            CHECK(run_derived_law(a, law.name).empty());
        }
    }
}

TEST_CASE("distributivity: forbidden-sublattice search agrees with the law") {
    for (const auto& name : catalog::names()) {
        const auto& a = build(name);
        std::vector<int> w;
        bool by_sublattice = is_distributive_lattice(a, &w);
        bool by_law = true;
        for (int x = 0; x < a.size && by_law; ++x)
            for (int y = 0; y < a.size && by_law; ++y)
                for (int z = 0; z < a.size; ++z)
                    if (a.meet[x][a.join[y][z]] != a.join[a.meet[x][y]][a.meet[x][z]]) {
                        by_law = false;
                        break;
                    }
        INFO(name);
        CHECK(by_sublattice == by_law);
    }
}

TEST_CASE("modularity: pentagon search agrees with the modular law") {
    // include a non-modular specimen alongside the catalog
    auto pentagon = [] {
        RawTables r;
        r.size = 5;  // 0 < 1 < 3 < 4, 0 < 2 < 4
        r.meet = {{0, 0, 0, 0, 0},
                  {0, 1, 0, 1, 1},
                  {0, 0, 2, 0, 2},
                  {0, 1, 0, 3, 3},
                  {0, 1, 2, 3, 4}};
        r.join = {{0, 1, 2, 3, 4},
                  {1, 1, 4, 3, 4},
                  {2, 4, 2, 4, 4},
                  {3, 3, 4, 3, 4},
                  {4, 4, 4, 4, 4}};
        r.fusion = r.meet;
        r.e = 4;
        FiniteAlgebra a;
        a.size = 5;
        a.meet = r.meet;
        a.join = r.join;
        a.fusion = r.fusion;
        a.arrow = r.meet;
        a.e = 4;
        return a;
    }();
    std::vector<const FiniteAlgebra*> specimens{&pentagon};
    for (const auto& name : catalog::names()) specimens.push_back(&build(name));
    for (const auto* a : specimens) {
        std::vector<int> w;
        bool by_n5 = is_modular_lattice(*a, &w);
        bool by_law = true;
        for (int x = 0; x < a->size && by_law; ++x)
            for (int y = 0; y < a->size && by_law; ++y)
                for (int z = 0; z < a->size; ++z)
                    if (a->leq(x, z) &&
                        a->join[x][a->meet[y][z]] != a->meet[a->join[x][y]][z]) {
                        by_law = false;
                        break;
                    }
        CHECK(by_n5 == by_law);
    }
    std::vector<int> w;
    CHECK_FALSE(is_modular_lattice(pentagon, &w));
    REQUIRE(w.size() == 5);
}

TEST_CASE("classification of the four minimal-variety generators") {
    auto two = classify(build("two"));
    CHECK(two.is_simple.value);
    CHECK(two.is_sugihara.value);
    CHECK_FALSE(two.is_odd.value);

    auto s3 = classify(build("S3"));
    CHECK(s3.is_simple.value);
    CHECK(s3.is_odd.value);

    auto c4 = classify(build("C4"));
    CHECK(c4.is_simple.value);
    CHECK(c4.is_totally_ordered.value);
    CHECK(c4.is_anti_idempotent.value);
    CHECK(c4.in_m.value);
    CHECK(c4.in_u.value);

    auto d4 = classify(build("D4"));
    CHECK(d4.is_simple.value);
    CHECK_FALSE(d4.in_m.value);
    REQUIRE(d4.in_m.witness.has_value());
    CHECK(d4.in_m.witness->law == "e_below_f");
    CHECK_FALSE(d4.is_totally_ordered.value);
    CHECK_FALSE(d4.is_semilinear.value);
}

TEST_CASE("C4_sharp fails membership in U at the new top") {
    auto rep = classify(build("C4_sharp"));
    CHECK_FALSE(rep.in_u.value);
    REQUIRE(rep.in_u.witness.has_value());
    CHECK(rep.in_u.witness->law == "eq19.square_join");
    CHECK_FALSE(rep.is_anti_idempotent.value);
    CHECK(rep.is_rigorously_compact.value);
}

TEST_CASE("semilinearity flag distinguishes chains from D4") {
    CHECK(classify(build("C4")).is_semilinear.value);
    CHECK(classify(build("S3")).is_semilinear.value);
    CHECK_FALSE(classify(build("D4")).is_semilinear.value);
}

TEST_CASE("witnesses re-check against the tables") {
    const auto& d4 = build("D4");
    auto rep = classify(d4);
    REQUIRE(rep.is_totally_ordered.witness.has_value());
    auto w = rep.is_totally_ordered.witness->witness;
    REQUIRE(w.size() == 2);
    CHECK_FALSE(d4.leq(w[0], w[1]));
    CHECK_FALSE(d4.leq(w[1], w[0]));
}
