#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dmm/catalog.hpp"
#include "dmm/classify.hpp"
#include "dmm/json_io.hpp"
#include "dmm/morphisms.hpp"

#include <set>

using namespace dmm;
using catalog::build;

TEST_CASE("every catalog name builds and validates for its documented class") {
    for (const auto& name : catalog::names()) {
        const auto& a = build(name);
        auto cls = a.involutive() ? AlgebraClass::DMM : AlgebraClass::Dunn;
        INFO(name);
        CHECK(validate(to_raw(a), cls).ok());
    }
    CHECK_THROWS_AS(build("no_such_algebra"), unknown_name);
}

TEST_CASE("cover sizes follow 2|B| + 2") {
    CHECK(build("G1").size == 6);
    CHECK(build("G2").size == 8);
    CHECK(build("G3").size == 8);
    CHECK(build("G4").size == 10);
    CHECK(build("G5").size == 12);
    CHECK(build("G6").size == 14);
}

TEST_CASE("S3 fusion follows the absolute-value rule") {
    const auto& s3 = build("S3");
    CHECK(s3.fusion[0][2] == 0);  // bot * top = bot (equal absolute value)
    CHECK(s3.fusion[2][2] == 2);
    CHECK(s3.neg[1] == 1);  // odd
}

TEST_CASE("T5 is an idempotent Dunn monoid, T6 is not idempotent") {
    const auto& t5 = build("T5");
    for (int x = 0; x < t5.size; ++x) CHECK(t5.fusion[x][x] == x);
    CHECK(classify(t5).is_dunn.value);
    const auto& t6 = build("T6");
    CHECK(classify(t6).is_dunn.value);
    CHECK(t6.fusion[4][4] == 5);  // z * z = top
}

TEST_CASE("G4 base is the C4 reduct chain") {
    auto dec = decompose_crystalline(build("G4"));
    CHECK(dec.base.size == 4);
    CHECK(is_isomorphic(dec.base, build("C4_plus")));
    CHECK(classify(dec.base).is_totally_ordered.value);
}

namespace {

std::set<std::pair<std::string, std::string>> cover_edges(const dmm::FiniteAlgebra& a) {
    std::set<std::pair<std::string, std::string>> out;
    for (int lo = 0; lo < a.size; ++lo)
        for (int hi = 0; hi < a.size; ++hi)
            if (a.covers(hi, lo)) out.insert({a.name_of(lo), a.name_of(hi)});
    return out;
}

}  // namespace

TEST_CASE("G5 has the twelve-element case-III Hasse diagram") {
    // base T5 = {bot, e, x, y, top} with x = t'/\t and y = e\/x = f/\t
    std::set<std::pair<std::string, std::string>> expected = {
        {"0", "bot"},  {"bot", "e"},  {"bot", "x"},  {"e", "y"},    {"x", "y"},
        {"x", "top'"}, {"y", "top"},  {"y", "y'"},   {"top", "x'"}, {"top'", "y'"},
        {"y'", "e'"},  {"y'", "x'"},  {"e'", "bot'"}, {"x'", "bot'"}, {"bot'", "1"},
    };
    CHECK(cover_edges(build("G5")) == expected);
}

TEST_CASE("G6 has the fourteen-element case-IV Hasse diagram") {
    // base T6 = {bot, e, x, y, z, top} with x = t'/\t, y = e\/x, z = f/\t
    std::set<std::pair<std::string, std::string>> expected = {
        {"0", "bot"},  {"bot", "e"},  {"bot", "x"},   {"e", "y"},     {"x", "y"},
        {"x", "top'"}, {"y", "z"},    {"y", "z'"},    {"z", "top"},   {"z", "y'"},
        {"top", "x'"}, {"top'", "z'"}, {"z'", "y'"},  {"y'", "e'"},   {"y'", "x'"},
        {"e'", "bot'"}, {"x'", "bot'"}, {"bot'", "1"},
    };
    CHECK(cover_edges(build("G6")) == expected);
}

TEST_CASE("G3 and G4 have the case-I and case-II Hasse diagrams") {
    // case I over S3_plus = {bot, e, top}
    std::set<std::pair<std::string, std::string>> g3 = {
        {"0", "bot"}, {"bot", "e"}, {"bot", "top'"}, {"e", "top"},   {"e", "e'"},
        {"top'", "e'"}, {"top", "bot'"}, {"e'", "bot'"}, {"bot'", "1"},
    };
    CHECK(cover_edges(build("G3")) == g3);
    // case II over C4_plus = {bot, e, c, top} with c = f/\t
    std::set<std::pair<std::string, std::string>> g4 = {
        {"0", "bot"}, {"bot", "e"}, {"bot", "top'"}, {"e", "c"},    {"e", "c'"},
        {"c", "top"}, {"c", "e'"},  {"top'", "c'"},  {"c'", "e'"},  {"top", "bot'"},
        {"e'", "bot'"}, {"bot'", "1"},
    };
    CHECK(cover_edges(build("G4")) == g4);
}

TEST_CASE("pictured extensions complete uniquely and differ pairwise") {
    std::vector<std::string> names;
    for (int i = 1; i <= 6; ++i) names.push_back("ext_C4_" + std::to_string(i));
    names.push_back("ext_D4_1");
    names.push_back("ext_D4_2");
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j) {
            if (build(names[i]).size != build(names[j]).size) continue;
            INFO(names[i], " vs ", names[j]);
            CHECK_FALSE(is_isomorphic(build(names[i]), build(names[j])));
        }
    CHECK(build("ext_C4_1").size == 5);
    for (int i = 2; i <= 6; ++i) CHECK(build("ext_C4_" + std::to_string(i)).size == 6);
}

TEST_CASE("the pictured extensions are simple with C4 (resp. D4) as sole proper subalgebra") {
    for (int i = 1; i <= 6; ++i) {
        const auto& a = build("ext_C4_" + std::to_string(i));
        CHECK(classify(a).is_simple.value);
        CHECK(is_isomorphic(zero_generated_core(a).algebra, build("C4")));
    }
    for (int i = 1; i <= 2; ++i) {
        const auto& a = build("ext_D4_" + std::to_string(i));
        CHECK(classify(a).is_simple.value);
        CHECK(is_isomorphic(zero_generated_core(a).algebra, build("D4")));
    }
}

TEST_CASE("chain extensions with an idempotent outside the core generate the pictured pair") {
    // in a simple totally ordered extension of C4, an idempotent a outside
    // C4 generates a copy of the first or second pictured algebra
    for (const auto& name : {"ext_C4_1", "ext_C4_2", "ext_C4_3"}) {
        const auto& a = build(name);
        auto core = zero_generated_core(a);
        std::vector<bool> in_core(a.size, false);
        for (int x : core.embedding) in_core[x] = true;
        for (int x = 0; x < a.size; ++x) {
            if (in_core[x] || a.fusion[x][x] != x) continue;
            auto s = subalgebra_generated(a, {x}).algebra;
            INFO(name, " at ", a.name_of(x));
            CHECK((is_isomorphic(s, build("ext_C4_1")) || is_isomorphic(s, build("ext_C4_2"))));
        }
    }
}

TEST_CASE("B2 is the right-hand six-element D4 extension") {
    CHECK(is_isomorphic(catalog::build_Bp(2), build("ext_D4_2")));
    CHECK_FALSE(is_isomorphic(catalog::build_Bp(2), build("ext_D4_1")));
}

TEST_CASE("A_p structure") {
    for (int p : {1, 2, 3, 4, 5, 7, 11}) {
        auto a = catalog::build_Ap(p);
        CHECK(a.size == p + 3);
        CHECK(classify(a).is_totally_ordered.value);
        // neg flips exponents: ~(2^k) = 2^{p-k}
        for (int k = 0; k <= p; ++k) CHECK(a.neg[k + 1] == p - k + 1);
    }
    CHECK_THROWS_AS(catalog::build_Ap(12), budget_exceeded);
    CHECK_THROWS_AS(catalog::build_Ap(0), error);
}

TEST_CASE("B_p structure") {
    for (int p : {1, 2, 3, 5}) {
        auto b = catalog::build_Bp(p);
        CHECK(b.size == 2 * p + 2);
        auto rep = classify(b);
        CHECK(rep.is_dmm.value);
        CHECK(rep.is_rigorously_compact.value);
        CHECK_FALSE(rep.is_totally_ordered.value);
    }
    // B1 is D4 itself: the two middle rails collapse into e and f
    CHECK(is_isomorphic(catalog::build_Bp(1), build("D4")));
}

TEST_CASE("Sugihara chains: e sits at value 1 (even) or 0 (odd)") {
    for (int n = 1; n <= 15; ++n) {
        auto s = catalog::build_sugihara(n);
        auto rep = classify(s);
        INFO("S", n);
        CHECK(rep.is_sugihara.value);
        CHECK(rep.is_odd.value == (n % 2 == 1));
        CHECK(rep.is_totally_ordered.value);
    }
    CHECK_THROWS_AS(catalog::build_sugihara(16), budget_exceeded);
}

TEST_CASE("resolve handles families and names") {
    CHECK(catalog::resolve("A2").size == 5);
    CHECK(catalog::resolve("B3").size == 8);
    CHECK(catalog::resolve("S7").size == 7);
    CHECK(catalog::resolve("G5").size == 12);
    CHECK_THROWS_AS(catalog::resolve("Q9"), unknown_name);
}

TEST_CASE("algebra JSON round trip is exact") {
    for (const auto& name : {"C4", "G4", "ext_D4_1", "S3_plus"}) {
        const auto& a = build(name);
        auto j = algebra_to_json(a);
        auto raw = raw_from_json(j);
        auto cls = a.involutive() ? AlgebraClass::IRL : AlgebraClass::RL;
        auto back = validate_or_throw(raw, cls, name);
        CHECK(back.size == a.size);
        CHECK(back.meet == a.meet);
        CHECK(back.join == a.join);
        CHECK(back.fusion == a.fusion);
        CHECK(back.arrow == a.arrow);
        CHECK(back.neg == a.neg);
        CHECK(back.e == a.e);
        CHECK(back.names == a.names);
    }
}

TEST_CASE("complete_partial: a bare C4 diagram and an impossible one") {
    catalog::PartialAlgebra p;
    p.size = 4;
    p.meet = build("C4").meet;
    p.join = build("C4").join;
    p.neg = build("C4").neg;
    p.e = 1;
    p.fusion.assign(4, std::vector<int>(4, -1));
    auto comps = catalog::complete_partial(p);
    REQUIRE(comps.size() == 1);
    CHECK(is_isomorphic(comps.front(), build("C4")));

    auto bad = p;
    bad.fusion[2][2] = 1;  // f*f = e contradicts x <= x^2
    CHECK_THROWS_AS(catalog::complete_partial(bad), inconsistent_partial);

    auto clash = p;
    clash.fusion[2][3] = 1;
    clash.fusion[3][2] = 2;  // commutativity clash in the known entries
    CHECK_THROWS_AS(catalog::complete_partial(clash), inconsistent_partial);
}
