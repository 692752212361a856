#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dmm/catalog.hpp"
#include "dmm/classify.hpp"
#include "dmm/enumerate.hpp"
#include "dmm/morphisms.hpp"

#include <algorithm>
#include <random>

using namespace dmm;
using catalog::build;

namespace {

/// brute-force oracle: every map A -> B, filtered by preservation
std::vector<std::vector<int>> all_homs_bruteforce(const FiniteAlgebra& a,
                                                  const FiniteAlgebra& b) {
    std::vector<std::vector<int>> out;
    std::vector<int> m(a.size, 0);
    long long total = 1;
    for (int i = 0; i < a.size; ++i) total *= b.size;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int i = 0; i < a.size; ++i) {
            m[i] = static_cast<int>(c % b.size);
            c /= b.size;
        }
        if (verify_morphism(a, b, m)) out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> random_permutation(int n, std::mt19937& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("hom search matches the brute-force oracle on small pairs") {
    struct Pair {
        const char* a;
        const char* b;
    };
    for (auto [an, bn] : {Pair{"C4", "C4"}, Pair{"D4", "C4"}, Pair{"C4", "D4"},
                          Pair{"S3", "S3"}, Pair{"two", "C4"}, Pair{"G1", "C4"}}) {
        const auto& a = build(an);
        const auto& b = build(bn);
        auto brute = all_homs_bruteforce(a, b);
        auto found = find_homomorphisms(a, b);
        std::vector<std::vector<int>> maps;
        for (const auto& m : found) maps.push_back(m.map);
        INFO(an, " -> ", bn);
        CHECK(maps == brute);
    }
}

TEST_CASE("hom counts pinned by the theory") {
    const auto& c4 = build("C4");
    auto id_only = find_homomorphisms(c4, c4);
    REQUIRE(id_only.size() == 1);
    CHECK(id_only.front().map == std::vector<int>{0, 1, 2, 3});

    CHECK(find_homomorphisms(build("D4"), c4).empty());
    CHECK(find_homomorphisms(build("G1"), c4).size() == 1);
    CHECK(find_homomorphisms(build("G6"), c4).size() == 1);
}

TEST_CASE("crystallinity flags") {
    CHECK(is_crystalline(build("G3")));
    CHECK(is_crystalline(build("C4")));
    CHECK_FALSE(is_crystalline(build("D4")));
    CHECK_FALSE(is_crystalline(build("trivial")));
    CHECK_FALSE(is_crystalline(catalog::build_Ap(2)));
}

TEST_CASE("embeddings: C4 into the A_p chains but S3 not into C4") {
    for (int p : {2, 3, 5, 7})
        CHECK_FALSE(find_embeddings(build("C4"), catalog::build_Ap(p)).empty());
    CHECK(find_embeddings(build("S3"), build("C4")).empty());
    CHECK(find_embeddings(build("two"), build("C4")).empty());  // no idempotent subalgebra
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(20240817);
    for (const auto& name : {"C4", "D4", "G3", "G5", "ext_D4_1", "T6"}) {
        const auto& a = build(name);
        auto cf = canonical_form(a);
        for (int k = 0; k < 5; ++k) {
            auto perm = random_permutation(a.size, rng);
            CHECK(canonical_form(relabel(a, perm)) == cf);
        }
    }
}

TEST_CASE("refined and exhaustive canonical forms agree on which pairs are isomorphic") {
    std::vector<const FiniteAlgebra*> algebras;
    for (const auto& name : {"two", "S3", "C4", "D4", "two_plus", "S3_plus", "C4_plus",
                             "C4_sharp", "T5", "T6", "G1", "G2", "G3", "ext_C4_2", "ext_C4_3"})
        algebras.push_back(&build(name));
    std::mt19937 rng(7);
    for (const auto* a : algebras) {
        auto shuffled = relabel(*a, random_permutation(a->size, rng));
        for (const auto* b : algebras) {
            bool refined = canonical_form(shuffled) == canonical_form(*b);
            bool brute = canonical_form_bruteforce(shuffled) == canonical_form_bruteforce(*b);
            CHECK(refined == brute);
        }
    }
}

TEST_CASE("refined and exhaustive forms agree across the simple algebras of size <= 6") {
    dmm::ConstraintBundle b;
    b.cls = dmm::AlgebraClass::DMM;
    b.min_size = 2;
    b.max_size = 6;
    b.simple = true;
    auto res = dmm::enumerate_algebras(b);
    REQUIRE(res.algebras.size() == 17);
    std::mt19937 rng(31);
    std::vector<FiniteAlgebra> pool;
    for (const auto& a : res.algebras) {
        pool.push_back(a);
        pool.push_back(relabel(a, random_permutation(a.size, rng)));
    }
    std::vector<CanonicalForm> refined, brute;
    for (const auto& a : pool) {
        refined.push_back(canonical_form(a));
        brute.push_back(canonical_form_bruteforce(a));
    }
    for (size_t i = 0; i < pool.size(); ++i)
        for (size_t j = 0; j < pool.size(); ++j)
            CHECK((refined[i] == refined[j]) == (brute[i] == brute[j]));
}

TEST_CASE("isomorphism is relabeling-invariant and signature-aware") {
    CHECK(is_isomorphic(build("C4"), build("C4")));
    CHECK_FALSE(is_isomorphic(build("C4"), build("D4")));
    CHECK_FALSE(is_isomorphic(build("S3"), build("S3_plus")));  // IRL vs RL
    std::mt19937 rng(99);
    auto g4 = build("G4");
    CHECK(is_isomorphic(g4, relabel(g4, random_permutation(g4.size, rng))));
}

TEST_CASE("retract witnesses compose to the identity") {
    const auto& c4 = build("C4");
    for (const auto& outer : {"G1", "G2", "G5"}) {
        auto w = is_retract(c4, build(outer));
        REQUIRE(w.has_value());
        for (int x = 0; x < c4.size; ++x) CHECK(w->h.map[w->g.map[x]] == x);
        CHECK(verify_morphism(c4, build(outer), w->g.map));
        CHECK(verify_morphism(build(outer), c4, w->h.map));
    }
    CHECK_FALSE(is_retract(build("D4"), c4).has_value());  // too big to embed
    CHECK_FALSE(is_retract(build("G1"), build("G2")).has_value());
}

TEST_CASE("zero-generated cores") {
    CHECK(zero_generated_core(build("C4")).algebra.size == 4);
    for (int p : {2, 3, 5, 7})
        CHECK(is_isomorphic(zero_generated_core(catalog::build_Ap(p)).algebra, build("C4")));
    for (int p : {2, 3, 5})
        CHECK(is_isomorphic(zero_generated_core(catalog::build_Bp(p)).algebra, build("D4")));
    CHECK(zero_generated_core(build("S3")).algebra.size == 1);
}

TEST_CASE("homs compose into homs") {
    const auto& g2 = build("G2");
    const auto& c4 = build("C4");
    auto fs = find_homomorphisms(g2, c4);
    auto gs = find_homomorphisms(c4, c4);
    REQUIRE(!fs.empty());
    REQUIRE(!gs.empty());
    auto all = find_homomorphisms(g2, c4);
    for (const auto& f : fs)
        for (const auto& g : gs) {
            std::vector<int> comp(g2.size);
            for (int x = 0; x < g2.size; ++x) comp[x] = g.map[f.map[x]];
            bool member = false;
            for (const auto& h : all) member = member || h.map == comp;
            CHECK(member);
        }
}

TEST_CASE("every returned morphism re-validates") {
    auto homs = find_homomorphisms(build("G3"), build("C4"));
    for (const auto& m : homs) CHECK(verify_morphism(build("G3"), build("C4"), m.map));
    auto embs = find_embeddings(build("C4"), build("G4"));
    for (const auto& m : embs) {
        CHECK(verify_morphism(build("C4"), build("G4"), m.map));
        std::vector<int> sorted = m.map;
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    }
}

TEST_CASE("signature mismatches are rejected") {
    CHECK_THROWS_AS(find_homomorphisms(build("C4"), build("C4_plus")), signature_mismatch);
    CHECK_THROWS_AS(is_retract(build("two_plus"), build("two")), signature_mismatch);
}
