#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "naive_enumerate.hpp"

#include "dmm/catalog.hpp"
#include "dmm/enumerate.hpp"
#include "dmm/laws.hpp"
#include "dmm/morphisms.hpp"

#include <algorithm>
#include <numeric>

using namespace dmm;
using catalog::build;

namespace {

std::vector<CanonicalForm> pipeline_forms(const ConstraintBundle& b) {
    auto res = enumerate_algebras(b);
    std::vector<CanonicalForm> forms;
    for (const auto& a : res.algebras) forms.push_back(canonical_form(a));
    std::sort(forms.begin(), forms.end());
    return forms;
}

}  // namespace

TEST_CASE("oracle agreement: all De Morgan monoids of size <= 4") {
    ConstraintBundle b;
    b.cls = AlgebraClass::DMM;
    b.max_size = 4;
    auto naive = testing::naive_enumerate(b);
    auto fast = pipeline_forms(b);
    CHECK(naive == fast);
    CHECK(naive.size() == 7);  // trivial, two, S3, C4, D4, S4, two x two

    std::vector<CanonicalForm> expected = {
        canonical_form(build("trivial")),
        canonical_form(build("two")),
        canonical_form(build("S3")),
        canonical_form(build("C4")),
        canonical_form(build("D4")),
        canonical_form(catalog::build_sugihara(4)),
        canonical_form(direct_product({build("two"), build("two")}).algebra),
    };
    std::sort(expected.begin(), expected.end());
    CHECK(naive == expected);
}

TEST_CASE("oracle agreement: simple De Morgan monoids of size <= 5") {
    ConstraintBundle b;
    b.cls = AlgebraClass::DMM;
    b.min_size = 2;
    b.max_size = 5;
    b.simple = true;
    auto naive = testing::naive_enumerate(b);
    auto fast = pipeline_forms(b);
    CHECK(naive == fast);
    // two, S3, C4, D4, A_2, the five-element pictured extension
    CHECK(naive.size() == 6);
}

TEST_CASE("oracle agreement: size-5 De Morgan monoids") {
    ConstraintBundle b;
    b.cls = AlgebraClass::DMM;
    b.min_size = 5;
    b.max_size = 5;
    auto naive = testing::naive_enumerate(b);
    auto fast = pipeline_forms(b);
    CHECK(naive == fast);
    // only the chains support an involution at size 5: S5, A_2, ext_C4_1
    std::vector<CanonicalForm> expected = {
        canonical_form(catalog::build_sugihara(5)),
        canonical_form(catalog::build_Ap(2)),
        canonical_form(build("ext_C4_1")),
    };
    std::sort(expected.begin(), expected.end());
    CHECK(naive == expected);
}

TEST_CASE("involution backtracking matches a permutation sweep") {
    for (int n = 2; n <= 6; ++n) {
        for (bool dist : {false, true}) {
            if (!dist && n > 6) continue;
            for (const auto& lat : generate_lattices(n, dist)) {
                std::vector<int> perm(lat.size);
                std::iota(perm.begin(), perm.end(), 0);
                std::vector<std::vector<int>> brute;
                do {
                    bool ok = true;
                    for (int i = 0; i < lat.size && ok; ++i) {
                        if (perm[perm[i]] != i) ok = false;
                        for (int j = 0; j < lat.size && ok; ++j)
                            if (lat.leq(i, j) != lat.leq(perm[j], perm[i])) ok = false;
                    }
                    if (ok) brute.push_back(perm);
                } while (std::next_permutation(perm.begin(), perm.end()));
                auto fast = lattice_involutions(lat);
                std::sort(fast.begin(), fast.end());
                std::sort(brute.begin(), brute.end());
                CHECK(fast == brute);
            }
        }
    }
}

TEST_CASE("flat sweep of six-element chains matches the pipelined search") {
    // beyond the naive oracle's range: enumerate every symmetric fusion
    // table on the 6-chain directly (only neutrality and absorption fixed)
    // and compare against the pipeline's totally ordered run
    const int n = 6;
    std::vector<int> rev(n);
    for (int i = 0; i < n; ++i) rev[i] = n - 1 - i;  // the one antitone bijection of a chain

    std::vector<CanonicalForm> brute;
    Table fusion(n, std::vector<int>(n));
    for (int e = 1; e < n; ++e) {
        std::vector<std::pair<int, int>> free;
        for (int i = 1; i < n; ++i)
            for (int j = i; j < n; ++j)
                if (i != e && j != e) free.emplace_back(i, j);
        REQUIRE(free.size() == 10);
        for (int j = 0; j < n; ++j) {
            fusion[e][j] = fusion[j][e] = j;
            fusion[0][j] = fusion[j][0] = 0;
        }
        long long total = 1;
        for (size_t k = 0; k < free.size(); ++k) total *= n;
        for (long long code = 0; code < total; ++code) {
            long long c = code;
            for (auto [i, j] : free) {
                fusion[i][j] = fusion[j][i] = static_cast<int>(c % n);
                c /= n;
            }
            // cheap rejections first
            bool ok = true;
            for (int x = 1; x < n && ok; ++x)
                if (fusion[x][x] < x) ok = false;  // square-increase on a chain
            for (int x = 0; x < n && ok; ++x)
                for (int y = 0; y < n && ok; ++y)
                    for (int z = 0; z < n; ++z)
                        if (fusion[fusion[x][y]][z] != fusion[x][fusion[y][z]]) {
                            ok = false;
                            break;
                        }
            for (int x = 0; x < n && ok; ++x)
                for (int y = 0; y < n && ok; ++y)
                    for (int z = 0; z < n; ++z) {
                        bool l = std::min(fusion[x][y], z) == fusion[x][y];
                        bool r = std::min(fusion[rev[z]][y], rev[x]) == fusion[rev[z]][y];
                        if (l != r) {
                            ok = false;
                            break;
                        }
                    }
            if (!ok) continue;
            RawTables raw;
            raw.size = n;
            raw.meet.assign(n, std::vector<int>(n, 0));
            raw.join = raw.meet;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    raw.meet[i][j] = std::min(i, j);
                    raw.join[i][j] = std::max(i, j);
                }
            raw.fusion = fusion;
            raw.neg = rev;
            raw.e = e;
            auto outcome = validate(raw, AlgebraClass::DMM);
            if (outcome.ok()) brute.push_back(canonical_form(*outcome.algebra));
        }
    }
    std::sort(brute.begin(), brute.end());
    brute.erase(std::unique(brute.begin(), brute.end()), brute.end());

    ConstraintBundle b;
    b.cls = AlgebraClass::DMM;
    b.min_size = 6;
    b.max_size = 6;
    b.totally_ordered = true;
    auto fast = pipeline_forms(b);
    CHECK(brute == fast);
    CHECK(!brute.empty());
}

TEST_CASE("oracle agreement: members of U on <= 5 elements") {
    ConstraintBundle b;
    b.cls = AlgebraClass::MemberU;
    b.min_size = 2;
    b.max_size = 5;
    auto naive = testing::naive_enumerate(b);
    auto fast = pipeline_forms(b);
    CHECK(naive == fast);
    // C4 and the skew reflections of the one- and two-element Dunn monoids
    CHECK(!naive.empty());
}
