#include "naive_enumerate.hpp"

#include "dmm/classify.hpp"
#include "dmm/laws.hpp"

#include <algorithm>

namespace dmm::testing {

namespace {

struct Candidate {
    int n;
    Table meet, join;
    std::vector<int> neg;
    int e;
};

/// all labeled orders on {0..n-1} whose numeric order is a linear extension
std::vector<std::vector<std::vector<bool>>> labeled_lattice_orders(int n) {
    std::vector<std::vector<std::vector<bool>>> out;
    int pairs = n * (n - 1) / 2;
    for (long long mask = 0; mask < (1LL << pairs); ++mask) {
        std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
        int bit = 0;
        for (int i = 0; i < n; ++i) {
            le[i][i] = true;
            for (int j = i + 1; j < n; ++j) {
                if ((mask >> bit) & 1LL) le[i][j] = true;
                ++bit;
            }
        }
        bool transitive = true;
        for (int i = 0; i < n && transitive; ++i)
            for (int j = 0; j < n && transitive; ++j)
                for (int k = 0; k < n; ++k)
                    if (le[i][j] && le[j][k] && !le[i][k]) {
                        transitive = false;
                        break;
                    }
        if (!transitive) continue;
        bool lattice = true;
        for (int i = 0; i < n && lattice; ++i)
            for (int j = 0; j < n && lattice; ++j) {
                int glb = -1, lub = -1;
                for (int c = 0; c < n; ++c) {
                    if (le[c][i] && le[c][j] && (glb == -1 || le[glb][c])) glb = c;
                    if (le[i][c] && le[j][c] && (lub == -1 || le[c][lub])) lub = c;
                }
                if (glb == -1 || lub == -1) {
                    lattice = false;
                    break;
                }
                for (int c = 0; c < n; ++c) {
                    if (le[c][i] && le[c][j] && !le[c][glb]) lattice = false;
                    if (le[i][c] && le[j][c] && !le[lub][c]) lattice = false;
                }
            }
        if (lattice) out.push_back(std::move(le));
    }
    return out;
}

bool direct_axiom_filter(const Candidate& cand, const Table& fusion, bool want_distributive) {
    int n = cand.n;
    auto leq = [&](int a, int b) { return cand.meet[a][b] == a; };
    // associativity
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (fusion[fusion[x][y]][z] != fusion[x][fusion[y][z]]) return false;
    // square-increasing
    for (int x = 0; x < n; ++x)
        if (!leq(x, fusion[x][x])) return false;
    // involution law (1)
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (leq(fusion[x][y], z) != leq(fusion[cand.neg[z]][y], cand.neg[x]))
                    return false;
    // residuation via the derived arrow
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int arrow = cand.neg[fusion[x][cand.neg[z]]];
                if (leq(fusion[x][y], z) != leq(y, arrow)) return false;
            }
    if (want_distributive) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (cand.meet[x][cand.join[y][z]] !=
                        cand.join[cand.meet[x][y]][cand.meet[x][z]])
                        return false;
    }
    return true;
}

bool bundle_filter(const FiniteAlgebra& alg, const ConstraintBundle& b) {
    auto rep = classify(alg);
    switch (b.cls) {
        case AlgebraClass::DMM:
            if (!rep.is_dmm.value) return false;
            break;
        case AlgebraClass::MemberU:
            if (!rep.is_dmm.value || !rep.in_u.value) return false;
            break;
        case AlgebraClass::MemberM:
            if (!rep.is_dmm.value || !rep.in_m.value) return false;
            break;
        case AlgebraClass::Dunn:
            if (!rep.is_dunn.value) return false;
            break;
        default:
            if (!rep.is_irl.value) return false;
    }
    if (b.simple && !rep.is_simple.value) return false;
    if (b.si && !rep.is_si.value) return false;
    if (b.fsi && !rep.is_fsi.value) return false;
    if (b.totally_ordered && !rep.is_totally_ordered.value) return false;
    if (b.anti_idempotent && !rep.is_anti_idempotent.value) return false;
    if (b.contains && find_embeddings(*b.contains, alg).empty()) return false;
    if (b.sole_proper) {
        auto core = zero_generated_core(alg);
        if (core.algebra.size >= alg.size) return false;
        if (!is_isomorphic(core.algebra, *b.sole_proper)) return false;
        std::vector<bool> in_core(alg.size, false);
        for (int x : core.embedding) in_core[x] = true;
        for (int x = 0; x < alg.size; ++x)
            if (!in_core[x] && subalgebra_generated(alg, {x}).algebra.size != alg.size)
                return false;
    }
    return true;
}

}  // namespace

std::vector<CanonicalForm> naive_enumerate(const ConstraintBundle& bundle) {
    if (bundle.max_size > 5) throw budget_exceeded("naive oracle is limited to size 5");
    if (bundle.cls == AlgebraClass::Dunn || bundle.cls == AlgebraClass::RL)
        throw error("naive oracle only generates involutive candidates");
    std::vector<CanonicalForm> forms;

    for (int n = std::max(1, bundle.min_size); n <= bundle.max_size; ++n) {
        for (const auto& le : labeled_lattice_orders(n)) {
            Candidate cand;
            cand.n = n;
            cand.meet.assign(n, std::vector<int>(n, 0));
            cand.join = cand.meet;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    int glb = -1, lub = -1;
                    for (int c = 0; c < n; ++c) {
                        if (le[c][i] && le[c][j] && (glb == -1 || le[glb][c])) glb = c;
                        if (le[i][c] && le[j][c] && (lub == -1 || le[c][lub])) lub = c;
                    }
                    cand.meet[i][j] = glb;
                    cand.join[i][j] = lub;
                }
            int bot = 0;  // numeric order is a linear extension

            // every involution map, filtered to antitone involutive bijections
            std::vector<std::vector<int>> negs;
            {
                std::vector<int> g(n, 0);
                long long total = 1;
                for (int i = 0; i < n; ++i) total *= n;
                for (long long code = 0; code < total; ++code) {
                    long long c = code;
                    for (int i = 0; i < n; ++i) {
                        g[i] = static_cast<int>(c % n);
                        c /= n;
                    }
                    bool ok = true;
                    for (int i = 0; i < n && ok; ++i) {
                        if (g[g[i]] != i) ok = false;
                        for (int j = 0; j < n && ok; ++j)
                            if (le[i][j] != le[g[j]][g[i]]) ok = false;
                    }
                    if (ok) negs.push_back(g);
                }
            }

            for (const auto& neg : negs) {
                cand.neg = neg;
                for (int e = 0; e < n; ++e) {
                    cand.e = e;
                    Table fusion(n, std::vector<int>(n, -1));
                    for (int j = 0; j < n; ++j) {
                        fusion[e][j] = fusion[j][e] = j;
                        fusion[bot][j] = fusion[j][bot] = bot;
                    }
                    if (e == bot && n > 1) continue;
                    std::vector<std::pair<int, int>> free;
                    for (int i = 0; i < n; ++i)
                        for (int j = i; j < n; ++j)
                            if (fusion[i][j] == -1) free.emplace_back(i, j);
                    long long total = 1;
                    for (size_t k = 0; k < free.size(); ++k) total *= n;
                    for (long long code = 0; code < total; ++code) {
                        long long c = code;
                        for (auto [i, j] : free) {
                            fusion[i][j] = fusion[j][i] = static_cast<int>(c % n);
                            c /= n;
                        }
                        bool want_dist = bundle.cls == AlgebraClass::DMM ||
                                         bundle.cls == AlgebraClass::MemberU ||
                                         bundle.cls == AlgebraClass::MemberM;
                        if (!direct_axiom_filter(cand, fusion, want_dist)) continue;
                        RawTables raw;
                        raw.size = n;
                        raw.meet = cand.meet;
                        raw.join = cand.join;
                        raw.fusion = fusion;
                        raw.neg = cand.neg;
                        raw.e = cand.e;
                        auto outcome = validate(raw, AlgebraClass::IRL);
                        if (!outcome.ok()) continue;
                        if (!bundle_filter(*outcome.algebra, bundle)) continue;
                        forms.push_back(canonical_form(*outcome.algebra));
                    }
                }
            }
        }
    }
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    return forms;
}

}  // namespace dmm::testing
