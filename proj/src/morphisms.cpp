#include "dmm/morphisms.hpp"

#include "dmm/ops.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace dmm {

bool verify_morphism(const FiniteAlgebra& a, const FiniteAlgebra& b, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != a.size) return false;
    for (int v : map)
        if (v < 0 || v >= b.size) return false;
    if (map[a.e] != b.e) return false;
    for (int x = 0; x < a.size; ++x) {
        if (a.involutive() && map[a.neg[x]] != b.neg[map[x]]) return false;
        for (int y = 0; y < a.size; ++y) {
            if (map[a.fusion[x][y]] != b.fusion[map[x]][map[y]]) return false;
            if (map[a.meet[x][y]] != b.meet[map[x]][map[y]]) return false;
            if (map[a.join[x][y]] != b.join[map[x]][map[y]]) return false;
            if (map[a.arrow[x][y]] != b.arrow[map[x]][map[y]]) return false;
        }
    }
    return true;
}

namespace {

/// Closure propagation for a partial map.  Returns false on conflict.
bool propagate(const FiniteAlgebra& a, const FiniteAlgebra& b, std::vector<int>& m,
               std::vector<int>& defined, size_t from) {
    auto set = [&](int x, int v) {
        if (m[x] == -1) {
            m[x] = v;
            defined.push_back(x);
            return true;
        }
        return m[x] == v;
    };
    for (size_t i = from; i < defined.size(); ++i) {
        int x = defined[i];
        if (a.involutive() && !set(a.neg[x], b.neg[m[x]])) return false;
        for (size_t j = 0; j <= i; ++j) {
            int y = defined[j];
            if (!set(a.fusion[x][y], b.fusion[m[x]][m[y]])) return false;
            if (!set(a.meet[x][y], b.meet[m[x]][m[y]])) return false;
            if (!set(a.join[x][y], b.join[m[x]][m[y]])) return false;
            if (!set(a.arrow[x][y], b.arrow[m[x]][m[y]])) return false;
            if (!set(a.arrow[y][x], b.arrow[m[y]][m[x]])) return false;
        }
    }
    return true;
}

void search(const FiniteAlgebra& a, const FiniteAlgebra& b, const std::vector<int>& gens,
            size_t gi, std::vector<int>& m, std::vector<int>& defined, bool injective,
            bool first_only, std::vector<std::vector<int>>& out) {
    if (first_only && !out.empty()) return;
    if (injective) {
        std::vector<bool> used(b.size, false);
        for (int x : defined) {
            if (used[m[x]]) return;
            used[m[x]] = true;
        }
    }
    while (gi < gens.size() && m[gens[gi]] != -1) ++gi;
    if (gi == gens.size()) {
        // generators exhaust the algebra, so the map is total
        for (int x = 0; x < a.size; ++x)
            if (m[x] == -1) return;
        out.push_back(m);
        return;
    }
    int g = gens[gi];
    for (int img = 0; img < b.size; ++img) {
        std::vector<int> m2 = m;
        std::vector<int> d2 = defined;
        m2[g] = img;
        d2.push_back(g);
        if (!propagate(a, b, m2, d2, d2.size() - 1)) continue;
        search(a, b, gens, gi + 1, m2, d2, injective, first_only, out);
        if (first_only && !out.empty()) return;
    }
}

std::vector<std::vector<int>> hom_maps(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                       bool injective, bool first_only,
                                       const std::vector<std::pair<int, int>>& pinned = {}) {
    if (!same_signature(a, b))
        throw signature_mismatch("homomorphism search: RL/IRL signatures differ");
    auto gens = greedy_generating_set(a);
    std::vector<int> m(a.size, -1);
    std::vector<int> defined;
    m[a.e] = b.e;
    defined.push_back(a.e);
    for (auto [x, v] : pinned) {
        if (m[x] == -1) {
            m[x] = v;
            defined.push_back(x);
        } else if (m[x] != v) {
            return {};
        }
    }
    std::vector<std::vector<int>> out;
    if (!propagate(a, b, m, defined, 0)) return out;
    search(a, b, gens, 0, m, defined, injective, first_only, out);
    for (auto& mp : out)
        if (!verify_morphism(a, b, mp)) throw error("hom search produced an invalid morphism");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Morphism> wrap(std::vector<std::vector<int>> maps) {
    std::vector<Morphism> out;
    out.reserve(maps.size());
    for (auto& m : maps) out.push_back({"", "", std::move(m)});
    return out;
}

}  // namespace

std::vector<int> greedy_generating_set(const FiniteAlgebra& a) {
    std::vector<int> gens;
    auto closure_size = [&](const std::vector<int>& seed) {
        return subalgebra_generated(a, seed).embedding.size();
    };
    std::vector<int> seed;
    size_t have = closure_size(seed);
    while (static_cast<int>(have) < a.size) {
        int best = -1;
        size_t best_size = have;
        for (int x = 0; x < a.size; ++x) {
            auto s = seed;
            s.push_back(x);
            size_t sz = closure_size(s);
            if (sz > best_size) {
                best_size = sz;
                best = x;
            }
        }
        seed.push_back(best);
        gens.push_back(best);
        have = best_size;
    }
    return gens;
}

std::vector<Morphism> find_homomorphisms(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    ops::touch("find_homomorphisms");
    return wrap(hom_maps(a, b, false, false));
}

std::vector<Morphism> find_embeddings(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    ops::touch("find_embeddings");
    return wrap(hom_maps(a, b, true, false));
}

bool is_crystalline(const FiniteAlgebra& a) {
    ops::touch("is_crystalline");
    if (!a.involutive()) return false;
    RawTables r;
    r.size = 4;
    r.meet = {{0, 0, 0, 0}, {0, 1, 1, 1}, {0, 1, 2, 2}, {0, 1, 2, 3}};
    r.join = {{0, 1, 2, 3}, {1, 1, 2, 3}, {2, 2, 2, 3}, {3, 3, 3, 3}};
    r.fusion = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 3}, {0, 3, 3, 3}};
    r.neg = std::vector<int>{3, 2, 1, 0};
    r.e = 1;
    static const FiniteAlgebra c4 = validate_or_throw(r, AlgebraClass::DMM, "C4");
    return !hom_maps(a, c4, false, true).empty();
}

namespace {

/// Iterated equitable refinement; class ids are isomorphism-invariant
/// (sorted by signature each round, with e's class first).
std::vector<int> invariant_classes(const FiniteAlgebra& a) {
    int n = a.size;
    std::vector<std::vector<long long>> key(n);
    for (int x = 0; x < n; ++x) {
        key[x] = {x == a.e ? 0 : 1, static_cast<long long>(a.down_set(x).size()),
                  static_cast<long long>(a.up_set(x).size()), a.fusion[x][x] == x ? 0 : 1};
        if (a.involutive()) key[x].push_back(a.neg[x] == x ? 0 : 1);
    }
    std::vector<int> cls(n, 0);
    auto assign = [&]() {
        std::map<std::vector<long long>, int> ids;
        for (int x = 0; x < n; ++x) ids.emplace(key[x], 0);
        int next = 0;
        for (auto& [k, v] : ids) v = next++;
        std::vector<int> out(n);
        for (int x = 0; x < n; ++x) out[x] = ids[key[x]];
        return out;
    };
    cls = assign();
    while (true) {
        for (int x = 0; x < n; ++x) {
            std::vector<long long> sig;
            sig.push_back(cls[x]);
            if (a.involutive()) sig.push_back(cls[a.neg[x]]);
            std::vector<long long> rows;
            for (int y = 0; y < n; ++y) {
                long long packed = cls[y];
                packed = packed * n + cls[a.fusion[x][y]];
                packed = packed * n + cls[a.meet[x][y]];
                packed = packed * n + cls[a.join[x][y]];
                packed = packed * n + cls[a.arrow[x][y]];
                packed = packed * n + cls[a.arrow[y][x]];
                rows.push_back(packed);
            }
            std::sort(rows.begin(), rows.end());
            sig.insert(sig.end(), rows.begin(), rows.end());
            key[x] = std::move(sig);
        }
        auto next = assign();
        if (next == cls) break;
        cls = next;
    }
    return cls;
}

CanonicalForm encode_under(const FiniteAlgebra& a, const std::vector<int>& perm) {
    // perm: old index -> new index
    int n = a.size;
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    CanonicalForm out;
    out.reserve(3 * n * n + n + 3);
    out.push_back(static_cast<std::uint8_t>(n));
    out.push_back(a.involutive() ? 1 : 0);
    auto push_table = [&](const Table& t) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out.push_back(static_cast<std::uint8_t>(perm[t[inv[i]][inv[j]]]));
    };
    push_table(a.fusion);
    push_table(a.meet);
    push_table(a.join);
    if (a.involutive())
        for (int i = 0; i < n; ++i) out.push_back(static_cast<std::uint8_t>(perm[a.neg[inv[i]]]));
    return out;
}

void perms_of_blocks(const std::vector<std::vector<int>>& blocks, size_t bi,
                     std::vector<int>& perm, int& next_pos, const FiniteAlgebra& a,
                     CanonicalForm& best) {
    if (bi == blocks.size()) {
        auto enc = encode_under(a, perm);
        if (best.empty() || enc < best) best = std::move(enc);
        return;
    }
    auto block = blocks[bi];
    std::sort(block.begin(), block.end());
    int base = next_pos;
    do {
        for (size_t i = 0; i < block.size(); ++i) perm[block[i]] = base + static_cast<int>(i);
        next_pos = base + static_cast<int>(block.size());
        perms_of_blocks(blocks, bi + 1, perm, next_pos, a, best);
    } while (std::next_permutation(block.begin(), block.end()));
    next_pos = base;
}

}  // namespace

CanonicalForm canonical_form(const FiniteAlgebra& a) {
    if (a.size > 255) throw budget_exceeded("canonical_form: algebra too large");
    auto cls = invariant_classes(a);
    int classes = *std::max_element(cls.begin(), cls.end()) + 1;
    std::vector<std::vector<int>> blocks(classes);
    for (int x = 0; x < a.size; ++x) blocks[cls[x]].push_back(x);
    long long work = 1;
    for (const auto& b : blocks) {
        for (size_t i = 2; i <= b.size(); ++i) work *= static_cast<long long>(i);
        if (work > 2'000'000) throw budget_exceeded("canonical_form: symmetry class too large");
    }
    std::vector<int> perm(a.size, -1);
    int next_pos = 0;
    CanonicalForm best;
    perms_of_blocks(blocks, 0, perm, next_pos, a, best);
    return best;
}

CanonicalForm canonical_form_bruteforce(const FiniteAlgebra& a) {
    int n = a.size;
    std::vector<int> rest;
    for (int x = 0; x < n; ++x)
        if (x != a.e) rest.push_back(x);
    CanonicalForm best;
    std::vector<int> perm(n);
    do {
        perm[a.e] = 0;
        for (size_t i = 0; i < rest.size(); ++i) perm[rest[i]] = static_cast<int>(i) + 1;
        auto enc = encode_under(a, perm);
        if (best.empty() || enc < best) best = std::move(enc);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return best;
}

bool is_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    ops::touch("is_isomorphic");
    if (a.size != b.size || a.involutive() != b.involutive()) return false;
    bool by_canon = canonical_form(a) == canonical_form(b);
    if (a.size <= 10) {
        // equal sizes make every embedding bijective
        bool by_embedding = !hom_maps(a, b, true, true).empty();
        if (by_embedding != by_canon)
            throw error("canonical form and embedding search disagree on isomorphism");
    }
    return by_canon;
}

std::optional<RetractWitness> is_retract(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    ops::touch("is_retract");
    if (!same_signature(a, b))
        throw signature_mismatch("is_retract: RL/IRL signatures differ");
    bool zero_generated = zero_generated_core(a).algebra.size == a.size;
    if (zero_generated) {
        auto g = hom_maps(a, b, false, true);
        if (g.empty()) return std::nullopt;
        auto h = hom_maps(b, a, false, true);
        if (h.empty()) return std::nullopt;
        for (int x = 0; x < a.size; ++x)
            if (h.front()[g.front()[x]] != x)
                throw error("is_retract: identity shortcut failed on a 0-generated algebra");
        return RetractWitness{{"", "", g.front()}, {"", "", h.front()}};
    }
    for (const auto& g : hom_maps(a, b, true, false)) {
        std::vector<std::pair<int, int>> pinned;
        for (int x = 0; x < a.size; ++x) pinned.emplace_back(g[x], x);
        auto h = hom_maps(b, a, false, true, pinned);
        if (!h.empty()) return RetractWitness{{"", "", g}, {"", "", h.front()}};
    }
    return std::nullopt;
}

SubalgebraResult zero_generated_core(const FiniteAlgebra& a) {
    ops::touch("zero_generated_core");
    return subalgebra_generated(a, {});
}

FiniteAlgebra relabel(const FiniteAlgebra& a, const std::vector<int>& perm) {
    int n = a.size;
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    FiniteAlgebra out;
    out.size = n;
    out.meet.assign(n, std::vector<int>(n, 0));
    out.join = out.meet;
    out.fusion = out.meet;
    out.arrow = out.meet;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            out.meet[i][j] = perm[a.meet[inv[i]][inv[j]]];
            out.join[i][j] = perm[a.join[inv[i]][inv[j]]];
            out.fusion[i][j] = perm[a.fusion[inv[i]][inv[j]]];
            out.arrow[i][j] = perm[a.arrow[inv[i]][inv[j]]];
        }
    if (a.involutive()) {
        out.neg.resize(n);
        for (int i = 0; i < n; ++i) out.neg[i] = perm[a.neg[inv[i]]];
    }
    out.e = perm[a.e];
    if (!a.names.empty()) {
        out.names.resize(n);
        for (int i = 0; i < n; ++i) out.names[i] = a.names[inv[i]];
    }
    return out;
}

}  // namespace dmm
