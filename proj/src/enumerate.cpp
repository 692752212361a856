#include "dmm/enumerate.hpp"

#include "dmm/classify.hpp"
#include "dmm/constructions.hpp"
#include "dmm/morphisms.hpp"
#include "dmm/ops.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dmm {

namespace {

// ---------------------------------------------------------------------------
// posets (naturally labeled: the numeric order is a linear extension)
// ---------------------------------------------------------------------------

struct SmallPoset {
    int n = 0;
    std::vector<std::uint16_t> le;  // le[i] = bitmask of {j : j <= i}, includes i
};

void gen_posets_rec(SmallPoset& p, int k, const std::function<void(const SmallPoset&)>& emit) {
    if (p.n == k) {
        emit(p);
        return;
    }
    int i = p.n;
    for (std::uint32_t d = 0; d < (1u << i); ++d) {
        // d must be down-closed
        bool ok = true;
        for (int j = 0; j < i && ok; ++j)
            if ((d >> j) & 1u)
                if ((p.le[j] & ~d) != 0) ok = false;
        if (!ok) continue;
        p.le.push_back(static_cast<std::uint16_t>(d | (1u << i)));
        p.n = i + 1;
        gen_posets_rec(p, k, emit);
        p.le.pop_back();
        p.n = i;
    }
}

void for_each_poset(int k, const std::function<void(const SmallPoset&)>& emit) {
    if (k > 8) throw budget_exceeded("poset generation supported up to 8 elements");
    SmallPoset p;
    gen_posets_rec(p, k, emit);
}

FiniteAlgebra lattice_from_tables(int n, Table meet, Table join) {
    FiniteAlgebra l;
    l.size = n;
    l.meet = std::move(meet);
    l.join = std::move(join);
    l.fusion = l.meet;  // placeholder so canonical_form applies
    l.arrow = l.meet;
    l.e = l.bottom();
    return l;
}

/// Ideal lattice of a poset; element i of the lattice is the i-th ideal in
/// (popcount, mask) order, so numeric order refines the lattice order.
std::optional<FiniteAlgebra> ideal_lattice(const SmallPoset& p, int wanted_size) {
    std::vector<std::uint32_t> ideals;
    for (std::uint32_t s = 0; s < (1u << p.n); ++s) {
        bool ok = true;
        for (int i = 0; i < p.n && ok; ++i)
            if ((s >> i) & 1u)
                if ((p.le[i] & ~s) != 0) ok = false;
        if (ok) {
            ideals.push_back(s);
            if (static_cast<int>(ideals.size()) > wanted_size) return std::nullopt;
        }
    }
    if (static_cast<int>(ideals.size()) != wanted_size) return std::nullopt;
    std::sort(ideals.begin(), ideals.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    int n = wanted_size;
    std::map<std::uint32_t, int> index;
    for (int i = 0; i < n; ++i) index[ideals[i]] = i;
    Table meet(n, std::vector<int>(n)), join(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            meet[i][j] = index.at(ideals[i] & ideals[j]);
            join[i][j] = index.at(ideals[i] | ideals[j]);
        }
    return lattice_from_tables(n, std::move(meet), std::move(join));
}

/// Treats the poset itself as a lattice candidate.
std::optional<FiniteAlgebra> poset_as_lattice(const SmallPoset& p) {
    int n = p.n;
    auto le = [&](int i, int j) { return (p.le[j] >> i) & 1u; };
    Table meet(n, std::vector<int>(n)), join(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int glb = -1, lub = -1;
            for (int c = 0; c < n; ++c) {
                if (le(c, i) && le(c, j) && (glb == -1 || le(glb, c))) glb = c;
                if (le(i, c) && le(j, c) && (lub == -1 || le(c, lub))) lub = c;
            }
            if (glb == -1 || lub == -1) return std::nullopt;
            for (int c = 0; c < n; ++c) {
                if (le(c, i) && le(c, j) && !le(c, glb)) return std::nullopt;
                if (le(i, c) && le(j, c) && !le(lub, c)) return std::nullopt;
            }
            meet[i][j] = glb;
            join[i][j] = lub;
        }
    return lattice_from_tables(n, std::move(meet), std::move(join));
}

}  // namespace

std::vector<FiniteAlgebra> generate_lattices(int size, bool distributive_only) {
    static std::map<std::pair<int, bool>, std::vector<FiniteAlgebra>> cache;
    static std::mutex mu;
    std::lock_guard lock(mu);
    auto key = std::make_pair(size, distributive_only);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    std::vector<FiniteAlgebra> out;
    std::vector<CanonicalForm> seen;
    auto add = [&](FiniteAlgebra l) {
        auto cf = canonical_form(l);
        if (std::find(seen.begin(), seen.end(), cf) == seen.end()) {
            seen.push_back(std::move(cf));
            out.push_back(std::move(l));
        }
    };

    if (size == 1) {
        add(lattice_from_tables(1, {{0}}, {{0}}));
    } else if (distributive_only) {
        // Birkhoff: distributive lattices = ideal lattices of posets.  A
        // poset with k elements has at least k+1 ideals, with equality only
        // for chains, so k <= size-1 and only the chain needs k = size-1.
        // With poset generation capped at 8 elements this stays complete
        // through size 10.
        if (size > 10)
            throw budget_exceeded("distributive lattice generation supported up to size 10");
        int kmax = std::min(size - 1, 8);
        for (int k = 1; k <= kmax; ++k) {
            if ((1 << k) < size) continue;  // a k-element poset has at most 2^k ideals
            for_each_poset(k, [&](const SmallPoset& p) {
                if (auto l = ideal_lattice(p, size)) add(std::move(*l));
            });
        }
        if (size - 1 > 8) {
            // the missing k = size-1 case is exactly the chain
            Table meet(size, std::vector<int>(size)), join(size, std::vector<int>(size));
            for (int i = 0; i < size; ++i)
                for (int j = 0; j < size; ++j) {
                    meet[i][j] = std::min(i, j);
                    join[i][j] = std::max(i, j);
                }
            add(lattice_from_tables(size, std::move(meet), std::move(join)));
        }
    } else {
        for_each_poset(size, [&](const SmallPoset& p) {
            if (auto l = poset_as_lattice(p)) add(std::move(*l));
        });
    }
    cache[key] = out;
    return out;
}

std::vector<std::vector<int>> lattice_involutions(const FiniteAlgebra& lattice) {
    int n = lattice.size;
    std::vector<std::vector<int>> out;
    std::vector<int> g(n, -1);
    std::function<void(int)> rec = [&](int x) {
        while (x < n && g[x] != -1) ++x;
        if (x == n) {
            out.push_back(g);
            return;
        }
        for (int y = 0; y < n; ++y) {
            if (g[y] != -1 && g[y] != x) continue;
            if (g[y] == -1 && y < x) continue;  // pairs are set from their smaller end
            bool ok = true;
            for (int z = 0; z < n && ok; ++z) {
                if (g[z] == -1) continue;
                if (lattice.leq(x, z) != lattice.leq(g[z], y)) ok = false;
                if (lattice.leq(z, x) != lattice.leq(y, g[z])) ok = false;
            }
            if (!ok) continue;
            g[x] = y;
            g[y] = x;
            rec(x + 1);
            g[x] = -1;
            if (y != x) g[y] = -1;
        }
    };
    rec(0);
    return out;
}

namespace {

// ---------------------------------------------------------------------------
// fusion table search
// ---------------------------------------------------------------------------

struct TableJob {
    FiniteAlgebra lattice;                    // meet/join filled; fusion ignored
    std::vector<int> neg;                     // empty for plain RL search
    int e = 0;
    std::vector<std::pair<std::pair<int, int>, int>> pins;
};

struct SearchContext {
    const ConstraintBundle* bundle;
    std::vector<FiniteAlgebra> found;
    long long accepted = 0;
};

bool passes_filters(const FiniteAlgebra& alg, const ConstraintBundle& b) {
    auto rep = classify(alg);
    switch (b.cls) {
        case AlgebraClass::DMM:
            if (!rep.is_dmm.value) return false;
            break;
        case AlgebraClass::Dunn:
            if (!rep.is_dunn.value) return false;
            break;
        case AlgebraClass::IRL:
            if (!rep.is_irl.value) return false;
            break;
        case AlgebraClass::RL:
            if (!rep.is_rl.value) return false;
            break;
        case AlgebraClass::MemberU:
            if (!rep.is_dmm.value || !rep.in_u.value) return false;
            break;
        case AlgebraClass::MemberM:
            if (!rep.is_dmm.value || !rep.in_m.value) return false;
            break;
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
            if (!in_core[x] &&
                subalgebra_generated(alg, {x}).algebra.size != alg.size)
                return false;
    }
    return true;
}

void table_search(const TableJob& job, SearchContext& ctx) {
    const FiniteAlgebra& lat = job.lattice;
    int n = lat.size;
    int bot = lat.bottom();
    const ConstraintBundle& b = *ctx.bundle;
    bool want_sq = b.cls == AlgebraClass::DMM || b.cls == AlgebraClass::Dunn ||
                   b.cls == AlgebraClass::MemberU || b.cls == AlgebraClass::MemberM;

    if (job.e == bot && n > 1) return;  // e least makes the algebra trivial
    Table fusion(n, std::vector<int>(n, -1));
    for (int j = 0; j < n; ++j) {
        fusion[job.e][j] = fusion[j][job.e] = j;
        fusion[bot][j] = fusion[j][bot] = bot;
    }
    for (auto [xy, v] : job.pins) {
        auto [x, y] = xy;
        if (fusion[x][y] != -1 && fusion[x][y] != v) return;
        fusion[x][y] = fusion[y][x] = v;
    }

    std::vector<std::pair<int, int>> unknown;
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y)
            if (fusion[x][y] == -1) unknown.emplace_back(x, y);

    auto entry_ok = [&](int x, int y) {
        int v = fusion[x][y];
        if (want_sq && x == y && !lat.leq(x, v)) return false;
        // isotonicity against every known entry
        for (int a = 0; a < n; ++a)
            for (int c = 0; c < n; ++c) {
                int w = fusion[a][c];
                if (w == -1) continue;
                if (lat.leq(a, x) && lat.leq(c, y) && !lat.leq(w, v)) return false;
                if (lat.leq(x, a) && lat.leq(y, c) && !lat.leq(v, w)) return false;
            }
        // join-distributivity on decompositions whose parts are known
        for (int a = 0; a < n; ++a)
            for (int c = a + 1; c < n; ++c) {
                if (lat.join[a][c] != x || a == x || c == x) continue;
                if (fusion[a][y] != -1 && fusion[c][y] != -1 &&
                    lat.join[fusion[a][y]][fusion[c][y]] != v)
                    return false;
            }
        // incremental associativity on fully known triples touching (x,y)
        for (int a = 0; a < n; ++a) {
            int xy_a = fusion[v][a];
            int ya = fusion[y][a];
            if (ya != -1 && xy_a != -1 && fusion[x][ya] != -1 && fusion[x][ya] != xy_a)
                return false;
            int ax = fusion[a][x];
            if (ax != -1 && fusion[ax][y] != -1 && fusion[a][v] != -1 &&
                fusion[ax][y] != fusion[a][v])
                return false;
        }
        return true;
    };

    std::function<void(size_t)> dfs = [&](size_t idx) {
        if (idx == unknown.size()) {
            RawTables raw;
            raw.size = n;
            raw.meet = lat.meet;
            raw.join = lat.join;
            raw.fusion = fusion;
            if (!job.neg.empty()) raw.neg = job.neg;
            raw.e = job.e;
            auto base_cls = job.neg.empty() ? AlgebraClass::RL : AlgebraClass::IRL;
            auto outcome = validate(raw, base_cls);
            if (!outcome.ok()) return;
            ++ctx.accepted;
            if (passes_filters(*outcome.algebra, b)) ctx.found.push_back(*outcome.algebra);
            return;
        }
        auto [x, y] = unknown[idx];
        for (int v = 0; v < n; ++v) {
            fusion[x][y] = fusion[y][x] = v;
            if (entry_ok(x, y)) dfs(idx + 1);
        }
        fusion[x][y] = fusion[y][x] = -1;
    };
    dfs(0);
}

// order-level pruning valid for square-increasing classes
bool order_prune(const FiniteAlgebra& lat, int e, const ConstraintBundle& b, bool sq_class) {
    if (!sq_class) return true;
    int n = lat.size;
    std::vector<int> below;
    for (int x = 0; x < n; ++x)
        if (x != e && lat.leq(x, e)) below.push_back(x);
    if (b.simple && !(n > 1 && below.size() == 1)) return false;
    if (b.si) {
        bool has_largest = false;
        for (int c : below) {
            bool top_of_below = true;
            for (int d : below)
                if (!lat.leq(d, c)) top_of_below = false;
            if (top_of_below) has_largest = true;
        }
        if (!(n > 1 && has_largest)) return false;
    }
    if (b.fsi) {
        if (n <= 1) return false;
        for (int x = 0; x < n; ++x)
            for (int y = x; y < n; ++y)
                if (x != e && y != e && lat.join[x][y] == e) return false;
    }
    return true;
}

/// Injective maps of `base` into positions of (lattice, neg, e) preserving
/// order (as a sublattice), negation, and e.
std::vector<std::vector<int>> order_embeddings(const FiniteAlgebra& base,
                                               const FiniteAlgebra& lat,
                                               const std::vector<int>& neg, int e) {
    std::vector<std::vector<int>> out;
    int k = base.size, n = lat.size;
    std::vector<int> img(k, -1);
    std::vector<bool> used(n, false);
    std::function<void(int)> rec = [&](int i) {
        if (i == k) {
            // sublattice: meets and joins of images must land on images
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b) {
                    if (lat.meet[img[a]][img[b]] != img[base.meet[a][b]]) return;
                    if (lat.join[img[a]][img[b]] != img[base.join[a][b]]) return;
                }
            out.push_back(img);
            return;
        }
        if (i == base.e) {
            if (!used[e]) {
                img[i] = e;
                used[e] = true;
                rec(i + 1);
                used[e] = false;
                img[i] = -1;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                if (base.leq(i, j) != lat.leq(v, img[j])) ok = false;
                if (base.leq(j, i) != lat.leq(img[j], v)) ok = false;
            }
            if (ok && base.involutive()) {
                if (base.neg[i] == i && neg[v] != v) ok = false;
                if (base.neg[i] < i && neg[v] != img[base.neg[i]]) ok = false;
            }
            if (!ok) continue;
            img[i] = v;
            used[v] = true;
            rec(i + 1);
            used[v] = false;
            img[i] = -1;
        }
    };
    rec(0);
    return out;
}

EnumerationResult run_enumeration(const ConstraintBundle& bundle, const EnumerateOptions& opts,
                                  const FiniteAlgebra* pinned_base) {
    auto t0 = std::chrono::steady_clock::now();
    bool involutive = bundle.cls == AlgebraClass::IRL || bundle.cls == AlgebraClass::DMM ||
                      bundle.cls == AlgebraClass::MemberU || bundle.cls == AlgebraClass::MemberM;
    bool sq_class = bundle.cls == AlgebraClass::DMM || bundle.cls == AlgebraClass::Dunn ||
                    bundle.cls == AlgebraClass::MemberU || bundle.cls == AlgebraClass::MemberM;
    bool distributive = sq_class;
    int budget = pinned_base ? bundle.max_pinned_size : bundle.max_full_size;
    if (bundle.max_size > budget)
        throw budget_exceeded("enumeration size " + std::to_string(bundle.max_size) +
                              " beyond configured budget " + std::to_string(budget));
    if (pinned_base && pinned_base->involutive() != involutive)
        throw signature_mismatch("enumerate_extensions: base signature does not match class");

    std::vector<TableJob> jobs;
    for (int n = std::max(1, bundle.min_size); n <= bundle.max_size; ++n) {
        std::vector<FiniteAlgebra> lattices;
        if (bundle.totally_ordered) {
            Table meet(n, std::vector<int>(n)), join(n, std::vector<int>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    meet[i][j] = std::min(i, j);
                    join[i][j] = std::max(i, j);
                }
            lattices.push_back(lattice_from_tables(n, std::move(meet), std::move(join)));
        } else {
            lattices = generate_lattices(n, distributive);
        }
        for (auto& lat : lattices) {
            std::vector<std::vector<int>> negs;
            if (involutive)
                negs = lattice_involutions(lat);
            else
                negs.push_back({});
            for (auto& neg : negs)
                for (int e = 0; e < n; ++e) {
                    if (!order_prune(lat, e, bundle, sq_class)) continue;
                    TableJob job;
                    job.lattice = lat;
                    job.neg = neg;
                    job.e = e;
                    if (bundle.anti_idempotent && involutive) {
                        int f = neg[e];
                        job.pins.push_back({{f, f}, lat.top()});
                    }
                    if (pinned_base) {
                        for (auto& img : order_embeddings(*pinned_base, lat, neg, e)) {
                            TableJob pj = job;
                            for (int a = 0; a < pinned_base->size; ++a)
                                for (int c = a; c < pinned_base->size; ++c)
                                    pj.pins.push_back(
                                        {{img[a], img[c]}, img[pinned_base->fusion[a][c]]});
                            jobs.push_back(std::move(pj));
                        }
                    } else {
                        jobs.push_back(std::move(job));
                    }
                }
        }
    }

    if (opts.seed != 0) {
        std::mt19937_64 rng(opts.seed);
        std::shuffle(jobs.begin(), jobs.end(), rng);
    }

    std::vector<SearchContext> ctxs(jobs.size());
    long long count = static_cast<long long>(jobs.size());
#ifdef _OPENMP
    int threads = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
    if (opts.parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (long long i = 0; i < count; ++i) {
            ctxs[i].bundle = &bundle;
            table_search(jobs[i], ctxs[i]);
        }
    } else
#endif
    {
        for (long long i = 0; i < count; ++i) {
            ctxs[i].bundle = &bundle;
            table_search(jobs[i], ctxs[i]);
        }
    }

    EnumerationResult result;
    result.stats.job_count = count;
    std::vector<FiniteAlgebra> all;
    for (auto& c : ctxs) {
        result.stats.tables_accepted += c.accepted;
        for (auto& a : c.found) all.push_back(std::move(a));
    }
    result.stats.emitted = static_cast<long long>(all.size());
    result.algebras = canonical_dedupe(std::move(all));
    auto t1 = std::chrono::steady_clock::now();
    result.stats.milliseconds = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return result;
}

}  // namespace

std::vector<FiniteAlgebra> canonical_dedupe(std::vector<FiniteAlgebra> algebras) {
    ops::touch("canonical_dedupe");
    std::vector<std::pair<CanonicalForm, FiniteAlgebra>> keyed;
    keyed.reserve(algebras.size());
    for (auto& a : algebras) keyed.emplace_back(canonical_form(a), std::move(a));
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<FiniteAlgebra> out;
    const CanonicalForm* last = nullptr;
    for (auto& [cf, alg] : keyed) {
        if (last && cf == *last) continue;
        out.push_back(std::move(alg));
        last = &cf;
    }
    return out;
}

EnumerationResult enumerate_algebras(const ConstraintBundle& bundle,
                                     const EnumerateOptions& opts) {
    ops::touch("enumerate");
    return run_enumeration(bundle, opts, nullptr);
}

EnumerationResult enumerate_extensions(const FiniteAlgebra& base, const ConstraintBundle& bundle,
                                       const EnumerateOptions& opts) {
    ops::touch("enumerate_extensions");
    if (zero_generated_core(base).algebra.size != base.size)
        throw error("enumerate_extensions: base must be 0-generated");
    ConstraintBundle b = bundle;
    if (!b.contains) b.contains = base;
    return run_enumeration(b, opts, &base);
}

}  // namespace dmm
