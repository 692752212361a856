#include "dmm/catalog.hpp"

#include "dmm/laws.hpp"
#include "dmm/morphisms.hpp"
#include "dmm/ops.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>

namespace dmm::catalog {

namespace {

void tables_from_order(int n, const std::function<bool(int, int)>& le, Table* meet, Table* join) {
    meet->assign(n, std::vector<int>(n, -1));
    join->assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int glb = -1, lub = -1;
            for (int c = 0; c < n; ++c) {
                if (le(c, i) && le(c, j) && (glb == -1 || le(glb, c))) glb = c;
                if (le(i, c) && le(j, c) && (lub == -1 || le(c, lub))) lub = c;
            }
            bool glb_ok = glb != -1, lub_ok = lub != -1;
            for (int c = 0; c < n; ++c) {
                if (le(c, i) && le(c, j) && !le(c, glb)) glb_ok = false;
                if (le(i, c) && le(j, c) && !le(lub, c)) lub_ok = false;
            }
            if (!glb_ok || !lub_ok) throw malformed_table("order is not a lattice");
            (*meet)[i][j] = glb;
            (*join)[i][j] = lub;
        }
}

Table chain_meet(int n) {
    Table t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = std::min(i, j);
    return t;
}

Table chain_join(int n) {
    Table t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = std::max(i, j);
    return t;
}

FiniteAlgebra build_trivial() {
    RawTables r;
    r.size = 1;
    r.meet = {{0}};
    r.join = {{0}};
    r.fusion = {{0}};
    r.neg = std::vector<int>{0};
    r.e = 0;
    r.names = {"e"};
    return validate_or_throw(r, AlgebraClass::DMM, "trivial");
}

FiniteAlgebra build_two() {
    RawTables r;
    r.size = 2;
    r.meet = chain_meet(2);
    r.join = chain_join(2);
    r.fusion = {{0, 0}, {0, 1}};  // fusion duplicates meet in a Boolean algebra
    r.neg = std::vector<int>{1, 0};
    r.e = 1;
    r.names = {"f", "e"};
    return validate_or_throw(r, AlgebraClass::DMM, "two");
}

FiniteAlgebra build_s3() {
    RawTables r;
    r.size = 3;
    r.meet = chain_meet(3);
    r.join = chain_join(3);
    r.fusion = {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}};
    r.neg = std::vector<int>{2, 1, 0};
    r.e = 1;
    r.names = {"bot", "e", "top"};
    return validate_or_throw(r, AlgebraClass::DMM, "S3");
}

FiniteAlgebra build_c4() {
    RawTables r;
    r.size = 4;
    r.meet = chain_meet(4);
    r.join = chain_join(4);
    r.fusion = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 3}, {0, 3, 3, 3}};
    r.neg = std::vector<int>{3, 2, 1, 0};
    r.e = 1;
    r.names = {"0", "e", "f", "1"};
    return validate_or_throw(r, AlgebraClass::DMM, "C4");
}

FiniteAlgebra build_d4() {
    RawTables r;
    r.size = 4;
    r.meet = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}};
    r.join = {{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}};
    r.fusion = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 3}, {0, 3, 3, 3}};
    r.neg = std::vector<int>{3, 2, 1, 0};
    r.e = 1;
    r.names = {"0", "e", "f", "1"};
    return validate_or_throw(r, AlgebraClass::DMM, "D4");
}

/// RL-reduct: same carrier and tables, negation dropped.
FiniteAlgebra rl_reduct(const FiniteAlgebra& a, std::vector<std::string> names) {
    RawTables r = to_raw(a);
    r.neg.reset();
    r.arrow = a.arrow;  // the residual is definable from fusion, keep it pinned
    r.names = std::move(names);
    return validate_or_throw(r, AlgebraClass::Dunn, "RL reduct");
}

FiniteAlgebra build_t5() {
    // bot < {e, x} < y < top,  x*c = x for every c above bot, y idempotent
    RawTables r;
    r.size = 5;
    auto le = [](int i, int j) {
        if (i == j || i == 0 || j == 4) return true;
        if (i == 1 || i == 2) return j == 3 || j == 4;
        if (i == 3) return j == 4;
        return false;
    };
    tables_from_order(5, le, &r.meet, &r.join);
    r.fusion = {{0, 0, 0, 0, 0},
                {0, 1, 2, 3, 4},
                {0, 2, 2, 2, 2},
                {0, 3, 2, 3, 4},
                {0, 4, 2, 4, 4}};
    r.e = 1;
    r.names = {"bot", "e", "x", "y", "top"};
    return validate_or_throw(r, AlgebraClass::Dunn, "T5");
}

FiniteAlgebra build_t6() {
    // bot < {e, x} < y < z < top,  z*z = top
    RawTables r;
    r.size = 6;
    auto le = [](int i, int j) {
        if (i == j || i == 0 || j == 5) return true;
        if (i == 1 || i == 2) return j >= 3;
        if (i == 3) return j >= 4;
        if (i == 4) return j == 5;
        return false;
    };
    tables_from_order(6, le, &r.meet, &r.join);
    r.fusion = {{0, 0, 0, 0, 0, 0},
                {0, 1, 2, 3, 4, 5},
                {0, 2, 2, 2, 2, 2},
                {0, 3, 2, 3, 4, 5},
                {0, 4, 2, 4, 5, 5},
                {0, 5, 2, 5, 5, 5}};
    r.e = 1;
    r.names = {"bot", "e", "x", "y", "z", "top"};
    return validate_or_throw(r, AlgebraClass::Dunn, "T6");
}

const std::map<std::string, PartialAlgebra>& partial_specs() {
    static const std::map<std::string, PartialAlgebra> specs = [] {
        std::map<std::string, PartialAlgebra> m;
        constexpr int U = -1;

        auto chain = [](int n, std::vector<std::pair<std::pair<int, int>, int>> known,
                        std::vector<std::string> names) {
            PartialAlgebra p;
            p.size = n;
            p.meet = chain_meet(n);
            p.join = chain_join(n);
            p.neg.resize(n);
            for (int i = 0; i < n; ++i) p.neg[i] = n - 1 - i;
            p.e = 1;
            p.fusion.assign(n, std::vector<int>(n, -1));
            for (auto [xy, v] : known) {
                p.fusion[xy.first][xy.second] = v;
                p.fusion[xy.second][xy.first] = v;
            }
            p.names = std::move(names);
            return p;
        };

        // five-element chain, a = a^2 = ~a, f*a = f^2
        m["ext_C4_1"] = chain(5, {{{2, 2}, 2}, {{3, 2}, 4}, {{3, 3}, 4}},
                              {"0", "e", "a", "f", "1"});
        // six-element chain, a = a^2, ~a = a*~a, (~a)^2 = f^2 = f*a
        m["ext_C4_2"] = chain(6, {{{2, 2}, 2}, {{2, 3}, 3}, {{3, 3}, 5}, {{4, 2}, 5}, {{4, 4}, 5}},
                              {"0", "e", "a", "~a", "f", "1"});
        // six-element chain, f = a^2 = a*~a, f^2 = f*a = (~a)^2
        m["ext_C4_3"] = chain(6, {{{2, 2}, 4}, {{2, 3}, 4}, {{3, 3}, 5}, {{4, 2}, 5}, {{4, 4}, 5}},
                              {"0", "e", "a", "~a", "f", "1"});

        // 0 < e < {a, ~a} < f < 1,  a*~a = f,  a^2 = (~a)^2 = f^2
        {
            PartialAlgebra p;
            p.size = 6;
            auto le = [](int i, int j) {
                if (i == j || i == 0 || j == 5) return true;
                if (i == 1) return j >= 2;
                if (i == 2 || i == 3) return j == 4 || j == 5;
                if (i == 4) return j == 5;
                return false;
            };
            tables_from_order(6, le, &p.meet, &p.join);
            p.neg = {5, 4, 3, 2, 1, 0};
            p.e = 1;
            p.fusion.assign(6, std::vector<int>(6, U));
            p.fusion[2][3] = p.fusion[3][2] = 4;
            p.fusion[2][2] = 5;
            p.fusion[3][3] = 5;
            p.fusion[4][4] = 5;
            p.names = {"0", "e", "a", "~a", "f", "1"};
            m["ext_C4_4"] = p;
        }

        // 0 < e < a < 1, 0 < ~a < f < 1, e < f;  a = a^2, a*~a = ~a,
        // (~a)^2 = f*a = f^2
        {
            PartialAlgebra p;
            p.size = 6;
            auto le = [](int i, int j) {
                if (i == j || i == 0 || j == 5) return true;
                if (i == 1) return j == 2 || j == 4 || j == 5;
                if (i == 2) return j == 5;
                if (i == 3) return j == 4 || j == 5;
                if (i == 4) return j == 5;
                return false;
            };
            tables_from_order(6, le, &p.meet, &p.join);
            p.neg = {5, 4, 3, 2, 1, 0};
            p.e = 1;
            p.fusion.assign(6, std::vector<int>(6, U));
            p.fusion[2][2] = 2;
            p.fusion[2][3] = p.fusion[3][2] = 3;
            p.fusion[3][3] = 5;
            p.fusion[4][2] = p.fusion[2][4] = 5;
            p.fusion[4][4] = 5;
            p.names = {"0", "e", "a", "~a", "f", "1"};
            m["ext_C4_5"] = p;
        }

        // 0 < {e, ~a}, e < {a, f}, ~a < f, {a, f} < 1;  a^2 = (~a)^2 = f*a
        // = f^2, a*~a = f
        {
            PartialAlgebra p;
            p.size = 6;
            auto le = [](int i, int j) {
                if (i == j || i == 0 || j == 5) return true;
                if (i == 1) return j == 2 || j == 4 || j == 5;
                if (i == 2) return j == 5;
                if (i == 3) return j == 4 || j == 5;
                if (i == 4) return j == 5;
                return false;
            };
            tables_from_order(6, le, &p.meet, &p.join);
            p.neg = {5, 4, 3, 2, 1, 0};
            p.e = 1;
            p.fusion.assign(6, std::vector<int>(6, U));
            p.fusion[2][2] = 5;
            p.fusion[2][3] = p.fusion[3][2] = 4;
            p.fusion[3][3] = 5;
            p.fusion[4][2] = p.fusion[2][4] = 5;
            p.fusion[4][4] = 5;
            p.names = {"0", "e", "a", "~a", "f", "1"};
            m["ext_C4_6"] = p;
        }

        // shared hexagon of the two D4 extensions:
        // 0 < {e, ~a}, e < a, ~a < a, ~a < f, {a, f} < 1
        auto d4_hexagon = [&](std::vector<std::pair<std::pair<int, int>, int>> known) {
            PartialAlgebra p;
            p.size = 6;
            auto le = [](int i, int j) {
                if (i == j || i == 0 || j == 5) return true;
                if (i == 1) return j == 3 || j == 5;
                if (i == 2) return j == 3 || j == 4 || j == 5;
                if (i == 3) return j == 5;
                if (i == 4) return j == 5;
                return false;
            };
            tables_from_order(6, le, &p.meet, &p.join);
            p.neg = {5, 4, 3, 2, 1, 0};
            p.e = 1;
            p.fusion.assign(6, std::vector<int>(6, U));
            for (auto [xy, v] : known) {
                p.fusion[xy.first][xy.second] = v;
                p.fusion[xy.second][xy.first] = v;
            }
            p.names = {"0", "e", "~a", "a", "f", "1"};
            return p;
        };
        // a = a^2, ~a = (~a)^2 = a*~a, f^2 = f*~a
        m["ext_D4_1"] = d4_hexagon({{{3, 3}, 3}, {{2, 2}, 2}, {{3, 2}, 2}, {{4, 2}, 5},
                                    {{4, 4}, 5}});
        // a^2 = f^2 = f*~a, f = (~a)^2 = a*~a
        m["ext_D4_2"] = d4_hexagon({{{3, 3}, 5}, {{2, 2}, 4}, {{3, 2}, 4}, {{4, 2}, 5},
                                    {{4, 4}, 5}});
        return m;
    }();
    return specs;
}

FiniteAlgebra build_ext(const std::string& name) {
    auto completions = complete_partial(partial_specs().at(name));
    if (completions.size() != 1)
        throw error(name + ": diagram admits " + std::to_string(completions.size()) +
                    " completions, expected exactly 1");
    return completions.front();
}

}  // namespace

std::vector<FiniteAlgebra> complete_partial(const PartialAlgebra& p) {
    ops::touch("complete_partial");
    int n = p.size;
    if (n <= 0) throw malformed_table("complete_partial: empty carrier");

    Table fusion = p.fusion;
    // known-entry invariants: symmetric, e-neutral
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (fusion[i][j] != -1 && fusion[j][i] != -1 && fusion[i][j] != fusion[j][i])
                throw inconsistent_partial("known fusion entries break commutativity");
            if (fusion[i][j] == -1 && fusion[j][i] != -1) fusion[i][j] = fusion[j][i];
        }
    for (int j = 0; j < n; ++j) {
        if (fusion[p.e][j] != -1 && fusion[p.e][j] != j)
            throw inconsistent_partial("known fusion entries break neutrality of e");
        fusion[p.e][j] = fusion[j][p.e] = j;
    }

    auto leq = [&](int a, int b) { return p.meet[a][b] == a; };
    int bot = 0;
    for (int i = 1; i < n; ++i)
        if (leq(i, bot)) bot = i;
    for (int j = 0; j < n; ++j) {
        if (fusion[bot][j] != -1 && fusion[bot][j] != bot)
            throw inconsistent_partial("known fusion entries break bottom absorption");
        fusion[bot][j] = fusion[j][bot] = bot;
    }

    std::vector<std::pair<int, int>> unknown;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (fusion[i][j] == -1) unknown.emplace_back(i, j);

    std::vector<FiniteAlgebra> results;
    auto monotone_ok = [&](int x, int y) {
        int v = fusion[x][y];
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (fusion[a][b] == -1) continue;
                if (leq(a, x) && leq(b, y) && !leq(fusion[a][b], v)) return false;
                if (leq(x, a) && leq(y, b) && !leq(v, fusion[a][b])) return false;
            }
        return true;
    };

    std::function<void(size_t)> dfs = [&](size_t idx) {
        if (idx == unknown.size()) {
            RawTables raw;
            raw.size = n;
            raw.meet = p.meet;
            raw.join = p.join;
            raw.fusion = fusion;
            raw.neg = p.neg;
            raw.e = p.e;
            raw.names = p.names;
            auto outcome = validate(raw, AlgebraClass::DMM);
            if (outcome.ok()) results.push_back(*outcome.algebra);
            return;
        }
        auto [x, y] = unknown[idx];
        for (int v = 0; v < n; ++v) {
            fusion[x][y] = fusion[y][x] = v;
            if ((x != y || leq(x, v)) && monotone_ok(x, y)) dfs(idx + 1);
        }
        fusion[x][y] = fusion[y][x] = -1;
    };
    dfs(0);

    std::sort(results.begin(), results.end(), [](const FiniteAlgebra& a, const FiniteAlgebra& b) {
        return canonical_form(a) < canonical_form(b);
    });
    std::vector<FiniteAlgebra> unique;
    for (auto& a : results)
        if (unique.empty() || canonical_form(unique.back()) != canonical_form(a))
            unique.push_back(std::move(a));
    if (unique.empty()) throw inconsistent_partial("no residuated completion exists");
    return unique;
}

SkewOrderSpec case_order(const std::string& name, std::string* base_name) {
    static const std::map<std::string, std::pair<std::string, std::vector<int>>> upsets = {
        // which base elements get their primed copy above e
        {"case1", {"S3_plus", {0, 1}}},
        {"case2", {"C4_plus", {0, 1, 2}}},
        {"case3", {"T5", {0, 1, 2, 3}}},
        {"case4", {"T6", {0, 1, 2, 3, 4}}},
    };
    auto it = upsets.find(name);
    if (it == upsets.end()) throw unknown_name("unknown case order: " + name);
    if (base_name) *base_name = it->second.first;
    return skew_order_from_upset(build(it->second.first), it->second.second);
}

const FiniteAlgebra& build(const std::string& name) {
    ops::touch("build");
    static std::map<std::string, FiniteAlgebra> cache;
    static std::recursive_mutex mu;
    std::lock_guard lock(mu);
    if (auto it = cache.find(name); it != cache.end()) return it->second;

    FiniteAlgebra a;
    if (name == "trivial")
        a = build_trivial();
    else if (name == "two")
        a = build_two();
    else if (name == "S3")
        a = build_s3();
    else if (name == "C4")
        a = build_c4();
    else if (name == "D4")
        a = build_d4();
    else if (name == "two_plus")
        a = rl_reduct(build_two(), {"bot", "e"});
    else if (name == "S3_plus")
        a = rl_reduct(build_s3(), {"bot", "e", "top"});
    else if (name == "C4_plus")
        a = rl_reduct(build_c4(), {"bot", "e", "c", "top"});
    else if (name == "C4_sharp")
        a = rigorous_extension(build("C4"));
    else if (name == "T5")
        a = build_t5();
    else if (name == "T6")
        a = build_t6();
    else if (name == "G1")
        a = reflection(build("two_plus"));
    else if (name == "G2")
        a = reflection(build("S3_plus"));
    else if (name == "G3" || name == "G4" || name == "G5" || name == "G6") {
        static const std::map<std::string, std::string> cases = {
            {"G3", "case1"}, {"G4", "case2"}, {"G5", "case3"}, {"G6", "case4"}};
        std::string base;
        auto spec = case_order(cases.at(name), &base);
        a = skew_reflection(build(base), spec);
    } else if (name.rfind("ext_", 0) == 0)
        a = build_ext(name);
    else
        throw unknown_name("unknown catalog algebra: " + name);

    return cache.emplace(name, std::move(a)).first->second;
}

std::vector<std::string> names() {
    return {"trivial", "two",      "S3",       "C4",       "D4",       "two_plus", "S3_plus",
            "C4_plus", "C4_sharp", "T5",       "T6",       "G1",       "G2",       "G3",
            "G4",      "G5",       "G6",       "ext_C4_1", "ext_C4_2", "ext_C4_3", "ext_C4_4",
            "ext_C4_5", "ext_C4_6", "ext_D4_1", "ext_D4_2"};
}

FiniteAlgebra build_sugihara(int n, int bound) {
    ops::touch("build_sugihara");
    if (n < 1) throw error("build_sugihara: n must be positive");
    if (n > bound) throw budget_exceeded("build_sugihara: n exceeds bound");
    bool odd = n % 2 == 1;
    int m = n / 2;
    auto value = [&](int i) { return odd ? i - m : (i < m ? i - m : i - m + 1); };
    auto index_of = [&](int v) { return odd ? v + m : (v < 0 ? v + m : v + m - 1); };

    RawTables r;
    r.size = n;
    r.meet = chain_meet(n);
    r.join = chain_join(n);
    r.fusion.assign(n, std::vector<int>(n, 0));
    r.neg = std::vector<int>(n, 0);
    for (int i = 0; i < n; ++i) {
        (*r.neg)[i] = index_of(-value(i));
        for (int j = 0; j < n; ++j) {
            int va = value(i), vb = value(j);
            int v = std::abs(va) == std::abs(vb) ? std::min(va, vb)
                                                 : (std::abs(va) > std::abs(vb) ? va : vb);
            r.fusion[i][j] = index_of(v);
        }
    }
    r.e = index_of(odd ? 0 : 1);
    r.names.resize(n);
    for (int i = 0; i < n; ++i) r.names[i] = std::to_string(value(i));
    return validate_or_throw(r, AlgebraClass::DMM, "S" + std::to_string(n));
}

FiniteAlgebra build_Ap(int p, int bound) {
    ops::touch("build_Ap");
    if (p < 1) throw error("build_Ap: p must be positive");
    if (p > bound) throw budget_exceeded("build_Ap: p exceeds bound");
    int n = p + 3;  // 0 < 1 < 2 < ... < 2^p < 2^{p+1}
    RawTables r;
    r.size = n;
    r.meet = chain_meet(n);
    r.join = chain_join(n);
    r.fusion.assign(n, std::vector<int>(n, 0));
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) r.fusion[i][j] = std::min(i + j - 1, n - 1);
    r.neg = std::vector<int>(n, 0);
    (*r.neg)[0] = n - 1;
    (*r.neg)[n - 1] = 0;
    for (int k = 0; k <= p; ++k) (*r.neg)[k + 1] = p - k + 1;
    r.e = 1;
    r.names.resize(n);
    r.names[0] = "0";
    for (int k = 0; k <= p + 1; ++k) r.names[k + 1] = std::to_string(1LL << k);
    return validate_or_throw(r, AlgebraClass::DMM, "A" + std::to_string(p));
}

FiniteAlgebra build_Bp(int p, int bound) {
    ops::touch("build_Bp");
    if (p < 1) throw error("build_Bp: p must be positive");
    if (p > bound) throw budget_exceeded("build_Bp: p exceeds bound");
    int n = 2 * p + 2;
    // index 0 = 0 (= ~2^p), 1..p+1 = 2^0..2^p, p+2+k = ~2^k for k < p
    auto pow_idx = [&](int m) { return m + 1; };
    auto negpow_idx = [&](int k) { return k == p ? 0 : p + 2 + k; };
    auto is_pow = [&](int i) { return i >= 1 && i <= p + 1; };
    auto exp_of = [&](int i) { return is_pow(i) ? i - 1 : (i == 0 ? p : i - p - 2); };

    auto le = [&](int i, int j) {
        if (i == j) return true;
        bool pi = is_pow(i), pj = is_pow(j);
        int a = exp_of(i), b = exp_of(j);
        if (pi && pj) return a <= b;
        if (!pi && !pj) return b <= a;
        if (!pi && pj) return a + b >= p;
        return false;  // a power is never below a negated power
    };
    RawTables r;
    r.size = n;
    tables_from_order(n, le, &r.meet, &r.join);

    r.fusion.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == 0 || j == 0) {
                r.fusion[i][j] = 0;
                continue;
            }
            bool pi = is_pow(i), pj = is_pow(j);
            int a = exp_of(i), b = exp_of(j);
            if (pi && pj)
                r.fusion[i][j] = pow_idx(std::min(a + b, p));
            else if (!pi && !pj)
                r.fusion[i][j] = a + b >= p ? negpow_idx(a + b - p) : pow_idx(p);
            else {
                int m = pi ? a : b;  // power exponent
                int l = pi ? b : a;  // negated exponent
                r.fusion[i][j] = l >= m ? negpow_idx(l - m) : pow_idx(p);
            }
        }

    r.neg = std::vector<int>(n, 0);
    for (int m = 0; m <= p; ++m) {
        (*r.neg)[pow_idx(m)] = negpow_idx(m);
        (*r.neg)[negpow_idx(m)] = pow_idx(m);
    }
    r.e = pow_idx(0);
    r.names.resize(n);
    r.names[0] = "0";
    for (int m = 0; m <= p; ++m) {
        r.names[pow_idx(m)] = std::to_string(1LL << m);
        if (m < p) r.names[negpow_idx(m)] = "~" + std::to_string(1LL << m);
    }
    return validate_or_throw(r, AlgebraClass::DMM, "B" + std::to_string(p));
}

FiniteAlgebra resolve(const std::string& name) {
    auto family = [&](char c) {
        return name.size() >= 2 && name[0] == c &&
               std::all_of(name.begin() + 1, name.end(), [](char d) { return std::isdigit(d); });
    };
    if (family('A')) return build_Ap(std::stoi(name.substr(1)));
    if (family('B')) return build_Bp(std::stoi(name.substr(1)));
    if (family('S') && name != "S3") return build_sugihara(std::stoi(name.substr(1)));
    return build(name);
}

const PartialAlgebra& partial_spec(const std::string& name) {
    auto it = partial_specs().find(name);
    if (it == partial_specs().end()) throw unknown_name("no partial diagram named " + name);
    return it->second;
}

}  // namespace dmm::catalog
