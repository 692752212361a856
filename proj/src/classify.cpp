#include "dmm/classify.hpp"

#include "dmm/constructions.hpp"
#include "dmm/ops.hpp"
#include "dmm/term.hpp"

#include <algorithm>

namespace dmm {

namespace {

Flag yes() { return {true, std::nullopt}; }
Flag no(std::string law, std::vector<int> w) {
    return {false, LawViolation{std::move(law), std::move(w)}};
}

Flag from_equation(const FiniteAlgebra& alg, const TermPtr& lhs, const TermPtr& rhs, Relation rel,
                   const std::string& law) {
    auto v = check_equation(alg, lhs, rhs, rel);
    if (v.holds) return yes();
    return no(law, v.witness);
}

}  // namespace

ClassificationReport classify(const FiniteAlgebra& alg) {
    ops::touch("classify");
    ops::touch("leq");
    ClassificationReport r;
    int n = alg.size;

    {
        std::vector<LawViolation> lv;
        RawTables raw = to_raw(alg);
        if (lattice_laws(raw, &lv))
            r.is_lattice = yes();
        else
            r.is_lattice = {false, lv.front()};
    }

    {
        std::vector<int> w;
        r.is_modular = is_modular_lattice(alg, &w) ? yes() : no("lattice.modular.n5", w);
        w.clear();
        r.is_distributive =
            is_distributive_lattice(alg, &w) ? yes() : no("lattice.distributive.forbidden", w);
    }

    // residuation law (2)
    r.is_rl = yes();
    for (int x = 0; x < n && r.is_rl.value; ++x)
        for (int y = 0; y < n && r.is_rl.value; ++y)
            for (int z = 0; z < n; ++z)
                if (alg.leq(alg.fusion[x][y], z) != alg.leq(y, alg.arrow[x][z])) {
                    r.is_rl = no("residuation", {x, y, z});
                    break;
                }

    if (!alg.involutive()) {
        r.is_irl = no("involution.present", {});
    } else {
        r.is_irl = r.is_rl;
        for (int x = 0; x < n && r.is_irl.value; ++x)
            if (alg.neg[alg.neg[x]] != x) r.is_irl = no("involution.involutive", {x});
        for (int x = 0; x < n && r.is_irl.value; ++x)
            for (int y = 0; y < n && r.is_irl.value; ++y)
                for (int z = 0; z < n; ++z)
                    if (alg.leq(alg.fusion[x][y], z) !=
                        alg.leq(alg.fusion[alg.neg[z]][y], alg.neg[x])) {
                        r.is_irl = no("involution.law", {x, y, z});
                        break;
                    }
    }

    r.is_square_increasing = yes();
    for (int x = 0; x < n; ++x)
        if (!alg.leq(x, alg.fusion[x][x])) {
            r.is_square_increasing = no("square_increasing", {x});
            break;
        }

    auto conj = [](const Flag& a, const Flag& b) { return a.value ? b : a; };
    r.is_dunn = alg.involutive() ? no("signature.plain_rl", {})
                                 : conj(conj(r.is_rl, r.is_square_increasing), r.is_distributive);
    r.is_dmm = conj(conj(r.is_irl, r.is_square_increasing), r.is_distributive);

    {
        Flag idem = yes();
        for (int x = 0; x < n; ++x)
            if (alg.fusion[x][x] != x) {
                idem = no("idempotent", {x});
                break;
            }
        r.is_sugihara = conj(r.is_dmm, idem);
    }

    if (alg.involutive()) {
        auto d = derive(alg);
        r.is_odd = d.f == alg.e ? yes() : no("odd.f_equals_e", {d.f, alg.e});
        Flag bound = yes();
        for (int x = 0; x < n; ++x)
            if (!alg.leq(x, d.one)) {
                bound = no("anti_idempotent.below_f2", {x});
                break;
            }
        r.is_anti_idempotent = conj(conj(r.is_irl, r.is_square_increasing), bound);
    } else {
        r.is_odd = no("involution.present", {});
        r.is_anti_idempotent = no("involution.present", {});
    }

    r.is_bounded = yes();  // finite lattices always have extrema

    {
        int bot = alg.bottom(), top = alg.top();
        r.is_rigorously_compact = yes();
        for (int x = 0; x < n; ++x)
            if (x != bot && alg.fusion[top][x] != top) {
                r.is_rigorously_compact = no("rigorously_compact", {top, x});
                break;
            }
    }

    r.is_totally_ordered = yes();
    for (int x = 0; x < n && r.is_totally_ordered.value; ++x)
        for (int y = x + 1; y < n; ++y)
            if (!alg.leq(x, y) && !alg.leq(y, x)) {
                r.is_totally_ordered = no("totally_ordered", {x, y});
                break;
            }

    {
        auto x = t_var(0), y = t_var(1);
        r.is_semilinear = from_equation(
            alg, t_e(), t_join(t_arrow(x, y), t_arrow(y, x)), Relation::Leq, "semilinear");
    }

    {
        r.is_fsi = n > 1 ? yes() : no("fsi.nontrivial", {});
        for (int x = 0; x < n && r.is_fsi.value; ++x)
            for (int y = x; y < n; ++y)
                if (x != alg.e && y != alg.e && alg.join[x][y] == alg.e) {
                    r.is_fsi = no("fsi.e_join_irreducible", {x, y});
                    break;
                }
    }

    auto filters = deductive_filters(alg);
    r.filter_count = static_cast<int>(filters.size());
    {
        auto congs = congruence_lattice(alg);
        // refinement order; atoms sit directly above the identity partition
        auto finer = [&](const Congruence& a, const Congruence& b) {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (a.block_of[i] == a.block_of[j] && b.block_of[i] != b.block_of[j])
                        return false;
            return true;
        };
        int atoms = 0;
        for (const auto& c : congs) {
            if (c.block_count == n) continue;  // identity
            bool atom = true;
            for (const auto& d : congs) {
                if (d.block_count == n || &d == &c) continue;
                if (finer(d, c) && !finer(c, d)) {
                    atom = false;
                    break;
                }
            }
            if (atom) ++atoms;
        }
        r.is_si = (n > 1 && atoms == 1) ? yes() : no("si.monolith", {atoms});
        r.is_simple =
            (n > 1 && congs.size() == 2) ? yes() : no("simple.two_congruences",
                                                      {static_cast<int>(congs.size())});

        if (r.is_square_increasing.value) {
            // cross-check against the order criteria
            std::vector<int> below;
            for (int x = 0; x < n; ++x)
                if (x != alg.e && alg.leq(x, alg.e)) below.push_back(x);
            bool has_largest = false;
            for (int c : below) {
                bool top_of_below = true;
                for (int d : below)
                    if (!alg.leq(d, c)) {
                        top_of_below = false;
                        break;
                    }
                if (top_of_below) has_largest = true;
            }
            if ((n > 1 && has_largest && !below.empty()) != r.is_si.value)
                throw error("classify: congruence-lattice and order criteria disagree on SI");
            if ((n > 1 && below.size() == 1) != r.is_simple.value)
                throw error("classify: congruence-lattice and order criteria disagree on simple");
        }
    }

    if (r.is_dmm.value) {
        LawViolation lv;
        r.in_u = satisfies_u_axioms(alg, &lv) ? yes() : Flag{false, lv};
        r.in_m = satisfies_m_axioms(alg, &lv) ? yes() : Flag{false, lv};
    } else {
        r.in_u = conj(r.is_dmm, yes());
        r.in_m = conj(r.is_dmm, yes());
    }

    return r;
}

}  // namespace dmm
