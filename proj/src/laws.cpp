#include "dmm/laws.hpp"

#include "dmm/ops.hpp"
#include "dmm/term.hpp"

#include <algorithm>
#include <sstream>

namespace dmm {

RawTables to_raw(const FiniteAlgebra& alg) {
    RawTables r;
    r.size = alg.size;
    r.meet = alg.meet;
    r.join = alg.join;
    r.fusion = alg.fusion;
    if (alg.involutive()) r.neg = alg.neg;
    if (!alg.arrow.empty()) r.arrow = alg.arrow;
    r.e = alg.e;
    r.names = alg.names;
    return r;
}

AlgebraClass algebra_class_from_string(const std::string& s) {
    if (s == "rl") return AlgebraClass::RL;
    if (s == "irl") return AlgebraClass::IRL;
    if (s == "dunn") return AlgebraClass::Dunn;
    if (s == "dmm") return AlgebraClass::DMM;
    if (s == "u-member") return AlgebraClass::MemberU;
    if (s == "m-member") return AlgebraClass::MemberM;
    throw unknown_name("unknown algebra class: " + s);
}

std::string to_string(AlgebraClass c) {
    switch (c) {
        case AlgebraClass::RL: return "rl";
        case AlgebraClass::IRL: return "irl";
        case AlgebraClass::Dunn: return "dunn";
        case AlgebraClass::DMM: return "dmm";
        case AlgebraClass::MemberU: return "u-member";
        case AlgebraClass::MemberM: return "m-member";
    }
    return "?";
}

namespace {

void check_square(const Table& t, int n, const std::string& which) {
    if (static_cast<int>(t.size()) != n)
        throw malformed_table(which + " table has " + std::to_string(t.size()) + " rows, expected " +
                              std::to_string(n));
    for (const auto& row : t) {
        if (static_cast<int>(row.size()) != n) throw malformed_table(which + " table is ragged");
        for (int v : row)
            if (v < 0 || v >= n) throw malformed_table(which + " table entry out of range");
    }
}

void check_structure(const RawTables& raw) {
    if (raw.size <= 0) throw malformed_table("size must be positive");
    check_square(raw.meet, raw.size, "meet");
    check_square(raw.join, raw.size, "join");
    check_square(raw.fusion, raw.size, "fusion");
    if (raw.arrow) check_square(*raw.arrow, raw.size, "arrow");
    if (raw.neg) {
        if (static_cast<int>(raw.neg->size()) != raw.size)
            throw malformed_table("neg map has wrong length");
        for (int v : *raw.neg)
            if (v < 0 || v >= raw.size) throw malformed_table("neg map entry out of range");
    }
    if (raw.e < 0 || raw.e >= raw.size) throw malformed_table("e out of range");
    if (!raw.names.empty() && static_cast<int>(raw.names.size()) != raw.size)
        throw malformed_table("names list has wrong length");
}

bool leq_raw(const RawTables& raw, int a, int b) { return raw.meet[a][b] == a; }

}  // namespace

bool lattice_laws(const RawTables& raw, std::vector<LawViolation>* out) {
    int n = raw.size;
    bool ok = true;
    auto report = [&](const std::string& law, std::vector<int> w) {
        ok = false;
        if (out) out->push_back({law, std::move(w)});
    };
    for (int x = 0; x < n; ++x) {
        if (raw.meet[x][x] != x) report("lattice.meet.idempotent", {x});
        if (raw.join[x][x] != x) report("lattice.join.idempotent", {x});
    }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (raw.meet[x][y] != raw.meet[y][x]) report("lattice.meet.commutative", {x, y});
            if (raw.join[x][y] != raw.join[y][x]) report("lattice.join.commutative", {x, y});
        }
    for (int x = 0; x < n && ok; ++x)
        for (int y = 0; y < n && ok; ++y) {
            if (raw.meet[x][raw.join[x][y]] != x) report("lattice.absorption", {x, y});
            if (raw.join[x][raw.meet[x][y]] != x) report("lattice.absorption", {x, y});
        }
    for (int x = 0; x < n && ok; ++x)
        for (int y = 0; y < n && ok; ++y)
            for (int z = 0; z < n; ++z) {
                if (raw.meet[raw.meet[x][y]][z] != raw.meet[x][raw.meet[y][z]]) {
                    report("lattice.meet.associative", {x, y, z});
                    break;
                }
                if (raw.join[raw.join[x][y]][z] != raw.join[x][raw.join[y][z]]) {
                    report("lattice.join.associative", {x, y, z});
                    break;
                }
            }
    return ok;
}

bool find_n5(const FiniteAlgebra& alg, std::vector<int>* witness) {
    int n = alg.size;
    // pentagon: o < a < c < i,  o < b < i,  b incomparable with a and c
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
            if (a == c || !alg.leq(a, c)) continue;
            for (int b = 0; b < n; ++b) {
                if (alg.leq(b, c) || alg.leq(a, b)) continue;
                int o = alg.meet[a][b];
                int i = alg.join[c][b];
                if (alg.meet[c][b] == o && alg.join[a][b] == i) {
                    if (witness) *witness = {o, a, c, b, i};
                    return true;
                }
            }
        }
    return false;
}

bool find_m3(const FiniteAlgebra& alg, std::vector<int>* witness) {
    int n = alg.size;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            int o = alg.meet[a][b];
            int i = alg.join[a][b];
            if (o == a || o == b) continue;
            for (int c = b + 1; c < n; ++c) {
                if (c == o || c == i) continue;
                if (alg.meet[a][c] == o && alg.meet[b][c] == o && alg.join[a][c] == i &&
                    alg.join[b][c] == i) {
                    if (witness) *witness = {o, a, b, c, i};
                    return true;
                }
            }
        }
    return false;
}

bool is_modular_lattice(const FiniteAlgebra& alg, std::vector<int>* witness) {
    return !find_n5(alg, witness);
}

bool is_distributive_lattice(const FiniteAlgebra& alg, std::vector<int>* witness) {
    // Forbidden-sublattice route; the direct law is cross-checked in tests.
    if (find_n5(alg, witness)) return false;
    if (find_m3(alg, witness)) return false;
    return true;
}

namespace {

/// Residual candidate x->z = max{y : x*y <= z}; returns false (with witness)
/// when some residual does not exist.
bool derive_arrow_from_residual(const RawTables& raw, Table* arrow, LawViolation* fail) {
    int n = raw.size;
    arrow->assign(n, std::vector<int>(n, 0));
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z) {
            int best = -1;
            for (int y = 0; y < n; ++y) {
                if (!leq_raw(raw, raw.fusion[x][y], z)) continue;
                if (best == -1)
                    best = y;
                else
                    best = raw.join[best][y];
            }
            // best must itself satisfy x*best <= z, else the set of
            // solutions is not join-closed and no residual exists.
            if (best == -1 || !leq_raw(raw, raw.fusion[x][best], z)) {
                if (fail) *fail = {"residuation.exists", {x, z}};
                return false;
            }
            (*arrow)[x][z] = best;
        }
    return true;
}

}  // namespace

ValidationOutcome validate(const RawTables& raw, AlgebraClass cls) {
    ops::touch("validate");
    check_structure(raw);
    ValidationOutcome out;
    auto fail = [&](const std::string& law, std::vector<int> w) {
        out.violations.push_back({law, std::move(w)});
    };

    if (!lattice_laws(raw, &out.violations)) return out;
    // order sanity: meet/join agree on comparability
    for (int x = 0; x < raw.size; ++x)
        for (int y = 0; y < raw.size; ++y)
            if ((raw.meet[x][y] == x) != (raw.join[x][y] == y)) {
                fail("lattice.order.consistency", {x, y});
                return out;
            }

    int n = raw.size;
    // commutative monoid
    for (int x = 0; x < n; ++x) {
        if (raw.fusion[raw.e][x] != x) fail("fusion.identity", {x});
        for (int y = x + 1; y < n; ++y)
            if (raw.fusion[x][y] != raw.fusion[y][x]) fail("fusion.commutative", {x, y});
    }
    bool assoc_ok = true;
    for (int x = 0; x < n && assoc_ok; ++x)
        for (int y = 0; y < n && assoc_ok; ++y)
            for (int z = 0; z < n; ++z)
                if (raw.fusion[raw.fusion[x][y]][z] != raw.fusion[x][raw.fusion[y][z]]) {
                    fail("fusion.associative", {x, y, z});
                    assoc_ok = false;
                    break;
                }

    bool want_neg = cls == AlgebraClass::IRL || cls == AlgebraClass::DMM ||
                    cls == AlgebraClass::MemberU || cls == AlgebraClass::MemberM;
    if (want_neg && !raw.neg) {
        fail("involution.present", {});
        return out;
    }

    if (raw.neg) {
        const auto& neg = *raw.neg;
        for (int x = 0; x < n; ++x)
            if (neg[neg[x]] != x) fail("involution.involutive", {x});
        // law (1): x*y <= z  iff  ~z*y <= ~x
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    bool l = leq_raw(raw, raw.fusion[x][y], z);
                    bool r = leq_raw(raw, raw.fusion[neg[z]][y], neg[x]);
                    if (l != r) {
                        fail("involution.law", {x, y, z});
                        x = y = n;  // one witness per law is enough here
                        break;
                    }
                }
    }

    if (!out.violations.empty()) return out;

    // arrow: derived from neg when involutive, from the residual otherwise
    Table arrow;
    if (raw.neg) {
        const auto& neg = *raw.neg;
        arrow.assign(n, std::vector<int>(n, 0));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) arrow[x][y] = neg[raw.fusion[x][neg[y]]];
    } else {
        LawViolation lv;
        if (!derive_arrow_from_residual(raw, &arrow, &lv)) {
            out.violations.push_back(lv);
            return out;
        }
    }
    if (raw.arrow && *raw.arrow != arrow) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if ((*raw.arrow)[x][y] != arrow[x][y]) {
                    fail("arrow.consistency", {x, y});
                    return out;
                }
    }

    // law (2): x*y <= z  iff  y <= x->z
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                bool l = leq_raw(raw, raw.fusion[x][y], z);
                bool r = leq_raw(raw, y, arrow[x][z]);
                if (l != r) {
                    fail("residuation", {x, y, z});
                    x = y = n;
                    break;
                }
            }
    if (!out.violations.empty()) return out;

    FiniteAlgebra alg;
    alg.size = n;
    alg.meet = raw.meet;
    alg.join = raw.join;
    alg.fusion = raw.fusion;
    alg.arrow = std::move(arrow);
    if (raw.neg) alg.neg = *raw.neg;
    alg.e = raw.e;
    alg.names = raw.names;

    bool want_sq = cls == AlgebraClass::Dunn || cls == AlgebraClass::DMM ||
                   cls == AlgebraClass::MemberU || cls == AlgebraClass::MemberM;
    bool want_dist = want_sq;
    if (want_sq) {
        for (int x = 0; x < n; ++x)
            if (!alg.leq(x, alg.fusion[x][x])) {
                fail("square_increasing", {x});
                break;
            }
    }
    if (want_dist) {
        std::vector<int> w;
        if (!is_distributive_lattice(alg, &w)) fail("lattice.distributive", w);
    }
    if (cls == AlgebraClass::MemberU || cls == AlgebraClass::MemberM) {
        LawViolation lv;
        if (cls == AlgebraClass::MemberU && !satisfies_u_axioms(alg, &lv))
            out.violations.push_back(lv);
        if (cls == AlgebraClass::MemberM && !satisfies_m_axioms(alg, &lv))
            out.violations.push_back(lv);
    }

    if (out.violations.empty()) out.algebra = std::move(alg);
    return out;
}

FiniteAlgebra validate_or_throw(const RawTables& raw, AlgebraClass cls,
                                const std::string& context) {
    auto outcome = validate(raw, cls);
    if (outcome.ok()) return *outcome.algebra;
    std::ostringstream os;
    os << "validation failed";
    if (!context.empty()) os << " for " << context;
    os << " (class " << to_string(cls) << "):";
    for (const auto& v : outcome.violations) os << " " << describe(v);
    throw error(os.str());
}

std::string describe(const LawViolation& v, const FiniteAlgebra* alg) {
    std::ostringstream os;
    os << v.law << " at (";
    for (size_t i = 0; i < v.witness.size(); ++i) {
        if (i) os << ",";
        if (alg)
            os << alg->name_of(v.witness[i]);
        else
            os << v.witness[i];
    }
    os << ")";
    return os.str();
}

const std::vector<NamedLaw>& derived_laws() {
    static const std::vector<NamedLaw> laws = {
        {"neg_via_arrow_f", true, false, false},
        {"fusion_neg_below_f", true, false, false},
        {"contraposition", true, false, false},
        {"fusion_via_arrow", true, false, false},
        {"three_conditions", true, false, false},
        {"modus_ponens", false, false, false},
        {"expansion", false, false, false},
        {"exchange", false, false, false},
        {"fusion_join_distributive", false, false, false},
        {"arrow_meet_distributive", false, false, false},
        {"join_arrow_distributive", false, false, false},
        {"isotonicity", false, false, false},
        {"order_via_e", false, false, false},
        {"equality_via_e", false, false, false},
        {"e_self_arrow", false, false, false},
        {"e_arrow_identity", false, false, false},
        {"bounds", false, false, true},
        {"meet_below_fusion", false, true, false},
        {"below_e_fusion_is_meet", false, true, false},
        {"contraction", false, true, false},
        {"excluded_middle", true, true, false},
        {"cube", true, true, false},
    };
    return laws;
}

std::vector<int> run_derived_law(const FiniteAlgebra& alg, const std::string& name) {
    auto x = t_var(0), y = t_var(1), z = t_var(2);
    auto eq = [&](TermPtr l, TermPtr r, Relation rel = Relation::Equals) {
        auto v = check_equation(alg, l, r, rel);
        return v.holds ? std::vector<int>{} : v.witness;
    };
    int n = alg.size;

    if (name == "neg_via_arrow_f") return eq(t_neg(x), t_arrow(x, t_f()));
    if (name == "fusion_neg_below_f") return eq(t_fuse(x, t_neg(x)), t_f(), Relation::Leq);
    if (name == "contraposition") return eq(t_arrow(x, y), t_arrow(t_neg(y), t_neg(x)));
    if (name == "fusion_via_arrow") return eq(t_fuse(x, y), t_neg(t_arrow(x, t_neg(y))));
    if (name == "three_conditions") {
        for (int a = 0; a < n; ++a) {
            bool c1 = alg.leq(alg.e, a) && alg.fusion[a][a] == a;
            bool c2 = alg.fusion[a][alg.neg[a]] == alg.neg[a];
            bool c3 = alg.arrow[a][a] == a;
            if (c1 != c2 || c2 != c3) return {a};
        }
        return {};
    }
    if (name == "modus_ponens") return eq(t_fuse(x, t_arrow(x, y)), y, Relation::Leq);
    if (name == "expansion") return eq(x, t_arrow(t_arrow(x, y), y), Relation::Leq);
    if (name == "exchange") {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (alg.leq(a, alg.arrow[b][c]) != alg.leq(b, alg.arrow[a][c]))
                        return {a, b, c};
        return {};
    }
    if (name == "fusion_join_distributive")
        return eq(t_fuse(x, t_join(y, z)), t_join(t_fuse(x, y), t_fuse(x, z)));
    if (name == "arrow_meet_distributive")
        return eq(t_arrow(x, t_meet(y, z)), t_meet(t_arrow(x, y), t_arrow(x, z)));
    if (name == "join_arrow_distributive")
        return eq(t_arrow(t_join(x, y), z), t_meet(t_arrow(x, z), t_arrow(y, z)));
    if (name == "isotonicity") {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (!alg.leq(a, b)) continue;
                for (int c = 0; c < n; ++c) {
                    if (!alg.leq(alg.fusion[a][c], alg.fusion[b][c])) return {a, b, c};
                    if (!alg.leq(alg.arrow[c][a], alg.arrow[c][b])) return {a, b, c};
                    if (!alg.leq(alg.arrow[b][c], alg.arrow[a][c])) return {a, b, c};
                }
            }
        return {};
    }
    if (name == "order_via_e") {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (alg.leq(a, b) != alg.leq(alg.e, alg.arrow[a][b])) return {a, b};
        return {};
    }
    if (name == "equality_via_e") {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int biimp = alg.meet[alg.arrow[a][b]][alg.arrow[b][a]];
                if ((a == b) != alg.leq(alg.e, biimp)) return {a, b};
            }
        return {};
    }
    if (name == "e_self_arrow") return eq(t_e(), t_arrow(x, x), Relation::Leq);
    if (name == "e_arrow_identity") return eq(t_arrow(t_e(), x), x);
    if (name == "bounds") {
        int bot = alg.bottom(), top = alg.top();
        for (int a = 0; a < n; ++a) {
            if (alg.fusion[a][bot] != bot) return {a, bot};
            if (alg.arrow[bot][a] != top) return {bot, a};
            if (alg.arrow[a][top] != top) return {a, top};
        }
        if (alg.arrow[top][bot] != bot) return {top, bot};
        if (alg.fusion[top][top] != top) return {top, top};
        return {};
    }
    if (name == "meet_below_fusion") return eq(t_meet(x, y), t_fuse(x, y), Relation::Leq);
    if (name == "below_e_fusion_is_meet") {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (alg.leq(a, alg.e) && alg.leq(b, alg.e) &&
                    alg.fusion[a][b] != alg.meet[a][b])
                    return {a, b};
        return {};
    }
    if (name == "contraction")
        return eq(t_arrow(x, t_arrow(x, y)), t_arrow(x, y), Relation::Leq);
    if (name == "excluded_middle") return eq(t_e(), t_join(x, t_neg(x)), Relation::Leq);
    if (name == "cube") {
        auto d = derive(alg);
        for (int a = 0; a < n; ++a) {
            if (!alg.leq(d.f, a)) continue;
            int a2 = alg.fusion[a][a];
            if (alg.fusion[a2][a] != a2) return {a};
        }
        return {};
    }
    throw unknown_name("no derived law named " + name);
}

bool satisfies_u_axioms(const FiniteAlgebra& alg, LawViolation* first_failure) {
    auto x = t_var(0), y = t_var(1);
    // (19)
    auto v19 = check_equation(alg, t_join(t_pow(x, 2), t_pow(t_neg(x), 2)), t_one());
    if (!v19.holds) {
        if (first_failure) *first_failure = {"eq19.square_join", v19.witness};
        return false;
    }
    // (20)
    auto v20 = check_equation(alg, t_arrow(t_one(), t_join(x, y)),
                              t_join(t_arrow(t_one(), x), t_arrow(t_one(), y)), Relation::Leq);
    if (!v20.holds) {
        if (first_failure) *first_failure = {"eq20.one_join_irreducible", v20.witness};
        return false;
    }
    // (21)
    auto lhs = t_fuse(t_fuse(t_fuse(t_fuse(t_one(), x), y), t_q(x)), t_q(y));
    auto rhs = t_meet(t_meet(t_meet(t_q(t_fuse(x, y)), t_q(t_join(x, y))), t_q(t_arrow(x, y))),
                      t_fuse(t_one(), t_arrow(x, y)));
    auto v21 = check_equation(alg, lhs, rhs, Relation::Leq);
    if (!v21.holds) {
        if (first_failure) *first_failure = {"eq21.q_law", v21.witness};
        return false;
    }
    return true;
}

bool satisfies_m_axioms(const FiniteAlgebra& alg, LawViolation* first_failure) {
    auto d = derive(alg);
    // anti-idempotence: x <= f^2
    auto vai = check_equation(alg, t_var(0), t_one(), Relation::Leq);
    if (!vai.holds) {
        if (first_failure) *first_failure = {"anti_idempotent", vai.witness};
        return false;
    }
    if (!alg.leq(alg.e, d.f)) {
        if (first_failure) *first_failure = {"e_below_f", {alg.e, d.f}};
        return false;
    }
    // (22)
    auto x = t_var(0);
    auto lhs = t_arrow(t_join(t_arrow(t_f(), x), t_arrow(x, t_e())), t_zero());
    auto v22 = check_equation(alg, lhs, t_zero());
    if (!v22.holds) {
        if (first_failure) *first_failure = {"eq22.denominator", v22.witness};
        return false;
    }
    return true;
}

}  // namespace dmm
