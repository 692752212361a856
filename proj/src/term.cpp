#include "dmm/term.hpp"

#include "dmm/ops.hpp"

#include <algorithm>

namespace dmm {

namespace {
TermPtr mk(Term::Kind k, TermPtr a = nullptr, TermPtr b = nullptr, int v = -1) {
    auto t = std::make_shared<Term>();
    t->kind = k;
    t->var = v;
    t->lhs = std::move(a);
    t->rhs = std::move(b);
    return t;
}
}  // namespace

TermPtr t_var(int i) { return mk(Term::Kind::Var, nullptr, nullptr, i); }
TermPtr t_e() { return mk(Term::Kind::E); }
TermPtr t_fuse(TermPtr a, TermPtr b) { return mk(Term::Kind::Fuse, std::move(a), std::move(b)); }
TermPtr t_arrow(TermPtr a, TermPtr b) { return mk(Term::Kind::Arrow, std::move(a), std::move(b)); }
TermPtr t_meet(TermPtr a, TermPtr b) { return mk(Term::Kind::Meet, std::move(a), std::move(b)); }
TermPtr t_join(TermPtr a, TermPtr b) { return mk(Term::Kind::Join, std::move(a), std::move(b)); }
TermPtr t_neg(TermPtr a) { return mk(Term::Kind::Neg, std::move(a)); }

TermPtr t_pow(TermPtr a, int n) {
    if (n == 0) return t_e();
    TermPtr acc = a;
    for (int i = 1; i < n; ++i) acc = t_fuse(acc, a);
    return acc;
}

TermPtr t_f() { return t_neg(t_e()); }
TermPtr t_one() { return t_pow(t_f(), 2); }
TermPtr t_zero() { return t_neg(t_one()); }
TermPtr t_q(TermPtr x) { return t_arrow(t_one(), t_pow(t_neg(std::move(x)), 2)); }

int term_vars(const TermPtr& t) {
    if (!t) return 0;
    int m = t->kind == Term::Kind::Var ? t->var + 1 : 0;
    return std::max({m, term_vars(t->lhs), term_vars(t->rhs)});
}

int eval(const FiniteAlgebra& alg, const TermPtr& t, const std::vector<int>& assignment) {
    switch (t->kind) {
        case Term::Kind::Var:
            return assignment.at(t->var);
        case Term::Kind::E:
            return alg.e;
        case Term::Kind::Fuse:
            return alg.fusion[eval(alg, t->lhs, assignment)][eval(alg, t->rhs, assignment)];
        case Term::Kind::Arrow:
            return alg.arrow[eval(alg, t->lhs, assignment)][eval(alg, t->rhs, assignment)];
        case Term::Kind::Meet:
            return alg.meet[eval(alg, t->lhs, assignment)][eval(alg, t->rhs, assignment)];
        case Term::Kind::Join:
            return alg.join[eval(alg, t->lhs, assignment)][eval(alg, t->rhs, assignment)];
        case Term::Kind::Neg:
            if (!alg.involutive())
                throw undefined_connective("negation used in a term over a plain RL");
            return alg.neg[eval(alg, t->lhs, assignment)];
    }
    throw error("unreachable term kind");
}

std::string to_string(const TermPtr& t) {
    switch (t->kind) {
        case Term::Kind::Var:
            return "x" + std::to_string(t->var);
        case Term::Kind::E:
            return "e";
        case Term::Kind::Fuse:
            return "(" + to_string(t->lhs) + "*" + to_string(t->rhs) + ")";
        case Term::Kind::Arrow:
            return "(" + to_string(t->lhs) + "->" + to_string(t->rhs) + ")";
        case Term::Kind::Meet:
            return "(" + to_string(t->lhs) + "/\\" + to_string(t->rhs) + ")";
        case Term::Kind::Join:
            return "(" + to_string(t->lhs) + "\\/" + to_string(t->rhs) + ")";
        case Term::Kind::Neg:
            return "~" + to_string(t->lhs);
    }
    return "?";
}

Verdict check_equation(const FiniteAlgebra& alg, const TermPtr& lhs, const TermPtr& rhs,
                       Relation rel) {
    ops::touch("check_equation");
    int k = std::max(term_vars(lhs), term_vars(rhs));
    std::vector<int> a(static_cast<size_t>(k), 0);
    while (true) {
        int l = eval(alg, lhs, a);
        int r = eval(alg, rhs, a);
        bool ok = rel == Relation::Equals ? l == r : alg.leq(l, r);
        if (!ok) return {false, a};
        int i = 0;
        for (; i < k; ++i) {
            if (++a[i] < alg.size) break;
            a[i] = 0;
        }
        if (i == k) break;
    }
    return {true, {}};
}

}  // namespace dmm
