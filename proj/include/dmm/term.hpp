#pragma once

#include "dmm/algebra.hpp"

#include <memory>
#include <vector>

namespace dmm {

/// Ground terms over variables, the constant e, and the connectives
/// of the signature.  x^n expands as x^0 = e, x^{n+1} = x^n * x.
struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    enum class Kind { Var, E, Fuse, Arrow, Meet, Join, Neg };
    Kind kind;
    int var = -1;
    TermPtr lhs;
    TermPtr rhs;
};

TermPtr t_var(int i);
TermPtr t_e();
TermPtr t_fuse(TermPtr a, TermPtr b);
TermPtr t_arrow(TermPtr a, TermPtr b);
TermPtr t_meet(TermPtr a, TermPtr b);
TermPtr t_join(TermPtr a, TermPtr b);
TermPtr t_neg(TermPtr a);
TermPtr t_pow(TermPtr a, int n);
/// f = neg e
TermPtr t_f();
/// one = f^2, zero = neg(f^2)   (the anti-idempotent bounds)
TermPtr t_one();
TermPtr t_zero();
/// q(x) = one -> (neg x)^2
TermPtr t_q(TermPtr x);

int term_vars(const TermPtr& t);  // 1 + max variable index, 0 if ground
int eval(const FiniteAlgebra& alg, const TermPtr& t, const std::vector<int>& assignment);
std::string to_string(const TermPtr& t);

enum class Relation { Equals, Leq };

struct Verdict {
    bool holds = true;
    std::vector<int> witness;  // first violating assignment, empty if holds
};

/// Exhaustive check over all size^k assignments.
Verdict check_equation(const FiniteAlgebra& alg, const TermPtr& lhs, const TermPtr& rhs,
                       Relation rel = Relation::Equals);

}  // namespace dmm
