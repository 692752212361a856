#include "dmm/algebra.hpp"

#include "dmm/ops.hpp"

#include <algorithm>

namespace dmm {

int FiniteAlgebra::bottom() const {
    int b = 0;
    for (int i = 1; i < size; ++i)
        if (leq(i, b)) b = i;
    return b;
}

int FiniteAlgebra::top() const {
    int t = 0;
    for (int i = 1; i < size; ++i)
        if (leq(t, i)) t = i;
    return t;
}

bool FiniteAlgebra::covers(int b, int a) const {
    if (a == b || !leq(a, b)) return false;
    for (int c = 0; c < size; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) return false;
    return true;
}

std::vector<int> FiniteAlgebra::covers_of(int a) const {
    std::vector<int> out;
    for (int b = 0; b < size; ++b)
        if (covers(b, a)) out.push_back(b);
    return out;
}

std::vector<int> FiniteAlgebra::cocovers_of(int a) const {
    std::vector<int> out;
    for (int b = 0; b < size; ++b)
        if (covers(a, b)) out.push_back(b);
    return out;
}

std::vector<int> FiniteAlgebra::atoms() const {
    return covers_of(bottom());
}

std::vector<int> FiniteAlgebra::coatoms() const {
    return cocovers_of(top());
}

std::vector<int> FiniteAlgebra::interval(int a, int b) const {
    std::vector<int> out;
    for (int c = 0; c < size; ++c)
        if (leq(a, c) && leq(c, b)) out.push_back(c);
    return out;
}

std::vector<int> FiniteAlgebra::down_set(int a) const {
    std::vector<int> out;
    for (int c = 0; c < size; ++c)
        if (leq(c, a)) out.push_back(c);
    return out;
}

std::vector<int> FiniteAlgebra::up_set(int a) const {
    std::vector<int> out;
    for (int c = 0; c < size; ++c)
        if (leq(a, c)) out.push_back(c);
    return out;
}

bool FiniteAlgebra::join_irreducible(int a) const {
    if (a == bottom()) return false;
    for (int x = 0; x < size; ++x)
        for (int y = x; y < size; ++y)
            if (x != a && y != a && join[x][y] == a) return false;
    return true;
}

bool FiniteAlgebra::meet_irreducible(int a) const {
    if (a == top()) return false;
    for (int x = 0; x < size; ++x)
        for (int y = x; y < size; ++y)
            if (x != a && y != a && meet[x][y] == a) return false;
    return true;
}

std::string FiniteAlgebra::name_of(int a) const {
    if (!names.empty()) return names[a];
    return std::to_string(a);
}

DerivedConstants derive(const FiniteAlgebra& alg) {
    ops::touch("derive");
    if (!alg.involutive()) throw not_involutive("derive: negation is absent");
    DerivedConstants d;
    d.f = alg.neg[alg.e];
    d.one = alg.fusion[d.f][d.f];
    d.zero = alg.neg[d.one];
    d.bottom = alg.bottom();
    d.top = alg.top();
    return d;
}

}  // namespace dmm
