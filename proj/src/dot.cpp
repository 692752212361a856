#include "dmm/dot.hpp"

#include <sstream>

namespace dmm {

std::string to_dot(const FiniteAlgebra& alg, const std::string& graph_name) {
    std::ostringstream os;
    os << "digraph \"" << graph_name << "\" {\n";
    os << "  rankdir=BT;\n  node [shape=circle, fontsize=11];\n";
    int f = -1, one = -1, zero = -1;
    if (alg.involutive()) {
        f = alg.neg[alg.e];
        one = alg.fusion[f][f];
        zero = alg.neg[one];
    }
    for (int x = 0; x < alg.size; ++x) {
        std::string label = alg.name_of(x);
        std::string extra;
        if (x == alg.e) extra += " e";
        if (x == f && f != alg.e) extra += " f";
        if (x == one) extra += " 1";
        if (x == zero && zero != one) extra += " 0";
        os << "  n" << x << " [label=\"" << label << "\"";
        if (!extra.empty()) os << ", xlabel=\"" << extra.substr(1) << "\", penwidth=2";
        os << "];\n";
    }
    for (int a = 0; a < alg.size; ++a)
        for (int b = 0; b < alg.size; ++b)
            if (alg.covers(b, a)) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace dmm
