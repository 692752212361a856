#pragma once

#include "dmm/algebra.hpp"
#include "dmm/constructions.hpp"

#include <string>
#include <vector>

namespace dmm::catalog {

/// A fully known lattice + involution + e with a partially known fusion
/// table (-1 entries unknown), as read off a labeled Hasse diagram.
struct PartialAlgebra {
    int size = 0;
    Table meet;
    Table join;
    std::vector<int> neg;
    int e = 0;
    Table fusion;  // -1 = unknown
    std::vector<std::string> names;
};

/// All distributive square-increasing involutive residuated completions,
/// up to isomorphism, in canonical-form order.  Throws inconsistent_partial
/// when the diagram admits none (or when the known entries already clash).
std::vector<FiniteAlgebra> complete_partial(const PartialAlgebra& p);

/// Deterministic builders for the named algebras:
/// trivial, two, S3, C4, D4, two_plus, S3_plus, C4_plus, C4_sharp, T5, T6,
/// G1..G6, ext_C4_1..ext_C4_6, ext_D4_1, ext_D4_2.
/// Results are cached; every build is validated for its documented class.
const FiniteAlgebra& build(const std::string& name);

std::vector<std::string> names();

/// The four skew-order specs from the cover classification, keyed
/// case1..case4, together with the base they apply to (S3_plus, C4_plus,
/// T5, T6 respectively).
SkewOrderSpec case_order(const std::string& name, std::string* base_name = nullptr);

/// n-element Sugihara chain; S2 is the 2-element Boolean algebra.
FiniteAlgebra build_sugihara(int n, int bound = 15);

/// Totally ordered simple De Morgan monoid on 0 < 1 < 2 < ... < 2^{p+1}
/// with fusion = multiplication truncated at the top; |A_p| = p+3.
FiniteAlgebra build_Ap(int p, int bound = 11);

/// The 2p+2-element simple De Morgan monoid with D4 core and the three
/// exponent fusion rules; rigorously compact.
FiniteAlgebra build_Bp(int p, int bound = 11);

/// Resolves "A<p>", "B<p>", "S<n>" family patterns as well as catalog
/// names; used by the CLI.
FiniteAlgebra resolve(const std::string& name);

const PartialAlgebra& partial_spec(const std::string& name);  // ext_* diagrams

}  // namespace dmm::catalog
