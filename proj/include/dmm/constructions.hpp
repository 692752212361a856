#pragma once

#include "dmm/algebra.hpp"
#include "dmm/laws.hpp"

#include <vector>

namespace dmm {

/// Upward-closed fusion-closed sublattice-filter containing e.
/// Members are kept sorted.
struct DeductiveFilter {
    std::vector<int> members;
    bool contains(int x) const;
    bool operator==(const DeductiveFilter&) const = default;
};

/// Partition of the carrier; block ids are 0-based, numbered by smallest
/// member, so representations are unique per partition.
struct Congruence {
    std::vector<int> block_of;
    int block_count = 0;
};

Congruence normalize_partition(std::vector<int> block_of);

/// Compatibility of a partition with every operation table.
bool is_congruence(const FiniteAlgebra& alg, const Congruence& theta);

struct ProductResult {
    FiniteAlgebra algebra;
    // decode[i] = tuple of factor indices for product element i
    std::vector<std::vector<int>> decode;
};

ProductResult direct_product(const std::vector<FiniteAlgebra>& factors);

struct SubalgebraResult {
    FiniteAlgebra algebra;
    std::vector<int> embedding;  // new index -> old index
};

SubalgebraResult subalgebra_generated(const FiniteAlgebra& alg, const std::vector<int>& seed);

/// Complete filter lattice, sorted by (size, members).  In the
/// square-increasing case every lattice filter [b), b <= e, qualifies; the
/// general path additionally tests fusion closure.  Both paths are
/// implemented and cross-checked in tests.
std::vector<DeductiveFilter> deductive_filters(const FiniteAlgebra& alg);
std::vector<DeductiveFilter> deductive_filters_general(const FiniteAlgebra& alg);

Congruence congruence_of_filter(const FiniteAlgebra& alg, const DeductiveFilter& g);
DeductiveFilter filter_of_congruence(const FiniteAlgebra& alg, const Congruence& theta);

std::vector<Congruence> congruence_lattice(const FiniteAlgebra& alg);

struct QuotientResult {
    FiniteAlgebra algebra;
    std::vector<int> block_rep;  // block id -> representative (min element)
    Congruence theta;
};

QuotientResult quotient(const FiniteAlgebra& alg, const DeductiveFilter& g);

/// Partial-order input for the skew reflection, on the fixed carrier layout
/// [B(0..k-1), B'(k..2k-1), 0 = 2k, 1 = 2k+1].
struct SkewOrderSpec {
    int b_size = 0;
    std::vector<std::vector<bool>> order;  // order[i][j] <=> i <= j
    int total() const { return 2 * b_size + 2; }
    int prime(int b) const { return b_size + b; }
    int zero() const { return 2 * b_size; }
    int one() const { return 2 * b_size + 1; }
};

/// Builds the spec whose only degree of freedom, the cross order between B
/// and B', is "b <= c' iff b*c in P".  P must be the set of elements whose
/// primed copies are to lie above e; P = B gives the reflection order,
/// P = {} leaves e and e' incomparable.
SkewOrderSpec skew_order_from_upset(const FiniteAlgebra& b, const std::vector<int>& p);

/// Throws spec_violation naming the first failed side condition (i)-(v).
void validate_skew_order(const FiniteAlgebra& b, const SkewOrderSpec& spec);

FiniteAlgebra skew_reflection(const FiniteAlgebra& b, const SkewOrderSpec& spec);
FiniteAlgebra reflection(const FiniteAlgebra& b);

Congruence congruence_reflect(const FiniteAlgebra& b, const Congruence& theta);

/// Adds new extrema bot/top with top*a = top for a != bot and ~bot = top.
/// Old element indices are preserved; bot = n, top = n+1.
FiniteAlgebra rigorous_extension(const FiniteAlgebra& alg);

struct DecompositionResult {
    FiniteAlgebra base;        // the RL on h^{-1}(e)
    SkewOrderSpec spec;        // order transported to the standard layout
    std::vector<int> carrier;  // layout position -> element of alg
};

/// Inverse of skew_reflection for SI rigorously compact crystalline
/// algebras.  Refuses (not_crystalline) when no hom to C4 exists, or when
/// the algebra is not rigorously compact (hom uniqueness would be lost).
DecompositionResult decompose_crystalline(const FiniteAlgebra& alg);

}  // namespace dmm
