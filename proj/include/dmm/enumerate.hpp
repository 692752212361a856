#pragma once

#include "dmm/algebra.hpp"
#include "dmm/laws.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dmm {

/// Structural constraints for exhaustive generation.  Satisfiability is not
/// checked up front; an unsatisfiable bundle just enumerates to an empty
/// result.
struct ConstraintBundle {
    AlgebraClass cls = AlgebraClass::DMM;
    int min_size = 1;
    int max_size = 6;
    bool simple = false;
    bool si = false;
    bool fsi = false;
    bool totally_ordered = false;
    bool anti_idempotent = false;
    std::optional<FiniteAlgebra> contains;
    std::optional<FiniteAlgebra> sole_proper;  // sole proper subalgebra, implies contains
    // budgets (spec defaults: full search 7, base-pinned search 10)
    int max_full_size = 7;
    int max_pinned_size = 10;
};

struct EnumerateOptions {
    bool parallel = false;
    int jobs = 0;           // 0 = library default
    std::uint64_t seed = 0; // shuffles exploration order only; output is canonical
};

struct EnumerationStats {
    long long job_count = 0;
    long long tables_accepted = 0;   // candidates surviving the table search
    long long emitted = 0;           // candidates surviving all constraint filters
    double milliseconds = 0.0;
};

struct EnumerationResult {
    std::vector<FiniteAlgebra> algebras;  // canonical representatives, sorted
    EnumerationStats stats;
};

/// Complete and duplicate-free up to isomorphism.  Pipeline: lattices
/// (distributivity enforced during lattice growth) -> involutions -> fusion
/// tables by backtracking -> full validation -> constraint filters ->
/// canonical-form dedup.
EnumerationResult enumerate_algebras(const ConstraintBundle& bundle,
                                     const EnumerateOptions& opts = {});

/// As enumerate_algebras, restricted to algebras containing the 0-generated
/// `base` as a subalgebra; the copy is pinned during table search.
EnumerationResult enumerate_extensions(const FiniteAlgebra& base, const ConstraintBundle& bundle,
                                       const EnumerateOptions& opts = {});

/// Idempotent, order-stable dedup by canonical form.
std::vector<FiniteAlgebra> canonical_dedupe(std::vector<FiniteAlgebra> algebras);

/// All lattices of the given size up to isomorphism, as (meet, join) pairs
/// packed into plain algebras (fusion = meet, e = bottom).  distributive_only
/// generates via ideal lattices of posets (complete through size 10);
/// otherwise all posets are filtered (size <= 8).
std::vector<FiniteAlgebra> generate_lattices(int size, bool distributive_only);

/// Antitone involutive bijections of a lattice.
std::vector<std::vector<int>> lattice_involutions(const FiniteAlgebra& lattice);

}  // namespace dmm
