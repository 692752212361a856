#pragma once

#include "dmm/algebra.hpp"
#include "dmm/laws.hpp"

#include <optional>

namespace dmm {

struct Flag {
    bool value = false;
    std::optional<LawViolation> witness;  // present when value is false
    explicit operator bool() const { return value; }
};

struct ClassificationReport {
    Flag is_lattice;
    Flag is_distributive;
    Flag is_modular;
    Flag is_rl;
    Flag is_irl;
    Flag is_square_increasing;
    Flag is_dunn;
    Flag is_dmm;
    Flag is_sugihara;
    Flag is_odd;
    Flag is_anti_idempotent;
    Flag is_bounded;
    Flag is_rigorously_compact;
    Flag is_totally_ordered;
    Flag is_semilinear;
    Flag is_fsi;
    Flag is_si;
    Flag is_simple;
    Flag in_u;
    Flag in_m;
    int filter_count = 0;
};

/// Requires a validated algebra.  is_si comes from the congruence lattice
/// (unique atom = monolith) and is cross-checked against the
/// largest-element-below-e criterion in the square-increasing case.
ClassificationReport classify(const FiniteAlgebra& alg);

}  // namespace dmm
