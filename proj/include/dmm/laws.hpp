#pragma once

#include "dmm/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dmm {

/// Raw table bundle as it arrives from JSON or a construction, prior to
/// validation.  `arrow` is optional: when present it is cross-checked
/// against the derived residual (IRL) or residual candidate (RL).
struct RawTables {
    int size = 0;
    Table meet;
    Table join;
    Table fusion;
    std::optional<std::vector<int>> neg;
    std::optional<Table> arrow;
    int e = 0;
    std::vector<std::string> names;
};

RawTables to_raw(const FiniteAlgebra& alg);

enum class AlgebraClass {
    RL,
    IRL,
    Dunn,  // distributive square-increasing RL
    DMM,   // distributive square-increasing IRL
    MemberU,
    MemberM,
};

AlgebraClass algebra_class_from_string(const std::string& s);
std::string to_string(AlgebraClass c);

struct LawViolation {
    std::string law;
    std::vector<int> witness;
};

/// Result of validate(): either a usable algebra (arrow filled in) or the
/// list of violated axioms, each with a witness tuple re-checkable against
/// the input tables.
struct ValidationOutcome {
    std::optional<FiniteAlgebra> algebra;
    std::vector<LawViolation> violations;
    bool ok() const { return algebra.has_value() && violations.empty(); }
};

/// Structural problems (ragged tables, indices out of range) throw
/// malformed_table; axiom failures are reported in the outcome.
ValidationOutcome validate(const RawTables& raw, AlgebraClass cls);

/// Shorthand that throws dmm::error when validation fails.
FiniteAlgebra validate_or_throw(const RawTables& raw, AlgebraClass cls,
                                const std::string& context = "");

std::string describe(const LawViolation& v, const FiniteAlgebra* alg = nullptr);

// Individual checks reused by classify().  All assume well-formed tables.
bool lattice_laws(const RawTables& raw, std::vector<LawViolation>* out);
bool is_distributive_lattice(const FiniteAlgebra& alg, std::vector<int>* witness);
bool is_modular_lattice(const FiniteAlgebra& alg, std::vector<int>* witness);
/// Forbidden-sublattice route: searches for a pentagon (N5) or diamond (M3)
/// sublattice; returns the 5-tuple when found.
bool find_n5(const FiniteAlgebra& alg, std::vector<int>* witness);
bool find_m3(const FiniteAlgebra& alg, std::vector<int>* witness);

/// The derived-law battery: every law provable for the class is runnable on
/// a validated algebra and must hold.
struct NamedLaw {
    std::string name;
    bool irl_only = false;
    bool square_increasing_only = false;
    bool bounded_only = false;
};

const std::vector<NamedLaw>& derived_laws();
/// Returns the first violating assignment or empty when the law holds.
std::vector<int> run_derived_law(const FiniteAlgebra& alg, const std::string& name);

/// Equations (19)-(21): x^2 \/ (~x)^2 = 1;  1->(x\/y) <= (1->x)\/(1->y);
/// 1*x*y*q(x)*q(y) <= q(x*y) /\ q(x\/y) /\ q(x->y) /\ (1*(x->y)).
bool satisfies_u_axioms(const FiniteAlgebra& alg, LawViolation* first_failure);
/// e <= f together with equation (22): ((f->x) \/ (x->e)) -> 0 = 0.
bool satisfies_m_axioms(const FiniteAlgebra& alg, LawViolation* first_failure);

}  // namespace dmm
