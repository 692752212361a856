#pragma once

#include "dmm/algebra.hpp"
#include "dmm/constructions.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dmm {

struct Morphism {
    std::string source;
    std::string target;
    std::vector<int> map;
};

/// Re-checks the preservation certificate against the tables.
bool verify_morphism(const FiniteAlgebra& a, const FiniteAlgebra& b, const std::vector<int>& map);

/// Exhaustive, deduplicated, lexicographically sorted by map.  Backtracking
/// assigns images of a greedy generating set first and propagates closure.
std::vector<Morphism> find_homomorphisms(const FiniteAlgebra& a, const FiniteAlgebra& b);

std::vector<Morphism> find_embeddings(const FiniteAlgebra& a, const FiniteAlgebra& b);

bool is_crystalline(const FiniteAlgebra& a);

/// Bit-exact byte encoding of the tables under the lexicographically
/// minimal relabeling compatible with the refined invariant partition;
/// equal iff isomorphic.
using CanonicalForm = std::vector<std::uint8_t>;
CanonicalForm canonical_form(const FiniteAlgebra& a);
/// Unrestricted minimum over all (n-1)! relabelings fixing position 0 = e.
/// Also equal iff isomorphic; tests cross-check the two forms agree on
/// which pairs are isomorphic.
CanonicalForm canonical_form_bruteforce(const FiniteAlgebra& a);

bool is_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b);

struct RetractWitness {
    Morphism g;  // section  A -> B
    Morphism h;  // retraction B -> A, h o g = id_A
};

/// A retract certificate, or nullopt.  For 0-generated A the h o g = id
/// constraint is automatic, so any (g, h) pair works.
std::optional<RetractWitness> is_retract(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// Sg(empty): the smallest subalgebra.
SubalgebraResult zero_generated_core(const FiniteAlgebra& a);

/// Smallest seed (greedy) whose closure is the whole algebra.
std::vector<int> greedy_generating_set(const FiniteAlgebra& a);

FiniteAlgebra relabel(const FiniteAlgebra& a, const std::vector<int>& perm);  // perm: old -> new

}  // namespace dmm
