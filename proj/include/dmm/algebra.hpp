#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dmm {

using Table = std::vector<std::vector<int>>;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct malformed_table : error {
    using error::error;
};
struct signature_mismatch : error {
    using error::error;
};
struct not_involutive : error {
    using error::error;
};
struct not_crystalline : error {
    using error::error;
};
struct unknown_name : error {
    using error::error;
};
struct undefined_connective : error {
    using error::error;
};
struct inconsistent_partial : error {
    using error::error;
};
struct budget_exceeded : error {
    using error::error;
};
struct ill_defined_operation : error {
    using error::error;
};

/// Violation of a Def. 5.1-style side condition in a skew-order spec.
struct spec_violation : error {
    std::string clause;
    std::pair<int, int> witness;
    spec_violation(std::string clause_, std::pair<int, int> w, const std::string& msg)
        : error(msg), clause(std::move(clause_)), witness(w) {}
};

/// A finite algebra in the (involutive) residuated-lattice signature.
/// Elements are the indices 0..size-1.  The lattice order is derived from
/// the meet table (a <= b iff a/\b == a), never stored separately.
/// `neg` is empty for plain RLs; `arrow` is always populated after
/// validation (derived from fusion/neg for IRLs, from the residual for RLs).
struct FiniteAlgebra {
    int size = 0;
    Table meet;
    Table join;
    Table fusion;
    Table arrow;
    std::vector<int> neg;  // empty <=> plain RL
    int e = 0;
    std::vector<std::string> names;  // empty <=> unnamed

    bool involutive() const { return !neg.empty(); }

    bool leq(int a, int b) const { return meet[a][b] == a; }
    int fuse(int a, int b) const { return fusion[a][b]; }
    int imp(int a, int b) const { return arrow[a][b]; }
    int mt(int a, int b) const { return meet[a][b]; }
    int jn(int a, int b) const { return join[a][b]; }
    int neg_of(int a) const {
        if (!involutive()) throw not_involutive("negation requested on a plain RL");
        return neg[a];
    }

    int bottom() const;
    int top() const;

    bool covers(int b, int a) const;  // b covers a
    std::vector<int> covers_of(int a) const;
    std::vector<int> cocovers_of(int a) const;
    std::vector<int> atoms() const;
    std::vector<int> coatoms() const;
    std::vector<int> interval(int a, int b) const;
    std::vector<int> down_set(int a) const;  // (a]
    std::vector<int> up_set(int a) const;    // [a)

    bool join_irreducible(int a) const;
    bool meet_irreducible(int a) const;

    std::string name_of(int a) const;
};

/// f = neg(e), one = f^2, zero = neg(one), plus the lattice extrema.
struct DerivedConstants {
    int f = 0;
    int one = 0;
    int zero = 0;
    int bottom = 0;
    int top = 0;
};

/// Requires an involutive algebra.
DerivedConstants derive(const FiniteAlgebra& alg);

/// Same signature = both involutive or both plain.
inline bool same_signature(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    return a.involutive() == b.involutive();
}

}  // namespace dmm
