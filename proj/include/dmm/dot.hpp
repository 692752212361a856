#pragma once

#include "dmm/algebra.hpp"

#include <string>

namespace dmm {

/// Hasse diagram in DOT, bottom-up, with e, f, 0 (= ~f^2) and 1 (= f^2)
/// highlighted when they exist.
std::string to_dot(const FiniteAlgebra& alg, const std::string& graph_name = "algebra");

}  // namespace dmm
