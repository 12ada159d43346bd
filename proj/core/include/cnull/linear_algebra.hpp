#pragma once

#include <optional>
#include <vector>

#include "cnull/rational.hpp"

namespace cnull {

using RatMatrix = std::vector<std::vector<Rat>>;

/// Exact Gauss-Jordan solve of A·x = b over Q. Returns one solution (free
/// unknowns set to zero) or std::nullopt if the system is inconsistent.
std::optional<std::vector<Rat>> solve_linear_system(RatMatrix a, std::vector<Rat> b);

}  // namespace cnull
