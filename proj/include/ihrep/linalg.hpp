#pragma once

#include "ihrep/rational.hpp"

#include <cstddef>
#include <vector>

namespace ihrep {

/// Row-major dense matrix over Q.
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank by fraction-exact Gaussian elimination.
std::size_t rank(RationalMatrix m);

/// Basis of {x : m x = 0}; `columns` is needed when m has no rows.
std::vector<std::vector<Rational>> kernel_basis(RationalMatrix m, std::size_t columns);

}  // namespace ihrep
