#pragma once

// Dense exact linear algebra over the rationals. Sizes here are tiny (at most
// a few dozen rows), so plain Gauss-Jordan elimination is used throughout.

#include "latcover/arith.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace latcover::linalg {

using Matrix = std::vector<std::vector<Rational>>;

std::size_t rank(Matrix a);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(Matrix a);

/// A nonzero vector x with a * x = 0 for an (m x n) matrix of rank n - 1.
/// Throws DegenerateError when the rank is not n - 1.
std::vector<Rational> null_vector(Matrix a);

std::vector<Rational> multiply(const Matrix& a, const std::vector<Rational>& x);

}  // namespace latcover::linalg
