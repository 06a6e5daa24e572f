#pragma once

// Exact Gaussian elimination over rational functions. Rank is the generic
// rank: a pivot is any entry that is not identically zero.

#include <optional>
#include <vector>

#include "ybpa/scalar.hpp"

namespace ybpa {

using Matrix = std::vector<std::vector<RationalFn>>;

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_identity(int n);
int mat_rank(Matrix m);
// Some solution of a x = b, or nullopt when inconsistent.
std::optional<std::vector<RationalFn>> mat_solve(Matrix a, std::vector<RationalFn> b);
RationalFn mat_det(Matrix m);

}  // namespace ybpa
