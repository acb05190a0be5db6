// Exact linear algebra over the rationals.
#pragma once

#include <map>
#include <vector>

#include "osa/core.hpp"

namespace osa {

using SparseIntRow = std::map<long, mpz_class>;
using Matrix = std::vector<std::vector<Q>>;

/// Rank by fraction-free elimination; rows are reduced to primitive content.
std::size_t rank_fraction_free(std::vector<SparseIntRow> rows);

struct Inertia {
  int positive = 0;
  int zero = 0;
  int negative = 0;
  /// Basis of the kernel, one vector per row.
  Matrix radical;
};

/// Signature by symmetric congruence elimination plus a kernel basis.
Inertia inertia(const Matrix& m);

Matrix nullspace(const Matrix& m);

}  // namespace osa
