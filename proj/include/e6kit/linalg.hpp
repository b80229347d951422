#pragma once

#include "e6kit/exact.hpp"

#include <cstddef>
#include <vector>

namespace e6kit {

struct Echelon {
  RatMatrix rows;               // reduced rows, pivot entries equal to 1
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form over Q. Rows shorter than ncols are padded.
Echelon rref(RatMatrix m, std::size_t ncols);

std::size_t rank(RatMatrix m, std::size_t ncols);

// Basis of {x : m x = 0}, one vector per free column, in column order.
RatMatrix nullspace(const RatMatrix& m, std::size_t ncols);

// Solves m x = b when solvable; returns false otherwise.
bool solve(const RatMatrix& m, const RatVector& b, RatVector& x);

// Fraction-free (Bareiss) determinant of a square integer matrix.
Int determinant(IntMatrix m);

// Diagonal of the Smith normal form, nonzero entries only, ascending by
// divisibility.
std::vector<Int> smith_diagonal(IntMatrix m);

// Row Hermite normal form: rows ordered by pivot column, positive pivots,
// entries above each pivot reduced into [0, pivot). Zero rows are dropped.
IntMatrix hermite_rows(IntMatrix m);

// Z-basis of {x in Z^n : m x = 0} returned as rows in Hermite normal form.
IntMatrix integer_kernel(const IntMatrix& m, std::size_t ncols);

RatMatrix to_rational(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& m);

}  // namespace e6kit
