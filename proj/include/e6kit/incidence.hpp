#pragma once

#include "e6kit/exact.hpp"
#include "e6kit/lattice.hpp"

#include <array>

namespace e6kit {

// D'[s][t] = 1 iff (l_s, l_t) = 1.
using IncidenceMatrix = std::array<std::array<int, kLineCount>, kLineCount>;

const IncidenceMatrix& build_incidence();

struct Eigenspaces {
  int dim_plus1 = 0;
  int dim_minus5 = 0;
  IntMatrix basis_plus1;   // rows, integral, inside ker(deg)
  IntMatrix basis_minus5;
};

// Eigenspaces of D' restricted to ker(deg) = {v : sum v_s = 0}.
Eigenspaces eigenspaces_on_ker_deg();

// Dimension of ker(D' - lambda) on all of Q^27.
int eigenspace_dim(int lambda);

// Clears denominators and divides out the content of each row.
IntMatrix primitive_rows(const RatMatrix& m);

}  // namespace e6kit
