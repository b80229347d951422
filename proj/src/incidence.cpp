#include "e6kit/incidence.hpp"

#include "e6kit/linalg.hpp"

namespace e6kit {

const IncidenceMatrix& build_incidence() {
  static const IncidenceMatrix d = [] {
    IncidenceMatrix m{};
    const auto& lines = enumerate_lines();
    for (int s = 0; s < kLineCount; ++s)
      for (int t = 0; t < kLineCount; ++t) m[s][t] = pairing(lines[s].vec, lines[t].vec) == 1 ? 1 : 0;
    return m;
  }();
  return d;
}

namespace {

RatMatrix shifted(int lambda) {
  const auto& d = build_incidence();
  RatMatrix m(kLineCount, RatVector(kLineCount));
  for (int s = 0; s < kLineCount; ++s)
    for (int t = 0; t < kLineCount; ++t) m[s][t] = d[s][t] - (s == t ? lambda : 0);
  return m;
}

}  // namespace

IntMatrix primitive_rows(const RatMatrix& m) {
  IntMatrix out;
  for (const auto& row : m) {
    Int den = 1;
    for (const auto& x : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    IntVector v;
    Int g = 0;
    for (const auto& x : row) {
      Rat y = x * den;
      v.push_back(y.get_num());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_num_mpz_t());
    }
    if (g > 1)
      for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    out.push_back(std::move(v));
  }
  return out;
}

int eigenspace_dim(int lambda) {
  return kLineCount - static_cast<int>(rank(shifted(lambda), kLineCount));
}

Eigenspaces eigenspaces_on_ker_deg() {
  Eigenspaces e;
  for (int lambda : {1, -5}) {
    RatMatrix m = shifted(lambda);
    m.push_back(RatVector(kLineCount, Rat(1)));  // degree
    IntMatrix basis = primitive_rows(nullspace(m, kLineCount));
    if (lambda == 1) {
      e.dim_plus1 = static_cast<int>(basis.size());
      e.basis_plus1 = std::move(basis);
    } else {
      e.dim_minus5 = static_cast<int>(basis.size());
      e.basis_minus5 = std::move(basis);
    }
  }
  return e;
}

}  // namespace e6kit
