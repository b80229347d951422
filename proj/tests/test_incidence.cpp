#include <doctest.h>

#include "e6kit/incidence.hpp"
#include "e6kit/linalg.hpp"
#include "e6kit/weyl.hpp"

using namespace e6kit;

namespace {

using Mat = std::array<std::array<long, kLineCount>, kLineCount>;

Mat as_mat(const IncidenceMatrix& d) {
  Mat m{};
  for (int i = 0; i < kLineCount; ++i)
    for (int j = 0; j < kLineCount; ++j) m[i][j] = d[i][j];
  return m;
}

Mat mul(const Mat& a, const Mat& b) {
  Mat c{};
  for (int i = 0; i < kLineCount; ++i)
    for (int k = 0; k < kLineCount; ++k)
      if (a[i][k])
        for (int j = 0; j < kLineCount; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Mat perm_matrix(const WeylElement& w) {
  Mat p{};
  for (int s = 0; s < kLineCount; ++s) p[w.perm[s]][s] = 1;
  return p;
}

}  // namespace

TEST_CASE("incidence from the pairing") {
  const auto& d = build_incidence();
  for (int s = 0; s < kLineCount; ++s) {
    int deg = 0;
    for (int t = 0; t < kLineCount; ++t) {
      CHECK(d[s][t] == (pairing(line(s).vec, line(t).vec) == 1 ? 1 : 0));
      CHECK(d[s][t] == d[t][s]);
      deg += d[s][t];
    }
    CHECK(d[s][s] == 0);
    CHECK(deg == 10);
  }
}

TEST_CASE("quadratic relation (D' + 5)(D' - 1) = 5J") {
  Mat d = as_mat(build_incidence());
  Mat d2 = mul(d, d);
  for (int i = 0; i < kLineCount; ++i)
    for (int j = 0; j < kLineCount; ++j) CHECK(d2[i][j] + 4 * d[i][j] - 5 * (i == j) == 5);
}

TEST_CASE("incidence commutes with the group") {
  Mat d = as_mat(build_incidence());
  for (const auto& w : all_reflections()) {
    Mat p = perm_matrix(w);
    CHECK(mul(p, d) == mul(d, p));
  }
}

TEST_CASE("eigenspaces on ker(deg)") {
  auto e = eigenspaces_on_ker_deg();
  CHECK(e.dim_plus1 == 20);
  CHECK(e.dim_minus5 == 6);
  CHECK(eigenspace_dim(10) == 1);
  CHECK(eigenspace_dim(1) == 20);
  CHECK(eigenspace_dim(-5) == 6);
  CHECK(eigenspace_dim(0) == 0);
  const auto& d = build_incidence();
  auto check_rows = [&](const IntMatrix& rows, int lambda) {
    for (const auto& v : rows) {
      Int sum = 0;
      for (const auto& x : v) sum += x;
      CHECK(sum == 0);
      for (int s = 0; s < kLineCount; ++s) {
        Int dv = 0;
        for (int t = 0; t < kLineCount; ++t) dv += d[s][t] * v[t];
        CHECK(dv == lambda * v[s]);
      }
    }
  };
  check_rows(e.basis_minus5, -5);
  check_rows(e.basis_plus1, 1);
  CHECK(rank(to_rational(e.basis_minus5), kLineCount) == 6);
  CHECK(rank(to_rational(e.basis_plus1), kLineCount) == 20);
}

TEST_CASE("reflection trace on the (-5)-part via the projector") {
  // P = (D' - 10)(D' - 1) / 90 projects onto the (-5)-eigenspace.
  Mat d = as_mat(build_incidence());
  Mat a{}, b{};
  for (int i = 0; i < kLineCount; ++i)
    for (int j = 0; j < kLineCount; ++j) {
      a[i][j] = d[i][j] - 10 * (i == j);
      b[i][j] = d[i][j] - (i == j);
    }
  Mat p90 = mul(a, b);
  long trace_id = 0;
  for (int i = 0; i < kLineCount; ++i) trace_id += p90[i][i];
  CHECK(trace_id == 6 * 90);
  for (const auto& w : all_reflections()) {
    Mat wp = mul(perm_matrix(w), p90);
    long tr = 0;
    for (int i = 0; i < kLineCount; ++i) tr += wp[i][i];
    CHECK(tr == 4 * 90);
  }
}

TEST_CASE("primitive rows") {
  RatMatrix m = {{Rat(1, 2), Rat(1, 3), 0}, {2, 4, -6}};
  auto p = primitive_rows(m);
  CHECK(p[0] == IntVector{3, 2, 0});
  CHECK(p[1] == IntVector{1, 2, -3});
}
