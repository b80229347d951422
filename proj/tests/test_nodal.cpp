#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "e6kit/degeneration.hpp"
#include "e6kit/linalg.hpp"
#include "e6kit/nodal.hpp"

using namespace e6kit;

namespace {

NodalCurveModel preset_curve(const std::string& name) {
  const auto& p = section_preset(name);
  return build_curve(p.roots, p.points);
}

// Componentwise product of two sections given in a PolySystem layout.
RatVector product(const PolySystem& in, const RatVector& x, const RatVector& y, const PolySystem& out) {
  RatVector z(out.unknowns);
  for (int s = 0; s < kLineCount; ++s)
    for (int i = 0; i <= in.degree[s]; ++i)
      for (int j = 0; j <= in.degree[s]; ++j) z[out.offset[s] + i + j] += x[in.offset[s] + i] * y[in.offset[s] + j];
  return z;
}

bool satisfies(const PolySystem& sys, const RatVector& z) {
  for (const auto& row : sys.rows) {
    Rat dot = 0;
    for (std::size_t k = 0; k < z.size(); ++k) dot += row[k] * z[k];
    if (dot != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("curve model of the presets") {
  for (const auto& name : {"thm-2k5", "thm-petri"}) {
    auto c = preset_curve(name);
    CHECK(c.nodes.size() == 72);
    CHECK(c.genus() == 46);
    CHECK(c.dual_graph_connected());
    CHECK(std::accumulate(c.n.begin(), c.n.end(), 0) == 144);
    for (int s = 0; s < kLineCount; ++s) CHECK(static_cast<int>(c.component_roots[s].size()) == c.n[s]);
  }
}

TEST_CASE("2K - 5L preset") {
  auto c = preset_curve("thm-2k5");
  auto w = h0_omega(c);
  CHECK(w.ambient_dim == 117);
  CHECK(w.constraint_rank == 71);
  CHECK(w.dim == 46);
  auto w2 = h0_omega_sq(c);
  CHECK(w2.ambient_dim == 207);
  CHECK(w2.dim == 135);
  auto k5 = h0_2omega_minus_5L(c);
  CHECK(k5.ambient_dim == 72);
  CHECK(k5.dim == 0);
  CHECK(k5.warnings.empty());
}

TEST_CASE("polynomial and residue formulations agree") {
  for (const auto& name : {"thm-2k5", "thm-petri"}) {
    auto c = preset_curve(name);
    CHECK(h0_omega(c).dim == h0_omega_residues(c).dim);
    CHECK(residue_system(c).size() == kLineCount);
  }
}

TEST_CASE("omega node rows sum to zero") {
  auto c = preset_curve("thm-petri");
  auto sys = section_system(c, SectionKind::Omega);
  RatVector sum(sys.unknowns);
  for (const auto& row : sys.rows)
    for (std::size_t k = 0; k < row.size(); ++k) sum[k] += row[k];
  for (const auto& x : sum) CHECK(x == 0);
}

TEST_CASE("products of differentials are quadratic differentials") {
  auto c = preset_curve("thm-2k5");
  auto ws = section_system(c, SectionKind::Omega);
  auto w2s = section_system(c, SectionKind::OmegaSquared);
  auto basis = solve_system(ws, true).basis;
  REQUIRE(basis.size() == 46);
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (int t = 0; t < 12; ++t) {
    auto z = product(ws, basis[pick(rng)], basis[pick(rng)], w2s);
    CHECK(satisfies(w2s, z));
  }
}

TEST_CASE("dimensions do not depend on the order of the roots") {
  const auto& p = section_preset("thm-2k5");
  std::vector<std::size_t> perm(p.roots.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(17);
  for (int t = 0; t < 3; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Root> roots;
    std::vector<Rat> pts;
    for (auto i : perm) {
      roots.push_back(p.roots[i]);
      pts.push_back(p.points[i]);
    }
    auto c = build_curve(roots, pts);
    CHECK(h0_omega(c).dim == 46);
    CHECK(h0_omega_sq(c).dim == 135);
    CHECK(h0_2omega_minus_5L(c).dim == 0);
  }
}

TEST_CASE("Petri preset") {
  auto c = preset_curve("thm-petri");
  CHECK(h0_L(c).dim == 2);
  auto pr = petri_check(c);
  CHECK(pr.dim_omega == 46);
  CHECK(pr.dim_sub_q == 20);
  CHECK(pr.dim_sub_inv_q == 20);
  CHECK(pr.dim_sub_minus5 == 6);
  CHECK(pr.span_dim == 46);
  CHECK(pr.injective);
  CHECK_FALSE(h0_2omega_minus_5L(c).warnings.empty());

  // The (-5) part is residues constant along each double six, i.e. the
  // kernel of t -> sum t_i r_i.
  REQUIRE(pr.basis_minus5.size() == 6);
  RatMatrix t_rows;
  for (const auto& v : pr.basis_minus5) {
    RatVector t(c.roots.size());
    std::vector<bool> set(c.roots.size(), false);
    for (std::size_t k = 0; k < c.nodes.size(); ++k) {
      int i = c.nodes[k].root;
      if (!set[i]) {
        t[i] = v[k];
        set[i] = true;
      }
      CHECK(v[k] == t[i]);
    }
    t_rows.push_back(t);
  }
  auto kb = to_rational(kernel_basis(c.roots).basis);
  CHECK(rank(t_rows, c.roots.size()) == 6);
  RatMatrix both = t_rows;
  both.insert(both.end(), kb.begin(), kb.end());
  CHECK(rank(both, c.roots.size()) == 6);
}

TEST_CASE("bad inputs") {
  const auto& p = section_preset("thm-2k5");
  auto pts = p.points;
  pts[1] = pts[0];
  CHECK_THROWS_AS(build_curve(p.roots, pts), DegenerateInput);
  pts = p.points;
  pts[0] = 0;
  CHECK_THROWS_AS(build_curve(p.roots, pts), DegenerateInput);
  auto roots = p.roots;
  for (auto& r : roots) r = alpha(1, 2);
  CHECK_THROWS_AS(build_curve(roots, p.points), GenerationError);
  CHECK_THROWS_AS(section_preset("nope"), InputError);
  auto parsed = parse_points("1, -2, 3/4");
  REQUIRE(parsed.size() == 3);
  CHECK(parsed[2] == Rat(3, 4));
  CHECK_THROWS(parse_points("1,x"));
}
