#include <doctest.h>

#include <json.hpp>
#include <set>

#include "e6kit/degeneration.hpp"
#include "e6kit/linalg.hpp"
#include "e6kit/verify.hpp"

using namespace e6kit;

namespace {

std::string tree_json(const CoverTree& t) {
  nlohmann::json j;
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : t.edges) j["edges"].push_back({t.vertex_names[u], t.vertex_names[v]});
  for (int k : t.outer) j["outer"].push_back(t.vertex_names[k]);
  j["base"] = t.vertex_names[t.base];
  return j.dump();
}

Int abs_det(const std::vector<Root>& roots, const CoverTree& t, const IntMatrix* g = nullptr) {
  auto kb = kernel_basis(roots);
  if (g) kb = change_basis(kb, *g);
  return abs(independence_determinant(normalize(monodromy_matrices(edge_functionals(t, kb)))));
}

}  // namespace

TEST_CASE("kernel basis of the preset") {
  const auto& roots = dominance_preset();
  REQUIRE(roots.size() == 12);
  CHECK(generates_e6(roots));
  auto kb = kernel_basis(roots);
  REQUIRE(kb.basis.size() == 6);
  for (const auto& row : kb.basis) {
    LatticeVector sum;
    for (std::size_t i = 0; i < roots.size(); ++i) sum += roots[i].vec * row[i].get_si();
    CHECK(sum == LatticeVector{});
  }
  // Saturated: the rows span a direct summand of Z^12.
  auto sd = smith_diagonal(kb.basis);
  REQUIRE(sd.size() == 6);
  for (const auto& x : sd) CHECK(x == 1);
}

TEST_CASE("non-generating root lists are rejected") {
  std::vector<Root> a5 = {alpha(1, 2), alpha(2, 3), alpha(3, 4), alpha(4, 5), alpha(5, 6)};
  CHECK_FALSE(generates_e6(a5));
  CHECK_THROWS_AS(kernel_basis(a5), GenerationError);
  // A2^3 has index 3 in E6.
  std::vector<Root> a2cube = {simple_roots()[0], simple_roots()[1], simple_roots()[2],
                              simple_roots()[3], simple_roots()[5], simple_roots()[6]};
  try {
    kernel_basis(a2cube);
    FAIL("expected GenerationError");
  } catch (const GenerationError& e) {
    REQUIRE(!e.elementary_divisors.empty());
    CHECK(e.elementary_divisors.back() == 3);
  }
}

TEST_CASE("trees") {
  auto paired = build_tree(TreeShape::Paired);
  auto cat = build_tree(TreeShape::Caterpillar);
  for (const auto* t : {&paired, &cat}) {
    CHECK(t->edges.size() == kTreeEdges);
    CHECK(t->vertex_names.size() == kTreeEdges + 1);
    CHECK_NOTHROW(validate_tree(*t));
    for (int k = 0; k < kTreeLeaves; ++k) CHECK(!path_to_leaf(*t, k).empty());
  }
  CHECK(paired.vertex_names[paired.base] == "S2");
  CHECK(cat.vertex_names[cat.base] == "I1");
  CHECK(parse_tree_shape("caterpillar") == TreeShape::Caterpillar);
  CHECK_THROWS_AS(parse_tree_shape("star"), InputError);
  CHECK_THROWS_AS(paired.vertex("nope"), InputError);
}

TEST_CASE("tree JSON round trip and malformed input") {
  auto t = build_tree();
  auto back = tree_from_json(tree_json(t));
  REQUIRE(back.edges.size() == t.edges.size());
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    CHECK(back.vertex_names[back.edges[e].first] == t.vertex_names[t.edges[e].first]);
    CHECK(back.vertex_names[back.edges[e].second] == t.vertex_names[t.edges[e].second]);
  }
  CHECK(abs_det(dominance_preset(), back) == 4096);

  CHECK_THROWS_AS(tree_from_json("{"), InputError);
  CHECK_THROWS_AS(tree_from_json(R"({"edges": [], "outer": [], "base": "x"})"), InputError);
  auto j = nlohmann::json::parse(tree_json(t));
  j["edges"].erase(j["edges"].begin());
  CHECK_THROWS_AS(tree_from_json(j.dump()), InputError);
  j = nlohmann::json::parse(tree_json(t));
  j["outer"][1] = j["outer"][0];
  CHECK_THROWS_AS(tree_from_json(j.dump()), InputError);
}

TEST_CASE("dominance determinant") {
  auto cert = dominance_certificate(dominance_preset(), build_tree(TreeShape::Paired));
  CHECK(cert.nonzero);
  CHECK(cert.power_of_two);
  CHECK(cert.matches_target);
  CHECK(abs(cert.det) == 4096);
  CHECK(cert.normalized.size() == kTreeEdges);

  auto cat = dominance_certificate(dominance_preset(), build_tree(TreeShape::Caterpillar));
  CHECK(cat.det == 0);
  CHECK_FALSE(cat.pass());
}

TEST_CASE("monodromy matrices are symmetric and divisible by 6") {
  auto kb = kernel_basis(dominance_preset());
  auto ms = monodromy_matrices(edge_functionals(build_tree(), kb));
  REQUIRE(ms.size() == kTreeEdges);
  for (const auto& m : ms)
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        CHECK(m[i][j] == m[j][i]);
        CHECK(m[i][j] % 6 == 0);
      }
  CHECK(sym2_matrix(normalize(ms)).size() == kTreeEdges);
}

TEST_CASE("determinant is independent of base point and kernel basis") {
  auto t = build_tree();
  for (std::size_t v = 0; v < t.vertex_names.size(); v += 5)
    CHECK(abs_det(dominance_preset(), with_base(t, static_cast<int>(v))) == 4096);
  IntMatrix g(6, IntVector(6, 0));
  for (int i = 0; i < 6; ++i) g[i][i] = 1;
  g[0][3] = 2;
  g[4][1] = -1;
  std::swap(g[2], g[5]);
  CHECK(abs_det(dominance_preset(), t, &g) == 4096);
}

TEST_CASE("cover graph") {
  const auto& roots = dominance_preset();
  CHECK(cover_graph_edges(roots).size() == 72);
  CHECK(cover_graph_genus(roots) == 46);
  CHECK(cover_graph_connected(roots));
}

TEST_CASE("degeneration block") {
  for (const auto& r : {alpha_max(), alpha(1, 2), alpha(2, 4, 6)}) {
    auto b = degeneration_block(r);
    REQUIRE(b.size() == 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) CHECK(b[i][j] == (i == j ? 0 : -1));
  }
}

TEST_CASE("corrupted dominance roots fail criterion 6") {
  VerifyOptions opt;
  auto bad = dominance_preset();
  bad[11] = bad[10];
  opt.dominance_roots = bad;
  auto checks = run_criterion(6, opt);
  CHECK_FALSE(criterion_passed(checks, 6));

  opt.dominance_roots = dominance_preset();
  CHECK(criterion_passed(run_criterion(6, opt), 6));
}
