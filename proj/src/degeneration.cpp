#include "e6kit/degeneration.hpp"

#include "e6kit/incidence.hpp"
#include "e6kit/linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <queue>

namespace e6kit {

int CoverTree::vertex(const std::string& name) const {
  auto it = std::find(vertex_names.begin(), vertex_names.end(), name);
  if (it == vertex_names.end()) throw InputError("tree: unknown vertex '" + name + "'");
  return static_cast<int>(it - vertex_names.begin());
}

namespace {

struct TreeBuilder {
  CoverTree t;
  int add_vertex(const std::string& name) {
    t.vertex_names.push_back(name);
    return static_cast<int>(t.vertex_names.size()) - 1;
  }
  int id(const std::string& name) {
    auto it = std::find(t.vertex_names.begin(), t.vertex_names.end(), name);
    return it == t.vertex_names.end() ? add_vertex(name) : static_cast<int>(it - t.vertex_names.begin());
  }
  void edge(const std::string& from, const std::string& to) { t.edges.emplace_back(id(from), id(to)); }
};

std::string leaf(int k) { return "R" + std::to_string(k + 1); }

std::vector<std::vector<std::pair<int, int>>> adjacency(const CoverTree& t) {
  // vertex -> (neighbor, edge index)
  std::vector<std::vector<std::pair<int, int>>> adj(t.vertex_names.size());
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    auto [u, v] = t.edges[e];
    adj[u].emplace_back(v, static_cast<int>(e));
    adj[v].emplace_back(u, static_cast<int>(e));
  }
  return adj;
}

}  // namespace

CoverTree build_tree(TreeShape shape) {
  TreeBuilder b;
  for (int k = 0; k < kTreeLeaves; ++k) b.add_vertex(leaf(k));
  if (shape == TreeShape::Paired) {
    b.t.shape = "paired";
    for (int c = 0; c < 6; ++c) {
      std::string cherry = "C" + std::to_string(c + 1);
      b.edge(cherry, leaf(2 * c));
      b.edge(cherry, leaf(2 * c + 1));
    }
    b.edge("S1", "C1");
    b.edge("S1", "C2");
    b.edge("S2", "C3");
    b.edge("S3", "C4");
    b.edge("S4", "C5");
    b.edge("S4", "C6");
    b.edge("S2", "S1");
    b.edge("S2", "S3");
    b.edge("S3", "S4");
    b.t.base = b.id("S2");
  } else {
    b.t.shape = "caterpillar";
    b.edge("I1", leaf(0));
    b.edge("I1", leaf(1));
    for (int k = 2; k <= 9; ++k) b.edge("I" + std::to_string(k), leaf(k));
    b.edge("I10", leaf(10));
    b.edge("I10", leaf(11));
    for (int k = 1; k < 10; ++k) b.edge("I" + std::to_string(k), "I" + std::to_string(k + 1));
    b.t.base = b.id("I1");
  }
  for (int k = 0; k < kTreeLeaves; ++k) b.t.outer[k] = k;
  validate_tree(b.t);
  return b.t;
}

TreeShape parse_tree_shape(const std::string& name) {
  if (name == "paired") return TreeShape::Paired;
  if (name == "caterpillar") return TreeShape::Caterpillar;
  throw InputError("unknown tree shape '" + name + "' (expected paired or caterpillar)");
}

CoverTree tree_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("tree file: ") + e.what());
  }
  TreeBuilder b;
  b.t.shape = "custom";
  try {
    const auto& outer = j.at("outer");
    if (!outer.is_array() || outer.size() != kTreeLeaves) throw InputError("tree: 'outer' must list 12 vertices");
    for (std::size_t k = 0; k < outer.size(); ++k) b.t.outer[k] = b.id(outer[k].get<std::string>());
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("tree: each edge must be a pair of vertex names");
      b.edge(e[0].get<std::string>(), e[1].get<std::string>());
    }
    b.t.base = j.contains("base") ? b.t.vertex(j.at("base").get<std::string>()) : b.t.outer[0];
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("tree file: ") + e.what());
  }
  std::vector<int> sorted(b.t.outer.begin(), b.t.outer.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("tree: outer vertices must be distinct");
  validate_tree(b.t);
  return b.t;
}

void validate_tree(const CoverTree& t) {
  const std::size_t n = t.vertex_names.size();
  if (t.edges.size() != kTreeEdges)
    throw InputError("tree: expected 21 internal edges, got " + std::to_string(t.edges.size()));
  if (n != kTreeEdges + 1) throw InputError("tree: expected 22 vertices, got " + std::to_string(n));
  if (t.base < 0 || static_cast<std::size_t>(t.base) >= n) throw InputError("tree: base vertex out of range");
  auto adj = adjacency(t);
  std::vector<bool> is_outer(n, false);
  for (int v : t.outer) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw InputError("tree: outer vertex out of range");
    is_outer[v] = true;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t want = is_outer[v] ? 1 : 3;
    if (adj[v].size() != want)
      throw InputError("tree: vertex '" + t.vertex_names[v] + "' has degree " + std::to_string(adj[v].size()) +
                       ", expected " + std::to_string(want));
  }
  for (const auto& [u, v] : t.edges)
    if (u == v) throw InputError("tree: loop at '" + t.vertex_names[u] + "'");
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [w, e] : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  // 22 vertices, 21 edges and connected: a tree.
  if (count != n) throw InputError("tree: graph is not connected");
}

CoverTree with_base(CoverTree t, int base_vertex) {
  if (base_vertex < 0 || static_cast<std::size_t>(base_vertex) >= t.vertex_names.size())
    throw InputError("tree: base vertex out of range");
  t.base = base_vertex;
  return t;
}

std::vector<std::pair<int, int>> path_to_leaf(const CoverTree& t, int k) {
  auto adj = adjacency(t);
  const int target = t.outer.at(k);
  std::vector<int> via_edge(t.vertex_names.size(), -1), prev(t.vertex_names.size(), -1);
  std::vector<bool> seen(t.vertex_names.size(), false);
  std::queue<int> q;
  q.push(t.base);
  seen[t.base] = true;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (auto [w, e] : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        prev[w] = v;
        via_edge[w] = e;
        q.push(w);
      }
  }
  std::vector<std::pair<int, int>> path;
  for (int v = target; v != t.base; v = prev[v]) {
    int e = via_edge[v];
    path.emplace_back(e, t.edges[e].second == v ? 1 : -1);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

IntMatrix coordinate_matrix(const std::vector<Root>& roots) {
  IntMatrix m(6, IntVector(roots.size()));
  for (std::size_t k = 0; k < roots.size(); ++k) {
    auto c = simple_coordinates(roots[k].vec);
    for (int i = 0; i < 6; ++i) m[i][k] = static_cast<long>(c[i]);
  }
  return m;
}

}  // namespace

std::vector<Int> generation_divisors(const std::vector<Root>& roots) {
  auto d = smith_diagonal(coordinate_matrix(roots));
  while (d.size() < 6) d.push_back(0);
  return d;
}

bool generates_e6(const std::vector<Root>& roots) {
  for (const auto& x : generation_divisors(roots))
    if (x != 1) return false;
  return true;
}

KernelBasis kernel_basis(const std::vector<Root>& roots) {
  for (const auto& r : roots)
    if (!is_root(r.vec)) throw InputError("kernel_basis: not a root " + r.vec.str());
  auto divisors = generation_divisors(roots);
  for (const auto& x : divisors)
    if (x != 1) {
      std::string s;
      for (const auto& y : divisors) s += (s.empty() ? "" : ",") + y.get_str();
      throw GenerationError("roots do not generate E6 over Z (elementary divisors " + s + ")", divisors);
    }
  KernelBasis kb;
  kb.roots = roots;
  kb.basis = integer_kernel(coordinate_matrix(roots), roots.size());
  return kb;
}

KernelBasis change_basis(const KernelBasis& kb, const IntMatrix& g) {
  KernelBasis out;
  out.roots = kb.roots;
  out.basis = multiply(g, kb.basis);
  return out;
}

EdgeFunctionals edge_functionals(const CoverTree& t, const KernelBasis& kb) {
  validate_tree(t);
  const std::size_t n = kb.roots.size();
  if (n != kTreeLeaves) throw InputError("edge_functionals: expected 12 roots");
  const std::size_t rk = kb.basis.size();
  // sign[k][i] = <p(R_k), e_i^*>
  std::vector<std::array<int, kTreeEdges>> sign(n);
  for (std::size_t k = 0; k < n; ++k) {
    sign[k].fill(0);
    for (auto [e, s] : path_to_leaf(t, static_cast<int>(k))) sign[k][e] = s;
  }
  const auto& lines = enumerate_lines();
  EdgeFunctionals f(kTreeEdges, IntMatrix(kLineCount, IntVector(rk)));
  for (int i = 0; i < kTreeEdges; ++i)
    for (int s = 0; s < kLineCount; ++s)
      for (std::size_t b = 0; b < rk; ++b) {
        Int v = 0;
        for (std::size_t k = 0; k < n; ++k) {
          if (sign[k][i] == 0) continue;
          long p = pairing(kb.roots[k].vec, lines[s].vec);
          if (p != 0) v += kb.basis[b][k] * (p * sign[k][i]);
        }
        f[i][s][b] = v;
      }
  return f;
}

std::vector<IntMatrix> monodromy_matrices(const EdgeFunctionals& funcs) {
  std::vector<IntMatrix> ms;
  for (const auto& fi : funcs) {
    const std::size_t rk = fi.empty() ? 0 : fi[0].size();
    IntMatrix m(rk, IntVector(rk));
    for (const auto& v : fi)
      for (std::size_t a = 0; a < rk; ++a)
        for (std::size_t b = 0; b < rk; ++b) m[a][b] += v[a] * v[b];
    for (const auto& row : m)
      for (const auto& x : row)
        if (x % 6 != 0) throw InternalError("monodromy matrix entry " + x.get_str() + " not divisible by 6");
    ms.push_back(std::move(m));
  }
  return ms;
}

std::vector<IntMatrix> normalize(const std::vector<IntMatrix>& ms) {
  std::vector<IntMatrix> out = ms;
  for (auto& m : out)
    for (auto& row : m)
      for (auto& x : row) {
        if (x % 6 != 0) throw InternalError("normalize: entry not divisible by 6");
        x /= 6;
      }
  return out;
}

IntMatrix sym2_matrix(const std::vector<IntMatrix>& normalized) {
  IntMatrix rows;
  for (const auto& m : normalized) {
    const std::size_t d = m.size();
    IntVector row;
    for (std::size_t a = 0; a < d; ++a) row.push_back(m[a][a]);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a + 1; b < d; ++b) row.push_back(m[a][b]);
    rows.push_back(std::move(row));
  }
  return rows;
}

Int independence_determinant(const std::vector<IntMatrix>& normalized) {
  IntMatrix s = sym2_matrix(normalized);
  if (s.size() != kTreeEdges || s[0].size() != kTreeEdges)
    throw InputError("independence_determinant: expected 21 forms on a rank-6 lattice");
  return determinant(std::move(s));
}

DominanceCertificate dominance_certificate(const std::vector<Root>& roots, const CoverTree& tree) {
  DominanceCertificate c;
  c.kernel = kernel_basis(roots);
  c.normalized = normalize(monodromy_matrices(edge_functionals(tree, c.kernel)));
  c.det = independence_determinant(c.normalized);
  c.nonzero = c.det != 0;
  Int a = abs(c.det);
  c.power_of_two = a > 0 && mpz_popcount(a.get_mpz_t()) == 1;
  c.matches_target = a == 4096;
  if (!c.nonzero)
    c.note = "determinant vanishes: the 21 forms are dependent for this tree and root list";
  else if (!c.matches_target && c.power_of_two)
    c.note = "|det| = 2^" + std::to_string(mpz_sizeinbase(a.get_mpz_t(), 2) - 1) +
             " differs from 2^12 by a power of 2 (Sym^2 coordinate convention)";
  else if (!c.matches_target)
    c.note = "|det| is not a power of 2";
  return c;
}

std::vector<CoverGraphEdge> cover_graph_edges(const std::vector<Root>& roots) {
  std::vector<CoverGraphEdge> edges;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (auto [a, b] : double_six(roots[i].vec)) edges.push_back({static_cast<int>(i), a, b});
  return edges;
}

int cover_graph_genus(const std::vector<Root>& roots) {
  return static_cast<int>(cover_graph_edges(roots).size()) - kLineCount + 1;
}

bool cover_graph_connected(const std::vector<Root>& roots) {
  std::vector<int> parent(kLineCount);
  for (int s = 0; s < kLineCount; ++s) parent[s] = s;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = kLineCount;
  for (const auto& e : cover_graph_edges(roots)) {
    int x = find(e.a), y = find(e.b);
    if (x != y) {
      parent[x] = y;
      --comps;
    }
  }
  return comps == 1;
}

IntMatrix degeneration_block(const Root& r) {
  auto pairs = double_six(r.vec);
  const auto& d = build_incidence();
  // Columns: boundaries b_j - a_j; solve D'(b_j - a_j) = sum_k N_jk (b_k - a_k).
  RatMatrix cols(kLineCount, RatVector(pairs.size()));
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    cols[pairs[k].second][k] += 1;
    cols[pairs[k].first][k] -= 1;
  }
  IntMatrix n(pairs.size(), IntVector(pairs.size()));
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    RatVector img(kLineCount), x;
    for (int t = 0; t < kLineCount; ++t) img[t] = d[pairs[j].second][t] - d[pairs[j].first][t];
    if (!solve(cols, img, x)) throw InternalError("D' does not preserve the double-six boundaries");
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (x[k].get_den() != 1) throw InternalError("non-integral degeneration block");
      n[j][k] = x[k].get_num();
    }
  }
  return n;
}

const std::vector<Root>& dominance_preset() {
  static const std::vector<Root> roots = {alpha(1, 3, 5), alpha(1, 2),    alpha(2, 3),    alpha(3, 4),
                                          alpha(4, 5),    alpha(5, 6),    alpha(4, 5, 6), alpha(2, 6),
                                          alpha(1, 2, 3), alpha(1, 2, 5), alpha(2, 5, 6), alpha(1, 5)};
  return roots;
}

}  // namespace e6kit
