#pragma once

#include "e6kit/exact.hpp"
#include "e6kit/lattice.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace e6kit {

constexpr int kTreeLeaves = 12;
constexpr int kTreeEdges = 21;

// Trivalent tree with 12 outer vertices (outer[k] carries the two ends
// labeled r_k) and 10 inner vertices. Edges are oriented from first to
// second; their position in `edges` is the edge index.
struct CoverTree {
  std::string shape;
  std::vector<std::string> vertex_names;
  std::vector<std::pair<int, int>> edges;
  std::array<int, kTreeLeaves> outer{};
  int base = 0;

  int vertex(const std::string& name) const;  // throws if unknown
};

enum class TreeShape { Paired, Caterpillar };

// Paired (default): outer vertices 2c-1, 2c hang off a cherry vertex C_c, the
// cherries off a spine S1-S2-S3-S4 (C1, C2 on S1; C3 on S2; C4 on S3; C5, C6
// on S4); base S2. Caterpillar: inner path I1..I10 with outer vertices in
// index order; base I1.
CoverTree build_tree(TreeShape shape = TreeShape::Paired);
TreeShape parse_tree_shape(const std::string& name);

// JSON: {"edges": [["u","v"], ...], "outer": [12 names], "base": "name"}.
CoverTree tree_from_json(const std::string& text);

// Throws InputError unless the tree is trivalent with 21 edges.
void validate_tree(const CoverTree& t);

CoverTree with_base(CoverTree t, int base_vertex);

// Signed edges on the path from the base to outer vertex k: (edge, +1) when
// traversed along its orientation.
std::vector<std::pair<int, int>> path_to_leaf(const CoverTree& t, int k);

struct KernelBasis {
  IntMatrix basis;  // rank x n, rows a Z-basis of Ker(phi)
  std::vector<Root> roots;
};

// Smith diagonal of the 6 x n matrix of simple-root coordinates.
std::vector<Int> generation_divisors(const std::vector<Root>& roots);
bool generates_e6(const std::vector<Root>& roots);

// Throws GenerationError unless the roots span E6 over Z.
KernelBasis kernel_basis(const std::vector<Root>& roots);

// Rows replaced by g * basis.
KernelBasis change_basis(const KernelBasis& kb, const IntMatrix& g);

// funcs[i][s] = values of (e_i^s)* on the kernel basis rows.
using EdgeFunctionals = std::vector<IntMatrix>;  // 21 x (27 x rank)
EdgeFunctionals edge_functionals(const CoverTree& t, const KernelBasis& kb);

// M_i = sum_s v v^T. Throws InternalError if some entry is not divisible by 6.
std::vector<IntMatrix> monodromy_matrices(const EdgeFunctionals& funcs);
std::vector<IntMatrix> normalize(const std::vector<IntMatrix>& ms);  // M/6

// Row i = (m11, ..., m66, m12, m13, ..., m56) of M'_i.
IntMatrix sym2_matrix(const std::vector<IntMatrix>& normalized);
Int independence_determinant(const std::vector<IntMatrix>& normalized);

struct DominanceCertificate {
  KernelBasis kernel;
  std::vector<IntMatrix> normalized;
  Int det;
  bool power_of_two = false;
  bool nonzero = false;
  bool matches_target = false;  // |det| = 4096
  std::string note;
  bool pass() const { return nonzero; }
};

DominanceCertificate dominance_certificate(const std::vector<Root>& roots, const CoverTree& tree);

// Gamma': lines as vertices, one edge a -> b per root and double-six pair.
struct CoverGraphEdge {
  int root;  // position in the root list
  int a;     // line with (r,a) = +1
  int b;     // a + r
};
std::vector<CoverGraphEdge> cover_graph_edges(const std::vector<Root>& roots);
int cover_graph_genus(const std::vector<Root>& roots);
bool cover_graph_connected(const std::vector<Root>& roots);

// Action of D' on the six double-six edges over r, in the basis b_j - a_j.
IntMatrix degeneration_block(const Root& r);

// The root list of the dominance computation.
const std::vector<Root>& dominance_preset();

}  // namespace e6kit
