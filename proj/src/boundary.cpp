#include "e6kit/boundary.hpp"

#include "e6kit/degeneration.hpp"
#include "e6kit/exact.hpp"
#include "e6kit/incidence.hpp"
#include "e6kit/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace e6kit {

std::vector<int> OrbitPartition::degrees() const {
  std::vector<int> d;
  for (const auto& b : blocks) d.push_back(static_cast<int>(b.size()));
  std::sort(d.rbegin(), d.rend());
  return d;
}

std::vector<int> OrbitPartition::block_of() const {
  std::vector<int> out(kLineCount, -1);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (int s : blocks[i]) {
      if (s < 0 || s >= kLineCount || out[s] != -1) throw PartitionError("blocks do not partition the 27 lines");
      out[s] = static_cast<int>(i);
    }
  for (int s = 0; s < kLineCount; ++s)
    if (out[s] < 0) throw PartitionError("line " + line_label(s) + " is in no block");
  return out;
}

OrbitPartition OrbitPartition::trivial() {
  OrbitPartition p;
  p.blocks.emplace_back(kLineCount);
  std::iota(p.blocks[0].begin(), p.blocks[0].end(), 0);
  return p;
}

OrbitPartition OrbitPartition::discrete() {
  OrbitPartition p;
  for (int s = 0; s < kLineCount; ++s) p.blocks.push_back({s});
  return p;
}

std::string OrbitPartition::str() const {
  std::string out;
  for (const auto& b : blocks) {
    if (!out.empty()) out += " ";
    out += "{";
    for (std::size_t k = 0; k < b.size(); ++k) out += (k ? " " : "") + line_label(b[k]);
    out += "}";
  }
  return out;
}

OrbitPartition orbits(const std::vector<WeylElement>& gens) {
  std::vector<int> parent(kLineCount);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens)
    for (int s = 0; s < kLineCount; ++s) {
      int a = find(s), b = find(g.perm[s]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<int, std::vector<int>> groups;
  for (int s = 0; s < kLineCount; ++s) groups[find(s)].push_back(s);
  OrbitPartition p;
  for (auto& [root, members] : groups) p.blocks.push_back(std::move(members));
  return p;
}

OrbitPartition orbits(const std::vector<Root>& gens) {
  std::vector<WeylElement> refl;
  for (const auto& r : gens) refl.push_back(reflection(r));
  return orbits(refl);
}

std::vector<Root> root_closure(const std::vector<Root>& gens) {
  std::set<LatticeVector> seen;
  std::vector<LatticeVector> list;
  auto add = [&](const LatticeVector& v) {
    if (seen.insert(v).second) list.push_back(v);
  };
  for (const auto& r : gens) {
    if (!is_root(r.vec)) throw std::invalid_argument("root_closure: not a root " + r.vec.str());
    add(r.vec);
    add(-r.vec);
  }
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t n = list.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        LatticeVector img = list[j] + list[i] * pairing(list[j], list[i]);
        if (!seen.count(img)) {
          add(img);
          grew = true;
        }
      }
  }
  std::vector<Root> out;
  for (const auto& r : enumerate_roots())
    if (seen.count(r.vec)) out.push_back(r);
  return out;
}

namespace {

// Dynkin name of one connected component of a simply-laced diagram.
std::pair<char, int> component_type(const std::vector<std::vector<int>>& adj, const std::vector<int>& nodes) {
  const int n = static_cast<int>(nodes.size());
  std::vector<int> branch;
  for (int v : nodes)
    if (adj[v].size() >= 3) branch.push_back(v);
  if (branch.empty()) return {'A', n};
  if (branch.size() != 1 || adj[branch[0]].size() != 3) throw InternalError("unexpected Dynkin diagram shape");
  std::vector<int> arms;
  for (int start : adj[branch[0]]) {
    int len = 0, prev = branch[0], cur = start;
    while (true) {
      ++len;
      int next = -1;
      for (int w : adj[cur])
        if (w != prev) next = w;
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {'D', n};
  if (arms == std::vector<int>{1, 2, 2}) return {'E', 6};
  throw InternalError("unexpected Dynkin diagram arms");
}

}  // namespace

SublatticeType sublattice_type(const std::vector<Root>& gens) {
  SublatticeType t;
  auto closure = root_closure(gens);
  t.root_count = static_cast<int>(closure.size());
  if (closure.empty()) {
    t.dynkin = "0";
    return t;
  }
  // Generic functional: pairing with a vector no root is orthogonal to.
  const LatticeVector h{1000003, 1, 10, 100, 1000, 10000, 100000};
  std::vector<LatticeVector> pos;
  for (const auto& r : closure) {
    auto p = pairing(r.vec, h);
    if (p == 0) throw InternalError("functional vanishes on a root");
    if (p > 0) pos.push_back(r.vec);
  }
  std::set<LatticeVector> pos_set(pos.begin(), pos.end());
  std::vector<LatticeVector> simple;
  for (const auto& r : pos) {
    bool decomposable = false;
    for (const auto& s : pos)
      if (s != r && pos_set.count(r - s)) {
        decomposable = true;
        break;
      }
    if (!decomposable) simple.push_back(r);
  }
  const int n = static_cast<int>(simple.size());
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && pairing(simple[i], simple[j]) != 0) adj[i].push_back(j);
  std::vector<bool> seen(n, false);
  std::vector<std::pair<char, int>> comps;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> nodes{s};
    seen[s] = true;
    for (std::size_t k = 0; k < nodes.size(); ++k)
      for (int w : adj[nodes[k]])
        if (!seen[w]) {
          seen[w] = true;
          nodes.push_back(w);
        }
    comps.push_back(component_type(adj, nodes));
  }
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first > b.first;
  });
  std::string name;
  for (std::size_t i = 0; i < comps.size();) {
    std::size_t j = i;
    while (j < comps.size() && comps[j] == comps[i]) ++j;
    name += comps[i].first + std::to_string(comps[i].second);
    if (j - i > 1) name += "^" + std::to_string(j - i);
    i = j;
  }
  t.dynkin = name;
  t.rank = n;
  const auto& known = sublattice_classification();
  if (std::find(known.begin(), known.end(), name) == known.end())
    throw InternalError("sublattice type " + name + " is not a root sublattice of E6");
  return t;
}

const std::vector<std::string>& sublattice_classification() {
  static const std::vector<std::string> list = {
      "E6", "A5A1", "A2^3", "A5", "D5",  "A4A1", "A3A1^2", "A2^2A1", "A4", "D4", "A2^2",
      "A3A1", "A2A1^2", "A1^4", "A3", "A2A1", "A1^3", "A2", "A1^2", "A1"};
  return list;
}

int toric_rank(const WeylElement& u, const OrbitPartition& a, const OrbitPartition& b) {
  for (const auto* p : {&a, &b}) {
    p->block_of();
    for (const auto& block : p->blocks) {
      std::set<int> members(block.begin(), block.end());
      for (int s : block)
        if (!members.count(u.perm[s])) throw PartitionError("partition block not invariant under u");
    }
  }
  static const IntMatrix basis = eigenspaces_on_ker_deg().basis_minus5;
  const std::size_t d = basis.size();
  // Constraints on v = sum_k c_k basis_k.
  RatMatrix rows;
  for (int s = 0; s < kLineCount; ++s) {
    if (u.perm[s] == s) continue;
    RatVector row(d);
    for (std::size_t k = 0; k < d; ++k) row[k] = basis[k][u.perm[s]] - basis[k][s];
    rows.push_back(std::move(row));
  }
  for (const auto* p : {&a, &b})
    for (const auto& block : p->blocks) {
      RatVector row(d);
      for (std::size_t k = 0; k < d; ++k)
        for (int s : block) row[k] += basis[k][s];
      rows.push_back(std::move(row));
    }
  return static_cast<int>(d - rank(rows, d));
}

BoundaryConfiguration make_configuration(const std::vector<Root>& l1, const Root& r23, const Root& r24) {
  BoundaryConfiguration c;
  c.u = reflection(r23) * reflection(r24);
  c.a = orbits(l1);
  c.b = orbits(std::vector<Root>{r23, r24});
  return c;
}

ELConfiguration el_configuration(const std::string& name, const std::vector<Root>& l_roots) {
  ELConfiguration e;
  e.name = name;
  e.l_roots = l_roots;
  const Root* full_rank = nullptr;
  const Root* generating = nullptr;
  for (const auto& r : enumerate_roots()) {
    std::vector<Root> ext = l_roots;
    ext.push_back(r);
    auto div = generation_divisors(ext);
    bool rank6 = std::none_of(div.begin(), div.end(), [](const Int& x) { return x == 0; });
    if (rank6 && !full_rank) full_rank = &r;
    if (rank6 && std::all_of(div.begin(), div.end(), [](const Int& x) { return x == 1; })) {
      generating = &r;
      break;
    }
  }
  if (!full_rank) throw InputError("no root extends " + name + " to rank 6");
  e.connected = generating != nullptr;
  e.completing_root = generating ? *generating : *full_rank;
  e.config = make_configuration(l_roots, e.completing_root, e.completing_root);
  e.toric_rank = toric_rank(e.config.u, e.config.a, e.config.b);
  return e;
}

namespace {

std::vector<std::vector<std::string>> blocks(std::initializer_list<const char*> specs) {
  std::vector<std::vector<std::string>> out;
  for (const char* spec : specs) {
    std::istringstream in(spec);
    std::vector<std::string> b;
    std::string tok;
    while (in >> tok) b.push_back(tok);
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<Root> simple_subset(const std::vector<int>& idx) {
  std::vector<Root> out;
  for (int i : idx) out.push_back(simple_roots()[i]);
  return out;
}

}  // namespace

const std::vector<Table3Row>& table3_reference() {
  static const std::vector<Table3Row> rows = {
      {"E6", {1, 2, 3, 4, 5, 6},
       blocks({"a1 a2 a3 a4 a5 a6 b1 b2 b3 b4 b5 b6 c12 c13 c14 c15 c16 c23 c24 c25 c26 c34 c35 c36 c45 c46 c56"}),
       {27}, false},
      {"A5A1", {0, 2, 3, 4, 5, 6},
       blocks({"a1 a2 a3 a4 a5 a6 b1 b2 b3 b4 b5 b6",
               "c12 c13 c14 c15 c16 c23 c24 c25 c26 c34 c35 c36 c45 c46 c56"}),
       {15, 12}, false},
      {"A2^3", {0, 1, 2, 3, 5, 6},
       blocks({"a1 a2 a3 b1 b2 b3 c12 c13 c23", "a4 a5 a6 b4 b5 b6 c45 c46 c56",
               "c14 c15 c16 c24 c25 c26 c34 c35 c36"}),
       {9, 9, 9}, false},
      {"D5", {1, 2, 3, 4, 5},
       blocks({"a6", "a1 a2 a3 a4 a5 b6 c12 c13 c14 c15 c23 c24 c25 c34 c35 c45", "b1 b2 b3 b4 b5 c16 c26 c36 c46 c56"}),
       {1, 10, 16}, false},
      {"A5", {2, 3, 4, 5, 6},
       blocks({"a1 a2 a3 a4 a5 a6", "b1 b2 b3 b4 b5 b6",
               "c12 c13 c14 c15 c16 c23 c24 c25 c26 c34 c35 c36 c45 c46 c56"}),
       {6, 6, 15}, false},
      {"A4A1", {0, 2, 3, 4, 5},
       blocks({"a1 a2 a3 a4 c12 c13 c14 c23 c24 c34", "b1 b2 b3 b4 c56", "a5 a6",
               "b5 b6 c15 c16 c25 c26 c35 c36 c45 c46"}),
       {2, 5, 10, 10}, false},
      {"A3A1^2", {0, 2, 3, 4, 6},
       blocks({"a1 b2 b3 b4 c23 c24 c34 c56", "b1", "a2 a3 a4 c23 c24 c34", "a5 a6 c15 c16",
               "b5 b6 c25 c26 c35 c36 c45 c46"}),
       {8, 8, 6, 4, 1}, true},
      {"A2^2A1", {1, 2, 3, 5, 6},
       blocks({"a1 a2 a3 c12 c13 c23", "b4 b5 b6 c45 c46 c56", "a4 a5 a6", "b1 b2 b3",
               "c14 c15 c16 c24 c25 c26 c34 c35 c36"}),
       {9, 6, 6, 3, 3}, false},
      {"A4", {2, 3, 4, 5},
       blocks({"a1 a2 a3 a4 c12 c13 c14 c23 c24 c34", "b1 b2 b3 b4 c56", "a5", "a6", "b5 c16 c26 c36 c46",
               "b6 c15 c25 c35 c45"}),
       {10, 5, 5, 5, 1, 1}, false},
      {"D4", {1, 3, 4, 5},
       blocks({"a1 c23 c24 c25 c34 c35 c45 b6", "a2 a3 a4 a5 c12 c13 c14 c15", "a6", "b1",
               "b2 b3 b4 b5 c26 c36 c46 c56", "c16"}),
       {8, 8, 8, 1, 1, 1}, false},
      {"A2^2", {2, 3, 5, 6},
       blocks({"a1 a2 a3", "b1 b2 b3", "a4 a5 a6", "b4 b5 b6", "c12 c13 c23", "c45 c46 c56",
               "c14 c15 c16 c24 c25 c26 c34 c35 c36"}),
       {9, 3, 3, 3, 3, 3, 3}, false},
      {"A3A1", {2, 3, 4, 6},
       blocks({"c56", "a5 a6", "b5 b6", "a1 a2 a3 a4", "b1 b2 b3 b4", "c12 c13 c14 c23 c24 c34",
               "c15 c16 c25 c26 c35 c36 c45 c46"}),
       {8, 6, 4, 4, 2, 2, 1}, false},
      {"A2A1^2", {1, 2, 3, 5},
       blocks({"a6", "b6 c45", "b1 b2 b3", "c16 c26 c36", "b5 b6 c46 c56", "a4 a5", "a1 a2 a3 c12 c13 c23",
               "c14 c15 c24 c25 c34 c35"}),
       {6, 6, 4, 3, 3, 2, 2, 1}, true},
      {"A1^4", {0, 2, 4, 6},
       blocks({"a6", "b1", "a1 b6 c23 c45", "a2 a3 c12 c13", "a4 a5 c14 c15", "b2 b3 c26 c36", "b4 b5 c46 c56",
               "c24 c34 c25 c35", "c16"}),
       {4, 4, 4, 4, 4, 4, 1, 1, 1}, false},
      {"A3", {2, 3, 4},
       blocks({"c12 c13 c14 c23 c24 c34", "c15 c25 c35 c45", "c16 c26 c36 c46", "a1 a2 a3 a4", "b1 b2 b3 b4", "a5",
               "a6", "b5", "b6", "c56"}),
       {6, 4, 4, 4, 4, 1, 1, 1, 1, 1}, false},
      {"A2A1", {1, 2, 3},
       blocks({"b1 b2 b3", "c14 c24 c34", "c15 c25 c35", "a1 a2 a3 c12 c13 c23", "c16 c26 c36", "b4 c56", "b5 c46",
               "b6 c45", "a4", "a5", "a6"}),
       {6, 3, 3, 3, 3, 2, 2, 2, 1, 1, 1}, false},
      {"A1^3", {2, 4, 5},
       blocks({"c13 c14 c23 c24", "c15 c16 c25 c26", "c35 c36 c45 c46", "a1 a2", "a3 a4", "a5 a6", "b1 b2", "b3 b4",
               "b5 b6", "c12", "c34", "c56"}),
       {4, 4, 4, 2, 2, 2, 2, 2, 2, 1, 1, 1}, false},
      {"A2", {2, 3},
       blocks({"a1 a2 a3", "b1 b2 b3", "c12 c13 c23", "c14 c24 c34", "c15 c25 c35", "c16 c26 c36", "a4", "a5", "a6",
               "b4", "b5", "b6", "c45", "c46", "c56"}),
       {3, 3, 3, 3, 3, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1}, false},
      {"A1^2", {2, 4},
       blocks({"c13 c23 c14 c24", "c56", "a1 a2", "a3 a4", "b1 b2", "b3 b4", "c15 c25", "c16 c26", "c35 c45",
               "c36 c46", "a5", "a6", "b5", "b6", "c12", "c34"}),
       {4, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1}, false},
      {"A1", {0},
       blocks({"a1 b1", "a2 b2", "a3 b3", "a4 b4", "a5 b5", "a6 b6", "c12", "c13", "c14", "c15", "c16", "c23", "c24",
               "c25", "c26", "c34", "c35", "c36", "c45", "c46", "c56"}),
       {2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, false},
  };
  return rows;
}

std::vector<Table3Comparison> compare_table3() {
  std::vector<Table3Comparison> out;
  for (const auto& row : table3_reference()) {
    Table3Comparison c{&row, orbits(simple_subset(row.simple_indices)), {}, false, false, {}};
    auto gens = simple_subset(row.simple_indices);
    c.type = sublattice_type(gens);
    if (c.type.dynkin != row.name) c.notes.push_back("listed roots generate " + c.type.dynkin + ", not " + row.name);
    auto printed = row.printed_degrees;
    std::sort(printed.rbegin(), printed.rend());
    c.degrees_match = printed == c.computed.degrees();
    if (!c.degrees_match) c.notes.push_back("orbit degrees differ");

    std::set<std::set<int>> want, got;
    bool printed_valid = true;
    for (const auto& b : row.printed_orbits) {
      std::set<int> s;
      for (const auto& label : b) s.insert(line_index(label));
      if (s.size() != b.size()) printed_valid = false;
      want.insert(s);
    }
    std::set<int> covered;
    std::size_t total = 0;
    for (const auto& s : want) {
      covered.insert(s.begin(), s.end());
      total += s.size();
    }
    if (covered.size() != kLineCount || total != kLineCount) printed_valid = false;
    if (!printed_valid) c.notes.push_back("printed orbits do not partition the 27 lines");
    for (const auto& b : c.computed.blocks) got.insert(std::set<int>(b.begin(), b.end()));
    c.contents_match = want == got;
    if (!c.contents_match) {
      for (const auto& b : c.computed.blocks)
        if (!want.count(std::set<int>(b.begin(), b.end()))) {
          std::string s;
          for (int x : b) s += (s.empty() ? "" : " ") + line_label(x);
          c.notes.push_back("computed orbit {" + s + "} not printed");
        }
    }
    if (row.flagged_typo) c.notes.push_back("row flagged in advance as containing typos");
    out.push_back(std::move(c));
  }
  return out;
}

std::map<std::string, int> invariant_dim_table() {
  std::map<std::string, int> out;
  for (const auto& c : e6_classes()) out[c.name] = invariant_dim(c.rep);
  return out;
}

const std::map<std::string, int>& table2_reference() {
  static const std::map<std::string, int> ref = [] {
    std::map<std::string, int> m;
    for (const auto& r : reference_classes()) m[r.name] = r.table2_inv_dim;
    return m;
  }();
  return ref;
}

std::vector<ELConfiguration> toric_rank_table() {
  static const std::vector<std::string> names = {"E6", "A5A1", "A2^3", "A5", "D5", "A4A1", "A3A1^2", "A2^2A1"};
  std::vector<ELConfiguration> out;
  for (const auto& n : names)
    for (const auto& row : table3_reference())
      if (row.name == n) out.push_back(el_configuration(n, simple_subset(row.simple_indices)));
  return out;
}

BoundaryConfiguration d5_example_configuration() {
  const auto& s = simple_roots();
  return make_configuration({s[1], s[2], s[3], s[4], s[5]}, s[6], s[6]);
}

}  // namespace e6kit
