#pragma once

#include "e6kit/lattice.hpp"
#include "e6kit/weyl.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace e6kit {

struct OrbitPartition {
  std::vector<std::vector<int>> blocks;  // each sorted; blocks ordered by first element

  std::vector<int> degrees() const;  // descending
  std::vector<int> block_of() const;  // line -> block index
  static OrbitPartition trivial();    // one block with all 27 lines
  static OrbitPartition discrete();   // 27 singletons
  std::string str() const;            // "{a1 b1} {c12} ..."
};

// Orbits on the 27 lines of the subgroup generated by the reflections in gens.
OrbitPartition orbits(const std::vector<Root>& gens);
OrbitPartition orbits(const std::vector<WeylElement>& gens);

struct SublatticeType {
  std::string dynkin;  // e.g. "A5A1", "A2^3", "D5"
  int rank = 0;
  int root_count = 0;  // roots of the closed subsystem
};

// All roots of the closed subsystem generated by gens.
std::vector<Root> root_closure(const std::vector<Root>& gens);
SublatticeType sublattice_type(const std::vector<Root>& gens);

// The list of root sublattices of E6 by rank.
const std::vector<std::string>& sublattice_classification();

// dim of the (-5)-part of H_1(Gamma(u,A,B), Q). Throws PartitionError if A
// or B is not u-invariant (each block mapped to itself).
int toric_rank(const WeylElement& u, const OrbitPartition& a, const OrbitPartition& b);

// Partition a = orbits(l1), b = orbits(<w_r23, w_r24>), u = w_r23 w_r24;
// r23 == r24 gives u = 1.
struct BoundaryConfiguration {
  WeylElement u;
  OrbitPartition a;
  OrbitPartition b;
};
BoundaryConfiguration make_configuration(const std::vector<Root>& l1, const Root& r23, const Root& r24);

// Configuration for the divisor E_L: u = 1, A = orbits(L), B = orbits(w_r) for
// the first root r (canonical order) with Z-span(L, r) = E6. When no root
// completes L, the first root reaching rank 6 is used and connected is false.
struct ELConfiguration {
  std::string name;
  std::vector<Root> l_roots;
  Root completing_root;
  bool connected = true;
  BoundaryConfiguration config;
  int toric_rank = 0;
};
ELConfiguration el_configuration(const std::string& name, const std::vector<Root>& l_roots);

// Reference rows of the sublattice/orbit table.
struct Table3Row {
  std::string name;
  std::vector<int> simple_indices;  // indices into r0..r6
  std::vector<std::vector<std::string>> printed_orbits;
  std::vector<int> printed_degrees;
  bool flagged_typo;
};
const std::vector<Table3Row>& table3_reference();

struct Table3Comparison {
  const Table3Row* row;
  OrbitPartition computed;
  SublatticeType type;
  bool degrees_match;
  bool contents_match;
  std::vector<std::string> notes;
};
std::vector<Table3Comparison> compare_table3();

// Table 2: class name -> dim (E6 (x) Q)^u.
std::map<std::string, int> invariant_dim_table();
const std::map<std::string, int>& table2_reference();

// Rank >= 5 sublattice configurations of the toric-rank proposition, E6 first.
std::vector<ELConfiguration> toric_rank_table();

// Configuration of the D5 example: L = <r1..r5>, B = orbits of w_{r6}.
BoundaryConfiguration d5_example_configuration();

}  // namespace e6kit
