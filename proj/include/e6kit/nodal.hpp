#pragma once

#include "e6kit/exact.hpp"
#include "e6kit/lattice.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace e6kit {

struct Node {
  int root;  // i, position in the root list
  int pair;  // j, 0..5 within the double-six of r_i
  int a;     // line with (r_i, l) = +1
  int b;     // l + r_i
};

struct NodalCurveModel {
  std::vector<Root> roots;
  std::vector<Rat> points;  // q_i
  std::vector<Node> nodes;
  std::array<std::vector<int>, kLineCount> component_roots;  // roots meeting X_s, ascending
  std::array<int, kLineCount> n{};                           // n_s

  int genus() const;
  bool dual_graph_connected() const;
};

// Throws GenerationError when the roots do not span E6 and DegenerateInput for
// zero or repeated points.
NodalCurveModel build_curve(const std::vector<Root>& roots, const std::vector<Rat>& points);

struct SectionSpace {
  std::size_t ambient_dim = 0;
  std::size_t constraint_rank = 0;
  std::size_t dim = 0;
  RatMatrix basis;  // filled when requested
  std::vector<std::string> warnings;
};

enum class SectionKind { Omega, OmegaSquared, TwoOmegaMinus5L, L };
std::string to_string(SectionKind k);

// Unknowns are polynomial coefficients P_s = sum_d c_{s,d} z^d, laid out
// component by component (L: c0 + c1 z per component).
struct PolySystem {
  SectionKind kind;
  std::vector<int> degree;          // per component, -1 for no unknowns
  std::vector<std::size_t> offset;  // per component
  std::size_t unknowns = 0;
  RatMatrix rows;  // one per node
};

PolySystem section_system(const NodalCurveModel& c, SectionKind kind);
SectionSpace solve_system(const PolySystem& sys, bool with_basis);

SectionSpace h0_omega(const NodalCurveModel& c, bool with_basis = false);
SectionSpace h0_omega_sq(const NodalCurveModel& c, bool with_basis = false);
SectionSpace h0_2omega_minus_5L(const NodalCurveModel& c, bool with_basis = false);
SectionSpace h0_L(const NodalCurveModel& c, bool with_basis = false);

// Residue variables x_k (one per node; +x on the a-branch, -x on the b-branch)
// with one residue-sum equation per component.
RatMatrix residue_system(const NodalCurveModel& c);
SectionSpace h0_omega_residues(const NodalCurveModel& c, bool with_basis = false);

struct PetriResult {
  std::size_t dim_omega = 0;
  std::size_t dim_sub_q = 0;      // (i)   sum <r_i,l_s> x q_i = 0
  std::size_t dim_sub_inv_q = 0;  // (ii)  sum <r_i,l_s> x / q_i = 0
  std::size_t dim_sub_minus5 = 0; // (iii) x_ij = x_ij'
  std::size_t span_dim = 0;
  RatMatrix basis_minus5;  // in residue variables
  bool injective = false;  // span is all of H^0(omega)
};

PetriResult petri_check(const NodalCurveModel& c);

struct SectionPreset {
  std::string name;
  std::vector<Root> roots;
  std::vector<Rat> points;
};
const std::vector<SectionPreset>& section_presets();  // thm-2k5, thm-petri
const SectionPreset& section_preset(const std::string& name);

std::vector<Rat> parse_points(const std::string& csv);

}  // namespace e6kit
