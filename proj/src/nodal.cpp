#include "e6kit/nodal.hpp"

#include "e6kit/degeneration.hpp"
#include "e6kit/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace e6kit {

int NodalCurveModel::genus() const { return static_cast<int>(nodes.size()) - kLineCount + 1; }

bool NodalCurveModel::dual_graph_connected() const {
  std::vector<std::vector<int>> adj(kLineCount);
  for (const auto& nd : nodes) {
    adj[nd.a].push_back(nd.b);
    adj[nd.b].push_back(nd.a);
  }
  std::vector<bool> seen(kLineCount, false);
  std::vector<int> queue{0};
  seen[0] = true;
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (int w : adj[queue[k]])
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
  return queue.size() == kLineCount;
}

NodalCurveModel build_curve(const std::vector<Root>& roots, const std::vector<Rat>& points) {
  if (roots.size() != kTreeLeaves) throw InputError("nodal curve: expected 12 roots");
  if (points.size() != roots.size()) throw InputError("nodal curve: expected one point per root");
  kernel_basis(roots);  // GenerationError unless the roots span E6
  std::set<Rat> distinct;
  for (const auto& q : points) {
    if (sgn(q) == 0) throw DegenerateInput("nodal curve: branch point 0 is not allowed");
    if (!distinct.insert(q).second) throw DegenerateInput("nodal curve: repeated branch point " + to_string(q));
  }
  NodalCurveModel c;
  c.roots = roots;
  c.points = points;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    auto pairs = double_six(roots[i].vec);
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      c.nodes.push_back({static_cast<int>(i), static_cast<int>(j), pairs[j].first, pairs[j].second});
      c.component_roots[pairs[j].first].push_back(static_cast<int>(i));
      c.component_roots[pairs[j].second].push_back(static_cast<int>(i));
    }
  }
  for (int s = 0; s < kLineCount; ++s) c.n[s] = static_cast<int>(c.component_roots[s].size());
  return c;
}

std::string to_string(SectionKind k) {
  switch (k) {
    case SectionKind::Omega:
      return "omega";
    case SectionKind::OmegaSquared:
      return "omega2";
    case SectionKind::TwoOmegaMinus5L:
      return "2k5l";
    case SectionKind::L:
      return "L";
  }
  return {};
}

namespace {

// prod_{i' != i} (q_i - q_i')^power over the roots meeting component s.
Rat residue_denominator(const NodalCurveModel& c, int s, int i, int power) {
  Rat den = 1;
  for (int i2 : c.component_roots[s])
    if (i2 != i) {
      Rat d = c.points[i] - c.points[i2];
      for (int p = 0; p < power; ++p) den *= d;
    }
  return den;
}

}  // namespace

PolySystem section_system(const NodalCurveModel& c, SectionKind kind) {
  PolySystem sys;
  sys.kind = kind;
  for (int s = 0; s < kLineCount; ++s) {
    int d = 0;
    switch (kind) {
      case SectionKind::Omega:
        d = c.n[s] - 2;
        break;
      case SectionKind::OmegaSquared:
        d = 2 * (c.n[s] - 2);
        break;
      case SectionKind::TwoOmegaMinus5L:
        d = 2 * (c.n[s] - 2) - 5;
        break;
      case SectionKind::L:
        d = 1;
        break;
    }
    d = std::max(d, -1);
    sys.degree.push_back(d);
    sys.offset.push_back(sys.unknowns);
    sys.unknowns += static_cast<std::size_t>(d + 1);
  }
  const bool squared = kind == SectionKind::OmegaSquared || kind == SectionKind::TwoOmegaMinus5L;
  for (const auto& nd : c.nodes) {
    RatVector row(sys.unknowns);
    const Rat& q = c.points[nd.root];
    for (int side = 0; side < 2; ++side) {
      const int s = side == 0 ? nd.a : nd.b;
      // omega: residues sum to zero; squared forms and L: values agree.
      const int sign = (side == 0 || kind == SectionKind::Omega) ? 1 : -1;
      Rat scale = sign;
      if (kind != SectionKind::L) scale /= residue_denominator(c, s, nd.root, squared ? 2 : 1);
      Rat power = 1;
      for (int d = 0; d <= sys.degree[s]; ++d) {
        row[sys.offset[s] + d] += scale * power;
        power *= q;
      }
    }
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

SectionSpace solve_system(const PolySystem& sys, bool with_basis) {
  SectionSpace sp;
  sp.ambient_dim = sys.unknowns;
  if (with_basis) {
    sp.basis = nullspace(sys.rows, sys.unknowns);
    sp.dim = sp.basis.size();
    sp.constraint_rank = sp.ambient_dim - sp.dim;
  } else {
    sp.constraint_rank = rank(sys.rows, sys.unknowns);
    sp.dim = sp.ambient_dim - sp.constraint_rank;
  }
  return sp;
}

SectionSpace h0_omega(const NodalCurveModel& c, bool with_basis) {
  return solve_system(section_system(c, SectionKind::Omega), with_basis);
}

SectionSpace h0_omega_sq(const NodalCurveModel& c, bool with_basis) {
  return solve_system(section_system(c, SectionKind::OmegaSquared), with_basis);
}

SectionSpace h0_2omega_minus_5L(const NodalCurveModel& c, bool with_basis) {
  auto sp = solve_system(section_system(c, SectionKind::TwoOmegaMinus5L), with_basis);
  for (int s = 0; s < kLineCount; ++s)
    if (c.n[s] < 4)
      sp.warnings.push_back("component " + line_label(s) + " has n_s = " + std::to_string(c.n[s]) +
                            " < 4; the unknown/equation count argument does not apply");
  return sp;
}

SectionSpace h0_L(const NodalCurveModel& c, bool with_basis) {
  return solve_system(section_system(c, SectionKind::L), with_basis);
}

RatMatrix residue_system(const NodalCurveModel& c) {
  RatMatrix rows(kLineCount, RatVector(c.nodes.size()));
  for (std::size_t k = 0; k < c.nodes.size(); ++k) {
    rows[c.nodes[k].a][k] += 1;
    rows[c.nodes[k].b][k] -= 1;
  }
  return rows;
}

SectionSpace h0_omega_residues(const NodalCurveModel& c, bool with_basis) {
  PolySystem sys;
  sys.kind = SectionKind::Omega;
  sys.unknowns = c.nodes.size();
  sys.rows = residue_system(c);
  return solve_system(sys, with_basis);
}

PetriResult petri_check(const NodalCurveModel& c) {
  const std::size_t m = c.nodes.size();
  const RatMatrix base = residue_system(c);
  PetriResult r;
  r.dim_omega = m - rank(base, m);

  auto scaled = [&](bool inverse) {
    RatMatrix rows = base;
    for (const auto& row : base) {
      RatVector extra(m);
      for (std::size_t k = 0; k < m; ++k) {
        if (sgn(row[k]) == 0) continue;
        const Rat& q = c.points[c.nodes[k].root];
        extra[k] = inverse ? Rat(row[k] / q) : Rat(row[k] * q);
      }
      rows.push_back(std::move(extra));
    }
    return rows;
  };
  RatMatrix sub_q = nullspace(scaled(false), m);
  RatMatrix sub_inv_q = nullspace(scaled(true), m);

  RatMatrix same = base;
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t k2 = k + 1; k2 < m; ++k2)
      if (c.nodes[k].root == c.nodes[k2].root) {
        RatVector row(m);
        row[k] = 1;
        row[k2] = -1;
        same.push_back(std::move(row));
      }
  r.basis_minus5 = nullspace(same, m);

  r.dim_sub_q = sub_q.size();
  r.dim_sub_inv_q = sub_inv_q.size();
  r.dim_sub_minus5 = r.basis_minus5.size();
  RatMatrix all = sub_q;
  all.insert(all.end(), sub_inv_q.begin(), sub_inv_q.end());
  all.insert(all.end(), r.basis_minus5.begin(), r.basis_minus5.end());
  r.span_dim = rank(all, m);
  r.injective = r.span_dim == r.dim_omega;
  return r;
}

const std::vector<SectionPreset>& section_presets() {
  static const std::vector<SectionPreset> presets = [] {
    std::vector<Rat> q;
    for (int i = 1; i <= 12; ++i) q.emplace_back(i);
    return std::vector<SectionPreset>{
        {"thm-2k5",
         {alpha(1, 3, 5), alpha(1, 2), alpha(2, 3), alpha(3, 4), alpha(4, 5), alpha(5, 6), alpha(1, 6),
          alpha(4, 5, 6), alpha(1, 2, 3), alpha(3, 4, 6), alpha(2, 3, 4), alpha(1, 5, 6)},
         q},
        {"thm-petri",
         {alpha(1, 3, 5), alpha(1, 2), alpha(2, 3), alpha(3, 4), alpha(4, 5), alpha(5, 6), alpha_max(),
          alpha(1, 2, 4), alpha(2, 3, 4), alpha(3, 5), alpha(1, 3), alpha(3, 6)},
         q},
    };
  }();
  return presets;
}

const SectionPreset& section_preset(const std::string& name) {
  for (const auto& p : section_presets())
    if (p.name == name) return p;
  throw InputError("unknown preset '" + name + "' (expected thm-2k5 or thm-petri)");
}

std::vector<Rat> parse_points(const std::string& csv) {
  std::vector<Rat> out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::string t;
    for (char ch : item)
      if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) continue;
    out.push_back(parse_rational(t));
  }
  return out;
}

}  // namespace e6kit
