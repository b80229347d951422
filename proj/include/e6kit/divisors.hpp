#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "e6kit/exact.hpp"
#include "e6kit/weyl.hpp"

namespace e6kit {

// Formal Q-linear combination of named classes. Zero coefficients are never
// stored, so equality is plain map equality.
class DivisorClass {
 public:
  DivisorClass() = default;
  static DivisorClass symbol(const std::string& name, const Rat& c = 1);

  Rat coeff(const std::string& name) const;
  void set(const std::string& name, const Rat& c);
  const std::map<std::string, Rat>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  bool contains(const std::string& name) const { return terms_.count(name) > 0; }

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  DivisorClass& operator*=(const Rat& c);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator-(DivisorClass a) { return a *= Rat(-1); }
  friend DivisorClass operator*(const Rat& c, DivisorClass a) { return a *= c; }
  friend DivisorClass operator*(DivisorClass a, const Rat& c) { return a *= c; }
  bool operator==(const DivisorClass& o) const { return terms_ == o.terms_; }

  // Keeps only the listed symbols (or drops them, with keep = false).
  DivisorClass restrict_to(const std::vector<std::string>& names, bool keep = true) const;

  std::string str() const;

 private:
  std::map<std::string, Rat> terms_;
};

// "2*lambda - 3/4 DE6 + n", "E[3:2^12 1^3]". Symbols are identifiers with an
// optional bracketed key. Errors carry line 1 and the column.
DivisorClass parse_divisor(const std::string& text);

using Rule = std::pair<std::string, DivisorClass>;

// Replaces every symbol with a rule until none remains. Rules are applied in
// list order on each pass. A rule x -> x is ignored.
DivisorClass substitute(const DivisorClass& target, const std::vector<Rule>& rules);

// Solves relation == 0 for sym: returns the class sym equals.
DivisorClass solve_for(const DivisorClass& relation, const std::string& sym);

// Symbol names for the boundary of the labeled (E) and unlabeled (D) spaces.
std::string e_symbol(int i, const Partition& mu);
std::string d_symbol(int i, const Partition& mu);

struct BoundaryIndex {
  int i = 0;
  Partition mu;
  Int lcm;
  Rat inv_mu;
};

Int partition_lcm(const Partition& mu);
Rat partition_inv_mu(const Partition& mu);

// All (i, mu) with mu the cycle type of a product of i reflections, i = 2..12.
const std::vector<BoundaryIndex>& boundary_indices();
std::vector<Partition> partitions_for(int i);

// Table 1 rows against the group computation.
struct Table1Row {
  std::string name;
  std::vector<int> printed_counts;
  std::vector<int> computed_counts;
  std::string printed_partition;
  std::string computed_partition;
  Int lcm_printed;  // from the printed partition
  Int lcm_computed;
  std::string printed_inv_mu;
  Rat inv_mu_from_printed;  // sum 1/mu_k over the printed partition
  Rat inv_mu_computed;
  bool flagged = false;
  bool counts_match = false;
  bool partition_match = false;
  bool lcm_match = false;
  bool inv_mu_match = false;  // printed column vs recomputed from printed partition
  bool ok() const { return counts_match && partition_match && lcm_match && inv_mu_match; }
};
std::vector<Table1Row> table1();

// Hodge class on the labeled space.
DivisorClass hodge_class();

struct CanonicalClasses {
  DivisorClass K_H;
  DivisorClass K_Hur;
  DivisorClass K_G;
};
CanonicalClasses canonical_classes();

// Pullback along the labeled-to-unlabeled quotient and its inverse on
// classes in the image.
DivisorClass pullback_q(const DivisorClass& d);
DivisorClass pushdown_q(const DivisorClass& e);

// Restriction from the unlabeled space to the E6 moduli space: D0 -> DE6,
// D_syz coefficient halved, D_azy kept, i >= 3 boundary dropped.
DivisorClass to_g_level(const DivisorClass& d);

// Virtual class of the degeneracy divisor D_n in the (lambda, kappa1, gamma) basis.
DivisorClass dn_class(int n);

// Substitution rules toward the (lambda, lambda_m5, DE6, n) basis.
std::vector<Rule> g_level_rules();

enum class IdentityKind { Equality, TaggedInequality };

struct Identity {
  std::string name;
  IdentityKind kind = IdentityKind::Equality;
  std::string relation = "=";  // derived <relation> stated
  DivisorClass derived;
  DivisorClass stated;
  bool ok = false;
  std::string note;
};
std::vector<Identity> verify_identities();

}  // namespace e6kit
