#pragma once

#include "e6kit/lattice.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace e6kit {

using Perm = std::array<std::uint8_t, kLineCount>;

// Descending parts.
using Partition = std::vector<int>;
std::string partition_string(const Partition& p);  // "2^10 1^7"
Partition parse_partition(const std::string& text);

struct WeylElement {
  Perm perm{};

  static WeylElement identity();
  // (this * o)(s) = this(o(s))
  WeylElement operator*(const WeylElement& o) const;
  WeylElement inverse() const;
  bool operator==(const WeylElement& o) const { return perm == o.perm; }

  int order() const;
  Partition cycle_type() const;
  std::vector<std::vector<int>> cycles() const;  // fixed points included

  // Action on I^{1,6} in the basis f0..f6 (column j = image of f_j).
  std::array<std::array<std::int64_t, 7>, 7> matrix7() const;
  // Action on E6 in the simple-root basis r1..r6 (column j = image of r_j).
  std::array<std::array<std::int64_t, 6>, 6> matrix6() const;
  LatticeVector apply(const LatticeVector& v) const;
  // +1 or -1: determinant of the lattice action.
  int det() const;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

// v -> v + (v,r) r on lines.
WeylElement reflection(const Root& r);
const std::vector<WeylElement>& all_reflections();  // one per +-pair, canonical order

// dim (E6 (x) Q)^w.
int invariant_dim(const WeylElement& w);

class Group {
 public:
  explicit Group(std::vector<Perm> elements);
  std::size_t size() const { return elems_.size(); }
  const std::vector<Perm>& elements() const { return elems_; }
  bool contains(const Perm& p) const { return index_.count(p) != 0; }
  // -1 if absent.
  long find(const Perm& p) const;

 private:
  std::vector<Perm> elems_;
  std::unordered_map<Perm, std::uint32_t, PermHash> index_;
};

// BFS closure under left multiplication by the generators.
Group generate_group(const std::vector<WeylElement>& gens);

// The full group generated by the 36 reflections (computed once).
const Group& weyl_e6();

struct ConjClass {
  std::string name;
  int order = 0;
  Partition cycle_type;
  int inv_dim = 0;
  int inv_dim_sq = 0;  // inv_dim of u^2, separates 6a from 6c
  int det = 1;
  long size = 0;
  WeylElement rep;  // lexicographically smallest permutation in the class
};

// Classes of the full group by enumeration, named by matching against the
// embedded reference data; ordered as the reference table.
std::vector<ConjClass> conjugacy_classes(const Group& g);
const std::vector<ConjClass>& e6_classes();  // full enumeration, cached

// Class table without enumerating the group: the frozen invariant keys.
// Representatives are reconstructed as short reflection words.
std::vector<ConjClass> e6_classes_fast();

// Name of the class containing w via the invariant key.
std::string classify(const WeylElement& w);

// i -> names of the classes that are products of exactly i reflections.
std::map<int, std::vector<std::string>> reflection_products_table(int max_i = 6);

enum class RootRelation { Syzygetic, Azygetic, EqualOrOpposite };
RootRelation relation(const Root& r, const Root& s);
std::string to_string(RootRelation rel);

// Reference data for the 25 classes: printed partition, printed 1/mu,
// reflection counts, and invariant dimension.
struct ReferenceClass {
  std::string name;
  std::vector<int> reflection_counts;
  std::string printed_partition;
  std::string printed_inv_mu;
  int table2_inv_dim;
  bool flagged_inv_mu;  // discrepancy called out in advance (10a, 6a)
};
const std::vector<ReferenceClass>& reference_classes();
const ReferenceClass& reference_class(const std::string& name);

}  // namespace e6kit
