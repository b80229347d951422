#include "e6kit/weyl.hpp"

#include "e6kit/exact.hpp"
#include "e6kit/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace e6kit {

std::string partition_string(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if (!s.empty()) s += " ";
    s += std::to_string(p[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

Partition parse_partition(const std::string& text) {
  Partition p;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    auto caret = tok.find('^');
    auto number = [&](const std::string& digits) {
      if (digits.empty() || digits.size() > 3 || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c) != 0; }))
        throw ParseError("bad partition '" + text + "'");
      return std::stoi(digits);
    };
    int part = number(tok.substr(0, caret));
    int mult = caret == std::string::npos ? 1 : number(tok.substr(caret + 1));
    if (part <= 0 || mult <= 0) throw ParseError("bad partition '" + text + "'");
    p.insert(p.end(), mult, part);
  }
  std::sort(p.rbegin(), p.rend());
  return p;
}

WeylElement WeylElement::identity() {
  WeylElement w;
  std::iota(w.perm.begin(), w.perm.end(), 0);
  return w;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  WeylElement w;
  for (int s = 0; s < kLineCount; ++s) w.perm[s] = perm[o.perm[s]];
  return w;
}

WeylElement WeylElement::inverse() const {
  WeylElement w;
  for (int s = 0; s < kLineCount; ++s) w.perm[perm[s]] = static_cast<std::uint8_t>(s);
  return w;
}

std::vector<std::vector<int>> WeylElement::cycles() const {
  std::vector<std::vector<int>> out;
  std::array<bool, kLineCount> seen{};
  for (int s = 0; s < kLineCount; ++s) {
    if (seen[s]) continue;
    std::vector<int> c;
    for (int t = s; !seen[t]; t = perm[t]) {
      seen[t] = true;
      c.push_back(t);
    }
    out.push_back(std::move(c));
  }
  return out;
}

Partition WeylElement::cycle_type() const {
  Partition p;
  for (const auto& c : cycles()) p.push_back(static_cast<int>(c.size()));
  std::sort(p.rbegin(), p.rend());
  return p;
}

int WeylElement::order() const {
  int o = 1;
  for (int len : cycle_type()) o = std::lcm(o, len);
  return o;
}

std::array<std::array<std::int64_t, 7>, 7> WeylElement::matrix7() const {
  std::array<std::array<std::int64_t, 7>, 7> m{};
  auto image = [&](const char* label) { return enumerate_lines()[perm[line_index(label)]].vec; };
  const char* a[] = {"a1", "a2", "a3", "a4", "a5", "a6"};
  for (int j = 1; j <= 6; ++j) {
    LatticeVector v = image(a[j - 1]);
    for (int i = 0; i < 7; ++i) m[i][j] = v.x[i];
  }
  // f0 = c12 + a1 + a2
  LatticeVector f0 = image("c12") + image("a1") + image("a2");
  for (int i = 0; i < 7; ++i) m[i][0] = f0.x[i];
  return m;
}

LatticeVector WeylElement::apply(const LatticeVector& v) const {
  auto m = matrix7();
  LatticeVector out;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) out.x[i] += m[i][j] * v.x[j];
  return out;
}

std::array<std::array<std::int64_t, 6>, 6> WeylElement::matrix6() const {
  auto m = matrix7();
  std::array<std::array<std::int64_t, 6>, 6> out{};
  const auto& simple = simple_roots();
  for (int j = 0; j < 6; ++j) {
    LatticeVector img;
    for (int i = 0; i < 7; ++i)
      for (int k = 0; k < 7; ++k) img.x[i] += m[i][k] * simple[j + 1].vec.x[k];
    auto c = simple_coordinates(img);
    for (int i = 0; i < 6; ++i) out[i][j] = c[i];
  }
  return out;
}

int WeylElement::det() const {
  auto m = matrix6();
  IntMatrix z(6, IntVector(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) z[i][j] = static_cast<long>(m[i][j]);
  Int d = determinant(z);
  if (d != 1 && d != -1) throw InternalError("Weyl element with determinant " + d.get_str());
  return d > 0 ? 1 : -1;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto b : p) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

WeylElement reflection(const Root& r) {
  if (!is_root(r.vec)) throw std::invalid_argument("reflection: not a root " + r.vec.str());
  WeylElement w;
  for (const auto& l : enumerate_lines()) {
    LatticeVector img = l.vec + r.vec * pairing(l.vec, r.vec);
    w.perm[l.index] = static_cast<std::uint8_t>(line_index(img));
  }
  return w;
}

const std::vector<WeylElement>& all_reflections() {
  static const std::vector<WeylElement> refl = [] {
    std::vector<WeylElement> out;
    const auto& roots = enumerate_roots();
    for (std::size_t k = 0; k < roots.size(); k += 2) out.push_back(reflection(roots[k]));
    return out;
  }();
  return refl;
}

int invariant_dim(const WeylElement& w) {
  auto m = w.matrix6();
  RatMatrix a(6, RatVector(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) a[i][j] = m[i][j] - (i == j ? 1 : 0);
  return 6 - static_cast<int>(rank(a, 6));
}

Group::Group(std::vector<Perm> elements) : elems_(std::move(elements)) {
  index_.reserve(elems_.size() * 2);
  for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], static_cast<std::uint32_t>(i));
}

long Group::find(const Perm& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

Group generate_group(const std::vector<WeylElement>& gens) {
  std::vector<Perm> elems{WeylElement::identity().perm};
  std::unordered_map<Perm, std::uint32_t, PermHash> seen;
  seen.emplace(elems[0], 0);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      Perm next;
      for (int s = 0; s < kLineCount; ++s) next[s] = g.perm[elems[head][s]];
      if (seen.emplace(next, static_cast<std::uint32_t>(elems.size())).second) elems.push_back(next);
    }
  }
  return Group(std::move(elems));
}

const Group& weyl_e6() {
  static const Group g = generate_group(all_reflections());
  return g;
}

const std::vector<ReferenceClass>& reference_classes() {
  // Layout of the products-of-reflections table, followed by the invariant
  // dimensions table; order is that of the former.
  static const std::vector<ReferenceClass> ref = {
      {"1a", {0, 2, 4, 6}, "1^27", "27", 6, false},
      {"2c", {1, 3, 5}, "2^6 1^15", "18", 5, false},
      {"2b", {2, 4, 6}, "2^10 1^7", "12", 4, false},
      {"3b", {2, 4, 6}, "3^6 1^9", "11", 4, false},
      {"2d", {3, 5}, "2^12 1^3", "9", 3, false},
      {"4d", {3, 5}, "4^5 2 1^5", "27/4", 3, false},
      {"6e", {3, 5}, "6 3^4 2^3 1^3", "6", 3, false},
      {"2a", {4, 6}, "2^12 1^3", "9", 2, false},
      {"3c", {4, 6}, "3^9", "3", 2, false},
      {"4a", {4, 6}, "4^6 1^3", "9/2", 2, false},
      {"4b", {4, 6}, "4^5 2^3 1", "15/4", 2, false},
      {"5a", {4, 6}, "5^5 1^2", "3", 2, false},
      {"6b", {4, 6}, "6^3 2^3 1^3", "5", 2, false},
      {"6d", {4, 6}, "6^2 3^2 2^4 1", "4", 2, false},
      {"4c", {5}, "4^5 2^3 1", "15/4", 1, false},
      {"6f", {5}, "6^2 3^5", "2", 1, false},
      {"6g", {5}, "6^4 3", "1", 1, false},
      {"8a", {5}, "8^3 2 1", "7/8", 1, false},
      {"10a", {5}, "10 5^3 2", "58/5", 1, true},
      {"12b", {5}, "12 6 4^2 1", "7/4", 1, false},
      {"3a", {6}, "3^9", "1/3", 0, false},
      {"6a", {6}, "6^4 3", "11/3", 0, true},
      {"6c", {6}, "6^3 2^3 1^3", "5", 0, false},
      {"9a", {6}, "9^3", "1/3", 0, false},
      {"12a", {6}, "12^2 3", "19/6", 0, false},
  };
  return ref;
}

const ReferenceClass& reference_class(const std::string& name) {
  for (const auto& r : reference_classes())
    if (r.name == name) return r;
  throw std::invalid_argument("unknown class name '" + name + "'");
}

namespace {

int name_order(const std::string& name) { return std::stoi(name.substr(0, name.size() - 1)); }

using BucketKey = std::tuple<int, int, int>;  // det, order, inv_dim

BucketKey reference_bucket(const ReferenceClass& r) {
  int det = r.reflection_counts.front() % 2 == 0 ? 1 : -1;
  return {det, name_order(r.name), r.table2_inv_dim};
}

// Frozen from full enumeration; tests compare against conjugacy_classes().
struct FrozenKey {
  const char* name;
  int det;
  int order;
  const char* cycle_type;
  int inv_dim;
  int inv_dim_sq;
  long size;
};

const FrozenKey kFrozen[] = {
    {"1a", 1, 1, "1^27", 6, 6, 1},
    {"2c", -1, 2, "2^6 1^15", 5, 6, 36},
    {"2b", 1, 2, "2^10 1^7", 4, 6, 270},
    {"3b", 1, 3, "3^6 1^9", 4, 4, 240},
    {"2d", -1, 2, "2^12 1^3", 3, 6, 540},
    {"4d", -1, 4, "4^5 2 1^5", 3, 4, 1620},
    {"6e", -1, 6, "6 3^4 2^3 1^3", 3, 4, 1440},
    {"2a", 1, 2, "2^12 1^3", 2, 6, 45},
    {"3c", 1, 3, "3^9", 2, 2, 480},
    {"4a", 1, 4, "4^6 1^3", 2, 2, 540},
    {"4b", 1, 4, "4^5 2^3 1", 2, 4, 3240},
    {"5a", 1, 5, "5^5 1^2", 2, 2, 5184},
    {"6b", 1, 6, "6^3 2^3 1^3", 2, 4, 1440},
    {"6d", 1, 6, "6^2 3^2 2^4 1", 2, 4, 2160},
    {"4c", -1, 4, "4^5 2^3 1", 1, 4, 540},
    {"6f", -1, 6, "6^2 3^5", 1, 2, 1440},
    {"6g", -1, 6, "6^4 3", 1, 2, 4320},
    {"8a", -1, 8, "8^3 2 1", 1, 2, 6480},
    {"10a", -1, 10, "10 5^3 2", 1, 2, 5184},
    {"12b", -1, 12, "12 6 4^2 1", 1, 2, 4320},
    {"3a", 1, 3, "3^9", 0, 0, 80},
    {"6a", 1, 6, "6^4 3", 0, 0, 720},
    {"6c", 1, 6, "6^4 3", 0, 2, 1440},
    {"9a", 1, 9, "9^3", 0, 0, 5760},
    {"12a", 1, 12, "12^2 3", 0, 0, 4320},
};

struct Invariants {
  int det;
  int order;
  std::string cycle_type;
  int inv_dim;
  int inv_dim_sq;
  auto operator<=>(const Invariants&) const = default;
};

Invariants invariants_of(const WeylElement& w) {
  return {w.det(), w.order(), partition_string(w.cycle_type()), invariant_dim(w), invariant_dim(w * w)};
}

const FrozenKey& frozen_lookup(const Invariants& inv) {
  for (const auto& k : kFrozen)
    if (k.det == inv.det && k.order == inv.order && inv.cycle_type == k.cycle_type && k.inv_dim == inv.inv_dim &&
        k.inv_dim_sq == inv.inv_dim_sq)
      return k;
  throw InternalError("no class with invariants " + inv.cycle_type);
}

}  // namespace

std::vector<ConjClass> conjugacy_classes(const Group& g) {
  const auto& elems = g.elements();
  std::vector<int> cls(elems.size(), -1);
  const auto& refl = all_reflections();
  struct Raw {
    std::size_t smallest;
    long size;
  };
  std::vector<Raw> raw;
  std::vector<std::size_t> queue;
  for (std::size_t start = 0; start < elems.size(); ++start) {
    if (cls[start] >= 0) continue;
    int id = static_cast<int>(raw.size());
    raw.push_back({start, 0});
    queue.assign(1, start);
    cls[start] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Perm& x = elems[queue[head]];
      if (x < elems[raw[id].smallest]) raw[id].smallest = queue[head];
      for (const auto& r : refl) {
        // r x r^{-1}, r an involution
        Perm y;
        for (int s = 0; s < kLineCount; ++s) y[s] = r.perm[x[r.perm[s]]];
        long k = g.find(y);
        if (k < 0) throw std::invalid_argument("conjugacy_classes: group not closed under reflections");
        if (cls[k] < 0) {
          cls[k] = id;
          queue.push_back(static_cast<std::size_t>(k));
        }
      }
    }
    raw[id].size = static_cast<long>(queue.size());
  }

  std::vector<ConjClass> classes;
  for (const auto& r : raw) {
    ConjClass c;
    c.rep.perm = elems[r.smallest];
    c.size = r.size;
    c.order = c.rep.order();
    c.cycle_type = c.rep.cycle_type();
    c.inv_dim = invariant_dim(c.rep);
    c.inv_dim_sq = invariant_dim(c.rep * c.rep);
    c.det = c.rep.det();
    classes.push_back(std::move(c));
  }
  if (classes.size() != reference_classes().size())
    throw InternalError("expected 25 conjugacy classes, found " + std::to_string(classes.size()));

  // Within each (det, order, inv_dim) bucket, names go in alphabetical order
  // to classes in ascending size (larger centralizer first).
  std::map<BucketKey, std::vector<std::size_t>> computed;
  for (std::size_t i = 0; i < classes.size(); ++i)
    computed[{classes[i].det, classes[i].order, classes[i].inv_dim}].push_back(i);
  std::map<BucketKey, std::vector<std::string>> names;
  for (const auto& r : reference_classes()) names[reference_bucket(r)].push_back(r.name);
  for (auto& [key, idx] : computed) {
    auto it = names.find(key);
    if (it == names.end() || it->second.size() != idx.size())
      throw InternalError("class invariants do not match the reference table");
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return classes[a].size < classes[b].size; });
    for (std::size_t k = 1; k < idx.size(); ++k)
      if (classes[idx[k]].size == classes[idx[k - 1]].size) throw InternalError("ambiguous class labeling");
    auto sorted = it->second;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < idx.size(); ++k) classes[idx[k]].name = sorted[k];
  }

  std::vector<ConjClass> ordered;
  for (const auto& r : reference_classes())
    for (const auto& c : classes)
      if (c.name == r.name) ordered.push_back(c);
  return ordered;
}

const std::vector<ConjClass>& e6_classes() {
  static const std::vector<ConjClass> cls = conjugacy_classes(weyl_e6());
  return cls;
}

std::string classify(const WeylElement& w) { return frozen_lookup(invariants_of(w)).name; }

namespace {

// Class-level BFS over reflection words using invariant lookup only.
struct WordSearch {
  std::map<std::string, WeylElement> reps;
  std::map<int, std::vector<std::string>> layers;
};

WordSearch reflection_words(int max_i) {
  WordSearch ws;
  std::map<std::string, WeylElement> layer{{"1a", WeylElement::identity()}};
  ws.reps.emplace("1a", WeylElement::identity());
  for (int i = 0;; ++i) {
    std::vector<std::string> names;
    for (const auto& [n, w] : layer) names.push_back(n);
    ws.layers[i] = names;
    if (i == max_i) break;
    std::map<std::string, WeylElement> next;
    for (const auto& [n, w] : layer)
      for (const auto& r : all_reflections()) {
        WeylElement x = r * w;
        std::string name = classify(x);
        next.emplace(name, x);
        ws.reps.emplace(name, x);
      }
    layer = std::move(next);
  }
  return ws;
}

}  // namespace

std::vector<ConjClass> e6_classes_fast() {
  WordSearch ws = reflection_words(6);
  std::vector<ConjClass> out;
  for (const auto& k : kFrozen) {
    ConjClass c;
    c.name = k.name;
    c.det = k.det;
    c.order = k.order;
    c.cycle_type = parse_partition(k.cycle_type);
    c.inv_dim = k.inv_dim;
    c.inv_dim_sq = k.inv_dim_sq;
    c.size = k.size;
    auto it = ws.reps.find(k.name);
    if (it == ws.reps.end()) throw InternalError("class " + c.name + " not reached by reflection words");
    c.rep = it->second;
    out.push_back(std::move(c));
  }
  return out;
}

std::map<int, std::vector<std::string>> reflection_products_table(int max_i) {
  if (max_i < 0) throw std::invalid_argument("reflection_products_table: negative bound");
  auto layers = reflection_words(max_i).layers;
  // Reference order for stable output.
  std::map<int, std::vector<std::string>> out;
  for (const auto& [i, names] : layers) {
    auto& dst = out[i];
    for (const auto& r : reference_classes())
      if (std::find(names.begin(), names.end(), r.name) != names.end()) dst.push_back(r.name);
  }
  return out;
}

RootRelation relation(const Root& r, const Root& s) {
  if (!is_root(r.vec) || !is_root(s.vec)) throw std::invalid_argument("relation: non-root input");
  auto p = pairing(r.vec, s.vec);
  if (p == 0) return RootRelation::Syzygetic;
  if (p == 1 || p == -1) return RootRelation::Azygetic;
  return RootRelation::EqualOrOpposite;
}

std::string to_string(RootRelation rel) {
  switch (rel) {
    case RootRelation::Syzygetic:
      return "syzygetic";
    case RootRelation::Azygetic:
      return "azygetic";
    case RootRelation::EqualOrOpposite:
      return "equal/opposite";
  }
  return {};
}

}  // namespace e6kit
