#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "e6kit/exact.hpp"
#include "e6kit/weyl.hpp"

using namespace e6kit;

namespace {

std::vector<WeylElement> reflections_of(const std::vector<int>& simple) {
  std::vector<WeylElement> out;
  for (int i : simple) out.push_back(reflection(simple_roots()[i]));
  return out;
}

// Class name of every group element, via the invariant key.
const std::unordered_map<Perm, std::string, PermHash>& class_of_element() {
  static const auto table = [] {
    std::unordered_map<Perm, std::string, PermHash> m;
    for (const auto& p : weyl_e6().elements()) m.emplace(p, classify(WeylElement{p}));
    return m;
  }();
  return table;
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(weyl_e6().size() == 51840);
  CHECK(generate_group(reflections_of({1, 2, 3, 4, 5})).size() == 1920);  // D5
  CHECK(generate_group(reflections_of({2, 3, 4, 5, 6})).size() == 720);   // A5
  CHECK(generate_group(reflections_of({2})).size() == 2);
  CHECK(all_reflections().size() == 36);
}

TEST_CASE("reflections") {
  for (const auto& w : all_reflections()) {
    CHECK(w.det() == -1);
    CHECK(w.order() == 2);
    CHECK(invariant_dim(w) == 5);
    CHECK(partition_string(w.cycle_type()) == "2^6 1^15");
    CHECK(classify(w) == "2c");
  }
  CHECK(invariant_dim(WeylElement::identity()) == 6);
  CHECK(WeylElement::identity().det() == 1);
  auto r = alpha(1, 2);
  auto w = reflection(r);
  CHECK(w.apply(r.vec) == (-r).vec);
  CHECK(w * w == WeylElement::identity());
}

TEST_CASE("matrix actions are homomorphisms") {
  std::mt19937 rng(7);
  const auto& el = weyl_e6().elements();
  std::uniform_int_distribution<std::size_t> pick(0, el.size() - 1);
  for (int t = 0; t < 30; ++t) {
    WeylElement a{el[pick(rng)]}, b{el[pick(rng)]};
    auto ab = (a * b).matrix7();
    auto ma = a.matrix7(), mb = b.matrix7();
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) {
        std::int64_t s = 0;
        for (int k = 0; k < 7; ++k) s += ma[i][k] * mb[k][j];
        CHECK(s == ab[i][j]);
      }
    CHECK((a * b).det() == a.det() * b.det());
    CHECK(a * a.inverse() == WeylElement::identity());
    for (const auto& l : enumerate_lines()) CHECK(line_index(a.apply(l.vec)) == a.perm[l.index]);
  }
}

TEST_CASE("class table: full enumeration agrees with the frozen keys") {
  const auto& full = e6_classes();
  auto fast = e6_classes_fast();
  REQUIRE(full.size() == 25);
  REQUIRE(fast.size() == 25);
  long total = 0;
  for (std::size_t i = 0; i < full.size(); ++i) {
    CHECK(full[i].name == fast[i].name);
    CHECK(full[i].size == fast[i].size);
    CHECK(full[i].order == fast[i].order);
    CHECK(full[i].cycle_type == fast[i].cycle_type);
    CHECK(full[i].inv_dim == fast[i].inv_dim);
    CHECK(classify(fast[i].rep) == fast[i].name);
    CHECK(classify(full[i].rep) == full[i].name);
    total += full[i].size;
  }
  CHECK(total == 51840);
}

TEST_CASE("class sizes by counting elements") {
  std::map<std::string, long> count;
  for (const auto& [p, name] : class_of_element()) ++count[name];
  for (const auto& c : e6_classes()) CHECK(count[c.name] == c.size);
}

TEST_CASE("6a and 6c share a cycle type") {
  std::map<std::string, ConjClass> by;
  for (const auto& c : e6_classes()) by[c.name] = c;
  CHECK(by["6a"].cycle_type == by["6c"].cycle_type);
  CHECK(by["6a"].size == 720);
  CHECK(by["6c"].size == 1440);
  CHECK(by["6a"].inv_dim_sq != by["6c"].inv_dim_sq);
}

TEST_CASE("classify is a class function") {
  std::mt19937 rng(20240611);
  const auto& el = weyl_e6().elements();
  std::uniform_int_distribution<std::size_t> pick(0, el.size() - 1);
  for (const auto& c : e6_classes()) {
    for (int t = 0; t < 8; ++t) {
      WeylElement g{el[pick(rng)]};
      CHECK(classify(g * c.rep * g.inverse()) == c.name);
    }
  }
}

TEST_CASE("products of reflections: element-level layer oracle") {
  // S_0 = {1}, S_i = S_{i-1} * reflections.
  const auto& cls = class_of_element();
  auto table = reflection_products_table(6);
  std::unordered_set<Perm, PermHash> layer{WeylElement::identity().perm};
  for (int i = 0; i <= 6; ++i) {
    if (i > 0) {
      std::unordered_set<Perm, PermHash> next;
      for (const auto& p : layer)
        for (const auto& r : all_reflections()) next.insert((WeylElement{p} * r).perm);
      layer = std::move(next);
    }
    std::set<std::string> names;
    for (const auto& p : layer) names.insert(cls.at(p));
    std::set<std::string> got(table[i].begin(), table[i].end());
    CHECK_MESSAGE(names == got, "i = " << i);
  }
}

TEST_CASE("partitions") {
  Partition p = {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1};
  CHECK(partition_string(p) == "2^10 1^7");
  CHECK(parse_partition("2^10 1^7") == p);
  CHECK(parse_partition("10 5^3 2") == Partition{10, 5, 5, 5, 2});
  CHECK(parse_partition(partition_string({6, 6, 6, 6, 3})) == Partition{6, 6, 6, 6, 3});
  CHECK_THROWS_AS(parse_partition("2^x"), InputError);
}

TEST_CASE("root relations") {
  CHECK(relation(alpha(1, 2), alpha(3, 4)) == RootRelation::Syzygetic);
  CHECK(relation(alpha(1, 2), alpha(2, 3)) == RootRelation::Azygetic);
  CHECK(relation(alpha(1, 2), -alpha(1, 2)) == RootRelation::EqualOrOpposite);
  // Syzygetic pairs multiply to class 2b, azygetic pairs to order 3.
  CHECK(classify(reflection(alpha(1, 2)) * reflection(alpha(3, 4))) == "2b");
  CHECK((reflection(alpha(1, 2)) * reflection(alpha(2, 3))).order() == 3);
}
