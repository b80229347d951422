#include <doctest.h>

#include <random>
#include <set>

#include "e6kit/divisors.hpp"

using namespace e6kit;

namespace {

DivisorClass random_class(std::mt19937& rng) {
  static const char* names[] = {"lambda", "DE6", "Dsyz", "Dazy", "n", "E0", "E[3:3^6 1^9]"};
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5), coin(0, 2);
  DivisorClass d;
  for (const char* s : names)
    if (coin(rng)) d.set(s, Rat(num(rng), den(rng)));
  return d;
}

Rat rnd(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  return Rat(num(rng), den(rng));
}

}  // namespace

TEST_CASE("vector space axioms") {
  std::mt19937 rng(42);
  for (int t = 0; t < 200; ++t) {
    auto a = random_class(rng), b = random_class(rng), c = random_class(rng);
    Rat x = rnd(rng), y = rnd(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a - a == DivisorClass{});
    CHECK((a - a).empty());
    CHECK(x * (a + b) == x * a + x * b);
    CHECK((x + y) * a == x * a + y * a);
    CHECK(x * (y * a) == (x * y) * a);
    CHECK(Rat(1) * a == a);
    CHECK(parse_divisor(a.str()) == a);
  }
}

TEST_CASE("parsing") {
  auto d = parse_divisor("2*lambda - 3/4 DE6 + n");
  CHECK(d.coeff("lambda") == 2);
  CHECK(d.coeff("DE6") == Rat(-3, 4));
  CHECK(d.coeff("n") == 1);
  CHECK(d.coeff("Dsyz") == 0);
  auto e = parse_divisor("E[3: 2^12  1^3] - E[3:2^12 1^3] + E[4:3^6 1^9]");
  CHECK_FALSE(e.contains("E[3:2^12 1^3]"));
  CHECK(e.coeff("E[4:3^6 1^9]") == 1);
  CHECK(parse_divisor("lambda - lambda").empty());
  try {
    parse_divisor("lambda + * DE6");
    FAIL("expected ParseError");
  } catch (const ParseError& err) {
    CHECK(err.line == 1);
    CHECK(err.column == 10);
  }
  CHECK_THROWS_AS(parse_divisor("E[3:2^12"), ParseError);
  CHECK_THROWS_AS(parse_divisor("E[3:2^x]"), ParseError);
  CHECK(parse_divisor("D[4 : 1^3 2^12]").contains("D[4:2^12 1^3]"));
  CHECK_THROWS_AS(parse_divisor("2/0 lambda"), ParseError);
}

TEST_CASE("substitution") {
  auto lam = parse_divisor("lambda + 2 kappa1");
  std::vector<Rule> rules = {{"kappa1", parse_divisor("12 lambda - DE6")}};
  CHECK(substitute(lam, rules) == parse_divisor("25 lambda - 2 DE6"));
  // x -> x is ignored.
  CHECK(substitute(lam, {{"lambda", parse_divisor("lambda")}}) == lam);
  CHECK_THROWS_AS(substitute(lam, {{"kappa1", parse_divisor("gamma")}, {"gamma", parse_divisor("kappa1")}}),
                  CyclicRules);
  CHECK_THROWS_AS(substitute(lam, {{"kappa1", parse_divisor("lambda")}, {"kappa1", parse_divisor("n")}}),
                  std::exception);
  // Chains resolve regardless of rule order.
  std::vector<Rule> chain = {{"a", parse_divisor("2 b")}, {"b", parse_divisor("3 c")}};
  std::vector<Rule> chain_rev = {chain[1], chain[0]};
  CHECK(substitute(parse_divisor("a"), chain) == parse_divisor("6 c"));
  CHECK(substitute(parse_divisor("a"), chain_rev) == parse_divisor("6 c"));

  auto rel = parse_divisor("2 x - 3 y + z");
  CHECK(solve_for(rel, "x") == parse_divisor("3/2 y - 1/2 z"));
  CHECK_THROWS(solve_for(rel, "w"));
}

TEST_CASE("partition statistics") {
  CHECK(partition_inv_mu(parse_partition("2^10 1^7")) == 12);
  CHECK(partition_inv_mu(parse_partition("10 5^3 2")) == Rat(6, 5));
  CHECK(partition_inv_mu(parse_partition("1^27")) == 27);
  CHECK(partition_lcm(parse_partition("12 6^2 3")) == 12);
  CHECK(partition_lcm(parse_partition("10 5^3 2")) == 10);
  CHECK(partition_lcm(parse_partition("9^3")) == 9);
}

TEST_CASE("boundary index sets") {
  std::set<std::string> p2;
  for (const auto& mu : partitions_for(2)) p2.insert(partition_string(mu));
  CHECK(p2 == std::set<std::string>{"1^27", "2^10 1^7", "3^6 1^9"});
  for (const auto& b : boundary_indices()) {
    CHECK(b.i >= 2);
    CHECK(b.i <= 12);
    CHECK(b.lcm == partition_lcm(b.mu));
    CHECK(b.inv_mu == partition_inv_mu(b.mu));
    int total = 0;
    for (int m : b.mu) total += m;
    CHECK(total == 27);
  }
  CHECK(e_symbol(2, parse_partition("1^27")) == "E0");
  CHECK(d_symbol(2, parse_partition("3^6 1^9")) == "Dazy");
  CHECK(e_symbol(3, parse_partition("2^6 1^15")) == "E[3:2^6 1^15]");
}

TEST_CASE("table 1 rows") {
  auto rows = table1();
  REQUIRE(rows.size() == 25);
  for (const auto& r : rows) {
    CHECK_MESSAGE(r.counts_match, r.name);
    if (r.name == "10a") {
      CHECK(r.flagged);
      CHECK(r.inv_mu_from_printed == Rat(6, 5));
    }
  }
}

TEST_CASE("Hodge and canonical classes") {
  auto lam = hodge_class();
  CHECK(lam.coeff("E0") == Rat(33, 23));
  CHECK(lam.coeff("Esyz") == Rat(17, 46));
  CHECK(lam.coeff("Eazy") == Rat(7, 23));
  // Oracle: lcm/12 * (9 i(24-i)/23 - 27 + 1/mu) on every index.
  for (const auto& b : boundary_indices()) {
    Rat want = Rat(b.lcm) * (Rat(9 * b.i * (24 - b.i), 23) - 27 + b.inv_mu) / 12;
    CHECK(lam.coeff(e_symbol(b.i, b.mu)) == want);
  }
  auto lam_d = pushdown_q(lam);
  CHECK(lam_d.coeff("D0") == Rat(33, 46));
  CHECK(lam_d.coeff("Dazy") == Rat(7, 46));
  CHECK(lam_d.coeff("Dsyz") == Rat(17, 46));

  auto k = canonical_classes();
  CHECK(k.K_Hur.coeff("D0") == Rat(-25, 46));
  CHECK(k.K_Hur.coeff("Dsyz") == Rat(19, 23));
  CHECK(k.K_Hur.coeff("Dazy") == Rat(17, 46));
  CHECK(k.K_G == parse_divisor("-25/46 DE6 + 19/46 Dsyz + 17/46 Dazy"));
  for (const auto& b : boundary_indices()) {
    if (b.i < 3) continue;
    Rat want = Rat(b.lcm) * (Rat(b.i * (24 - b.i), 23) - 1) - 1;
    CHECK(k.K_Hur.coeff(d_symbol(b.i, b.mu)) == want);
  }
}

TEST_CASE("quotient pullback round trip") {
  auto d = parse_divisor("D0 + 2 Dsyz - 3 Dazy + D[3:2^6 1^15]");
  auto e = pullback_q(d);
  CHECK(e == parse_divisor("2 E0 + 2 Esyz - 6 Eazy + E[3:2^6 1^15]"));
  CHECK(pushdown_q(e) == d);
  CHECK_THROWS(pullback_q(parse_divisor("lambda")));
  CHECK_THROWS(pushdown_q(parse_divisor("E[2:5^5 2]")));
  CHECK(to_g_level(d) == parse_divisor("DE6 + Dsyz - 3 Dazy"));
}

TEST_CASE("degeneracy divisor classes") {
  auto d0 = dn_class(0);
  CHECK_FALSE(d0.empty());
  // At most quadratic in n.
  auto d1 = dn_class(1), d2 = dn_class(2), d3 = dn_class(3);
  CHECK(d3 - Rat(3) * d2 + Rat(3) * d1 - d0 == DivisorClass{});
}

TEST_CASE("identity ledger") {
  auto ids = verify_identities();
  CHECK(ids.size() >= 40);
  std::set<std::string> names;
  for (const auto& id : ids) {
    CHECK_MESSAGE(id.ok, id.name << ": " << id.derived.str() << " " << id.relation << " " << id.stated.str());
    names.insert(id.name);
    if (id.kind == IdentityKind::Equality) CHECK(id.relation == "=");
  }
  CHECK(names.size() == ids.size());
}
