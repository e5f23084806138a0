#include <doctest.h>

#include <set>

#include "haarcay/error.hpp"
#include "haarcay/perm.hpp"

using namespace haarcay;

namespace {

Permutation cycle(std::size_t n, std::vector<Point> c) {
  std::vector<Point> img(n);
  for (Point i = 0; i < n; ++i) img[i] = i;
  for (std::size_t k = 0; k < c.size(); ++k) img[c[k]] = c[(k + 1) % c.size()];
  return Permutation(img);
}

} // namespace

TEST_CASE("composition is left to right") {
  const auto p = cycle(3, {0, 1});
  const auto q = cycle(3, {1, 2});
  // 0 -p-> 1 -q-> 2
  CHECK((p * q)(0) == 2);
  CHECK((q * p)(0) == 1);
  CHECK((p * p.inverse()).is_identity());
  CHECK(cycle(5, {0, 1, 2}).order() == 3);
  CHECK(cycle(5, {0, 1, 2}).to_cycles() == "(0 1 2)");
  CHECK(Permutation::identity(3).to_cycles() == "()");
}

TEST_CASE("non-bijections are rejected") {
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), Error);
}

TEST_CASE("Schreier-Sims order agrees with closure") {
  const std::size_t n = 7;
  std::vector<std::vector<Permutation>> gen_sets = {
      {cycle(n, {0, 1, 2, 3, 4, 5, 6}), cycle(n, {0, 1})},
      {cycle(n, {0, 1, 2, 3, 4, 5, 6}), cycle(n, {1, 6}) * cycle(n, {2, 5}) * cycle(n, {3, 4})},
      {cycle(n, {0, 1, 2}), cycle(n, {2, 3, 4})},
      {cycle(n, {0, 1}) * cycle(n, {2, 3}), cycle(n, {4, 5, 6})},
  };
  for (const auto &gens : gen_sets) {
    const PermGroup g(n, gens);
    const auto elems = close_group(n, gens, 10000);
    CHECK(g.order() == BigInt(elems.size()));
    for (const auto &e : elems) CHECK(g.contains(e));
    std::set<Point> seen;
    for (const auto &o : g.orbits()) seen.insert(o.begin(), o.end());
    CHECK(seen.size() == n);
  }
  CHECK(PermGroup(n, gen_sets[0]).order() == 5040);
  CHECK(PermGroup(n, gen_sets[1]).order() == 14);
  CHECK(PermGroup(n, gen_sets[2]).order() == 60);
}

TEST_CASE("membership rejects outsiders") {
  const std::size_t n = 5;
  const PermGroup a5(n, {cycle(n, {0, 1, 2}), cycle(n, {0, 1, 2, 3, 4})});
  CHECK(a5.order() == 60);
  CHECK_FALSE(a5.contains(cycle(n, {0, 1})));
  CHECK(a5.contains(cycle(n, {0, 1}) * cycle(n, {2, 3})));
}

TEST_CASE("regularity") {
  const std::size_t n = 6;
  const PermGroup z6(n, {cycle(n, {0, 1, 2, 3, 4, 5})});
  CHECK(z6.is_regular());
  const PermGroup z3(n, {cycle(n, {0, 1, 2}) * cycle(n, {3, 4, 5})});
  CHECK(z3.is_semiregular());
  CHECK_FALSE(z3.is_transitive());
  const PermGroup s3(3, {cycle(3, {0, 1}), cycle(3, {0, 1, 2})});
  CHECK(s3.is_transitive());
  CHECK_FALSE(s3.is_regular());
}

TEST_CASE("regular subgroup search") {
  // S3 on 3 points contains Z3.
  const PermGroup s3(3, {cycle(3, {0, 1}), cycle(3, {0, 1, 2})});
  auto r = find_regular_subgroup(s3, kDefaultSearchBudget);
  REQUIRE(r.outcome == SearchOutcome::found);
  CHECK(r.group->is_regular());
  CHECK(r.group->order() == 3);

  // Intransitive groups have none.
  const PermGroup z2(4, {cycle(4, {0, 1})});
  CHECK(find_regular_subgroup(z2, kDefaultSearchBudget).outcome == SearchOutcome::none);

  // S5 acting on 5 points: Z5 is regular.
  const PermGroup s5(5, {cycle(5, {0, 1}), cycle(5, {0, 1, 2, 3, 4})});
  r = find_regular_subgroup(s5, kDefaultSearchBudget);
  REQUIRE(r.outcome == SearchOutcome::found);
  CHECK(r.group->order() == 5);
}
