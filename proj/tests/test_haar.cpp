#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "haarcay/error.hpp"
#include "haarcay/haar.hpp"
#include "oracles.hpp"

using namespace haarcay;

namespace {

HaarSpec spec(const char *text) { return parse_haar_spec(text); }

ErrorCode code_of(auto &&f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::internal_verification_failure;
}

// Independent check of the three sigma postconditions.
void check_sigma(const HaarSpec &s, const AlgCayleyWitness &w, const Permutation &sigma) {
  const auto x = haar_graph(s);
  CHECK(x.is_automorphism(sigma));
  CHECK(sigma * sigma == right_translation(s.group, w.g));
  std::vector<Permutation> gens{sigma};
  for (Elem y = 0; y < s.group.order(); ++y) gens.push_back(right_translation(s.group, y));
  const auto elems = close_group(x.vertex_count(), gens, 4 * x.vertex_count());
  CHECK(elems.size() == x.vertex_count());
  std::set<Point> reach;
  for (const auto &e : elems) reach.insert(e(0));
  CHECK(reach.size() == x.vertex_count());
}

} // namespace

TEST_CASE("haar graph matches the definition") {
  std::mt19937 rng(5);
  for (const char *g : {"cyclic:7", "dihedral:4", "quaternion", "product:cyclic:2,cyclic:4"}) {
    const auto grp = parse_group(g);
    std::uniform_int_distribution<std::size_t> pick(0, (std::size_t{1} << grp.order()) - 1);
    for (int t = 0; t < 20; ++t) {
      const HaarSpec s(grp, oracle::subset_from_mask(pick(rng), grp.order()));
      const auto x = haar_graph(s);
      CHECK(x.vertex_count() == 2 * grp.order());
      CHECK(x.edge_count() == grp.order() * s.S.size());
      if (!s.S.empty()) CHECK(x.regular_degree() == s.S.size());
      CHECK(try_bipartition(x).bipartite);
      const auto adj = oracle::haar_adjacency(grp, s.S);
      for (Point v = 0; v < adj.size(); ++v)
        for (auto w : adj[v]) CHECK(x.adjacent(v, static_cast<Point>(w)));
    }
  }
}

TEST_CASE("spec parsing") {
  const auto s = spec("dihedral:6|1,a,a^3,b,a*b,a^3*b");
  CHECK(s.S.size() == 6);
  CHECK(format_subset(s.group, s.S) == "1,a,a^3,b,a*b,a^3*b");
  CHECK(spec("cyclic:8|3,1,0,1").S == std::vector<Elem>{0, 1, 3});
  CHECK(spec("product:cyclic:2,cyclic:2|(1,0),(0,1)").S.size() == 2);
  CHECK(code_of([] { spec("cyclic:8|9"); }) == ErrorCode::parse_error);
  CHECK(code_of([] { spec("cyclic:8"); }) == ErrorCode::parse_error);
  CHECK(spec("cyclic:4|").S.empty());
}

TEST_CASE("connectivity criterion agrees with BFS") {
  for (const char *g : {"cyclic:6", "dihedral:3", "dihedral:4", "quaternion"}) {
    const auto grp = parse_group(g);
    for (std::size_t mask = 1; mask < (std::size_t{1} << grp.order()); ++mask) {
      const auto s = oracle::subset_from_mask(mask, grp.order());
      CHECK(connectivity_criterion(HaarSpec(grp, s)) ==
            oracle::connected(oracle::haar_adjacency(grp, s)));
    }
  }
  CHECK(code_of([] { connectivity_criterion(spec("cyclic:4|")); }) ==
        ErrorCode::invalid_parameter);
}

TEST_CASE("witness search agrees with brute force") {
  for (const char *g : {"dihedral:3", "dihedral:4", "quaternion", "cyclic:6"}) {
    const auto grp = parse_group(g);
    const auto auts = oracle::group_automorphisms(grp);
    const WitnessContext ctx(grp);
    CHECK(ctx.automorphism_count() == auts.size());
    for (std::size_t mask = 0; mask < (std::size_t{1} << grp.order()); ++mask) {
      const auto s = oracle::subset_from_mask(mask, grp.order());
      const auto w = ctx.find(s);
      CHECK(w.has_value() == oracle::witness_exists(grp, auts, s));
      if (w) CHECK(witness_holds(HaarSpec(grp, s), *w));
    }
  }
}

TEST_CASE("D6 counterexample has no witness") {
  const auto s = spec("dihedral:6|1,a,a^3,b,a*b,a^3*b");
  CHECK_FALSE(alg_cayley_witness(s).has_value());
  CHECK_FALSE(oracle::witness_exists(s.group, oracle::group_automorphisms(s.group), s.S));
  CHECK_FALSE(is_vertex_transitive(haar_graph(s)));
  CHECK(is_cayley(s).outcome == SearchOutcome::none);
}

TEST_CASE("sigma postconditions") {
  for (const char *t : {"dihedral:3|1,a", "cyclic:8|0,1,3", "quaternion|1,i,j",
                        "dihedral:4|1,a,b", "dihedral:5|a,a^2*b,a^4"}) {
    const auto s = spec(t);
    const auto w = alg_cayley_witness(s);
    REQUIRE(w.has_value());
    check_sigma(s, *w, build_sigma(s, *w));
  }
  const auto s = spec("dihedral:3|1,a");
  AlgCayleyWitness bogus{s.group.identity(), GroupAutomorphism::identity(6)};
  if (!witness_holds(s, bogus))
    CHECK(code_of([&] { build_sigma(s, bogus); }) == ErrorCode::invalid_witness);
}

TEST_CASE("abelian groups always have a witness") {
  for (const char *g : {"cyclic:7", "product:cyclic:2,cyclic:4", "cyclic:9"}) {
    const auto grp = parse_group(g);
    const WitnessContext ctx(grp);
    for (std::size_t mask = 0; mask < (std::size_t{1} << grp.order()); mask += 3)
      CHECK(ctx.find(oracle::subset_from_mask(mask, grp.order())).has_value());
  }
}

TEST_CASE("complement duality") {
  const auto grp = parse_group("dihedral:4");
  const WitnessContext ctx(grp);
  for (std::size_t mask = 0; mask < 256; ++mask) {
    const HaarSpec s(grp, oracle::subset_from_mask(mask, 8));
    CHECK(ctx.find(s.S).has_value() == ctx.find(complement(s).S).has_value());
  }
}

TEST_CASE("translates give isomorphic graphs") {
  std::mt19937 rng(9);
  const auto grp = parse_group("dihedral:5");
  const auto auts = automorphisms(grp);
  std::uniform_int_distribution<std::size_t> mask(0, 1023), elem(0, 9), aut(0, auts.size() - 1);
  for (int t = 0; t < 25; ++t) {
    const HaarSpec s(grp, oracle::subset_from_mask(mask(rng), 10));
    const auto u = translate(s, static_cast<Elem>(elem(rng)), auts[aut(rng)],
                             static_cast<Elem>(elem(rng)));
    CHECK(is_isomorphic(haar_graph(s), haar_graph(u)).has_value());
  }
}

TEST_CASE("difference multiset") {
  const auto s = spec("dihedral:25|1,a,a^3,b,a*b,a^2*b,a^4*b");
  const auto d = difference_multiset(s);
  std::size_t total = 0;
  for (const auto &[k, elems] : d) total += k * elems.size();
  CHECK(total == s.S.size() * s.S.size());
  CHECK(d.at(7) == std::vector<Elem>{s.group.identity()});
}

TEST_CASE("Moebius-Kantor graph") {
  const auto z = haar_graph(spec("cyclic:8|0,1,3"));
  const auto q = haar_graph(spec("quaternion|1,i,j"));
  const auto iso = is_isomorphic(z, q);
  REQUIRE(iso.has_value());
  CHECK(z.is_isomorphism_to(q, *iso));
  CHECK(automorphism_group(z).order() == 96);
  CHECK(is_cayley(spec("cyclic:8|0,1,3")).outcome == SearchOutcome::found);
}

TEST_CASE("Cayley search with and without G_R") {
  const auto s = spec("dihedral:3|1,a");
  const auto seeded = is_cayley(s, kDefaultSearchBudget, true);
  const auto plain = is_cayley(s, kDefaultSearchBudget, false);
  REQUIRE(seeded.outcome == SearchOutcome::found);
  REQUIRE(plain.outcome == SearchOutcome::found);
  CHECK(seeded.regular->is_regular());
  CHECK(plain.regular->is_regular());
  const auto x = haar_graph(s);
  for (const auto &p : plain.regular->generators()) CHECK(x.is_automorphism(p));
  CHECK(is_cayley(s, 0, false).outcome == SearchOutcome::unknown);
}

TEST_CASE("Petersen graph is vertex-transitive but not Cayley") {
  Graph p(10);
  for (Point i = 0; i < 5; ++i) {
    p.add_edge(i, (i + 1) % 5);
    p.add_edge(i, i + 5);
    p.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  CHECK(is_vertex_transitive(p));
  CHECK(is_cayley(p).outcome == SearchOutcome::none);
}

TEST_CASE("bipartite Cayley graphs as Haar graphs") {
  const auto z6 = parse_group("cyclic:6");
  auto conv = haar_from_bipartite_cayley(z6, std::vector<Elem>{1, 5});
  CHECK(conv.group.order() == 3);
  CHECK(conv.connected);
  CHECK(haar_graph(HaarSpec(conv.group, conv.T)).is_isomorphism_to(
      cayley_graph(z6, std::vector<Elem>{1, 5}), conv.isomorphism));

  const auto d3 = parse_group("dihedral:3");
  const auto refl = parse_subset(d3, "b,a*b,a^2*b");
  conv = haar_from_bipartite_cayley(d3, refl);
  CHECK(conv.T.size() == 3);
  CHECK(haar_graph(HaarSpec(conv.group, conv.T)).is_isomorphism_to(cayley_graph(d3, refl),
                                                                   conv.isomorphism));

  // Disconnected: Z8 with S = {2,6} is two 4-cycles.
  const auto z8 = parse_group("cyclic:8");
  conv = haar_from_bipartite_cayley(z8, std::vector<Elem>{2, 6});
  CHECK_FALSE(conv.connected);
  CHECK(conv.group.order() == 4);

  CHECK(code_of([] {
          haar_from_bipartite_cayley(parse_group("cyclic:5"), std::vector<Elem>{1, 4});
        }) == ErrorCode::not_bipartite);
  CHECK(code_of([&] { cayley_graph(z6, std::vector<Elem>{0, 1, 5}); }) ==
        ErrorCode::invalid_connection_set);
}

TEST_CASE("nonsplit family graph") {
  const auto f = nonsplit_family_graph(3, 2);
  CHECK(f.graph.vertex_count() == 18);
  CHECK(f.group.order() == 18);
  CHECK(f.group.is_regular());
  for (const auto *p : {&f.alpha, &f.beta, &f.gamma}) CHECK(f.graph.is_automorphism(*p));
  CHECK((f.gamma * f.gamma).is_identity());
  CHECK(f.alpha * f.beta == f.beta * f.alpha);
  CHECK(f.alpha * f.gamma == f.gamma * f.alpha);
  CHECK(f.gamma.inverse() * f.beta * f.gamma == f.beta.inverse());
  CHECK(nonsplit_family_graph(5, 2).group.order() == 50);
  CHECK(code_of([] { nonsplit_family_graph(4, 2); }) == ErrorCode::invalid_parameter);
}

TEST_CASE("nonsplit example preconditions") {
  const auto d = build_dihedral(3);
  const Elem a = *d.parse_element("a"), b = *d.parse_element("b");
  const auto rot = subgroup_generated(d, std::vector<Elem>{a});
  // Index 2 and split.
  CHECK(code_of([&] { verify_nonsplit_example(d, rot, b); }) == ErrorCode::invalid_parameter);
  // x in N
  CHECK(code_of([&] { verify_nonsplit_example(d, rot, a); }) == ErrorCode::invalid_parameter);
  // Split 3-group, index 3.
  const auto g = build_metacyclic(9, 4, 3, 0);
  const auto n = subgroup_generated(g, std::vector<Elem>{1});
  CHECK(code_of([&] { verify_nonsplit_example(g, n, 9); }) == ErrorCode::invalid_parameter);
}

TEST_CASE("quasi-Cayley family") {
  const auto s = spec("cyclic:8|0,1,3");
  const auto w = alg_cayley_witness(s);
  REQUIRE(w.has_value());
  const auto f = quasi_cayley_family(s, build_sigma(s, *w));
  CHECK(f.size() == 16);
  // Exactly one member takes u to v.
  for (Point u = 0; u < 16; ++u)
    for (Point v = 0; v < 16; ++v)
      CHECK(std::count_if(f.begin(), f.end(), [&](const Permutation &p) { return p(u) == v; }) == 1);
  CHECK(code_of([&] { quasi_cayley_family(s, Permutation::identity(16)); }) ==
        ErrorCode::invalid_parameter);
  const auto swap = class_swapping_automorphism(s);
  REQUIRE(swap.has_value());
  CHECK(quasi_cayley_family(s, *swap).size() == 16);
}
