#include "haarcay/haar.hpp"

#include <algorithm>
#include <numeric>

#include "haarcay/error.hpp"

namespace haarcay {

namespace {

std::vector<Elem> normalized(const FiniteGroup &g, std::vector<Elem> s) {
  for (auto x : s)
    if (x >= g.order()) fail(ErrorCode::invalid_parameter, "subset element out of range");
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Bitset as_bitset(std::size_t n, std::span<const Elem> s) {
  Bitset b(n);
  for (auto x : s) b.set(x);
  return b;
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

} // namespace

HaarSpec::HaarSpec(FiniteGroup g, std::vector<Elem> s)
    : group(std::move(g)), S(normalized(group, std::move(s))) {}

Graph haar_graph(const HaarSpec &spec) {
  const auto n = spec.group.order();
  Graph x(2 * n);
  for (Elem v = 0; v < n; ++v)
    for (Elem s : spec.S) x.add_edge(v, static_cast<Point>(n + spec.group.mul(s, v)));
  std::vector<std::string> labels;
  for (int side = 0; side < 2; ++side)
    for (Elem v = 0; v < n; ++v)
      labels.push_back("(" + spec.group.name(v) + "," + std::to_string(side) + ")");
  x.set_labels(std::move(labels));
  return x;
}

Graph cayley_graph(const FiniteGroup &g, std::span<const Elem> s) {
  const auto set = normalized(g, {s.begin(), s.end()});
  const Bitset b = as_bitset(g.order(), set);
  if (b.test(g.identity()))
    fail(ErrorCode::invalid_connection_set, "connection set contains the identity");
  for (auto x : set)
    if (!b.test(g.inv(x)))
      fail(ErrorCode::invalid_connection_set,
           "connection set is not inverse-closed: missing inverse of " + g.name(x));
  Graph x(g.order());
  for (Elem v = 0; v < g.order(); ++v)
    for (Elem t : set) x.add_edge(v, g.mul(t, v));
  x.set_labels(g.names());
  return x;
}

bool connectivity_criterion(const HaarSpec &spec) {
  if (spec.S.empty())
    fail(ErrorCode::invalid_parameter, "connectivity criterion needs a nonempty S");
  std::vector<Elem> diffs;
  for (Elem s : spec.S)
    for (Elem t : spec.S) diffs.push_back(spec.group.mul(s, spec.group.inv(t)));
  return subgroup_generated(spec.group, diffs).order() == spec.group.order();
}

HaarSpec translate(const HaarSpec &spec, Elem g, const GroupAutomorphism &alpha, Elem h) {
  const auto &G = spec.group;
  std::vector<Elem> out;
  for (Elem s : spec.S) out.push_back(G.mul(G.mul(g, alpha(s)), h));
  return HaarSpec(G, std::move(out));
}

HaarSpec complement(const HaarSpec &spec) {
  const Bitset b = as_bitset(spec.group.order(), spec.S);
  std::vector<Elem> out;
  for (Elem x = 0; x < spec.group.order(); ++x)
    if (!b.test(x)) out.push_back(x);
  return HaarSpec(spec.group, std::move(out));
}

Permutation right_translation(const FiniteGroup &g, Elem x) {
  const auto n = g.order();
  std::vector<Point> img(2 * n);
  for (Elem v = 0; v < n; ++v) {
    img[v] = g.mul(v, x);
    img[n + v] = static_cast<Point>(n + g.mul(v, x));
  }
  return Permutation(std::move(img));
}

PermGroup right_translations(const FiniteGroup &g) {
  std::vector<Permutation> gens;
  for (Elem x : generating_sequence(g)) gens.push_back(right_translation(g, x));
  return PermGroup(2 * g.order(), std::move(gens), {}, BigInt(g.order()));
}

// Witnesses -------------------------------------------------------------------

bool witness_holds(const HaarSpec &spec, const AlgCayleyWitness &w) {
  const auto &G = spec.group;
  if (w.g >= G.order() || !is_automorphism(G, w.alpha)) return false;
  if (w.alpha(w.g) != w.g) return false;
  const auto iota = inner_automorphism(G, w.g);
  if (w.alpha.then(w.alpha) != iota) return false;
  std::vector<Elem> lhs, rhs;
  for (Elem s : spec.S) {
    lhs.push_back(G.mul(w.g, w.alpha(s)));
    rhs.push_back(G.inv(s));
  }
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  return lhs == rhs;
}

WitnessContext::WitnessContext(const FiniteGroup &g, const AutomorphismOptions &opts)
    : group_(g) {
  const auto auts = automorphisms(g, opts);
  aut_count_ = auts.size();
  const auto n = g.order();
  for (const auto &a : auts) {
    const auto a2 = a.then(a);
    for (Elem x = 0; x < n; ++x) {
      if (a(x) != x) continue;
      bool inner = true;
      for (Elem y = 0; y < n && inner; ++y) inner = a2(y) == g.conjugate(y, x);
      if (!inner) continue;
      // s -> (x s^a)^-1; a witness needs this map to send S into S.
      std::vector<Elem> m(n);
      for (Elem y = 0; y < n; ++y) m[y] = g.inv(g.mul(x, a(y)));
      candidates_.push_back({x, a});
      maps_.push_back(std::move(m));
    }
  }
}

bool WitnessContext::exists(const Bitset &s) const {
  for (const auto &m : maps_) {
    bool ok = true;
    s.for_each([&](std::size_t y) { ok = ok && s.test(m[y]); });
    if (ok) return true;
  }
  return false;
}

std::optional<AlgCayleyWitness> WitnessContext::find(std::span<const Elem> s) const {
  const Bitset b = as_bitset(group_.order(), s);
  for (std::size_t c = 0; c < maps_.size(); ++c) {
    bool ok = true;
    for (Elem y : s) ok = ok && b.test(maps_[c][y]);
    if (ok) return candidates_[c];
  }
  return std::nullopt;
}

std::optional<AlgCayleyWitness> alg_cayley_witness(const HaarSpec &spec,
                                                   const AutomorphismOptions &opts) {
  WitnessContext ctx(spec.group, opts);
  auto w = ctx.find(spec.S);
  if (w && !witness_holds(spec, *w))
    fail(ErrorCode::internal_verification_failure, "witness search returned a non-witness");
  return w;
}

Permutation build_sigma(const HaarSpec &spec, const AlgCayleyWitness &w) {
  if (!witness_holds(spec, w))
    fail(ErrorCode::invalid_witness, "(g, alpha) does not satisfy the witness conditions");
  const auto &G = spec.group;
  const auto n = G.order();
  const auto inv_alpha = w.alpha.inverse();
  std::vector<Point> img(2 * n);
  for (Elem x = 0; x < n; ++x) {
    img[x] = static_cast<Point>(n + w.alpha(x));
    img[n + x] = G.mul(inv_alpha(x), w.g);
  }
  Permutation sigma(std::move(img));

  const Graph x = haar_graph(spec);
  if (!x.is_automorphism(sigma))
    fail(ErrorCode::internal_verification_failure, "sigma is not an automorphism");
  if (sigma * sigma != right_translation(G, w.g))
    fail(ErrorCode::internal_verification_failure, "sigma^2 differs from g_R");
  auto gens = right_translations(G).generators();
  gens.push_back(sigma);
  PermGroup k(2 * n, std::move(gens));
  if (k.order() != BigInt(2 * n) || !k.is_regular())
    fail(ErrorCode::internal_verification_failure, "<G_R, sigma> is not regular");
  return sigma;
}

// Symmetry --------------------------------------------------------------------

bool is_vertex_transitive(const Graph &x, std::size_t bound) {
  return automorphism_group(x, {}, bound).is_transitive();
}

CayleyResult is_cayley(const Graph &x, std::uint64_t budget, std::span<const Permutation> seed,
                       std::size_t bound) {
  CayleyResult out;
  const PermGroup aut = automorphism_group(x, {}, bound);
  if (!aut.is_transitive()) {
    out.outcome = SearchOutcome::none;
    return out;
  }
  auto r = find_regular_subgroup(aut, budget, seed);
  out.outcome = r.outcome;
  out.regular = std::move(r.group);
  out.expansions = r.expansions;
  if (out.regular)
    for (const auto &g : out.regular->generators())
      if (!x.is_automorphism(g))
        fail(ErrorCode::internal_verification_failure, "regular subgroup is not in Aut X");
  return out;
}

CayleyResult is_cayley(const HaarSpec &spec, std::uint64_t budget, bool seed_with_translations) {
  std::vector<Permutation> seed;
  if (seed_with_translations) seed = right_translations(spec.group).generators();
  return is_cayley(haar_graph(spec), budget, seed);
}

std::map<std::size_t, std::vector<Elem>> difference_multiset(const HaarSpec &spec) {
  const auto &G = spec.group;
  std::vector<std::size_t> count(G.order(), 0);
  for (Elem x : spec.S)
    for (Elem y : spec.S) ++count[G.mul(x, G.inv(y))];
  std::map<std::size_t, std::vector<Elem>> out;
  for (Elem d = 0; d < G.order(); ++d)
    if (count[d] > 0) out[count[d]].push_back(d);
  return out;
}

// Bipartite Cayley graphs as Haar graphs ---------------------------------------

HaarConversion haar_from_bipartite_cayley(const FiniteGroup &g, std::span<const Elem> s_in) {
  const auto s = normalized(g, {s_in.begin(), s_in.end()});
  const Graph x = cayley_graph(g, s);
  const auto bip = try_bipartition(x);
  if (!bip.bipartite) {
    std::string cycle;
    for (auto v : bip.odd_cycle) cycle += " " + g.name(v);
    fail(ErrorCode::not_bipartite, "cay(G,S) is not bipartite; odd cycle:" + cycle);
  }
  const auto order = g.order();

  if (s.empty()) {
    if (order % 2 != 0)
      fail(ErrorCode::invalid_parameter, "an edgeless graph on an odd number of vertices is not a Haar graph");
    HaarConversion out{build_cyclic(order / 2), {}, false, {}};
    out.isomorphism.resize(order);
    std::iota(out.isomorphism.begin(), out.isomorphism.end(), Point{0});
    return out;
  }

  const Subgroup k = subgroup_generated(g, s);
  const auto id_side = bip.side[g.identity()];
  std::vector<Elem> even;
  for (Elem v : k.members)
    if (bip.side[v] == id_side) even.push_back(v);
  if (!is_subgroup(g, even))
    fail(ErrorCode::internal_verification_failure, "even part of <S> is not a subgroup");
  const Subgroup kplus{even};

  // Right coset representatives of K, identity first.
  std::vector<Elem> reps;
  std::vector<char> covered(order, 0);
  for (Elem r = 0; r < order; ++r) {
    if (covered[r]) continue;
    reps.push_back(r);
    for (Elem m : k.members) covered[g.mul(m, r)] = 1;
  }
  std::stable_partition(reps.begin(), reps.end(), [&](Elem r) { return r == g.identity(); });
  const std::size_t m = reps.size();

  auto [kp, embed] = subgroup_as_group(g, kplus);
  std::vector<long> sub_index(order, -1);
  for (std::size_t i = 0; i < embed.size(); ++i) sub_index[embed[i]] = static_cast<long>(i);

  const bool connected = m == 1;
  FiniteGroup h = connected ? kp : build_direct_product(kp, build_cyclic(m));
  auto pack = [&](Elem sub, std::size_t j) -> Elem {
    return connected ? sub : static_cast<Elem>(sub * m + j);
  };

  const Elem t0 = s.front();
  std::vector<Elem> t;
  for (Elem si : s) {
    const long idx = sub_index[g.mul(g.inv(t0), si)];
    if (idx < 0) fail(ErrorCode::internal_verification_failure, "t0^-1 s left the even subgroup");
    t.push_back(pack(static_cast<Elem>(idx), 0));
  }

  HaarConversion out{std::move(h), std::move(t), connected, {}};
  const auto hn = out.group.order();
  out.isomorphism.assign(2 * hn, 0);
  for (std::size_t sub = 0; sub < embed.size(); ++sub)
    for (std::size_t j = 0; j < m; ++j) {
      const Elem hv = pack(static_cast<Elem>(sub), j);
      const Elem v = g.mul(embed[sub], reps[j]);
      out.isomorphism[hv] = v;
      out.isomorphism[hn + hv] = g.mul(t0, v);
    }
  const HaarSpec spec(out.group, out.T);
  if (!haar_graph(spec).is_isomorphism_to(x, out.isomorphism))
    fail(ErrorCode::internal_verification_failure, "converted Haar graph is not isomorphic to cay(G,S)");
  return out;
}

// The nonsplit metacyclic family ------------------------------------------------

NonsplitFamily nonsplit_family_graph(std::size_t p, std::size_t n) {
  if (p % 2 == 0 || !is_prime(p)) fail(ErrorCode::invalid_parameter, "p must be an odd prime");
  if (n < 2) fail(ErrorCode::invalid_parameter, "n must be at least 2");
  std::size_t q = 1;
  for (std::size_t k = 1; k < n; ++k) {
    q *= p;
    if (q > kDefaultGraphBound) fail(ErrorCode::resource_limit, "family graph too large");
  }
  const std::size_t r = 2 * p;
  const std::size_t v = r * q;
  auto at = [&](std::size_t i, std::size_t j) { return static_cast<Point>((i % r) * q + j % q); };

  Graph x(v);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j1 = 0; j1 < q; ++j1)
      for (std::size_t j2 = 0; j2 < q; ++j2)
        if (i % 2 == 0 || j1 == j2) x.add_edge(at(i, j1), at(i + 1, j2));

  std::vector<Point> a(v), b(v), c(v);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      a[at(i, j)] = at(i, j + 1);
      b[at(i, j)] = at(i + 2, j);
      c[at(i, j)] = at(r - i + 1, j);
    }
  Permutation alpha(std::move(a)), beta(std::move(b)), gamma(std::move(c));

  for (const auto *g : {&alpha, &beta, &gamma})
    if (!x.is_automorphism(*g))
      fail(ErrorCode::internal_verification_failure, "family map is not an automorphism");
  if (!(gamma * gamma).is_identity() || alpha * beta != beta * alpha ||
      alpha * gamma != gamma * alpha || gamma.inverse() * beta * gamma != beta.inverse())
    fail(ErrorCode::internal_verification_failure, "family maps violate their relations");
  PermGroup group(v, {alpha, beta, gamma});
  if (group.order() != BigInt(v) || !group.is_regular())
    fail(ErrorCode::internal_verification_failure, "<alpha,beta,gamma> is not regular");
  return NonsplitFamily{p, n, std::move(x), std::move(alpha), std::move(beta), std::move(gamma),
                        std::move(group)};
}

NonsplitReport verify_nonsplit_example(const FiniteGroup &g, const Subgroup &nsub, Elem x) {
  if (!is_subgroup(g, nsub.members))
    fail(ErrorCode::invalid_parameter, "N is not a subgroup");
  if (x >= g.order() || nsub.contains(x)) fail(ErrorCode::invalid_parameter, "x must lie outside N");
  const std::size_t p = g.order() / nsub.order();
  if (p % 2 == 0 || !is_prime(p)) fail(ErrorCode::invalid_parameter, "|G:N| must be an odd prime");
  std::size_t n = 0;
  for (std::size_t o = g.order(); o > 1; o /= p) {
    if (o % p != 0) fail(ErrorCode::invalid_parameter, "G is not a p-group");
    ++n;
  }
  if (!metacyclic_status(g).nonsplit())
    fail(ErrorCode::invalid_parameter, "G is not a nonsplit metacyclic group");

  std::vector<Elem> s = nsub.members;
  s.push_back(x);
  const HaarSpec spec(g, s);
  const Graph hx = haar_graph(spec);
  const NonsplitFamily fam = nonsplit_family_graph(p, n);

  auto iso = is_isomorphic(hx, fam.graph, std::max(kDefaultGraphBound, hx.vertex_count()));
  NonsplitReport rep{p, n, spec.S, {}, PermGroup(hx.vertex_count(), {}), false, false, 0};
  if (iso) {
    rep.isomorphism = *iso;
    const Permutation phi(*iso);
    const Permutation phi_inv = phi.inverse();
    std::vector<Permutation> pulled;
    for (const auto &r : fam.group.generators()) {
      Permutation q = phi * r * phi_inv;
      if (!hx.is_automorphism(q))
        fail(ErrorCode::internal_verification_failure, "pulled-back map is not an automorphism");
      pulled.push_back(std::move(q));
    }
    rep.regular = PermGroup(hx.vertex_count(), std::move(pulled));
    rep.cayley = rep.regular.order() == BigInt(hx.vertex_count()) && rep.regular.is_regular();
  }
  AutomorphismOptions opts;
  opts.max_group_order = kMaxGroupOrder;
  WitnessContext ctx(g, opts);
  rep.automorphism_count = ctx.automorphism_count();
  rep.alg_cayley = ctx.find(spec.S).has_value();
  return rep;
}

// Quasi-Cayley ------------------------------------------------------------------

std::optional<Permutation> class_swapping_automorphism(const HaarSpec &spec, std::size_t bound) {
  const Graph x = haar_graph(spec);
  const auto n = spec.group.order();
  VertexColoring c0, c1;
  for (Point v = 0; v < 2 * n; ++v) {
    c0.color.push_back(v < n ? 0 : 1);
    c1.color.push_back(v < n ? 1 : 0);
  }
  auto map = find_colored_isomorphism(x, c0, x, c1, bound);
  if (!map) return std::nullopt;
  return Permutation(std::move(*map));
}

std::vector<Permutation> quasi_cayley_family(const HaarSpec &spec, const Permutation &sigma) {
  const auto n = spec.group.order();
  const Graph x = haar_graph(spec);
  if (sigma.degree() != 2 * n || !x.is_automorphism(sigma))
    fail(ErrorCode::invalid_parameter, "sigma is not an automorphism of H(G,S)");
  for (Point v = 0; v < 2 * n; ++v)
    if ((v < n) == (sigma(v) < n))
      fail(ErrorCode::invalid_parameter, "sigma does not swap the partite sets");

  std::vector<Permutation> family;
  for (Elem g = 0; g < n; ++g) family.push_back(right_translation(spec.group, g));
  for (Elem g = 0; g < n; ++g) family.push_back(sigma * right_translation(spec.group, g));

  std::vector<char> hit(2 * n);
  for (Point u = 0; u < 2 * n; ++u) {
    std::fill(hit.begin(), hit.end(), 0);
    for (const auto &f : family)
      if (hit[f(u)]++)
        fail(ErrorCode::internal_verification_failure,
             "two family members map the same vertex pair");
  }
  return family;
}

} // namespace haarcay
