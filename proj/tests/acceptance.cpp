// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "haarcay/error.hpp"
#include "haarcay/haar.hpp"
#include "haarcay/survey.hpp"
#include "oracles.hpp"

using namespace haarcay;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char *title, double limit_seconds, const std::function<Outcome()> &f) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = f();
  } catch (const std::exception &e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_seconds) {
    o.pass = false;
    o.detail += " [time limit " + std::to_string(limit_seconds) + "s exceeded]";
  }
  if (!o.pass) ++failures;
  std::printf("%s criterion %2d: %s (%.2fs) %s\n", o.pass ? "PASS" : "FAIL", id, title, secs,
              o.detail.c_str());
  std::fflush(stdout);
}

// One representative per isomorphism type of every group of order <= 8.
std::vector<std::pair<std::string, FiniteGroup>> groups_up_to_8() {
  std::vector<std::pair<std::string, FiniteGroup>> out;
  for (const char *dsl :
       {"cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "product:cyclic:2,cyclic:2", "cyclic:5",
        "cyclic:6", "dihedral:3", "cyclic:7", "cyclic:8", "product:cyclic:4,cyclic:2",
        "product:cyclic:2,product:cyclic:2,cyclic:2", "dihedral:4", "quaternion"})
    out.emplace_back(dsl, parse_group(dsl));
  return out;
}

std::string show(const FiniteGroup &g, const std::vector<Elem> &s) { return "{" + format_subset(g, s) + "}"; }

// The three sigma postconditions, checked without trusting build_sigma.
bool sigma_ok(const HaarSpec &spec, const Graph &x, const AlgCayleyWitness &w) {
  const Permutation sigma = build_sigma(spec, w);
  if (!x.is_automorphism(sigma)) return false;
  if (!(sigma * sigma == right_translation(spec.group, w.g))) return false;
  std::vector<Permutation> gens{sigma};
  for (Elem y : generating_sequence(spec.group)) gens.push_back(right_translation(spec.group, y));
  const auto elems = close_group(x.vertex_count(), gens, 4 * x.vertex_count());
  if (elems.size() != x.vertex_count()) return false;
  std::set<Point> orbit;
  for (const auto &e : elems) orbit.insert(e(0));
  return orbit.size() == x.vertex_count();
}

// Cyclic normal N with G/N cyclic; a complement of N is then cyclic of order
// |G:N|, so it suffices to look at the cyclic subgroups of that order.
struct SplitOracle {
  std::size_t kernels = 0;
  bool split = false;
};

SplitOracle split_oracle(const FiniteGroup &g) {
  const std::size_t n = g.order();
  auto cyclic = [&](Elem y) {
    std::vector<Elem> c{g.identity()};
    for (Elem z = y; z != g.identity(); z = g.mul(z, y)) c.push_back(z);
    std::sort(c.begin(), c.end());
    return c;
  };
  std::set<std::vector<Elem>> seen;
  SplitOracle out;
  for (Elem y = 0; y < n; ++y) {
    auto c = cyclic(y);
    if (!seen.insert(c).second) continue;
    std::vector<char> in(n, 0);
    for (Elem z : c) in[z] = 1;
    bool normal = true;
    for (Elem z : c)
      for (Elem h = 0; h < n && normal; ++h) normal = in[g.conjugate(z, h)];
    if (!normal) continue;
    const std::size_t index = n / c.size();
    auto order_mod = [&](Elem z) {
      std::size_t k = 1;
      for (Elem w = z; !in[w]; w = g.mul(w, z)) ++k;
      return k;
    };
    bool cyclic_quotient = false;
    for (Elem z = 0; z < n && !cyclic_quotient; ++z) cyclic_quotient = order_mod(z) == index;
    if (!cyclic_quotient) continue;
    ++out.kernels;
    for (Elem z = 0; z < n && !out.split; ++z) {
      if (g.element_order(z) != index) continue;
      std::size_t meet = 0;
      for (Elem w : cyclic(z)) meet += in[w];
      out.split = meet == 1;
    }
  }
  return out;
}

long long ipow(long long b, long long e, long long m) {
  long long r = 1 % m;
  while (e--) r = r * b % m;
  return r;
}

} // namespace

int main() {
  const auto small_groups = groups_up_to_8();

  // Witnesses found in criterion 1 and in the order <= 8 sweep, reused by criterion 8.
  struct Found {
    const FiniteGroup *group;
    std::vector<Elem> S;
    AlgCayleyWitness w;
  };
  std::vector<Found> witnesses;
  std::vector<FiniteGroup> dihedral;
  for (std::size_t n : {3u, 4u, 5u}) dihedral.push_back(build_dihedral(n));

  criterion(1, "every subset of D3, D4, D5 has an algebraic Cayley witness", 30, [&] {
    std::ostringstream os;
    bool pass = true;
    for (const auto &g : dihedral) {
      const WitnessContext ctx(g);
      std::size_t ok = 0, total = std::size_t{1} << g.order();
      for (std::size_t m = 0; m < total; ++m) {
        const auto s = oracle::subset_from_mask(m, g.order());
        const auto w = ctx.find(s);
        if (w && witness_holds(HaarSpec(g, s), *w)) {
          ++ok;
          witnesses.push_back({&g, s, *w});
        }
      }
      const auto sweep = all_haar_alg_cayley(g, false);
      pass = pass && ok == total && sweep.all && sweep.subsets == total;
      os << "D" << g.order() / 2 << ": " << ok << "/" << total << "; ";
    }
    return Outcome{pass, os.str()};
  });

  criterion(2, "D6 with {1,a,a^3,b,ab,a^3b}: no witness, not vertex-transitive, not Cayley", 10, [] {
    const auto spec = parse_haar_spec("dihedral:6|1,a,a^3,b,a*b,a^3*b");
    const bool witness = alg_cayley_witness(spec).has_value();
    const bool brute = oracle::witness_exists(spec.group, [&] {
      std::vector<std::vector<Elem>> imgs;
      for (const auto &a : automorphisms(spec.group)) imgs.push_back(a.images);
      return imgs;
    }(), spec.S);
    const bool vt = is_vertex_transitive(haar_graph(spec));
    const auto cay = is_cayley(spec);
    std::ostringstream os;
    os << "witness=" << witness << " vt=" << vt << " cayley="
       << (cay.outcome == SearchOutcome::none ? "no" : "not-no");
    return Outcome{!witness && !brute && !vt && cay.outcome == SearchOutcome::none, os.str()};
  });

  criterion(3, "H(D_n,{1,a,a^3,b,ab,a^3b}) not vertex-transitive for 6 <= n <= 30", 300, [] {
    ScanOptions opts;
    opts.workers = 4;
    const auto rep = dihedral_pattern_scan(6, 30, opts);
    std::size_t not_vt = 0;
    for (const auto &r : rep.records)
      if (!r.contains("error") && r["vertex_transitive"] == false) ++not_vt;
    return Outcome{rep.records.size() == 25 && not_vt == 25,
                   std::to_string(not_vt) + "/25 not vertex-transitive"};
  });

  criterion(4, "|Aut H(D_n,{1,a,a^3,b,ab,a^2b,a^4b})| = 2n for 8 <= n <= 24", 600, [] {
    ScanOptions opts;
    opts.workers = 4;
    const auto rep = prop36_check(8, 24, opts);
    std::size_t ok = 0;
    std::string bad;
    for (const auto &r : rep.records) {
      if (r.contains("pass") && r["pass"] == true && r["aut_order"] == r["expected"]) ++ok;
      else bad += " " + r.value("key", std::string("?"));
    }
    return Outcome{rep.records.size() == 17 && ok == 17, std::to_string(ok) + "/17" + bad};
  });

  criterion(5, "difference sets S_k of D_25 match the published listing", 10, [] {
    const auto spec = parse_haar_spec("dihedral:25|1,a,a^3,b,a*b,a^2*b,a^4*b");
    const auto &g = spec.group;
    // a^-k written as a^(25-k).
    const std::map<std::size_t, std::string> published = {
        {1, "a^4,a^21"},
        {2, "a^3,a^22,b,a^7*b"},
        {3, "a,a^24,a^2,a^23"},
        {4, "a*b,a^2*b,a^3*b,a^4*b,a^5*b"},
        {7, "1"},
    };
    // Independent count of x y^-1 over S x S.
    std::map<Elem, std::size_t> reps;
    for (Elem x : spec.S)
      for (Elem y : spec.S) ++reps[g.mul(x, g.inv(y))];
    std::map<std::size_t, std::set<Elem>> by_count;
    for (auto [d, k] : reps) by_count[k].insert(d);

    const auto lib = difference_multiset(spec);
    bool pass = lib.size() == published.size() && by_count.size() == published.size();
    std::ostringstream os;
    for (const auto &[k, text] : published) {
      const auto want = parse_subset(g, text);
      const std::set<Elem> want_set(want.begin(), want.end());
      const auto it = lib.find(k);
      const bool lib_ok = it != lib.end() &&
                          std::set<Elem>(it->second.begin(), it->second.end()) == want_set;
      const bool brute_ok = by_count.count(k) && by_count[k] == want_set;
      pass = pass && lib_ok && brute_ok;
      os << "S" << k << (lib_ok && brute_ok ? " ok; " : " MISMATCH; ");
    }
    return Outcome{pass, os.str()};
  });

  criterion(6, "H(Z8,{0,1,3}) and H(Q8,{1,i,j}) isomorphic, cubic on 16 vertices, Cayley", 5, [] {
    const auto z = parse_haar_spec("cyclic:8|0,1,3");
    const auto q = parse_haar_spec("quaternion|1,i,j");
    const auto x = haar_graph(z), y = haar_graph(q);
    const auto iso = is_isomorphic(x, y);
    // Verify the bijection edge by edge here rather than trusting the search.
    bool verified = iso && iso->size() == 16;
    if (verified) {
      std::set<Point> image(iso->begin(), iso->end());
      verified = image.size() == 16;
      for (auto [u, v] : x.edges()) verified = verified && y.adjacent((*iso)[u], (*iso)[v]);
      verified = verified && x.edge_count() == y.edge_count();
    }
    const bool shape = x.vertex_count() == 16 && y.vertex_count() == 16 && x.regular_degree() == 3u &&
                       y.regular_degree() == 3u;
    const auto cay = is_cayley(z);
    bool regular = cay.outcome == SearchOutcome::found && cay.regular->is_regular();
    if (regular)
      for (const auto &p : cay.regular->generators()) regular = regular && x.is_automorphism(p);
    return Outcome{verified && shape && regular,
                   std::string("iso=") + (verified ? "verified" : "missing") +
                       " cayley=" + (regular ? "yes" : "not-yes")};
  });

  criterion(7, "generation criterion agrees with BFS connectivity", 60, [&] {
    std::size_t checked = 0, disagree = 0;
    for (const auto &[name, g] : small_groups)
      for (std::size_t m = 1; m < (std::size_t{1} << g.order()); ++m) {
        const auto s = oracle::subset_from_mask(m, g.order());
        ++checked;
        disagree += connectivity_criterion(HaarSpec(g, s)) !=
                    oracle::connected(oracle::haar_adjacency(g, s));
      }
    std::vector<FiniteGroup> larger;
    for (const char *dsl : {"cyclic:9", "cyclic:10", "dihedral:5", "cyclic:12", "dihedral:6",
                            "product:cyclic:2,dihedral:3", "gendih:product:cyclic:2,cyclic:2",
                            "metacyclic:9,4,3,3", "dihedral:7", "product:cyclic:2,quaternion",
                            "dihedral:8", "product:cyclic:4,cyclic:4", "cyclic:16",
                            "product:cyclic:3,cyclic:5", "gendih:cyclic:6"})
      larger.push_back(parse_group(dsl));
    std::mt19937_64 rng(20240601);
    for (int t = 0; t < 500; ++t) {
      const auto &g = larger[rng() % larger.size()];
      std::vector<Elem> s;
      // Sparse subsets so that disconnected specs actually occur.
      const std::size_t k = 1 + rng() % 4;
      while (s.size() < k) {
        const Elem e = static_cast<Elem>(rng() % g.order());
        if (std::find(s.begin(), s.end(), e) == s.end()) s.push_back(e);
      }
      ++checked;
      disagree += connectivity_criterion(HaarSpec(g, s)) !=
                  oracle::connected(oracle::haar_adjacency(g, s));
    }
    return Outcome{disagree == 0, std::to_string(checked) + " specs, " +
                                      std::to_string(disagree) + " disagreements"};
  });

  criterion(8, "sigma built from each witness is an automorphism squaring to g_R, regular with G_R",
            120, [&] {
    for (const auto &[name, g] : small_groups) {
      const WitnessContext ctx(g);
      for (std::size_t m = 0; m < (std::size_t{1} << g.order()); ++m) {
        const auto s = oracle::subset_from_mask(m, g.order());
        if (auto w = ctx.find(s)) witnesses.push_back({&g, s, *w});
      }
    }
    std::size_t bad = 0;
    for (const auto &f : witnesses) {
      const HaarSpec spec(*f.group, f.S);
      try {
        bad += !sigma_ok(spec, haar_graph(spec), f.w);
      } catch (const Error &) {
        ++bad;
      }
    }
    return Outcome{bad == 0 && !witnesses.empty(),
                   std::to_string(witnesses.size()) + " witnesses, " + std::to_string(bad) +
                       " failures"};
  });

  criterion(9, "witness exists for S iff it exists for G minus S (|G| <= 8)", 60, [&] {
    std::size_t pairs = 0, asym = 0;
    for (const auto &[name, g] : small_groups) {
      const WitnessContext ctx(g);
      const std::size_t full = (std::size_t{1} << g.order()) - 1;
      for (std::size_t m = 0; m <= full; ++m) {
        ++pairs;
        asym += ctx.find(oracle::subset_from_mask(m, g.order())).has_value() !=
                ctx.find(oracle::subset_from_mask(full ^ m, g.order())).has_value();
      }
    }
    return Outcome{asym == 0, std::to_string(pairs) + " subsets, " + std::to_string(asym) +
                                  " asymmetric"};
  });

  criterion(10, "nonsplit metacyclic 3-group: Haar graph Cayley but not algebraically Cayley", 120, [] {
    std::ostringstream os;
    // (a) the family graph for p = 3, n = 2
    const auto fam = nonsplit_family_graph(3, 2);
    bool a_ok = fam.group.order() == 18 && fam.group.is_regular() &&
                (fam.gamma * fam.gamma).is_identity() && fam.alpha * fam.beta == fam.beta * fam.alpha &&
                fam.alpha * fam.gamma == fam.gamma * fam.alpha &&
                fam.gamma.inverse() * fam.beta * fam.gamma == fam.beta.inverse();
    for (const auto *p : {&fam.alpha, &fam.beta, &fam.gamma}) a_ok = a_ok && fam.graph.is_automorphism(*p);
    const auto closure = close_group(18, std::vector<Permutation>{fam.alpha, fam.beta, fam.gamma}, 100);
    a_ok = a_ok && closure.size() == 18;
    os << "(a) " << (a_ok ? "ok" : "FAILED") << "; ";

    // (b) search <a,b | a^m, b^s = a^t, a^b = a^r> of order 3^k in increasing order.
    // Abelian presentations (r = 1) are skipped: abelian metacyclic groups split.
    std::optional<std::array<long long, 4>> found;
    std::size_t tried = 0;
    for (long long order : {27LL, 81LL, 243LL, 729LL}) {
      for (long long m = 3; m < order && !found; m *= 3) {
        const long long s = order / m;
        for (long long r = 2; r < m && !found; ++r) {
          if (r % 3 == 0 || ipow(r, s, m) != 1) continue;
          for (long long t = 0; t < m && !found; ++t) {
            if (t * (r - 1) % m != 0) continue;
            ++tried;
            const auto g = build_metacyclic(m, r, s, t);
            if (metacyclic_status(g).nonsplit()) found = std::array<long long, 4>{m, r, s, t};
          }
        }
      }
      if (found) break;
    }
    if (!found) return Outcome{false, os.str() + "(b) no nonsplit group found"};
    const auto [m, r, s, t] = *found;
    os << "(b) metacyclic:" << m << "," << r << "," << s << "," << t << " after " << tried
       << " presentations";
    const auto g = build_metacyclic(m, r, s, t);
    const auto oracle_split = split_oracle(g);
    const bool certified = oracle_split.kernels > 0 && !oracle_split.split;
    os << " order " << g.order() << " nonsplit=" << (certified ? "certified" : "NOT certified");

    const Elem a = 1, b = static_cast<Elem>(m);
    std::vector<std::pair<Subgroup, Elem>> candidates = {
        {subgroup_generated(g, std::vector<Elem>{g.power(a, 3), b}), a},
        {subgroup_generated(g, std::vector<Elem>{a, g.power(b, 3)}), b},
    };
    for (const auto &[n, x] : candidates) {
      if (n.order() * 3 != g.order() || !is_normal(g, n)) continue;
      std::optional<NonsplitReport> attempt;
      try {
        attempt = verify_nonsplit_example(g, n, x);
      } catch (const Error &) {
        continue;
      }
      const NonsplitReport &rep = *attempt;
      const HaarSpec spec(g, rep.S);
      const Graph hx = haar_graph(spec);
      const auto fam2 = nonsplit_family_graph(rep.p, rep.n);
      const bool iso_ok = hx.is_isomorphism_to(fam2.graph, rep.isomorphism);
      bool reg_ok = rep.regular.order() == BigInt(hx.vertex_count()) && rep.regular.is_regular();
      for (const auto &p : rep.regular.generators()) reg_ok = reg_ok && hx.is_automorphism(p);
      // Witness conditions rechecked over the automorphism list by the brute-force predicate.
      AutomorphismOptions wide;
      wide.max_group_order = kMaxGroupOrder;
      std::vector<std::vector<Elem>> auts;
      for (const auto &aut : automorphisms(g, wide)) auts.push_back(aut.images);
      const bool brute_witness = oracle::witness_exists(g, auts, rep.S);
      os << "; N=<" << g.name(n.members.size() > 1 ? n.members[1] : 0) << ",...> x=" << g.name(x)
         << " |V|=" << hx.vertex_count() << " iso=" << iso_ok << " cayley=" << (rep.cayley && reg_ok)
         << " alg_cayley=" << rep.alg_cayley << " brute_witness=" << brute_witness
         << " |Aut G|=" << auts.size();
      return Outcome{a_ok && certified && iso_ok && reg_ok && rep.cayley && !rep.alg_cayley &&
                         !brute_witness,
                     os.str()};
    }
    return Outcome{false, os.str() + "; no (N, x) accepted"};
  });

  criterion(11, "bipartite Cayley graphs rewritten as Haar graphs, isomorphism verified", 120, [] {
    std::vector<FiniteGroup> groups;
    for (const char *dsl : {"cyclic:2", "cyclic:4", "product:cyclic:2,cyclic:2", "cyclic:6",
                            "dihedral:3", "cyclic:8", "dihedral:4", "quaternion",
                            "product:cyclic:2,cyclic:4", "cyclic:10", "dihedral:5", "cyclic:12",
                            "dihedral:6", "product:cyclic:2,cyclic:6", "metacyclic:3,2,4,0"})
      groups.push_back(parse_group(dsl));
    std::mt19937_64 rng(77);
    std::size_t tested = 0, connected = 0, bad = 0, attempts = 0;
    std::set<std::pair<std::size_t, std::vector<Elem>>> seen;
    while (tested < 50 && attempts < 200000) {
      ++attempts;
      const std::size_t gi = rng() % groups.size();
      const auto &g = groups[gi];
      std::set<Elem> s;
      const std::size_t k = 1 + rng() % 3;
      for (std::size_t i = 0; i < k; ++i) {
        const Elem e = static_cast<Elem>(rng() % g.order());
        if (e == g.identity()) continue;
        s.insert(e);
        s.insert(g.inv(e));
      }
      if (s.empty()) continue;
      std::vector<Elem> sv(s.begin(), s.end());
      const Graph c = cayley_graph(g, sv);
      if (!try_bipartition(c).bipartite || !seen.insert({gi, sv}).second) continue;
      // Keep the mix: no more than 35 connected instances.
      const bool conn = is_connected(c);
      if (conn && connected >= 35) continue;
      ++tested;
      connected += conn;
      try {
        const auto conv = haar_from_bipartite_cayley(g, sv);
        const Graph h = haar_graph(HaarSpec(conv.group, conv.T));
        std::set<Point> image(conv.isomorphism.begin(), conv.isomorphism.end());
        bool ok = conv.group.order() * 2 == g.order() && image.size() == c.vertex_count() &&
                  h.edge_count() == c.edge_count() && conv.connected == conn;
        for (auto [u, v] : h.edges()) ok = ok && c.adjacent(conv.isomorphism[u], conv.isomorphism[v]);
        bad += !ok;
      } catch (const Error &) {
        ++bad;
      }
    }
    return Outcome{tested == 50 && bad == 0 && connected > 0 && connected < tested,
                   std::to_string(tested) + " graphs (" + std::to_string(connected) +
                       " connected), " + std::to_string(bad) + " failures"};
  });

  criterion(12, "G_R and sigma G_R form a regular family on vertex-transitive Haar graphs", 120, [] {
    const char *specs[] = {
        "cyclic:3|0,1",      "cyclic:4|0,1",        "cyclic:5|0,1,2",   "cyclic:6|0,1,3",
        "cyclic:7|0,1,3",    "cyclic:8|0,1,3",      "cyclic:9|0,1,4",   "cyclic:10|0,1,3,7",
        "product:cyclic:2,cyclic:2|(0,0),(0,1),(1,0)", "product:cyclic:2,cyclic:4|(0,0),(0,1),(1,0)",
        "cyclic:12|0,1,5",   "dihedral:3|1,a",      "dihedral:3|1,b",   "dihedral:3|1,a,b",
        "dihedral:4|1,a,b",  "dihedral:4|1,a*b,b",  "dihedral:5|1,a,b", "dihedral:5|a,a^2*b,a^4",
        "quaternion|1,i,j",  "dihedral:4|1,a",
    };
    std::size_t graphs = 0, bad = 0;
    std::string why;
    for (const char *text : specs) {
      const auto spec = parse_haar_spec(text);
      const Graph x = haar_graph(spec);
      if (!is_vertex_transitive(x)) {
        why += std::string(" not-vt:") + text;
        ++bad;
        continue;
      }
      const auto w = alg_cayley_witness(spec);
      const auto sigma = w ? std::optional<Permutation>(build_sigma(spec, *w))
                           : class_swapping_automorphism(spec);
      if (!sigma) {
        why += std::string(" no-sigma:") + text;
        ++bad;
        continue;
      }
      ++graphs;
      const auto family = quasi_cayley_family(spec, *sigma);
      const std::size_t n = x.vertex_count();
      // Count mappers for every ordered pair.
      std::vector<std::size_t> hits(n * n, 0);
      for (const auto &p : family) {
        if (!x.is_automorphism(p)) ++bad;
        for (Point u = 0; u < n; ++u) ++hits[u * n + p(u)];
      }
      if (family.size() != n || std::any_of(hits.begin(), hits.end(), [](auto h) { return h != 1; })) {
        why += std::string(" not-regular:") + text;
        ++bad;
      }
    }
    return Outcome{graphs == 20 && bad == 0,
                   std::to_string(graphs) + " graphs, " + std::to_string(bad) + " failures" + why};
  });

  criterion(13, "generalized dihedral groups: valency <= 5 always has a witness; D(Z6) fails at 6", 120, [] {
    ScanOptions opts;
    opts.workers = 4;
    const auto rep = gendih_valency_check({"cyclic:2", "cyclic:3", "cyclic:4",
                                           "product:cyclic:2,cyclic:2", "cyclic:5", "cyclic:6"},
                                          5, opts);
    std::size_t passed = 0, subsets = 0;
    long long z6_next_fail = -1;
    for (const auto &r : rep.records) {
      if (r.contains("pass") && r["pass"] == true && r["normalized_failures"] == 0 &&
          r["failures_up_to_valency"] == 0)
        ++passed;
      if (r.contains("subsets_up_to_valency")) subsets += r["subsets_up_to_valency"].get<std::size_t>();
      if (r.value("key", std::string()) == "gendih:cyclic:6")
        z6_next_fail = r["next_valency_failures"].get<long long>();
    }
    return Outcome{rep.records.size() == 6 && passed == 6 && z6_next_fail > 0,
                   std::to_string(passed) + "/6 groups pass over " + std::to_string(subsets) +
                       " subsets; D(Z6) valency-6 failures: " + std::to_string(z6_next_fail)};
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
