#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "haarcay/graph.hpp"
#include "haarcay/group.hpp"
#include "haarcay/perm.hpp"

namespace haarcay {

/// H(G,S). Vertices are indexed (x,0) -> x and (x,1) -> |G| + x, and the
/// edges are (x,0) -- (s x,1) for s in S.
struct HaarSpec {
  FiniteGroup group;
  std::vector<Elem> S; ///< sorted, no repeats

  HaarSpec(FiniteGroup g, std::vector<Elem> s);
  std::size_t vertex_count() const noexcept { return 2 * group.order(); }
};

/// Parses "cyclic:N", "dihedral:N", "gendih:<spec>", "product:<spec>,<spec>",
/// "quaternion", "metacyclic:M,R,S,T" or "table:<path>".
FiniteGroup parse_group(std::string_view dsl);
/// Parses "<group>|<elem>,<elem>,...". Elements are names or indices.
HaarSpec parse_haar_spec(std::string_view text);
/// Comma-separated element names.
std::string format_subset(const FiniteGroup &g, std::span<const Elem> s);
std::vector<Elem> parse_subset(const FiniteGroup &g, std::string_view text);

Graph haar_graph(const HaarSpec &spec);
/// cay(G,S) with edges g -- s g. Throws invalid_connection_set if S contains
/// the identity or is not inverse-closed.
Graph cayley_graph(const FiniteGroup &g, std::span<const Elem> s);

/// True iff S S^-1 generates G. Throws invalid_parameter for S empty.
bool connectivity_criterion(const HaarSpec &spec);
/// g S^alpha h
HaarSpec translate(const HaarSpec &spec, Elem g, const GroupAutomorphism &alpha, Elem h);
/// G \ S
HaarSpec complement(const HaarSpec &spec);

/// (x,i) -> (x g, i) on 2|G| points.
Permutation right_translation(const FiniteGroup &g, Elem x);
/// G_R, generated by the translations of a generating sequence of G.
PermGroup right_translations(const FiniteGroup &g);

struct AlgCayleyWitness {
  Elem g = 0;
  GroupAutomorphism alpha;
};

/// g^alpha = g, alpha^2 = iota_g and g S^alpha = S^-1.
bool witness_holds(const HaarSpec &spec, const AlgCayleyWitness &w);

/// The pairs (g, alpha) with g^alpha = g and alpha^2 = iota_g depend only on
/// G; computing them once makes repeated witness searches over many subsets
/// a single set comparison per pair.
class WitnessContext {
public:
  explicit WitnessContext(const FiniteGroup &g, const AutomorphismOptions &opts = {});

  const FiniteGroup &group() const noexcept { return group_; }
  std::size_t automorphism_count() const noexcept { return aut_count_; }
  std::size_t candidate_count() const noexcept { return candidates_.size(); }

  /// First witness in (alpha sorted by image tuple, then g ascending) order.
  std::optional<AlgCayleyWitness> find(std::span<const Elem> s) const;
  bool exists(const Bitset &s) const;

private:
  FiniteGroup group_;
  std::size_t aut_count_ = 0;
  std::vector<AlgCayleyWitness> candidates_;
  // For each candidate, x -> g x^alpha as a flat table.
  std::vector<std::vector<Elem>> maps_;
};

/// Exhaustive search; absence proves H(G,S) is not algebraically Cayley.
std::optional<AlgCayleyWitness> alg_cayley_witness(const HaarSpec &spec,
                                                   const AutomorphismOptions &opts = {});

/// sigma: (x,0) -> (x^alpha,1), (x,1) -> (x^(alpha^-1) g, 0). Checks that sigma
/// is an automorphism, sigma^2 = g_R and <G_R, sigma> is regular of order
/// 2|G|; throws invalid_witness otherwise.
Permutation build_sigma(const HaarSpec &spec, const AlgCayleyWitness &w);

bool is_vertex_transitive(const Graph &x, std::size_t bound = kDefaultGraphBound);

struct CayleyResult {
  SearchOutcome outcome = SearchOutcome::unknown;
  std::optional<PermGroup> regular; ///< verified regular subgroup of Aut X
  std::uint64_t expansions = 0;
};

/// Sabidussi: `none` if X is not vertex-transitive, otherwise the outcome of
/// the regular-subgroup search in Aut X.
CayleyResult is_cayley(const Graph &x, std::uint64_t budget = kDefaultSearchBudget,
                       std::span<const Permutation> seed = {},
                       std::size_t bound = kDefaultGraphBound);
CayleyResult is_cayley(const HaarSpec &spec, std::uint64_t budget = kDefaultSearchBudget,
                       bool seed_with_translations = true);

/// k -> elements d = x y^-1 (x,y in S) with exactly k representations.
std::map<std::size_t, std::vector<Elem>> difference_multiset(const HaarSpec &spec);

struct HaarConversion {
  FiniteGroup group;
  std::vector<Elem> T;
  bool connected = false;
  /// Vertex map H(group,T) -> cay(G,S), verified edge by edge.
  std::vector<Point> isomorphism;
};

/// Writes a bipartite cay(G,S) as a Haar graph over a group of order |G|/2.
HaarConversion haar_from_bipartite_cayley(const FiniteGroup &g, std::span<const Elem> s);

struct NonsplitFamily {
  std::size_t p = 0, n = 0;
  Graph graph;
  Permutation alpha, beta, gamma;
  PermGroup group; ///< <alpha, beta, gamma>, verified regular
};

/// The graph on Z_2p x Z_p^(n-1) with (i,j) ~ (i+1,j') iff i is even or
/// j = j', vertex (i,j) at index i p^(n-1) + j.
NonsplitFamily nonsplit_family_graph(std::size_t p, std::size_t n);

struct NonsplitReport {
  std::size_t p = 0, n = 0;
  std::vector<Elem> S;              ///< N together with x
  std::vector<Point> isomorphism;   ///< H(G,S) -> family graph
  PermGroup regular;                ///< <alpha,beta,gamma> pulled back to H(G,S)
  bool cayley = false;
  bool alg_cayley = false;
  std::size_t automorphism_count = 0;
};

NonsplitReport verify_nonsplit_example(const FiniteGroup &g, const Subgroup &n, Elem x);

/// Some automorphism of H(G,S) swapping the two partite sets, if any.
std::optional<Permutation> class_swapping_automorphism(const HaarSpec &spec,
                                                       std::size_t bound = kDefaultGraphBound);

/// G_R together with sigma G_R; checks that each ordered vertex pair is
/// realized by exactly one member.
std::vector<Permutation> quasi_cayley_family(const HaarSpec &spec, const Permutation &sigma);

} // namespace haarcay
