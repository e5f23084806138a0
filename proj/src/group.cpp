#include "haarcay/group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "haarcay/error.hpp"

namespace haarcay {

std::optional<std::string> audit_group_axioms(std::size_t n,
                                              std::span<const Elem> table) {
  if (n == 0) return "empty group";
  if (table.size() != n * n) return "table has wrong size";
  for (auto v : table)
    if (v >= n) return "table entry out of range";

  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[table[i * n + j]]++) return "latin square (row " + std::to_string(i) + ")";
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[table[j * n + i]]++) return "latin square (column " + std::to_string(i) + ")";
    }
  }

  std::optional<std::size_t> e;
  for (std::size_t c = 0; c < n && !e; ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = table[c * n + x] == x && table[x * n + c] == x;
    if (ok) e = c;
  }
  if (!e) return "identity";

  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::size_t y = 0; y < n && !found; ++y)
      found = table[x * n + y] == *e && table[y * n + x] == *e;
    if (!found) return "inverses (element " + std::to_string(x) + ")";
  }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t xy = table[x * n + y];
      for (std::size_t z = 0; z < n; ++z) {
        if (table[xy * n + z] != table[x * n + table[y * n + z]])
          return "associativity (" + std::to_string(x) + "," + std::to_string(y) +
                 "," + std::to_string(z) + ")";
      }
    }
  return std::nullopt;
}

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Elem> table,
                         std::vector<std::string> names)
    : order_(order), table_(std::move(table)), names_(std::move(names)) {
  if (order_ > kMaxGroupOrder)
    fail(ErrorCode::resource_limit, "group order " + std::to_string(order_) +
                                        " exceeds cap " + std::to_string(kMaxGroupOrder));
  if (auto bad = audit_group_axioms(order_, table_))
    fail(ErrorCode::invalid_presentation, "group axiom failed: " + *bad);
  if (names_.empty()) {
    for (std::size_t i = 0; i < order_; ++i) names_.push_back(std::to_string(i));
  }
  if (names_.size() != order_)
    fail(ErrorCode::invalid_parameter, "name count does not match group order");

  for (std::size_t c = 0; c < order_; ++c) {
    if (table_[c * order_ + c] == c) {
      identity_ = static_cast<Elem>(c);
      break;
    }
  }
  inverses_.resize(order_);
  for (Elem x = 0; x < order_; ++x)
    for (Elem y = 0; y < order_; ++y)
      if (mul(x, y) == identity_) {
        inverses_[x] = y;
        break;
      }
}

Elem FiniteGroup::power(Elem x, long long k) const noexcept {
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  k %= static_cast<long long>(element_order(x));
  Elem r = identity_;
  for (long long i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

std::size_t FiniteGroup::element_order(Elem x) const noexcept {
  std::size_t k = 1;
  for (Elem y = x; y != identity_; y = mul(y, x)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (Elem x = 0; x < order_; ++x)
    for (Elem y = x + 1; y < order_; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

template <class Int> std::optional<Int> parse_int(std::string_view s) {
  s = trim(s);
  if (s.size() > 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  Int v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

/// Splits on `sep` outside parentheses.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (s[i] == sep && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

} // namespace

std::optional<Elem> FiniteGroup::parse_element(std::string_view text) const {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  auto by_name = [&](std::string_view s) -> std::optional<Elem> {
    for (Elem i = 0; i < order_; ++i)
      if (names_[i] == s) return i;
    return std::nullopt;
  };
  if (auto e = by_name(text)) return e;
  if (auto idx = parse_int<unsigned long>(text); idx && *idx < order_)
    return static_cast<Elem>(*idx);

  auto factors = split_top(text, '*');
  if (factors.size() == 1) {
    auto pos = text.rfind('^');
    if (pos == std::string_view::npos || pos == 0) return std::nullopt;
    auto exp = parse_int<long long>(text.substr(pos + 1));
    if (!exp) return std::nullopt;
    auto base = parse_element(text.substr(0, pos));
    if (!base) return std::nullopt;
    return power(*base, *exp);
  }
  Elem acc = identity_;
  for (auto f : factors) {
    auto e = parse_element(f);
    if (!e) return std::nullopt;
    acc = mul(acc, *e);
  }
  return acc;
}

GroupAutomorphism GroupAutomorphism::identity(std::size_t order) {
  GroupAutomorphism a;
  a.images.resize(order);
  std::iota(a.images.begin(), a.images.end(), Elem{0});
  return a;
}

GroupAutomorphism GroupAutomorphism::inverse() const {
  GroupAutomorphism a;
  a.images.resize(images.size());
  for (Elem x = 0; x < images.size(); ++x) a.images[images[x]] = x;
  return a;
}

GroupAutomorphism GroupAutomorphism::then(const GroupAutomorphism &other) const {
  GroupAutomorphism a;
  a.images.resize(images.size());
  for (Elem x = 0; x < images.size(); ++x) a.images[x] = other.images[images[x]];
  return a;
}

bool is_automorphism(const FiniteGroup &g, const GroupAutomorphism &a) {
  const auto n = g.order();
  if (a.images.size() != n) return false;
  std::vector<char> seen(n);
  for (auto v : a.images) {
    if (v >= n || seen[v]++) return false;
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (a(g.mul(x, y)) != g.mul(a(x), a(y))) return false;
  return true;
}

bool Subgroup::contains(Elem x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

// Subgroups -------------------------------------------------------------------

namespace {

/// Closure of `seed` under right multiplication by `gens`.
Bitset close_under(const FiniteGroup &g, Bitset seed, std::span<const Elem> gens) {
  std::vector<Elem> queue;
  seed.set(g.identity());
  seed.for_each([&](std::size_t x) { queue.push_back(static_cast<Elem>(x)); });
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Elem x = queue[qi];
    for (Elem s : gens) {
      const Elem y = g.mul(x, s);
      if (!seed.test(y)) {
        seed.set(y);
        queue.push_back(y);
      }
    }
  }
  return seed;
}

Subgroup to_subgroup(const Bitset &b) {
  Subgroup h;
  b.for_each([&](std::size_t x) { h.members.push_back(static_cast<Elem>(x)); });
  return h;
}

Bitset to_bitset(const FiniteGroup &g, const Subgroup &h) {
  Bitset b(g.order());
  for (auto x : h.members) b.set(x);
  return b;
}

} // namespace

Subgroup subgroup_generated(const FiniteGroup &g, std::span<const Elem> gens) {
  for (auto x : gens)
    if (x >= g.order()) fail(ErrorCode::invalid_parameter, "generator out of range");
  return to_subgroup(close_under(g, Bitset(g.order()), gens));
}

bool is_subgroup(const FiniteGroup &g, std::span<const Elem> members) {
  Bitset b(g.order());
  for (auto x : members) {
    if (x >= g.order()) return false;
    b.set(x);
  }
  if (!b.test(g.identity())) return false;
  bool closed = true;
  b.for_each([&](std::size_t x) {
    b.for_each([&](std::size_t y) {
      if (!b.test(g.mul(static_cast<Elem>(x), static_cast<Elem>(y)))) closed = false;
    });
  });
  return closed;
}

bool is_normal(const FiniteGroup &g, const Subgroup &n) {
  for (Elem x : n.members)
    for (Elem y = 0; y < g.order(); ++y)
      if (!n.contains(g.conjugate(x, y))) return false;
  return true;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup &g, std::size_t max_count) {
  std::set<Bitset> seen;
  std::vector<Bitset> frontier;
  Bitset trivial(g.order());
  trivial.set(g.identity());
  seen.insert(trivial);
  frontier.push_back(trivial);
  for (std::size_t fi = 0; fi < frontier.size(); ++fi) {
    const Bitset h = frontier[fi];
    for (Elem x = 0; x < g.order(); ++x) {
      if (h.test(x)) continue;
      // <h, x>: close h under right multiplication by x and by h's own members.
      std::vector<Elem> gens{x};
      h.for_each([&](std::size_t y) { gens.push_back(static_cast<Elem>(y)); });
      Bitset k = close_under(g, h, gens);
      if (seen.insert(k).second) {
        if (seen.size() > max_count)
          fail(ErrorCode::resource_limit, "subgroup enumeration exceeded bound");
        frontier.push_back(std::move(k));
      }
    }
  }
  std::vector<Subgroup> out;
  for (const auto &b : seen) out.push_back(to_subgroup(b));
  std::sort(out.begin(), out.end(), [](const Subgroup &a, const Subgroup &b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });
  return out;
}

std::pair<FiniteGroup, std::vector<Elem>> subgroup_as_group(const FiniteGroup &g,
                                                            const Subgroup &h) {
  if (!is_subgroup(g, h.members)) fail(ErrorCode::invalid_parameter, "not a subgroup");
  const auto k = h.order();
  std::vector<Elem> local(g.order(), 0);
  for (Elem i = 0; i < k; ++i) local[h.members[i]] = i;
  std::vector<Elem> table(k * k);
  std::vector<std::string> names;
  for (Elem i = 0; i < k; ++i) {
    names.push_back(g.name(h.members[i]));
    for (Elem j = 0; j < k; ++j) table[i * k + j] = local[g.mul(h.members[i], h.members[j])];
  }
  return {FiniteGroup(k, std::move(table), std::move(names)), h.members};
}

// Automorphisms ---------------------------------------------------------------

std::vector<Elem> generating_sequence(const FiniteGroup &g) {
  std::vector<Elem> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), Elem{0});
  std::stable_sort(by_order.begin(), by_order.end(), [&](Elem a, Elem b) {
    return g.element_order(a) > g.element_order(b);
  });
  std::vector<Elem> gens;
  Bitset h(g.order());
  h.set(g.identity());
  while (h.count() < g.order()) {
    // Pick the element that enlarges the subgroup most; ties by order then index.
    Elem best = 0;
    std::size_t best_size = 0;
    for (Elem x : by_order) {
      if (h.test(x)) continue;
      auto trial = gens;
      trial.push_back(x);
      auto sz = close_under(g, Bitset(g.order()), trial).count();
      if (sz > best_size) {
        best_size = sz;
        best = x;
      }
    }
    gens.push_back(best);
    h = close_under(g, Bitset(g.order()), gens);
  }
  return gens;
}

namespace {

/// Extends gens[i] -> imgs[i] to a homomorphism on <gens> into `h`. On
/// success `map` holds the images (others = -1) and the map is injective.
bool extend_homomorphism(const FiniteGroup &g, const FiniteGroup &h,
                         std::span<const Elem> gens, std::span<const Elem> imgs,
                         std::vector<long> &map, std::vector<char> &used) {
  std::fill(map.begin(), map.end(), -1);
  std::fill(used.begin(), used.end(), 0);
  std::vector<Elem> queue{g.identity()};
  map[g.identity()] = h.identity();
  used[h.identity()] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Elem x = queue[qi];
    const Elem fx = static_cast<Elem>(map[x]);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Elem y = g.mul(x, gens[k]);
      const Elem fy = h.mul(fx, imgs[k]);
      if (map[y] < 0) {
        if (used[fy]) return false;
        used[fy] = 1;
        map[y] = fy;
        queue.push_back(y);
      } else if (static_cast<Elem>(map[y]) != fy) {
        return false;
      }
    }
  }
  return true;
}

/// Backtracks over images of `gens` in `h` with matching element orders and
/// calls `emit` for every injective homomorphism defined on all of G. `emit`
/// returns false to stop.
template <class Emit>
void search_embeddings(const FiniteGroup &g, const FiniteGroup &h, Emit &&emit) {
  const auto gens = generating_sequence(g);
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const auto ord = g.element_order(gens[k]);
    for (Elem y = 0; y < h.order(); ++y)
      if (h.element_order(y) == ord) candidates[k].push_back(y);
  }
  std::vector<Elem> imgs;
  std::vector<long> map(g.order());
  std::vector<char> used(h.order());
  bool stop = false;
  auto rec = [&](auto &self, std::size_t k) -> void {
    if (stop) return;
    if (k == gens.size()) {
      std::vector<Elem> full(g.order());
      for (Elem x = 0; x < g.order(); ++x) full[x] = static_cast<Elem>(map[x]);
      if (!emit(std::move(full))) stop = true;
      return;
    }
    for (Elem y : candidates[k]) {
      imgs.push_back(y);
      std::span<const Elem> gs(gens.data(), k + 1);
      if (extend_homomorphism(g, h, gs, imgs, map, used)) self(self, k + 1);
      imgs.pop_back();
      if (stop) return;
    }
  };
  rec(rec, 0);
}

} // namespace

std::vector<GroupAutomorphism> automorphisms(const FiniteGroup &g,
                                             const AutomorphismOptions &opts) {
  if (g.order() > opts.max_group_order)
    fail(ErrorCode::resource_limit, "automorphism enumeration bound exceeded: |G| = " +
                                        std::to_string(g.order()) + " > " +
                                        std::to_string(opts.max_group_order));
  std::vector<GroupAutomorphism> out;
  search_embeddings(g, g, [&](std::vector<Elem> images) {
    out.push_back(GroupAutomorphism{std::move(images)});
    if (out.size() > opts.max_count)
      fail(ErrorCode::resource_limit, "automorphism count exceeded bound");
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Elem>> find_group_isomorphism(const FiniteGroup &g,
                                                        const FiniteGroup &h) {
  if (g.order() != h.order()) return std::nullopt;
  std::optional<std::vector<Elem>> found;
  search_embeddings(g, h, [&](std::vector<Elem> images) {
    found = std::move(images);
    return false;
  });
  return found;
}

GroupAutomorphism inner_automorphism(const FiniteGroup &g, Elem x) {
  GroupAutomorphism a;
  a.images.resize(g.order());
  for (Elem y = 0; y < g.order(); ++y) a.images[y] = g.conjugate(y, x);
  return a;
}

// Normal structure ------------------------------------------------------------

bool has_complement(const FiniteGroup &g, const Subgroup &n) {
  if (!is_subgroup(g, n.members) || !is_normal(g, n))
    fail(ErrorCode::invalid_parameter, "has_complement: subgroup is not normal");
  const std::size_t k = g.order() / n.order();
  if (k == 1) return true;
  const Bitset nb = to_bitset(g, n);

  auto meets_trivially = [&](const Bitset &h) {
    Bitset x = h;
    x &= nb;
    return x.count() == 1;
  };
  auto is_complement = [&](const Bitset &h) {
    return h.count() == k && meets_trivially(h);
  };

  std::vector<Elem> outside;
  for (Elem x = 0; x < g.order(); ++x)
    if (!nb.test(x)) outside.push_back(x);

  // A complement is isomorphic to G/N, so when G/N is cyclic the cyclic
  // candidates are all there is.
  bool quotient_cyclic = false;
  for (Elem y : outside) {
    Elem gy[] = {y};
    if (close_under(g, nb, gy).count() == g.order()) {
      quotient_cyclic = true;
      break;
    }
  }
  for (Elem x : outside) {
    Elem gx[] = {x};
    if (is_complement(close_under(g, Bitset(g.order()), gx))) return true;
  }
  if (quotient_cyclic) return false;
  for (std::size_t i = 0; i < outside.size(); ++i)
    for (std::size_t j = i + 1; j < outside.size(); ++j) {
      Elem gxy[] = {outside[i], outside[j]};
      if (is_complement(close_under(g, Bitset(g.order()), gxy))) return true;
    }

  // Full search over subgroups meeting N trivially with order dividing k.
  std::set<Bitset> seen;
  std::vector<std::pair<Bitset, std::vector<Elem>>> frontier;
  Bitset trivial(g.order());
  trivial.set(g.identity());
  frontier.push_back({trivial, {}});
  seen.insert(trivial);
  for (std::size_t fi = 0; fi < frontier.size(); ++fi) {
    const auto [h, gens] = frontier[fi];
    for (Elem x : outside) {
      if (h.test(x)) continue;
      auto kg = gens;
      kg.push_back(x);
      Bitset kb = close_under(g, Bitset(g.order()), kg);
      const auto sz = kb.count();
      if (k % sz != 0 || !meets_trivially(kb)) continue;
      if (sz == k) return true;
      if (seen.insert(kb).second) {
        if (seen.size() > 200000)
          fail(ErrorCode::resource_limit, "has_complement search exceeded bound");
        frontier.push_back({std::move(kb), std::move(kg)});
      }
    }
  }
  return false;
}

Quotient quotient(const FiniteGroup &g, const Subgroup &n) {
  if (!is_subgroup(g, n.members) || !is_normal(g, n))
    fail(ErrorCode::invalid_parameter, "quotient: subgroup is not normal");
  const auto order = g.order();
  std::vector<long> coset(order, -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < order; ++x) {
    if (coset[x] >= 0) continue;
    const auto id = static_cast<long>(reps.size());
    reps.push_back(x);
    for (Elem m : n.members) coset[g.mul(m, x)] = id;
  }
  const auto k = reps.size();
  std::vector<Elem> table(k * k);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back(g.name(reps[i]));
    for (std::size_t j = 0; j < k; ++j)
      table[i * k + j] = static_cast<Elem>(coset[g.mul(reps[i], reps[j])]);
  }
  Quotient q{FiniteGroup(k, std::move(table), std::move(names)), {}};
  q.projection.reserve(order);
  for (auto c : coset) q.projection.push_back(static_cast<Elem>(c));
  for (Elem x = 0; x < order; ++x)
    for (Elem y = 0; y < order; ++y)
      if (q.projection[g.mul(x, y)] != q.group.mul(q.projection[x], q.projection[y]))
        fail(ErrorCode::internal_verification_failure, "projection is not a homomorphism");
  return q;
}

bool is_characteristic(const FiniteGroup &g, const Subgroup &n,
                       const AutomorphismOptions &opts) {
  for (const auto &a : automorphisms(g, opts)) {
    for (Elem x : n.members)
      if (!n.contains(a(x))) return false;
  }
  return true;
}

MetacyclicStatus metacyclic_status(const FiniteGroup &g) {
  std::set<Subgroup> cyclic;
  for (Elem x = 0; x < g.order(); ++x) {
    Elem gx[] = {x};
    cyclic.insert(subgroup_generated(g, gx));
  }
  MetacyclicStatus st;
  for (const auto &n : cyclic) {
    if (!is_normal(g, n)) continue;
    const Bitset nb = to_bitset(g, n);
    bool quotient_cyclic = false;
    for (Elem y = 0; y < g.order() && !quotient_cyclic; ++y) {
      Elem gy[] = {y};
      quotient_cyclic = close_under(g, nb, gy).count() == g.order();
    }
    if (!quotient_cyclic) continue;
    st.kernels.push_back(n);
    st.split = st.split || has_complement(g, n);
  }
  return st;
}

} // namespace haarcay
