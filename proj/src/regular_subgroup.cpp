#include <set>

#include "haarcay/error.hpp"
#include "haarcay/perm.hpp"

namespace haarcay {

namespace {

/// A semiregular subgroup, indexed by where each element sends point 0.
struct Semiregular {
  std::vector<Permutation> gens;
  std::vector<Permutation> elems;
  std::vector<long> by_image_of_zero;

  explicit Semiregular(std::size_t degree) : by_image_of_zero(degree, -1) {
    elems.push_back(Permutation::identity(degree));
    by_image_of_zero[0] = 0;
  }

  std::vector<Point> key() const {
    std::vector<Point> k;
    for (auto idx : by_image_of_zero) {
      if (idx < 0) continue;
      const auto &img = elems[static_cast<std::size_t>(idx)].images();
      k.insert(k.end(), img.begin(), img.end());
    }
    return k;
  }
};

/// <h, g> if it is still semiregular, else nullopt.
std::optional<Semiregular> extend(const Semiregular &h, const Permutation &g) {
  Semiregular k = h;
  k.gens.push_back(g);
  for (std::size_t qi = 0; qi < k.elems.size(); ++qi) {
    for (std::size_t gi = 0; gi < k.gens.size(); ++gi) {
      Permutation y = k.elems[qi] * k.gens[gi];
      const long at = k.by_image_of_zero[y(0)];
      if (at >= 0) {
        if (k.elems[static_cast<std::size_t>(at)] != y) return std::nullopt;
        continue;
      }
      if (y.has_fixed_point()) return std::nullopt;
      k.by_image_of_zero[y(0)] = static_cast<long>(k.elems.size());
      k.elems.push_back(std::move(y));
    }
  }
  return k;
}

class RegularSearch {
public:
  RegularSearch(const PermGroup &g, std::uint64_t budget) : g_(g), budget_(budget) {}

  /// True when a regular subgroup containing `h` was found (stored in found_).
  bool run(const Semiregular &h) {
    if (h.elems.size() == g_.degree()) {
      found_ = h;
      return true;
    }
    Point target = 0;
    while (h.by_image_of_zero[target] >= 0) ++target;
    const auto u = g_.element_mapping_first_base_point(target);
    if (!u) return false;

    bool success = false;
    g_.for_each_stabilizer_element(1, [&](const Permutation &s) {
      if (expansions_ >= budget_) {
        exhausted_ = true;
        return false;
      }
      ++expansions_;
      Permutation cand = s * *u;
      if (cand.has_fixed_point()) return true;
      auto k = extend(h, cand);
      if (!k) return true;
      if (!visited_.insert(k->key()).second) return true;
      if (run(*k)) {
        success = true;
        return false;
      }
      return !exhausted_;
    });
    return success;
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t expansions() const { return expansions_; }
  const std::optional<Semiregular> &found() const { return found_; }

private:
  const PermGroup &g_;
  std::uint64_t budget_;
  std::uint64_t expansions_ = 0;
  bool exhausted_ = false;
  std::set<std::vector<Point>> visited_;
  std::optional<Semiregular> found_;
};

} // namespace

RegularSubgroupResult find_regular_subgroup(const PermGroup &group, std::uint64_t budget,
                                            std::span<const Permutation> seed) {
  RegularSubgroupResult result;
  const std::size_t degree = group.degree();
  if (degree <= 1) {
    result.outcome = SearchOutcome::found;
    result.group = PermGroup(degree, {});
    return result;
  }
  if (!group.is_transitive() || group.order() % degree != 0) {
    result.outcome = SearchOutcome::none;
    return result;
  }

  // The search enumerates elements by their image of point 0.
  const PermGroup g(degree, group.generators(), {0}, group.order());
  RegularSearch search(g, budget);

  std::optional<Semiregular> start;
  if (!seed.empty()) {
    Semiregular h(degree);
    bool ok = true;
    for (const auto &s : seed) {
      if (s.degree() != degree || !g.contains(s)) {
        ok = false;
        break;
      }
      if (s.is_identity()) continue;
      auto k = extend(h, s);
      if (!k) {
        ok = false;
        break;
      }
      h = std::move(*k);
    }
    if (ok) start = std::move(h);
  }

  bool found = start && search.run(*start);
  if (!found && !search.exhausted()) found = search.run(Semiregular(degree));

  result.expansions = search.expansions();
  if (found) {
    const auto &k = *search.found();
    PermGroup r(degree, k.gens);
    if (!r.is_regular())
      fail(ErrorCode::internal_verification_failure, "regular subgroup check failed");
    for (const auto &x : k.gens)
      if (!group.contains(x))
        fail(ErrorCode::internal_verification_failure, "regular subgroup escapes group");
    result.outcome = SearchOutcome::found;
    result.group = std::move(r);
  } else {
    result.outcome = search.exhausted() ? SearchOutcome::unknown : SearchOutcome::none;
  }
  return result;
}

} // namespace haarcay
