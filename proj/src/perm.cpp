#include "haarcay/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "haarcay/error.hpp"

namespace haarcay {

// Permutation -------------------------------------------------------------------

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size());
  for (auto p : images_) {
    if (p >= images_.size() || seen[p]++)
      fail(ErrorCode::invalid_parameter, "permutation images are not a bijection");
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  return Permutation(std::move(img), Unchecked{});
}

Permutation operator*(const Permutation &a, const Permutation &b) {
  std::vector<Point> img(a.images_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = b.images_[a.images_[i]];
  return Permutation(std::move(img), Permutation::Unchecked{});
}

Permutation Permutation::inverse() const {
  std::vector<Point> img(images_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(img), Unchecked{});
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Point Permutation::first_moved() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

bool Permutation::has_fixed_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == i) return true;
  return false;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  std::vector<char> seen(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (auto j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_image_list() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? " " : "") << images_[i];
  return os.str();
}

std::string Permutation::to_cycles() const {
  std::ostringstream os;
  std::vector<char> seen(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    os << '(';
    for (auto j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      os << (j == i ? "" : " ") << j;
    }
    os << ')';
  }
  auto s = os.str();
  return s.empty() ? "()" : s;
}

// PermGroup ---------------------------------------------------------------------

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::vector<Point> base_prefix, std::optional<BigInt> known_order)
    : degree_(degree), gens_(std::move(generators)), base_prefix_(std::move(base_prefix)),
      known_order_(std::move(known_order)) {
  for (const auto &g : gens_)
    if (g.degree() != degree_)
      fail(ErrorCode::invalid_parameter, "generator degree does not match group degree");
  for (auto b : base_prefix_)
    if (b >= degree_) fail(ErrorCode::invalid_parameter, "base point out of range");
}

const PermGroup::Chain &PermGroup::chain() const {
  std::call_once(lazy_->once, [this] {
    auto c = std::make_unique<Chain>();
    build_chain(*c);
    lazy_->chain = std::move(c);
  });
  return *lazy_->chain;
}

void PermGroup::rebuild_level(std::size_t degree, Chain &c, std::size_t i) {
  Level &lv = c.levels[i];
  lv.orbit.assign(1, lv.base_point);
  lv.slot.assign(degree, -1);
  lv.slot[lv.base_point] = 0;
  lv.transversal.assign(1, Permutation::identity(degree));
  lv.transversal_inv.assign(1, Permutation::identity(degree));
  for (std::size_t oi = 0; oi < lv.orbit.size(); ++oi) {
    const Point beta = lv.orbit[oi];
    for (auto gi : lv.gens) {
      const auto &s = c.strong[gi];
      const Point img = s(beta);
      if (lv.slot[img] >= 0) continue;
      lv.slot[img] = static_cast<long>(lv.orbit.size());
      lv.orbit.push_back(img);
      lv.transversal.push_back(lv.transversal[oi] * s);
      lv.transversal_inv.push_back(lv.transversal.back().inverse());
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::sift(const Chain &c, Permutation g,
                                                    std::size_t from) {
  for (std::size_t i = from; i < c.levels.size(); ++i) {
    const auto &lv = c.levels[i];
    const long slot = lv.slot[g(lv.base_point)];
    if (slot < 0) return {std::move(g), i};
    g = g * lv.transversal_inv[static_cast<std::size_t>(slot)];
  }
  return {std::move(g), c.levels.size()};
}

void PermGroup::build_chain(Chain &c) const {
  std::set<Permutation> uniq;
  for (const auto &g : gens_)
    if (!g.is_identity() && uniq.insert(g).second) c.strong.push_back(g);

  for (auto b : base_prefix_)
    if (std::find(c.base.begin(), c.base.end(), b) == c.base.end()) c.base.push_back(b);
  for (const auto &s : c.strong) {
    bool moves = false;
    for (auto b : c.base) moves = moves || s(b) != b;
    if (!moves) c.base.push_back(s.first_moved());
  }

  auto fixes_prefix = [&](const Permutation &s, std::size_t len) {
    for (std::size_t k = 0; k < len; ++k)
      if (s(c.base[k]) != c.base[k]) return false;
    return true;
  };
  for (std::size_t i = 0; i < c.base.size(); ++i) {
    Level lv;
    lv.base_point = c.base[i];
    for (std::size_t gi = 0; gi < c.strong.size(); ++gi)
      if (fixes_prefix(c.strong[gi], i)) lv.gens.push_back(gi);
    c.levels.push_back(std::move(lv));
    rebuild_level(degree_, c, i);
  }

  auto current_order = [&] {
    BigInt o = 1;
    for (const auto &lv : c.levels) o *= lv.orbit.size();
    return o;
  };
  c.order = current_order();
  if (known_order_ && c.order == *known_order_) return;

  long i = static_cast<long>(c.levels.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    const auto li = static_cast<std::size_t>(i);
    for (std::size_t oi = 0; oi < c.levels[li].orbit.size() && !restarted; ++oi) {
      for (std::size_t k = 0; k < c.levels[li].gens.size() && !restarted; ++k) {
        const auto &lv = c.levels[li];
        const auto &s = c.strong[lv.gens[k]];
        const Point img = s(lv.orbit[oi]);
        Permutation schreier =
            lv.transversal[oi] * s *
            lv.transversal_inv[static_cast<std::size_t>(lv.slot[img])];
        if (schreier.is_identity()) continue;
        auto [h, j] = sift(c, std::move(schreier), li + 1);
        if (h.is_identity()) continue;
        if (j == c.levels.size()) {
          Level nl;
          nl.base_point = h.first_moved();
          c.base.push_back(nl.base_point);
          c.levels.push_back(std::move(nl));
        }
        c.strong.push_back(std::move(h));
        const std::size_t idx = c.strong.size() - 1;
        for (std::size_t l = li + 1; l <= j; ++l) {
          c.levels[l].gens.push_back(idx);
          rebuild_level(degree_, c, l);
        }
        c.order = current_order();
        if (known_order_ && c.order == *known_order_) return;
        i = static_cast<long>(j);
        restarted = true;
      }
    }
    if (!restarted) --i;
  }
  if (known_order_ && c.order != *known_order_)
    fail(ErrorCode::internal_verification_failure,
         "stabilizer chain order disagrees with supplied group order");
}

BigInt PermGroup::order() const { return chain().order; }

const std::vector<Point> &PermGroup::base() const { return chain().base; }

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<Point> parent(degree_);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto &g : gens_)
    for (Point p = 0; p < degree_; ++p) {
      auto a = find(p), b = find(g(p));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<Point>> by_root(degree_);
  for (Point p = 0; p < degree_; ++p) by_root[find(p)].push_back(p);
  std::vector<std::vector<Point>> out;
  for (auto &o : by_root)
    if (!o.empty()) out.push_back(std::move(o));
  return out;
}

bool PermGroup::contains(const Permutation &p) const {
  if (p.degree() != degree_) fail(ErrorCode::invalid_parameter, "degree mismatch");
  const auto &c = chain();
  auto [h, j] = sift(c, p, 0);
  return j == c.levels.size() && h.is_identity();
}

bool PermGroup::is_transitive() const { return degree_ <= 1 || orbits().size() == 1; }

bool PermGroup::is_semiregular() const {
  const BigInt ord = order();
  for (const auto &o : orbits())
    if (BigInt(o.size()) != ord) return false;
  return true;
}

bool PermGroup::is_regular() const { return is_transitive() && is_semiregular(); }

std::optional<Permutation> PermGroup::element_mapping_first_base_point(Point p) const {
  const auto &c = chain();
  if (c.levels.empty()) return std::nullopt;
  const long slot = c.levels[0].slot[p];
  if (slot < 0) return std::nullopt;
  return c.levels[0].transversal[static_cast<std::size_t>(slot)];
}

bool PermGroup::for_each_stabilizer_element(
    std::size_t level, const std::function<bool(const Permutation &)> &f) const {
  const auto &c = chain();
  auto rec = [&](auto &self, long i, const Permutation &acc) -> bool {
    if (i < static_cast<long>(level)) return f(acc);
    for (const auto &u : c.levels[static_cast<std::size_t>(i)].transversal)
      if (!self(self, i - 1, acc * u)) return false;
    return true;
  };
  return rec(rec, static_cast<long>(c.levels.size()) - 1, Permutation::identity(degree_));
}

std::vector<Permutation> close_group(std::size_t degree, std::span<const Permutation> gens,
                                     std::size_t limit) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> queue{Permutation::identity(degree)};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (const auto &s : gens) {
      auto y = queue[qi] * s;
      if (seen.insert(y).second) {
        if (seen.size() > limit) fail(ErrorCode::resource_limit, "group closure too large");
        queue.push_back(std::move(y));
      }
    }
  }
  return queue;
}

} // namespace haarcay
