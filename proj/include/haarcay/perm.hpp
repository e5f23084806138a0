#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace haarcay {

using Point = std::uint32_t;
using BigInt = boost::multiprecision::cpp_int;

/// A bijection of 0..degree-1.
///
/// Composition follows the right-action convention: `p * q` applies `p`
/// first, then `q`, so that point^(p*q) = (point^p)^q.
class Permutation {
public:
  Permutation() = default;
  /// Throws invalid_parameter unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);
  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point p) const noexcept { return images_[p]; }
  const std::vector<Point> &images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  /// First point moved, or degree() for the identity.
  Point first_moved() const noexcept;
  bool has_fixed_point() const noexcept;
  std::size_t order() const;

  /// "0 1 2 ..." one-line image list.
  std::string to_image_list() const;
  /// "(0 1 2)(3 4)" disjoint cycles; "()" for the identity.
  std::string to_cycles() const;

  friend Permutation operator*(const Permutation &a, const Permutation &b);
  bool operator==(const Permutation &) const = default;
  auto operator<=>(const Permutation &) const = default;

private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}
  std::vector<Point> images_;
};

/// Permutation group given by generators, with a stabilizer chain (base and
/// strong generating set) built lazily by deterministic Schreier-Sims.
///
/// When the order is known in advance (the graph automorphism search supplies
/// it) construction stops as soon as the chain reaches that order.
class PermGroup {
public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::vector<Point> base_prefix = {}, std::optional<BigInt> known_order = {});

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation> &generators() const noexcept { return gens_; }

  BigInt order() const;
  /// Sorted orbit partition.
  std::vector<std::vector<Point>> orbits() const;
  bool contains(const Permutation &p) const;
  bool is_transitive() const;
  bool is_semiregular() const;
  bool is_regular() const;

  const std::vector<Point> &base() const;
  /// Some element mapping base()[0] to `p`, if `p` lies in that orbit.
  std::optional<Permutation> element_mapping_first_base_point(Point p) const;
  /// Calls `f` on every element of the pointwise stabilizer of base()[0..level),
  /// stopping early when `f` returns false. Returns false if stopped.
  bool for_each_stabilizer_element(std::size_t level,
                                   const std::function<bool(const Permutation &)> &f) const;

private:
  struct Level {
    Point base_point;
    std::vector<std::size_t> gens; // indices into Chain::strong
    std::vector<Point> orbit;
    std::vector<long> slot;        // point -> index into orbit/transversal, or -1
    std::vector<Permutation> transversal;
    std::vector<Permutation> transversal_inv;
  };
  struct Chain {
    std::vector<Permutation> strong;
    std::vector<Level> levels;
    std::vector<Point> base;
    BigInt order;
  };

  const Chain &chain() const;
  void build_chain(Chain &c) const;
  static void rebuild_level(std::size_t degree, Chain &c, std::size_t i);
  static std::pair<Permutation, std::size_t> sift(const Chain &c, Permutation g,
                                                  std::size_t from);

  std::size_t degree_;
  std::vector<Permutation> gens_;
  std::vector<Point> base_prefix_;
  std::optional<BigInt> known_order_;
  struct LazyChain {
    std::once_flag once;
    std::unique_ptr<Chain> chain;
  };
  // Shared between copies; the chain is immutable once built.
  std::shared_ptr<LazyChain> lazy_ = std::make_shared<LazyChain>();
};

/// Elements of <gens> by breadth-first closure; throws resource_limit past
/// `limit` elements.
std::vector<Permutation> close_group(std::size_t degree, std::span<const Permutation> gens,
                                     std::size_t limit);

enum class SearchOutcome { found, none, unknown };

struct RegularSubgroupResult {
  SearchOutcome outcome = SearchOutcome::unknown;
  std::optional<PermGroup> group; ///< set when outcome == found
  std::uint64_t expansions = 0;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000;

/// Searches for a subgroup of `g` acting regularly on its points.
///
/// Backtracks over elements of `g`, maintaining a semiregular partial
/// subgroup; each expansion tries one candidate element. `seed`, if given and
/// semiregular inside `g`, is tried first as the starting subgroup; the
/// unseeded search runs afterwards so `none` is always a complete answer.
RegularSubgroupResult find_regular_subgroup(const PermGroup &g, std::uint64_t budget,
                                            std::span<const Permutation> seed = {});

} // namespace haarcay
