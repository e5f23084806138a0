#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "haarcay/haar.hpp"

namespace haarcay {

using Record = nlohmann::ordered_json;

struct ScanOptions {
  std::size_t workers = 1;
  /// Adds "seconds" to every record. Off by default so reruns are
  /// byte-identical.
  bool timing = false;
  std::uint64_t budget = kDefaultSearchBudget;
  /// Records whose "key" is listed here are skipped (resuming a scan).
  std::set<std::string> skip_keys;
  /// Receives each record, as one line of JSON, in instance order.
  std::function<void(const std::string &)> sink;
};

/// One record per scanned instance plus tallies derived from them.
struct ScanReport {
  std::string kind;
  std::vector<Record> records;
  std::vector<std::string> notes;

  /// Counts of true/false per boolean field, verdicts per "cayley" value and
  /// the number of records carrying an "error".
  Record summary() const;
  std::string jsonl() const;
  std::string table() const;
};

/// Maximum |G| for exhaustive subset sweeps.
inline constexpr std::size_t kMaxSweepOrder = 14;

struct AllSubsetsResult {
  bool all = true;
  std::optional<std::vector<Elem>> counterexample; ///< first failure in colex order
  std::size_t subsets = 0;
  std::size_t failures = 0;
  bool dedup_requested = false;
  /// Witness existence was constant on every translate class.
  bool invariance_confirmed = false;
  std::size_t classes = 0;
};

/// Subsets are visited in colex order (bit i of the mask is element i).
/// With dedup, translate classes S -> g S^alpha h are computed and witness
/// existence is checked to be constant on each before class representatives
/// are trusted; a mixed class turns dedup off and is reported.
AllSubsetsResult all_haar_alg_cayley(const FiniteGroup &g, bool dedup,
                                     const ScanOptions &opts = {});

/// Per-subset records (connected, alg_cayley) for the whole power set.
ScanReport scan_all_subsets(const FiniteGroup &g, const std::string &group_name,
                            const ScanOptions &opts = {});

/// H(D_n, {1,a,a^3,b,ab,a^3b}) for n in [lo, hi]: vertex-transitivity.
ScanReport dihedral_pattern_scan(std::size_t lo, std::size_t hi, const ScanOptions &opts = {});

/// |Aut H(D_n, {1,a,a^3,b,ab,a^2b,a^4b})| against 2n, plus connectivity and
/// valency.
ScanReport prop36_check(std::size_t lo, std::size_t hi, const ScanOptions &opts = {});

/// For each abelian A (group DSL), every S in D(A) with |S| <= max_valency,
/// 1 in S and |S n A| <= 2 must have a witness. Records also carry the
/// counts over all subsets up to max_valency and of size max_valency + 1.
ScanReport gendih_valency_check(const std::vector<std::string> &abelian_specs,
                                std::size_t max_valency = 5, const ScanOptions &opts = {});

/// If every Haar graph of G is algebraically Cayley, checks the same for
/// every subgroup and every quotient by a characteristic subgroup.
ScanReport closure_check(const FiniteGroup &g, const std::string &group_name,
                         const ScanOptions &opts = {});

} // namespace haarcay
