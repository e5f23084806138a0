#include "haarcay/survey.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "haarcay/error.hpp"

namespace haarcay {

namespace {

/// Evaluates `make(i)` for i in [0,count) on `opts.workers` threads and returns
/// the records in index order. Instances whose key is in opts.skip_keys are
/// dropped; `make` returns nullopt for those. Records reach opts.sink in index
/// order as soon as every earlier instance has finished.
template <class Make>
std::vector<Record> run_instances(std::size_t count, const ScanOptions &opts, Make &&make) {
  std::vector<std::optional<Record>> slots(count);
  std::vector<char> done(count, 0);
  std::size_t next_emit = 0;
  std::mutex mu;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      const auto start = std::chrono::steady_clock::now();
      std::optional<Record> rec;
      try {
        rec = make(i);
      } catch (const Error &e) {
        rec = Record{{"key", "instance:" + std::to_string(i)},
                     {"error", error_code_name(e.code())},
                     {"message", e.what()}};
      }
      if (rec && opts.timing)
        (*rec)["seconds"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      std::lock_guard lock(mu);
      slots[i] = std::move(rec);
      done[i] = 1;
      while (next_emit < count && done[next_emit]) {
        if (slots[next_emit] && opts.sink) opts.sink(slots[next_emit]->dump());
        ++next_emit;
      }
    }
  };

  const std::size_t n_workers = std::max<std::size_t>(1, std::min(opts.workers, count));
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < n_workers; ++w) pool.emplace_back(worker);
    for (auto &t : pool) t.join();
  }

  std::vector<Record> out;
  for (auto &s : slots)
    if (s) out.push_back(std::move(*s));
  return out;
}

bool skipped(const ScanOptions &opts, const std::string &key) {
  return opts.skip_keys.count(key) > 0;
}

std::vector<Elem> mask_to_subset(std::uint32_t mask) {
  std::vector<Elem> s;
  for (Elem i = 0; mask >> i; ++i)
    if ((mask >> i) & 1u) s.push_back(i);
  return s;
}

Bitset mask_to_bitset(std::size_t n, std::uint32_t mask) {
  Bitset b(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1u) b.set(i);
  return b;
}

void check_sweep_order(const FiniteGroup &g) {
  if (g.order() > kMaxSweepOrder)
    fail(ErrorCode::resource_limit, "exhaustive subset sweep needs |G| <= " +
                                        std::to_string(kMaxSweepOrder));
}

std::string big(const BigInt &x) { return x.str(); }

/// Witness existence for every mask, in parallel chunks.
std::vector<char> witness_table(const WitnessContext &ctx, const ScanOptions &opts) {
  const std::size_t n = ctx.group().order();
  const std::size_t total = std::size_t{1} << n;
  std::vector<char> has(total, 0);
  const std::size_t chunk = 1024;
  const std::size_t chunks = (total + chunk - 1) / chunk;
  ScanOptions quiet;
  quiet.workers = opts.workers;
  run_instances(chunks, quiet, [&](std::size_t c) -> std::optional<Record> {
    for (std::size_t m = c * chunk; m < std::min(total, (c + 1) * chunk); ++m)
      has[m] = ctx.exists(mask_to_bitset(n, static_cast<std::uint32_t>(m))) ? 1 : 0;
    return std::nullopt;
  });
  return has;
}

std::uint32_t map_mask(std::uint32_t mask, const std::vector<Elem> &f) {
  std::uint32_t out = 0;
  for (Elem i = 0; mask >> i; ++i)
    if ((mask >> i) & 1u) out |= std::uint32_t{1} << f[i];
  return out;
}

} // namespace

// ScanReport --------------------------------------------------------------------

Record ScanReport::summary() const {
  std::map<std::string, std::size_t> counts;
  for (const auto &r : records) {
    for (auto it = r.begin(); it != r.end(); ++it) {
      if (it.value().is_boolean())
        ++counts[it.key() + "=" + (it.value().get<bool>() ? "true" : "false")];
      else if (it.key() == "cayley" && it.value().is_string())
        ++counts["cayley=" + it.value().get<std::string>()];
      else if (it.key() == "error")
        ++counts["error"];
    }
  }
  Record s;
  s["kind"] = kind;
  s["instances"] = records.size();
  for (const auto &[k, v] : counts) s["counts"][k] = v;
  if (!notes.empty()) s["notes"] = notes;
  return s;
}

std::string ScanReport::jsonl() const {
  std::string out;
  for (const auto &r : records) out += r.dump() + "\n";
  return out;
}

std::string ScanReport::table() const {
  std::ostringstream os;
  const Record s = summary();
  os << "scan: " << kind << "\n";
  os << "instances: " << records.size() << "\n";
  if (s.contains("counts"))
    for (auto it = s["counts"].begin(); it != s["counts"].end(); ++it)
      os << "  " << it.key() << ": " << it.value().get<std::size_t>() << "\n";
  for (const auto &n : notes) os << "note: " << n << "\n";
  return os.str();
}

// Exhaustive sweeps ---------------------------------------------------------------

AllSubsetsResult all_haar_alg_cayley(const FiniteGroup &g, bool dedup, const ScanOptions &opts) {
  check_sweep_order(g);
  const std::size_t n = g.order();
  const std::size_t total = std::size_t{1} << n;
  AutomorphismOptions aopts;
  aopts.max_group_order = kMaxSweepOrder;
  const WitnessContext ctx(g, aopts);
  const auto has = witness_table(ctx, opts);

  AllSubsetsResult r;
  r.subsets = total;
  r.dedup_requested = dedup;
  for (std::size_t m = 0; m < total; ++m) {
    if (has[m]) continue;
    ++r.failures;
    if (!r.counterexample) r.counterexample = mask_to_subset(static_cast<std::uint32_t>(m));
  }
  r.all = r.failures == 0;
  if (!dedup) return r;

  // Translate classes under S -> g S, S -> S h and S -> S^alpha.
  std::vector<std::vector<Elem>> maps;
  for (Elem x : generating_sequence(g)) {
    std::vector<Elem> left(n), right(n);
    for (Elem y = 0; y < n; ++y) {
      left[y] = g.mul(x, y);
      right[y] = g.mul(y, x);
    }
    maps.push_back(std::move(left));
    maps.push_back(std::move(right));
  }
  for (const auto &a : automorphisms(g, aopts)) maps.push_back(a.images);

  std::vector<std::uint32_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::uint32_t m = 0; m < total; ++m)
    for (const auto &f : maps) {
      auto a = find(m), b = find(map_mask(m, f));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

  bool mixed = false;
  for (std::uint32_t m = 0; m < total; ++m) {
    const auto root = find(m);
    if (root == m) ++r.classes;
    mixed = mixed || has[m] != has[root];
  }
  r.invariance_confirmed = !mixed;
  if (mixed) return r;

  // Answer from class representatives; it must agree with the full sweep.
  AllSubsetsResult from_reps = r;
  from_reps.failures = 0;
  from_reps.counterexample.reset();
  for (std::uint32_t m = 0; m < total; ++m) {
    if (has[find(m)]) continue;
    if (!from_reps.counterexample) from_reps.counterexample = mask_to_subset(m);
    ++from_reps.failures;
  }
  from_reps.all = from_reps.failures == 0;
  if (from_reps.all != r.all || from_reps.counterexample != r.counterexample)
    fail(ErrorCode::internal_verification_failure, "dedup sweep disagrees with full sweep");
  return from_reps;
}

ScanReport scan_all_subsets(const FiniteGroup &g, const std::string &group_name,
                            const ScanOptions &opts) {
  check_sweep_order(g);
  const std::size_t n = g.order();
  AutomorphismOptions aopts;
  aopts.max_group_order = kMaxSweepOrder;
  const WitnessContext ctx(g, aopts);
  ScanReport rep;
  rep.kind = "all-subsets";
  rep.records = run_instances(std::size_t{1} << n, opts, [&](std::size_t m) -> std::optional<Record> {
    const auto s = mask_to_subset(static_cast<std::uint32_t>(m));
    const std::string subset = format_subset(g, s);
    const std::string key = group_name + "|" + subset;
    if (skipped(opts, key)) return std::nullopt;
    const HaarSpec spec(g, s);
    Record rec{{"key", key}, {"group", group_name}, {"subset", subset}, {"size", s.size()}};
    rec["connected"] = is_connected(haar_graph(spec));
    rec["alg_cayley"] = ctx.exists(mask_to_bitset(n, static_cast<std::uint32_t>(m)));
    return rec;
  });
  return rep;
}

// Dihedral families ---------------------------------------------------------------

ScanReport dihedral_pattern_scan(std::size_t lo, std::size_t hi, const ScanOptions &opts) {
  if (lo < 6 || hi < lo) fail(ErrorCode::invalid_parameter, "dihedral pattern scan needs 6 <= lo <= hi");
  ScanReport rep;
  rep.kind = "dihedral-pattern";
  rep.records = run_instances(hi - lo + 1, opts, [&](std::size_t i) -> std::optional<Record> {
    const std::string group = "dihedral:" + std::to_string(lo + i);
    if (skipped(opts, group)) return std::nullopt;
    const HaarSpec spec = parse_haar_spec(group + "|1,a,a^3,b,a*b,a^3*b");
    const PermGroup aut = automorphism_group(haar_graph(spec));
    Record rec{{"key", group}, {"group", group}, {"subset", format_subset(spec.group, spec.S)}};
    rec["vertex_transitive"] = aut.is_transitive();
    rec["aut_order"] = big(aut.order());
    rec["orbits"] = aut.orbits().size();
    return rec;
  });
  return rep;
}

ScanReport prop36_check(std::size_t lo, std::size_t hi, const ScanOptions &opts) {
  if (lo < 8 || hi < lo) fail(ErrorCode::invalid_parameter, "prop36 check needs 8 <= lo <= hi");
  ScanReport rep;
  rep.kind = "prop36";
  rep.records = run_instances(hi - lo + 1, opts, [&](std::size_t i) -> std::optional<Record> {
    const std::size_t n = lo + i;
    const std::string group = "dihedral:" + std::to_string(n);
    if (skipped(opts, group)) return std::nullopt;
    const HaarSpec spec = parse_haar_spec(group + "|1,a,a^3,b,a*b,a^2*b,a^4*b");
    const Graph x = haar_graph(spec);
    const BigInt order = automorphism_group(x).order();
    Record rec{{"key", group}, {"group", group}, {"subset", format_subset(spec.group, spec.S)}};
    rec["connected"] = is_connected(x);
    const auto valency = x.regular_degree();
    rec["valency"] = valency ? static_cast<long long>(*valency) : -1;
    rec["aut_order"] = big(order);
    rec["expected"] = std::to_string(2 * n);
    rec["pass"] = order == BigInt(2 * n) && valency == 7u && is_connected(x);
    return rec;
  });
  return rep;
}

// Generalized dihedral groups -----------------------------------------------------

ScanReport gendih_valency_check(const std::vector<std::string> &abelian_specs,
                                std::size_t max_valency, const ScanOptions &opts) {
  ScanReport rep;
  rep.kind = "gendih";
  rep.records = run_instances(abelian_specs.size(), opts, [&](std::size_t i) -> std::optional<Record> {
    const std::string group = "gendih:" + abelian_specs[i];
    if (skipped(opts, group)) return std::nullopt;
    const FiniteGroup a = parse_group(abelian_specs[i]);
    const FiniteGroup d = build_generalized_dihedral(a);
    check_sweep_order(d);
    const std::size_t n = d.order();
    const std::size_t an = a.order(); // elements of A sit at indices 0..|A|-1
    AutomorphismOptions aopts;
    aopts.max_group_order = kMaxSweepOrder;
    const WitnessContext ctx(d, aopts);

    std::size_t claim = 0, claim_fail = 0, all = 0, all_fail = 0, next = 0, next_fail = 0;
    std::optional<std::uint32_t> first_claim_fail, first_next_fail;
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
      const auto size = static_cast<std::size_t>(std::popcount(m));
      if (size > max_valency + 1) continue;
      const bool ok = ctx.exists(mask_to_bitset(n, m));
      if (size == max_valency + 1) {
        ++next;
        if (!ok && !first_next_fail) first_next_fail = m;
        next_fail += ok ? 0 : 1;
        continue;
      }
      ++all;
      all_fail += ok ? 0 : 1;
      const auto in_a = static_cast<std::size_t>(std::popcount(m & ((std::uint32_t{1} << an) - 1)));
      const bool normalized = ((m >> d.identity()) & 1u) && in_a <= 2;
      if (!normalized) continue;
      ++claim;
      if (!ok) {
        ++claim_fail;
        if (!first_claim_fail) first_claim_fail = m;
      }
    }
    Record rec{{"key", group}, {"group", group}, {"order", n}, {"max_valency", max_valency}};
    rec["normalized_subsets"] = claim;
    rec["normalized_failures"] = claim_fail;
    if (first_claim_fail) rec["first_failure"] = format_subset(d, mask_to_subset(*first_claim_fail));
    rec["subsets_up_to_valency"] = all;
    rec["failures_up_to_valency"] = all_fail;
    rec["next_valency_subsets"] = next;
    rec["next_valency_failures"] = next_fail;
    if (first_next_fail)
      rec["next_valency_example"] = format_subset(d, mask_to_subset(*first_next_fail));
    rec["pass"] = claim_fail == 0;
    return rec;
  });
  return rep;
}

// Closure under subgroups and characteristic quotients ------------------------------

ScanReport closure_check(const FiniteGroup &g, const std::string &group_name,
                         const ScanOptions &opts) {
  ScanReport rep;
  rep.kind = "closure";
  const auto top = all_haar_alg_cayley(g, false, opts);
  rep.records.push_back(Record{{"key", group_name},
                               {"kind", "group"},
                               {"order", g.order()},
                               {"all_alg_cayley", top.all}});
  if (opts.sink) opts.sink(rep.records.front().dump());
  if (!top.all) {
    rep.notes.push_back("premise fails: G has a Haar graph that is not algebraically Cayley");
    return rep;
  }

  struct Item {
    std::string key, kind;
    FiniteGroup group;
  };
  std::vector<Item> items;
  AutomorphismOptions aopts;
  aopts.max_group_order = kMaxSweepOrder;
  for (const auto &h : all_subgroups(g)) {
    items.push_back({"subgroup:{" + format_subset(g, h.members) + "}", "subgroup",
                     subgroup_as_group(g, h).first});
    if (!is_normal(g, h) || !is_characteristic(g, h, aopts)) continue;
    items.push_back({"quotient:{" + format_subset(g, h.members) + "}", "quotient",
                     quotient(g, h).group});
  }
  auto rest = run_instances(items.size(), opts, [&](std::size_t i) -> std::optional<Record> {
    if (skipped(opts, items[i].key)) return std::nullopt;
    ScanOptions inner;
    const auto r = all_haar_alg_cayley(items[i].group, false, inner);
    Record rec{{"key", items[i].key},
               {"kind", items[i].kind},
               {"order", items[i].group.order()},
               {"all_alg_cayley", r.all}};
    if (r.counterexample) rec["counterexample"] = format_subset(items[i].group, *r.counterexample);
    rec["pass"] = r.all;
    return rec;
  });
  for (auto &r : rest) rep.records.push_back(std::move(r));
  return rep;
}

} // namespace haarcay
