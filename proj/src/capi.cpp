#include "haarcay/haarcay.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "haarcay/error.hpp"
#include "haarcay/haar.hpp"
#include "haarcay/survey.hpp"

struct hc_group {
  haarcay::FiniteGroup group;
};
struct hc_haar {
  haarcay::HaarSpec spec;
};
struct hc_graph {
  haarcay::Graph graph;
};

namespace {

thread_local std::string last_error;

hc_status status_of(haarcay::ErrorCode code) {
  using haarcay::ErrorCode;
  switch (code) {
  case ErrorCode::parse_error: return HC_ERR_PARSE;
  case ErrorCode::invalid_parameter: return HC_ERR_INVALID_PARAMETER;
  case ErrorCode::invalid_presentation: return HC_ERR_INVALID_PRESENTATION;
  case ErrorCode::invalid_connection_set: return HC_ERR_INVALID_CONNECTION_SET;
  case ErrorCode::not_bipartite: return HC_ERR_NOT_BIPARTITE;
  case ErrorCode::invalid_witness: return HC_ERR_INVALID_WITNESS;
  case ErrorCode::resource_limit: return HC_ERR_RESOURCE_LIMIT;
  case ErrorCode::internal_verification_failure: return HC_ERR_INTERNAL;
  case ErrorCode::io_error: return HC_ERR_IO;
  }
  return HC_ERR_UNKNOWN;
}

template <class F> hc_status guarded(F &&f) {
  try {
    last_error.clear();
    f();
    return HC_OK;
  } catch (const haarcay::Error &e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc &) {
    last_error = "out of memory";
    return HC_ERR_RESOURCE_LIMIT;
  } catch (const std::exception &e) {
    last_error = e.what();
    return HC_ERR_UNKNOWN;
  }
}

hc_status null_argument(const char *what) {
  last_error = std::string("null argument: ") + what;
  return HC_ERR_NULL_ARGUMENT;
}

char *copy_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char **out, const std::string &s) {
  if (out) *out = copy_string(s);
}

haarcay::AutomorphismOptions wide_aut_options() {
  haarcay::AutomorphismOptions o;
  o.max_group_order = haarcay::kMaxGroupOrder;
  return o;
}

haarcay::ScanOptions scan_options(const hc_scan_options *options, hc_line_sink sink, void *user) {
  const hc_scan_options o = options ? *options : hc_scan_options_default();
  haarcay::ScanOptions s;
  s.workers = o.workers == 0 ? 1 : o.workers;
  s.timing = o.timing != 0;
  s.budget = o.budget;
  for (size_t i = 0; i < o.skip_count; ++i)
    if (o.skip_keys && o.skip_keys[i]) s.skip_keys.insert(o.skip_keys[i]);
  if (sink) s.sink = [sink, user](const std::string &line) { sink(line.c_str(), user); };
  return s;
}

void finish_scan(const haarcay::ScanReport &rep, haarcay::Record extra, char **summary,
                 char **table) {
  haarcay::Record s = rep.summary();
  for (auto it = extra.begin(); it != extra.end(); ++it) s[it.key()] = it.value();
  put(summary, s.dump());
  std::string t = rep.table();
  for (auto it = extra.begin(); it != extra.end(); ++it)
    t += it.key() + ": " + (it.value().is_string() ? it.value().get<std::string>() : it.value().dump()) + "\n";
  put(table, t);
}

} // namespace

extern "C" {

hc_check_options hc_check_options_default(void) {
  return hc_check_options{haarcay::kDefaultSearchBudget, 1};
}

hc_scan_options hc_scan_options_default(void) {
  return hc_scan_options{1, 0, haarcay::kDefaultSearchBudget, nullptr, 0};
}

const char *hc_last_error(void) { return last_error.c_str(); }

const char *hc_status_name(hc_status status) {
  switch (status) {
  case HC_OK: return "ok";
  case HC_ERR_PARSE: return "parse-error";
  case HC_ERR_INVALID_PARAMETER: return "invalid-parameter";
  case HC_ERR_INVALID_PRESENTATION: return "invalid-presentation";
  case HC_ERR_INVALID_CONNECTION_SET: return "invalid-connection-set";
  case HC_ERR_NOT_BIPARTITE: return "not-bipartite";
  case HC_ERR_INVALID_WITNESS: return "invalid-witness";
  case HC_ERR_RESOURCE_LIMIT: return "resource-limit";
  case HC_ERR_INTERNAL: return "internal-verification-failure";
  case HC_ERR_IO: return "io-error";
  case HC_ERR_NULL_ARGUMENT: return "null-argument";
  case HC_ERR_UNKNOWN: return "unknown-error";
  }
  return "unknown-error";
}

void hc_string_free(char *s) { std::free(s); }

// Groups ------------------------------------------------------------------------

hc_status hc_group_parse(const char *dsl, hc_group **out) {
  if (!dsl || !out) return null_argument("dsl/out");
  return guarded([&] { *out = new hc_group{haarcay::parse_group(dsl)}; });
}

void hc_group_free(hc_group *g) { delete g; }

size_t hc_group_order(const hc_group *g) { return g ? g->group.order() : 0; }

hc_status hc_group_element_name(const hc_group *g, size_t index, char **out) {
  if (!g || !out) return null_argument("group/out");
  return guarded([&] {
    if (index >= g->group.order())
      haarcay::fail(haarcay::ErrorCode::invalid_parameter, "element index out of range");
    *out = copy_string(g->group.name(static_cast<haarcay::Elem>(index)));
  });
}

hc_status hc_group_automorphism_count(const hc_group *g, size_t max_order, size_t *out) {
  if (!g || !out) return null_argument("group/out");
  return guarded([&] {
    haarcay::AutomorphismOptions o;
    o.max_group_order = max_order;
    *out = haarcay::automorphisms(g->group, o).size();
  });
}

// Haar graphs -------------------------------------------------------------------

hc_status hc_haar_parse(const char *spec, hc_haar **out) {
  if (!spec || !out) return null_argument("spec/out");
  return guarded([&] { *out = new hc_haar{haarcay::parse_haar_spec(spec)}; });
}

void hc_haar_free(hc_haar *h) { delete h; }

hc_status hc_haar_describe(const hc_haar *h, char **out) {
  if (!h || !out) return null_argument("haar/out");
  return guarded([&] {
    const auto &sp = h->spec;
    std::ostringstream os;
    os << "group_order: " << sp.group.order() << "\n";
    os << "S: " << haarcay::format_subset(sp.group, sp.S) << "\n";
    os << "vertices: " << sp.vertex_count() << "\n";
    os << "edges: " << sp.group.order() * sp.S.size() << "\n";
    os << "valency: " << sp.S.size() << "\n";
    *out = copy_string(os.str());
  });
}

hc_status hc_haar_graph(const hc_haar *h, hc_graph **out) {
  if (!h || !out) return null_argument("haar/out");
  return guarded([&] { *out = new hc_graph{haarcay::haar_graph(h->spec)}; });
}

hc_status hc_haar_check(const hc_haar *h, hc_property property, const hc_check_options *options,
                        hc_verdict *verdict, char **detail) {
  if (!h || !verdict) return null_argument("haar/verdict");
  const hc_check_options opts = options ? *options : hc_check_options_default();
  return guarded([&] {
    using namespace haarcay;
    const auto &sp = h->spec;
    std::ostringstream os;
    switch (property) {
    case HC_PROP_CONNECTED: {
      const auto comps = components(haar_graph(sp));
      *verdict = comps.size() <= 1 ? HC_VERDICT_YES : HC_VERDICT_NO;
      os << "property: connected\ncomponents: " << comps.size() << "\n";
      if (!sp.S.empty())
        os << "generation_criterion: " << (connectivity_criterion(sp) ? "true" : "false") << "\n";
      break;
    }
    case HC_PROP_VERTEX_TRANSITIVE: {
      const PermGroup aut = automorphism_group(haar_graph(sp));
      *verdict = aut.is_transitive() ? HC_VERDICT_YES : HC_VERDICT_NO;
      os << "property: vertex-transitive\naut_order: " << aut.order().str()
         << "\norbits: " << aut.orbits().size() << "\n";
      break;
    }
    case HC_PROP_CAYLEY: {
      const auto r = is_cayley(sp, opts.budget, opts.seed_gr != 0);
      *verdict = r.outcome == SearchOutcome::found  ? HC_VERDICT_YES
                 : r.outcome == SearchOutcome::none ? HC_VERDICT_NO
                                                    : HC_VERDICT_UNKNOWN;
      os << "property: cayley\nexpansions: " << r.expansions << "\n";
      if (r.regular) os << "regular_subgroup_order: " << r.regular->order().str() << "\n";
      break;
    }
    case HC_PROP_ALG_CAYLEY: {
      const auto w = alg_cayley_witness(sp, wide_aut_options());
      *verdict = w ? HC_VERDICT_YES : HC_VERDICT_NO;
      os << "property: alg-cayley\n";
      if (w) os << "g: " << sp.group.name(w->g) << "\n";
      break;
    }
    default:
      fail(ErrorCode::invalid_parameter, "unknown property");
    }
    os << "verdict: "
       << (*verdict == HC_VERDICT_YES ? "yes" : *verdict == HC_VERDICT_NO ? "no" : "unknown")
       << "\n";
    put(detail, os.str());
  });
}

hc_status hc_haar_witness(const hc_haar *h, int *found, char **report) {
  if (!h || !found) return null_argument("haar/found");
  return guarded([&] {
    using namespace haarcay;
    const auto &sp = h->spec;
    const auto w = alg_cayley_witness(sp, wide_aut_options());
    std::ostringstream os;
    *found = w ? 1 : 0;
    if (!w) {
      os << "witness: NONE\n";
    } else {
      const auto sigma = build_sigma(sp, *w);
      os << "witness: found\n";
      os << "g: " << sp.group.name(w->g) << "\n";
      os << "alpha:";
      for (Elem x = 0; x < sp.group.order(); ++x)
        os << ' ' << sp.group.name(x) << "->" << sp.group.name(w->alpha(x));
      os << "\n";
      os << "sigma: " << sigma.to_cycles() << "\n";
      os << "sigma_images: " << sigma.to_image_list() << "\n";
    }
    put(report, os.str());
  });
}

hc_status hc_cayley_parse(const char *spec, hc_graph **out) {
  if (!spec || !out) return null_argument("spec/out");
  return guarded([&] {
    const auto sp = haarcay::parse_haar_spec(spec);
    *out = new hc_graph{haarcay::cayley_graph(sp.group, sp.S)};
  });
}

// Graphs --------------------------------------------------------------------------

hc_status hc_graph_from_graph6(const char *text, hc_graph **out) {
  if (!text || !out) return null_argument("text/out");
  return guarded([&] { *out = new hc_graph{haarcay::from_graph6(text)}; });
}

void hc_graph_free(hc_graph *g) { delete g; }

size_t hc_graph_vertex_count(const hc_graph *g) { return g ? g->graph.vertex_count() : 0; }
size_t hc_graph_edge_count(const hc_graph *g) { return g ? g->graph.edge_count() : 0; }

hc_status hc_graph_to_graph6(const hc_graph *g, char **out) {
  if (!g || !out) return null_argument("graph/out");
  return guarded([&] { *out = copy_string(haarcay::to_graph6(g->graph)); });
}

hc_status hc_graph_to_dot(const hc_graph *g, char **out) {
  if (!g || !out) return null_argument("graph/out");
  return guarded([&] { *out = copy_string(haarcay::to_dot(g->graph)); });
}

hc_status hc_graph_automorphism_report(const hc_graph *g, char **out) {
  if (!g || !out) return null_argument("graph/out");
  return guarded([&] {
    const auto aut = haarcay::automorphism_group(g->graph);
    std::ostringstream os;
    os << "vertices: " << g->graph.vertex_count() << "\n";
    os << "aut_order: " << aut.order().str() << "\n";
    for (const auto &orbit : aut.orbits()) {
      os << "orbit:";
      for (auto v : orbit) os << ' ' << v;
      os << "\n";
    }
    *out = copy_string(os.str());
  });
}

// Scans -------------------------------------------------------------------------

hc_status hc_scan_all_subsets(const char *group_dsl, int dedup, const hc_scan_options *options,
                              hc_line_sink sink, void *user, char **summary, char **table) {
  if (!group_dsl) return null_argument("group");
  return guarded([&] {
    using namespace haarcay;
    const FiniteGroup g = parse_group(group_dsl);
    const auto opts = scan_options(options, sink, user);
    const auto rep = scan_all_subsets(g, group_dsl, opts);
    const auto all = all_haar_alg_cayley(g, dedup != 0, opts);
    Record extra;
    extra["all_alg_cayley"] = all.all;
    extra["failures"] = all.failures;
    if (all.counterexample) extra["counterexample"] = format_subset(g, *all.counterexample);
    if (dedup) {
      extra["dedup_classes"] = all.classes;
      extra["dedup_invariance_confirmed"] = all.invariance_confirmed;
    }
    finish_scan(rep, extra, summary, table);
  });
}

hc_status hc_scan_dihedral_pattern(size_t lo, size_t hi, const hc_scan_options *options,
                                   hc_line_sink sink, void *user, char **summary, char **table) {
  return guarded([&] {
    const auto rep = haarcay::dihedral_pattern_scan(lo, hi, scan_options(options, sink, user));
    finish_scan(rep, {}, summary, table);
  });
}

hc_status hc_scan_prop36(size_t lo, size_t hi, const hc_scan_options *options, hc_line_sink sink,
                         void *user, char **summary, char **table) {
  return guarded([&] {
    const auto rep = haarcay::prop36_check(lo, hi, scan_options(options, sink, user));
    finish_scan(rep, {}, summary, table);
  });
}

hc_status hc_scan_gendih(const char *const *abelian_specs, size_t count, size_t max_valency,
                         const hc_scan_options *options, hc_line_sink sink, void *user,
                         char **summary, char **table) {
  if (!abelian_specs && count) return null_argument("specs");
  return guarded([&] {
    std::vector<std::string> specs;
    for (size_t i = 0; i < count; ++i) {
      if (!abelian_specs[i])
        haarcay::fail(haarcay::ErrorCode::invalid_parameter, "null group spec");
      specs.emplace_back(abelian_specs[i]);
    }
    const auto rep =
        haarcay::gendih_valency_check(specs, max_valency, scan_options(options, sink, user));
    finish_scan(rep, {}, summary, table);
  });
}

hc_status hc_scan_closure(const char *group_dsl, const hc_scan_options *options,
                          hc_line_sink sink, void *user, char **summary, char **table) {
  if (!group_dsl) return null_argument("group");
  return guarded([&] {
    const auto g = haarcay::parse_group(group_dsl);
    const auto rep = haarcay::closure_check(g, group_dsl, scan_options(options, sink, user));
    finish_scan(rep, {}, summary, table);
  });
}

} // extern "C"
