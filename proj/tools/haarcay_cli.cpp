// haarcay command-line front end. Talks to the library through the C API only.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "haarcay/haarcay.h"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitDataErr = 65;
constexpr int kExitNoInput = 66;
constexpr int kExitUnavailable = 69;
constexpr int kExitSoftware = 70;

struct Failure {
  hc_status status;
};

int exit_code(hc_status s) {
  switch (s) {
  case HC_OK: return 0;
  case HC_ERR_PARSE: return kExitUsage;
  case HC_ERR_RESOURCE_LIMIT: return kExitUnavailable;
  case HC_ERR_IO: return kExitNoInput;
  case HC_ERR_INTERNAL:
  case HC_ERR_UNKNOWN: return kExitSoftware;
  default: return kExitDataErr;
  }
}

void check(hc_status s) {
  if (s != HC_OK) throw Failure{s};
}

struct CString {
  char *p = nullptr;
  ~CString() { hc_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct GroupPtr {
  hc_group *p = nullptr;
  ~GroupPtr() { hc_group_free(p); }
};
struct HaarPtr {
  hc_haar *p = nullptr;
  ~HaarPtr() { hc_haar_free(p); }
};
struct GraphPtr {
  hc_graph *p = nullptr;
  ~GraphPtr() { hc_graph_free(p); }
};

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    throw Failure{HC_ERR_IO};
  }
  out << text;
}

std::uint64_t default_budget() {
  hc_check_options o = hc_check_options_default();
  if (const char *env = std::getenv("HAARCAY_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception &) {
      std::cerr << "warning: ignoring malformed HAARCAY_BUDGET=" << env << "\n";
    }
  }
  return o.budget;
}

void emit_graph(hc_graph *g, const std::string &graph6_path, const std::string &dot_path) {
  CString g6;
  check(hc_graph_to_graph6(g, &g6.p));
  if (graph6_path.empty())
    std::cout << "graph6: " << g6.str() << "\n";
  else
    write_file(graph6_path, g6.str() + "\n");
  if (!dot_path.empty()) {
    CString dot;
    check(hc_graph_to_dot(g, &dot.p));
    write_file(dot_path, dot.str());
  }
}

// Scan plumbing -------------------------------------------------------------------

struct ScanArgs {
  std::size_t workers = 1;
  bool timing = false;
  std::string out;
  std::string summary;
  bool resume = false;
};

struct ScanSink {
  std::ostream *os;
  static void line(const char *text, void *user) {
    auto *self = static_cast<ScanSink *>(user);
    *self->os << text << "\n";
    self->os->flush();
  }
};

std::vector<std::string> completed_keys(const std::string &path) {
  std::vector<std::string> keys;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line, nullptr, false);
    if (!j.is_discarded() && j.is_object() && j.contains("key") && !j.contains("error"))
      keys.push_back(j["key"].get<std::string>());
  }
  return keys;
}

template <class Run> int run_scan(const ScanArgs &args, Run &&run) {
  std::vector<std::string> keys;
  if (args.resume && !args.out.empty()) keys = completed_keys(args.out);
  std::vector<const char *> key_ptrs;
  for (const auto &k : keys) key_ptrs.push_back(k.c_str());

  hc_scan_options opts = hc_scan_options_default();
  opts.workers = args.workers;
  opts.timing = args.timing ? 1 : 0;
  opts.budget = default_budget();
  opts.skip_keys = key_ptrs.data();
  opts.skip_count = key_ptrs.size();

  std::ofstream file;
  ScanSink sink{&std::cout};
  if (!args.out.empty()) {
    file.open(args.out, args.resume ? std::ios::app : std::ios::trunc);
    if (!file) {
      std::cerr << "error: cannot write " << args.out << "\n";
      return kExitNoInput;
    }
    sink.os = &file;
  }
  CString summary, table;
  check(run(opts, &ScanSink::line, &sink, &summary.p, &table.p));
  if (!args.resume && !keys.empty()) std::cerr << "note: skipped " << keys.size() << " keys\n";
  if (!args.summary.empty())
    write_file(args.summary, table.str());
  std::cerr << table.str();
  std::cout << summary.str() << "\n";
  return kExitHolds;
}

void add_scan_flags(CLI::App *sub, ScanArgs &args) {
  sub->add_option("--workers", args.workers, "parallel workers")->check(CLI::PositiveNumber);
  sub->add_flag("--timing", args.timing, "add wall time to each record");
  sub->add_option("--out", args.out, "write records to this file instead of stdout");
  sub->add_option("--summary", args.summary, "write the summary table to this file");
  sub->add_flag("--resume", args.resume, "skip keys already present in --out and append");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Haar graphs H(G,S): constructions, Cayley checks and scans", "haarcay"};
  app.require_subcommand(1);

  // group
  std::string group_dsl;
  auto *group_cmd = app.add_subcommand("group", "print order, element names and |Aut G|");
  group_cmd->add_option("dsl", group_dsl, "group, e.g. dihedral:6")->required();

  // haar / cayley
  std::string spec, graph6_out, dot_out;
  auto *haar_cmd = app.add_subcommand("haar", "build H(G,S)");
  haar_cmd->add_option("spec", spec, "<group>|<elements>")->required();
  haar_cmd->add_option("--graph6", graph6_out, "write graph6 to this file");
  haar_cmd->add_option("--dot", dot_out, "write DOT to this file");
  auto *cayley_cmd = app.add_subcommand("cayley", "build cay(G,S)");
  cayley_cmd->add_option("spec", spec, "<group>|<elements>")->required();
  cayley_cmd->add_option("--graph6", graph6_out, "write graph6 to this file");
  cayley_cmd->add_option("--dot", dot_out, "write DOT to this file");

  // check
  bool p_connected = false, p_vt = false, p_cayley = false, p_alg = false, seed_gr = true;
  std::uint64_t budget = 0;
  auto *check_cmd = app.add_subcommand("check", "decide one property; exit 0 holds, 1 fails, 2 unknown");
  check_cmd->add_option("spec", spec, "<group>|<elements>")->required();
  auto *props = check_cmd->add_option_group("property");
  props->add_flag("--connected", p_connected);
  props->add_flag("--vt", p_vt);
  props->add_flag("--cayley", p_cayley);
  props->add_flag("--alg-cayley", p_alg);
  props->require_option(1);
  check_cmd->add_flag("--seed-GR,!--no-seed-GR", seed_gr, "seed the regular-subgroup search with G_R");
  auto *budget_opt = check_cmd->add_option("--budget", budget, "search node budget");

  // witness
  auto *witness_cmd = app.add_subcommand("witness", "print (g, alpha) and sigma, or NONE");
  witness_cmd->add_option("spec", spec, "<group>|<elements>")->required();

  // aut
  std::string graph_file;
  auto *aut_cmd = app.add_subcommand("aut", "print |Aut X| and the orbit partition");
  aut_cmd->add_option("file", graph_file, "graph6 file")->required();

  // scan
  auto *scan_cmd = app.add_subcommand("scan", "run a survey driver");
  scan_cmd->require_subcommand(1);
  ScanArgs scan_args;
  bool dedup = false, long_tail = false;
  std::size_t lo = 0, hi = 0, max_valency = 5;
  std::vector<std::string> abelian = {"cyclic:2", "cyclic:3", "cyclic:4",
                                      "product:cyclic:2,cyclic:2", "cyclic:5", "cyclic:6"};
  auto *s_all = scan_cmd->add_subcommand("all-subsets", "every S in G");
  s_all->add_option("group", group_dsl)->required();
  s_all->add_flag("--dedup", dedup, "use translate classes once invariance is confirmed");
  add_scan_flags(s_all, scan_args);
  auto *s_dih = scan_cmd->add_subcommand("dihedral-pattern", "H(D_n,{1,a,a^3,b,ab,a^3b})");
  s_dih->add_option("--lo", lo)->default_val(6);
  s_dih->add_option("--hi", hi)->default_val(30);
  s_dih->add_flag("--long", long_tail, "extend the range to n = 100");
  add_scan_flags(s_dih, scan_args);
  auto *s_p36 = scan_cmd->add_subcommand("prop36", "|Aut H(D_n,{1,a,a^3,b,ab,a^2b,a^4b})| vs 2n");
  s_p36->add_option("--lo", lo)->default_val(8);
  s_p36->add_option("--hi", hi)->default_val(24);
  add_scan_flags(s_p36, scan_args);
  auto *s_gd = scan_cmd->add_subcommand("gendih", "valency <= 5 subsets of D(A)");
  s_gd->add_option("--groups", abelian, "abelian groups A")->delimiter(';');
  s_gd->add_option("--max-valency", max_valency)->default_val(5);
  add_scan_flags(s_gd, scan_args);
  auto *s_cl = scan_cmd->add_subcommand("closure", "subgroup/quotient closure");
  s_cl->add_option("group", group_dsl)->required();
  add_scan_flags(s_cl, scan_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*group_cmd) {
      GroupPtr g;
      check(hc_group_parse(group_dsl.c_str(), &g.p));
      const auto n = hc_group_order(g.p);
      std::cout << "order: " << n << "\n";
      std::cout << "elements:";
      for (std::size_t i = 0; i < n; ++i) {
        CString name;
        check(hc_group_element_name(g.p, i, &name.p));
        std::cout << ' ' << name.str();
      }
      std::cout << "\n";
      std::size_t aut = 0;
      check(hc_group_automorphism_count(g.p, 1024, &aut));
      std::cout << "aut_order: " << aut << "\n";
      return kExitHolds;
    }
    if (*haar_cmd) {
      HaarPtr h;
      check(hc_haar_parse(spec.c_str(), &h.p));
      CString d;
      check(hc_haar_describe(h.p, &d.p));
      std::cout << d.str();
      GraphPtr g;
      check(hc_haar_graph(h.p, &g.p));
      emit_graph(g.p, graph6_out, dot_out);
      return kExitHolds;
    }
    if (*cayley_cmd) {
      GraphPtr g;
      check(hc_cayley_parse(spec.c_str(), &g.p));
      std::cout << "vertices: " << hc_graph_vertex_count(g.p) << "\n";
      std::cout << "edges: " << hc_graph_edge_count(g.p) << "\n";
      emit_graph(g.p, graph6_out, dot_out);
      return kExitHolds;
    }
    if (*check_cmd) {
      HaarPtr h;
      check(hc_haar_parse(spec.c_str(), &h.p));
      hc_check_options opts = hc_check_options_default();
      opts.budget = budget_opt->count() ? budget : default_budget();
      opts.seed_gr = seed_gr ? 1 : 0;
      const hc_property prop = p_connected ? HC_PROP_CONNECTED
                               : p_vt      ? HC_PROP_VERTEX_TRANSITIVE
                               : p_cayley  ? HC_PROP_CAYLEY
                                           : HC_PROP_ALG_CAYLEY;
      hc_verdict verdict = HC_VERDICT_UNKNOWN;
      CString detail;
      check(hc_haar_check(h.p, prop, &opts, &verdict, &detail.p));
      std::cout << detail.str();
      return verdict == HC_VERDICT_YES ? kExitHolds
             : verdict == HC_VERDICT_NO ? kExitFails
                                        : kExitUnknown;
    }
    if (*witness_cmd) {
      HaarPtr h;
      check(hc_haar_parse(spec.c_str(), &h.p));
      int found = 0;
      CString report;
      check(hc_haar_witness(h.p, &found, &report.p));
      std::cout << report.str();
      return found ? kExitHolds : kExitFails;
    }
    if (*aut_cmd) {
      std::ifstream in(graph_file);
      if (!in) {
        std::cerr << "error: cannot read " << graph_file << "\n";
        return kExitNoInput;
      }
      std::string line;
      std::getline(in, line);
      GraphPtr g;
      check(hc_graph_from_graph6(line.c_str(), &g.p));
      CString report;
      check(hc_graph_automorphism_report(g.p, &report.p));
      std::cout << report.str();
      return kExitHolds;
    }
    if (*s_all)
      return run_scan(scan_args, [&](const hc_scan_options &o, hc_line_sink sink, void *user,
                                     char **summary, char **table) {
        return hc_scan_all_subsets(group_dsl.c_str(), dedup ? 1 : 0, &o, sink, user, summary, table);
      });
    if (*s_dih) {
      if (long_tail) hi = 100;
      return run_scan(scan_args, [&](const hc_scan_options &o, hc_line_sink sink, void *user,
                                     char **summary, char **table) {
        return hc_scan_dihedral_pattern(lo, hi, &o, sink, user, summary, table);
      });
    }
    if (*s_p36)
      return run_scan(scan_args, [&](const hc_scan_options &o, hc_line_sink sink, void *user,
                                     char **summary, char **table) {
        return hc_scan_prop36(lo, hi, &o, sink, user, summary, table);
      });
    if (*s_gd) {
      std::vector<const char *> ptrs;
      for (const auto &a : abelian) ptrs.push_back(a.c_str());
      return run_scan(scan_args, [&](const hc_scan_options &o, hc_line_sink sink, void *user,
                                     char **summary, char **table) {
        return hc_scan_gendih(ptrs.data(), ptrs.size(), max_valency, &o, sink, user, summary, table);
      });
    }
    if (*s_cl)
      return run_scan(scan_args, [&](const hc_scan_options &o, hc_line_sink sink, void *user,
                                     char **summary, char **table) {
        return hc_scan_closure(group_dsl.c_str(), &o, sink, user, summary, table);
      });
  } catch (const Failure &f) {
    std::cerr << "error: " << hc_status_name(f.status) << ": " << hc_last_error() << "\n";
    if (f.status == HC_ERR_PARSE) std::cerr << app.help();
    return exit_code(f.status);
  }
  return kExitUsage;
}
