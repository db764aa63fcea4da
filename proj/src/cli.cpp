#include "sumfree/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "sumfree/abelian.hpp"
#include "sumfree/cache.hpp"
#include "sumfree/constructions.hpp"
#include "sumfree/enumerate.hpp"
#include "sumfree/graph.hpp"
#include "sumfree/linkgraph.hpp"
#include "sumfree/miscount.hpp"
#include "sumfree/verify.hpp"

namespace sumfree::cli {
namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

enum class Format { json, csv, table };

struct Config {
  int max_n = 40;
  std::size_t enum_cap = 10'000'000;
  int workers = 1;
  std::optional<std::string> cache_dir;
  bool no_cache = false;
  std::uint64_t seed = 1;
  Format output = Format::json;
  bool output_given = false;
  bool timing = false;
};

// Thrown for exit code 1 after output has been written.
struct CheckFailed {};

double ms_since(Clock::time_point t) { return std::chrono::duration<double, std::milli>(Clock::now() - t).count(); }

void print_table(std::ostream& out, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      out << std::setw(static_cast<int>(width[c])) << r[c];
      out << (c + 1 == r.size() ? "\n" : "  ");
    }
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void print_csv(std::ostream& out, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) out << r[c] << (c + 1 == r.size() ? "\n" : ",");
  };
  line(header);
  for (const auto& r : rows) line(r);
}

std::string cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Rows of flat objects, all sharing `columns`.
void emit_rows(std::ostream& out, Format f, const std::vector<std::string>& columns, const std::vector<json>& rows) {
  if (f == Format::json) {
    for (const auto& r : rows) out << r.dump() << '\n';
    return;
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    std::vector<std::string> line;
    for (const auto& c : columns) line.push_back(r.contains(c) ? cell(r.at(c)) : "");
    cells.push_back(std::move(line));
  }
  if (f == Format::csv)
    print_csv(out, columns, cells);
  else
    print_table(out, columns, cells);
}

ResultCache make_cache(const Config& cfg, std::ostream& err) {
  if (cfg.no_cache) return {};
  return ResultCache(ResultCache::default_dir(cfg.cache_dir), &err);
}

// Cached JSON result of `compute`, bypassed when timing is requested.
template <class Fn>
json cached(const ResultCache& cache, const Config& cfg, const std::string& op, const json& params, Fn&& compute) {
  if (!cfg.timing)
    if (auto hit = cache.lookup(op, params)) return *hit;
  json value = compute();
  if (!cfg.timing) cache.store(op, params, value);
  return value;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw PreconditionError("bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

json graph_json(const Graph& g) {
  json edges = json::array(), loops = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.label(u), g.label(v)});
  for (int v = 0; v < g.size(); ++v)
    if (g.has_loop(v)) loops.push_back(g.label(v));
  return {{"vertices", g.labels()}, {"edges", edges}, {"loops", loops}};
}

json sets_json(const Graph& g, const std::vector<std::vector<int>>& sets) {
  json out = json::array();
  for (const auto& s : sets) {
    json one = json::array();
    for (int v : s) one.push_back(g.label(v));
    out.push_back(one);
  }
  return out;
}

// ---- subcommands ----

struct EnumerateArgs {
  int n = 0;
  std::optional<int> to;
  bool oracle = false;
  bool sets = false;
};

void cmd_enumerate(const EnumerateArgs& a, const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto cache = make_cache(cfg, err);
  const int last = a.to.value_or(a.n);
  if (last < a.n) throw PreconditionError("--to must be at least --n");
  EnumOptions eo;
  eo.workers = cfg.workers;
  eo.max_n = cfg.max_n;
  eo.cap = cfg.enum_cap;
  const std::string method = a.oracle ? "oracle" : "branch";
  std::vector<json> rows;
  for (int n = a.n; n <= last; ++n) {
    const auto start = Clock::now();
    json row = cached(cache, cfg, "enumerate", {{"n", n}, {"method", method}}, [&] {
      const EnumRecord r = enumerate_record(n, method, eo);
      return json{{"n", n},
                  {"residue_mod_4", n % 4},
                  {"f", r.f},
                  {"f_max", r.f_max},
                  {"ratio_fmax_over_2_pow_n_quarter", quarter_ratio(r.f_max, n).to_string()},
                  {"method", method}};
    });
    if (a.sets) {
      json list = json::array();
      for (const auto& s : enumerate_maximal_sum_free(n, eo)) list.push_back(s.members());
      row["maximal_sets"] = list;
    }
    if (cfg.timing) row["elapsed_ms"] = ms_since(start);
    rows.push_back(std::move(row));
  }
  emit_rows(out, cfg.output,
            {"n", "residue_mod_4", "f", "f_max", "ratio_fmax_over_2_pow_n_quarter", "method", "elapsed_ms"}, rows);
}

struct MisArgs {
  std::string graph_file;
  std::string family;
  int size = 0;
  bool sets = false;
  bool bounds = false;
};

Graph family_graph(const std::string& name, int k) {
  if (name == "path") return path(k);
  if (name == "cycle") return cycle(k);
  if (name == "complete") return complete(k);
  if (name == "matching") return matching(k);
  if (name == "prism") return cartesian_product(complete(3), path(2));
  if (name == "p3s") {
    Graph g;
    for (int i = 0; i < k; ++i) g = disjoint_union(g, path(3));
    return g;
  }
  throw PreconditionError("unknown graph family '" + name + "' (path, cycle, complete, matching, prism, p3s)");
}

void cmd_mis(const MisArgs& a, const Config& cfg, std::ostream& out) {
  Graph g;
  if (!a.graph_file.empty()) {
    std::ifstream in(a.graph_file);
    if (!in) throw PreconditionError("cannot read " + a.graph_file);
    std::stringstream ss;
    ss << in.rdbuf();
    g = from_text(ss.str());
  } else if (!a.family.empty()) {
    g = family_graph(a.family, a.size);
  } else {
    throw PreconditionError("mis needs --graph or --family");
  }
  MisOptions mo;
  mo.enum_cap = cfg.enum_cap;
  const auto start = Clock::now();
  const MisResult r = solve_mis(g, a.sets, mo);
  json j = {{"vertices", g.size()}, {"loops", g.loop_count()}, {"count", r.count}};
  if (r.sets) j["sets"] = sets_json(g, *r.sets);
  bool failed = false;
  if (a.bounds) {
    const BoundReport rep = bound_certificates(g, mo);
    json list = json::array();
    for (const auto& c : rep.checks)
      list.push_back({{"name", c.name}, {"applicable", c.applicable}, {"bound_log2", c.bound_log2}, {"holds", c.holds}});
    j["bounds"] = list;
    failed = !rep.all_hold();
  }
  if (cfg.timing) j["elapsed_ms"] = ms_since(start);
  if (cfg.output == Format::json) {
    out << j.dump() << '\n';
  } else {
    std::vector<json> rows{{{"vertices", g.size()}, {"loops", g.loop_count()}, {"count", r.count}}};
    emit_rows(out, cfg.output, {"vertices", "loops", "count"}, rows);
    if (r.sets)
      for (const auto& s : j["sets"]) out << s.dump() << '\n';
    if (a.bounds) {
      std::vector<json> brows(j["bounds"].begin(), j["bounds"].end());
      emit_rows(out, cfg.output, {"name", "applicable", "bound_log2", "holds"}, brows);
    }
  }
  if (failed) throw CheckFailed{};
}

struct LinkArgs {
  int n = 0;
  std::optional<int> m;
  std::string s;
  std::optional<int> even;
  std::optional<int> even2;
  bool refined = false;
};

void cmd_link(const LinkArgs& a, const Config& cfg, std::ostream& out) {
  Graph g;
  json j;
  if (a.even) {
    g = a.even2 ? link_pair_even(a.n, *a.even, *a.even2) : link_single_even(a.n, *a.even);
    j = {{"n", a.n}, {"even", *a.even}};
    if (a.even2) j["even2"] = *a.even2;
  } else if (a.m) {
    const auto s = parse_int_list(a.s);
    g = link_family({a.n, *a.m, s});
    j = {{"n", a.n}, {"m", *a.m}, {"s", s}};
    if (a.refined) {
      const RefinedCounts rc = refined_counts(a.n, *a.m, s);
      j["msf"] = rc.msf;
      j["ratio_c"] = rc.ratio_c.to_string();
    }
  } else {
    throw PreconditionError("link needs --m or --even");
  }
  MisOptions mo;
  mo.enum_cap = cfg.enum_cap;
  j.update(graph_json(g));
  j["mis"] = count_mis(g, mo);
  if (cfg.output == Format::json)
    out << j.dump() << '\n';
  else if (cfg.output == Format::table)
    out << to_text(g) << "mis " << j["mis"].dump() << '\n';
  else
    emit_rows(out, Format::csv, {"u", "v"}, [&] {
      std::vector<json> rows;
      for (const auto& e : j["edges"]) rows.push_back({{"u", e[0]}, {"v", e[1]}});
      for (const auto& l : j["loops"]) rows.push_back({{"u", l}, {"v", l}});
      return rows;
    }());
}

struct ConstructArgs {
  std::string family;
  std::optional<int> n;
  std::string group;
  bool summary = false;
};

void cmd_construct(const ConstructArgs& a, const Config& cfg, std::ostream& out) {
  if (a.family == "zn_prism") {
    if (!a.n) throw PreconditionError("zn_prism needs --n");
    const PrismCensus c = zn_prism_census(*a.n);
    json j = {{"family", "zn_prism"}, {"n", c.n},   {"k", c.k}, {"window_size", c.window_size}, {"components", c.components},
              {"prisms", c.prisms},   {"other_sizes", c.other_sizes}, {"mis", c.mis}};
    emit_rows(out, cfg.output, {"family", "n", "k", "window_size", "components", "prisms", "mis"}, {j});
    return;
  }
  Family f;
  auto need_group = [&] {
    if (a.group.empty()) throw PreconditionError(a.family + " needs --group");
    return AbelianGroup::parse(a.group);
  };
  auto need_n = [&] {
    if (!a.n) throw PreconditionError(a.family + " needs --n");
    return *a.n;
  };
  if (a.family == "ce_odd") {
    f = ce_odd_family(need_n());
  } else if (a.family == "interval") {
    f = interval_family(need_n());
  } else if (a.family == "z2k") {
    if (a.n) {
      f = z2k_family(*a.n);
    } else {
      const auto g = need_group();
      if (!std::all_of(g.factors().begin(), g.factors().end(), [](int x) { return x == 2; }))
        throw PreconditionError("z2k needs an elementary abelian 2-group");
      f = z2k_family(static_cast<int>(g.factors().size()));
    }
  } else if (a.family == "index3") {
    f = index3_family(need_group());
  } else if (a.family == "exponent7") {
    f = exponent7_family(need_group());
  } else {
    throw PreconditionError("unknown family '" + a.family + "' (ce_odd, interval, z2k, index3, exponent7, zn_prism)");
  }
  const FamilyCheck check = verify_family(f, cfg.workers);
  json head = {{"family", f.name},
               {"ground", f.ground},
               {"claimed_size", f.claimed_size},
               {"members", f.members.size()},
               {"window", f.window},
               {"verified", check.ok()}};
  if (check.closures_distinct) head["closures_distinct"] = *check.closures_distinct;
  if (!check.failures.empty()) head["failures"] = check.failures;
  if (cfg.output == Format::json) {
    out << head.dump() << '\n';
    if (!a.summary)
      for (const auto& m : f.members) out << json{{"member", m}}.dump() << '\n';
  } else {
    emit_rows(out, cfg.output, {"family", "ground", "claimed_size", "members", "verified"}, {head});
    if (!a.summary) {
      std::vector<json> rows;
      for (std::size_t i = 0; i < f.members.size(); ++i) {
        std::string joined;
        for (std::size_t k = 0; k < f.members[i].size(); ++k) joined += (k ? " " : "") + std::to_string(f.members[i][k]);
        rows.push_back({{"index", i}, {"member", joined}});
      }
      emit_rows(out, cfg.output, {"index", "member"}, rows);
    }
  }
  if (!check.ok()) throw CheckFailed{};
}

struct GroupArgs {
  std::string desc;
  std::string op = "mu";
};

void cmd_group(const GroupArgs& a, const Config& cfg, std::ostream& out, std::ostream& err) {
  const AbelianGroup g = AbelianGroup::parse(a.desc);
  const auto cache = make_cache(cfg, err);
  const auto start = Clock::now();
  json j = cached(cache, cfg, "group", {{"group", g.to_string()}, {"op", a.op}}, [&] {
    json v = {{"group", g.to_string()}, {"order", g.order()}, {"op", a.op}};
    const int limit = std::min(cfg.max_n, 64);
    if (a.op == "mu")
      v["value"] = mu(g, limit);
    else if (a.op == "fmax")
      v["value"] = f_max_group(g, cfg.workers, limit);
    else if (a.op == "f")
      v["value"] = f_group(g, cfg.workers, limit);
    else
      throw PreconditionError("unknown --op '" + a.op + "' (mu, fmax, f)");
    return v;
  });
  if (cfg.timing) j["elapsed_ms"] = ms_since(start);
  emit_rows(out, cfg.output, {"group", "order", "op", "value", "elapsed_ms"}, {j});
}

struct VerifyArgs {
  std::vector<std::string> checks;
  bool all = false;
  bool list = false;
};

void cmd_verify(const VerifyArgs& a, const Config& cfg, std::ostream& out) {
  if (a.list) {
    std::vector<json> rows;
    for (const auto& s : check_registry()) rows.push_back({{"name", s.name}, {"description", s.description}});
    emit_rows(out, cfg.output, {"name", "description"}, rows);
    return;
  }
  std::vector<std::string> names = a.checks;
  if (a.all)
    for (const auto& s : check_registry()) names.push_back(s.name);
  if (names.empty()) throw PreconditionError("verify needs --check <name>, --all or --list");
  VerifyConfig vc;
  vc.seed = cfg.seed;
  vc.workers = cfg.workers;
  const auto reports = run_checks(names, vc);
  std::vector<json> rows;
  bool failed = false;
  for (const auto& r : reports) {
    json j = {{"name", r.name},
              {"passed", r.passed()},
              {"instances", r.instances_checked},
              {"failure_count", r.failure_count},
              {"failures", r.failures},
              {"notes", r.notes}};
    if (cfg.timing) j["elapsed_ms"] = r.elapsed_ms;
    failed = failed || !r.passed();
    rows.push_back(std::move(j));
  }
  if (cfg.output == Format::json) {
    emit_rows(out, cfg.output, {}, rows);
  } else {
    for (auto& j : rows) j["status"] = j["passed"].get<bool>() ? "PASS" : "FAIL";
    emit_rows(out, cfg.output, {"status", "name", "instances", "failure_count", "elapsed_ms"}, rows);
    if (cfg.output == Format::table)
      for (const auto& r : reports)
        for (const auto& w : r.failures) out << "  " << r.name << ": " << w << '\n';
  }
  if (failed) throw CheckFailed{};
}

struct ConstantsArgs {
  bool dprime = false;
  bool sandwich = false;
  int n_min = 8;
  int n_max = 28;
};

void cmd_constants(const ConstantsArgs& a, Config cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.output_given) cfg.output = Format::csv;
  const auto cache = make_cache(cfg, err);
  if (a.dprime == a.sandwich) throw PreconditionError("constants needs exactly one of --dprime, --sandwich");
  std::vector<json> rows;
  if (a.dprime) {
    for (int n = std::max(a.n_min, 2); n <= a.n_max; ++n)
      rows.push_back(cached(cache, cfg, "dprime", {{"n", n}}, [&] {
        const DprimeSum d = dprime_sum(n);
        json j = {{"n", n},
                  {"residue_mod_4", n % 4},
                  {"full", d.full},
                  {"restricted", d.restricted},
                  {"closed_terms", d.closed_terms},
                  {"ratio_full", quarter_ratio(d.full, n).to_string()},
                  {"ratio_restricted", quarter_ratio(d.restricted, n).to_string()}};
        if (d.geometric) j["geometric"] = *d.geometric;
        return j;
      }));
    emit_rows(out, cfg.output,
              {"n", "residue_mod_4", "full", "restricted", "closed_terms", "geometric", "ratio_full", "ratio_restricted"}, rows);
  } else {
    for (int n = std::max(a.n_min, 2); n <= a.n_max; ++n)
      rows.push_back(cached(cache, cfg, "sandwich", {{"n", n}}, [&] {
        const SingleEvenCensus c = single_even_census(n, cfg.workers, std::max(cfg.max_n, 30));
        return json{{"n", n}, {"lower", c.lower}, {"f_prime_max", c.f_prime_max}, {"upper", c.upper}, {"pair_sum", c.pair_sum}};
      }));
    emit_rows(out, cfg.output, {"n", "lower", "f_prime_max", "upper", "pair_sum"}, rows);
  }
}

struct SumsetArgs {
  int d = 0;
  int s = 0;
  double r = 0;
  double delta = 0.1;
};

void cmd_sumset(const SumsetArgs& a, const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto cache = make_cache(cfg, err);
  json j = cached(cache, cfg, "sumset-census", {{"d", a.d}, {"s", a.s}, {"r", a.r}, {"delta", a.delta}}, [&] {
    const SumsetCensus c = small_sumset_count(a.d, a.s, a.r, a.delta, cfg.workers);
    return json{{"d", c.d},         {"s", c.s},         {"r", c.r},
                {"total", c.total}, {"count", c.count}, {"delta", c.delta},
                {"green_morris_log2", c.green_morris_log2}};
  });
  emit_rows(out, cfg.output, {"d", "s", "r", "total", "count", "delta", "green_morris_log2"}, {j});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of sum-free and maximal sum-free sets, link graphs and MIS counts", "sumfree"};
  app.require_subcommand(1);
  Config cfg;
  cfg.workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string output = "json";
  std::string cache_dir;
  app.add_option("--workers", cfg.workers, "Worker threads")->check(CLI::Range(1, 1024));
  app.add_option("--seed", cfg.seed, "Seed for randomized checks");
  auto* out_opt = app.add_option("--output", output, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--cache-dir", cache_dir, "Result cache directory");
  app.add_flag("--no-cache", cfg.no_cache, "Disable the result cache");
  app.add_option("--max-n", cfg.max_n, "Largest ground set for branch enumeration")->check(CLI::Range(1, 64));
  app.add_option("--enum-cap", cfg.enum_cap, "Largest number of sets any enumeration may list");
  app.add_flag("--timing", cfg.timing, "Report elapsed times (bypasses the cache)");

  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  EnumerateArgs ea;
  auto* c_enum = sub("enumerate", "f(n) and f_max(n)");
  c_enum->add_option("--n", ea.n, "Ground set [n]")->required();
  c_enum->add_option("--to", ea.to, "Tabulate n..to");
  c_enum->add_flag("--oracle", ea.oracle, "Brute force over all subsets");
  c_enum->add_flag("--sets", ea.sets, "List the maximal sum-free sets");

  MisArgs ma;
  auto* c_mis = sub("mis", "Count maximal independent sets");
  c_mis->add_option("--graph", ma.graph_file, "Graph in text format");
  c_mis->add_option("--family", ma.family, "path, cycle, complete, matching, prism, p3s");
  c_mis->add_option("--size", ma.size, "Family size parameter");
  c_mis->add_flag("--sets", ma.sets, "List the sets");
  c_mis->add_flag("--bounds", ma.bounds, "Evaluate the upper-bound certificates");

  LinkArgs la;
  auto* c_link = sub("link", "Build a link graph");
  c_link->add_option("--n", la.n, "Ground set [n]")->required();
  c_link->add_option("--m", la.m, "L(n, m, S)");
  c_link->add_option("--s", la.s, "Comma-separated S");
  c_link->add_option("--even", la.even, "L_x[O]");
  c_link->add_option("--even2", la.even2, "L_{x,x'}[O]");
  c_link->add_flag("--refined", la.refined, "Also count maximal sum-free extensions");

  ConstructArgs ca;
  auto* c_con = sub("construct", "Lower-bound families");
  c_con->add_option("--family", ca.family, "ce_odd, interval, z2k, index3, exponent7, zn_prism")->required();
  c_con->add_option("--n", ca.n, "n (k for z2k)");
  c_con->add_option("--group", ca.group, "Group descriptor such as Z7xZ7");
  c_con->add_flag("--summary", ca.summary, "Omit the member list");

  GroupArgs ga;
  auto* c_group = sub("group", "Group invariants");
  c_group->add_option("--desc", ga.desc, "Group descriptor such as Z4xZ2")->required();
  c_group->add_option("--op", ga.op, "mu, fmax or f");

  VerifyArgs va;
  auto* c_verify = sub("verify", "Run lemma checks");
  c_verify->add_option("--check", va.checks, "Check name (repeatable)");
  c_verify->add_flag("--all", va.all, "Run every check");
  c_verify->add_flag("--list", va.list, "List available checks");

  ConstantsArgs ka;
  auto* c_const = sub("constants", "Finite sums behind the limit constants");
  c_const->add_flag("--dprime", ka.dprime, "Sums of MIS(L_m[O])");
  c_const->add_flag("--sandwich", ka.sandwich, "Single-even census with its bounds");
  c_const->add_option("--n-min", ka.n_min, "First n");
  c_const->add_option("--n-max", ka.n_max, "Last n");

  SumsetArgs sa;
  auto* c_sum = sub("sumset-census", "Sets with small doubling");
  c_sum->add_option("--d", sa.d, "Ground [D]")->required();
  c_sum->add_option("--s", sa.s, "Set size")->required();
  c_sum->add_option("--r", sa.r, "Doubling bound R")->required();
  c_sum->add_option("--delta", sa.delta, "delta in the comparison bound");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }
  cfg.output = output == "csv" ? Format::csv : output == "table" ? Format::table : Format::json;
  cfg.output_given = out_opt->count() > 0;
  if (!cache_dir.empty()) cfg.cache_dir = cache_dir;

  try {
    if (*c_enum) cmd_enumerate(ea, cfg, out, err);
    else if (*c_mis) cmd_mis(ma, cfg, out);
    else if (*c_link) cmd_link(la, cfg, out);
    else if (*c_con) cmd_construct(ca, cfg, out);
    else if (*c_group) cmd_group(ga, cfg, out, err);
    else if (*c_verify) cmd_verify(va, cfg, out);
    else if (*c_const) cmd_constants(ka, cfg, out, err);
    else if (*c_sum) cmd_sumset(sa, cfg, out, err);
  } catch (const CheckFailed&) {
    return 1;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace sumfree::cli
