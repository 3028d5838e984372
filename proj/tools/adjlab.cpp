#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "adjlab/factorial.hpp"
#include "adjlab/graph6.hpp"
#include "adjlab/hypercube.hpp"
#include "adjlab/json_io.hpp"
#include "adjlab/sample.hpp"
#include "adjlab/schemes.hpp"

namespace {

using nlohmann::json;
using namespace adjlab;

// exit 0 = success, 1 = property/verification failure (witness JSON on
// stdout), 2 = usage or malformed input
constexpr int kFail = 1;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* kUsageText = R"(usage: adjlab <command> [flags]

commands:
  gen        emit a family instance (--family) or a seeded sample (--class)
  member     test class membership; violation witness on exit 1
  params     parameter reports for a graph, JSON array
  label      build an adjacency labeling, JSON on stdout
  verify     check a labeling against its graph over all pairs
  hypercube  encode | decode | tabulate
  count      labelled-count table for a class, CSV
  suite      lemma1 | y-roundtrip | z-sd | x-layers | symdif-bounds |
             lemma-degree-bound
  help       this text

common flags: --in FILE|- --out FILE --format graph6|json --workers N
run `adjlab help` or see cli.md for the full flag list per command.
)";

// ---- flag parsing -----------------------------------------------------------

const std::set<std::string> kSwitches = {"repair", "heavy-a", "sided"};

struct Args {
  std::vector<std::string> positional;
  std::map<std::string, std::string> flags;
  mutable std::set<std::string> consumed;

  bool has(const std::string& k) const {
    if (flags.count(k)) {
      consumed.insert(k);
      return true;
    }
    return false;
  }
  std::string str(const std::string& k, const std::string& dflt) const {
    return has(k) ? flags.at(k) : dflt;
  }
  std::string require(const std::string& k) const {
    if (!has(k)) throw Usage("missing required flag --" + k);
    return flags.at(k);
  }
  long long num(const std::string& k, long long dflt) const {
    if (!has(k)) return dflt;
    return parse_num(k, flags.at(k));
  }
  long long require_num(const std::string& k) const {
    return parse_num(k, require(k));
  }
  static long long parse_num(const std::string& k, const std::string& v) {
    std::size_t used = 0;
    long long out = 0;
    try {
      out = std::stoll(v, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != v.size() || v.empty())
      throw Usage("flag --" + k + " needs an integer, got \"" + v + "\"");
    return out;
  }
  // every flag must have been read by the handler; catches typos
  void finish() const {
    for (const auto& [k, v] : flags)
      if (!consumed.count(k)) throw Usage("unknown flag --" + k);
  }
};

Args parse_args(int argc, char** argv, int from) {
  Args a;
  for (int i = from; i < argc; ++i) {
    std::string tok = argv[i];
    if (tok.rfind("--", 0) != 0) {
      a.positional.push_back(tok);
      continue;
    }
    std::string name = tok.substr(2);
    std::string value;
    auto eq = name.find('=');
    if (eq != std::string::npos) {
      value = name.substr(eq + 1);
      name = name.substr(0, eq);
    } else if (kSwitches.count(name)) {
      value = "1";
    } else {
      if (i + 1 >= argc) throw Usage("flag --" + name + " needs a value");
      value = argv[++i];
    }
    if (a.flags.count(name)) throw Usage("flag --" + name + " given twice");
    a.flags[name] = value;
  }
  return a;
}

// the parsed config echoes back losslessly on the log stream
void echo_config(const std::string& cmd, const Args& a) {
  json j;
  j["command"] = cmd;
  j["flags"] = json::object();
  for (const auto& [k, v] : a.flags) j["flags"][k] = v;
  if (!a.positional.empty()) j["args"] = a.positional;
  std::cerr << "config " << j.dump() << "\n";
}

// ---- graph input and output -------------------------------------------------

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Usage("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_out(const Args& a, const std::string& data) {
  std::string path = a.str("out", "-");
  if (path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Usage("cannot open " + path + " for writing");
  out << data;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<int> parse_int_csv(const std::string& text) {
  std::vector<int> out;
  std::string tok;
  std::istringstream ss(trim(text));
  while (std::getline(ss, tok, ',')) {
    tok = trim(tok);
    if (tok.empty()) throw Usage("empty entry in integer list");
    out.push_back((int)Args::parse_num("code", tok));
  }
  return out;
}

ParsedGraph build_family(const Args& a) {
  std::string name = a.require("family");
  auto plain = [](Graph g) { return ParsedGraph{std::move(g), std::nullopt}; };
  auto sided = [](BipartiteGraph b) {
    return ParsedGraph{b.g, std::move(b)};
  };
  int t = (int)a.num("t", 2), p = (int)a.num("p", 1), k = (int)a.num("k", 2);
  if (name == "path") return plain(path_graph((int)a.require_num("n")));
  if (name == "cycle") return plain(cycle_graph((int)a.require_num("n")));
  if (name == "complete") return plain(complete_graph((int)a.require_num("n")));
  if (name == "edgeless") return plain(Graph((int)a.require_num("n")));
  if (name == "star") return plain(star_graph(t));
  if (name == "spider")
    return plain(spider_graph((int)a.require_num("i"), (int)a.require_num("j"),
                              (int)a.require_num("k")));
  if (name == "complete-bipartite")
    return sided(
        complete_bipartite((int)a.require_num("a"), (int)a.require_num("b")));
  if (name == "two-star") return sided(two_star_pattern(t, p));
  if (name == "f1") return sided(f1_pattern(t, p));
  if (name == "f") return sided(f_pattern(t, p));
  if (name == "dk") return plain(dk_pattern(k));
  if (name == "zk") return sided(zk_pattern(k));
  if (name == "hypercube")
    return plain(hypercube_graph((int)a.require_num("d")));
  try {
    return plain(pattern_by_name(name));  // x, y, z, p4, 2k2, f1(2,2), ...
  } catch (const InvalidInput&) {
    throw Usage("unknown family: " + name);
  }
}

ParsedGraph load_graph(const Args& a) {
  if (a.has("in")) {
    std::string text = trim(read_all(a.flags.at("in")));
    if (!text.empty() && text[0] == '{')
      return graph_from_json(json::parse(text));
    auto nl = text.find('\n');
    return ParsedGraph{read_graph6(nl == std::string::npos ? text
                                                           : text.substr(0, nl)),
                       std::nullopt};
  }
  if (a.flags.count("family")) return build_family(a);
  throw Usage("need --in FILE or --family NAME");
}

void emit_graph(const Args& a, const ParsedGraph& pg) {
  std::string format = a.str("format", "graph6");
  if (format == "graph6") {
    if (a.has("sided") && pg.bipartite)
      throw Usage("graph6 carries no sides; use --format json");
    write_out(a, write_graph6(pg.g) + "\n");
  } else if (format == "json") {
    json j = pg.bipartite ? graph_to_json(*pg.bipartite)
                          : graph_to_json(pg.g);
    write_out(a, j.dump() + "\n");
  } else {
    throw Usage("unknown format: " + format);
  }
}

BipartiteGraph as_sided(const ParsedGraph& pg) {
  if (pg.bipartite) return *pg.bipartite;
  return bipartition(pg.g);
}

ClassSpec class_from_flags(const Args& a) {
  std::string cname = a.require("class");
  std::map<std::string, int> params;
  for (const char* key : {"t", "p", "k"})
    if (a.has(key)) params[key] = (int)Args::parse_num(key, a.flags.at(key));
  try {
    return named_class(cname, params);
  } catch (const InvalidInput& e) {
    throw Usage(e.what());
  }
}

json error_json(const Error& e) {
  json j;
  if (auto* fp = dynamic_cast<const ForbiddenPatternError*>(&e)) {
    j["error"] = "forbidden-pattern";
    j["pattern"] = fp->pattern;
    j["vertices"] = fp->map;
  } else if (auto* oc = dynamic_cast<const OddCycleError*>(&e)) {
    j["error"] = "odd-cycle";
    j["vertices"] = oc->cycle;
  } else if (auto* re = dynamic_cast<const ResidualError*>(&e)) {
    j["error"] = "stuck-residual";
    j["vertices"] = re->residual;
    j["message"] = re->what();
  } else if (auto* ce = dynamic_cast<const CoverError*>(&e)) {
    j["error"] = "cover-mismatch";
    j["u"] = ce->u;
    j["v"] = ce->v;
    j["message"] = ce->what();
  } else if (auto* se = dynamic_cast<const SplitError*>(&e)) {
    j["error"] = "split-violation";
    j["vertices"] = se->witness;
    j["message"] = se->what();
  } else if (auto* pe = dynamic_cast<const PartitionExhausted*>(&e)) {
    j["error"] = "partition-exhausted";
    j["parts_cap"] = pe->parts_cap;
  } else if (dynamic_cast<const NotEmbeddable*>(&e)) {
    j["error"] = "not-embeddable";
    j["message"] = e.what();
  } else if (auto* be = dynamic_cast<const BudgetExceeded*>(&e)) {
    j["error"] = "budget-exceeded";
    j["budget"] = be->budget;
  } else if (dynamic_cast<const MalformedLabel*>(&e)) {
    j["error"] = "malformed-label";
    j["message"] = e.what();
  } else if (dynamic_cast<const SameVertexQuery*>(&e)) {
    j["error"] = "same-vertex-query";
  } else {
    j["error"] = "error";
    j["message"] = e.what();
  }
  return j;
}

// Splits [0, total) into `workers` stripes and joins; fn must be pure per
// index so the merged outcome is independent of the stripe count.
void parallel_over(std::uint64_t total, int workers,
                   const std::function<void(std::uint64_t, std::uint64_t, int)>& fn) {
  workers = std::clamp(workers, 1, 64);
  if (workers == 1 || total < 2) {
    fn(0, total, 0);
    return;
  }
  std::vector<std::thread> pool;
  std::uint64_t stripe = (total + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    std::uint64_t lo = stripe * w, hi = std::min<std::uint64_t>(total, lo + stripe);
    if (lo >= hi) break;
    pool.emplace_back(fn, lo, hi, w);
  }
  for (auto& th : pool) th.join();
}

// ---- gen ---------------------------------------------------------------------

int cmd_gen(const Args& a) {
  if (a.flags.count("class")) {
    ClassSpec spec = class_from_flags(a);
    int n = (int)a.require_num("n");
    std::uint64_t seed = (std::uint64_t)a.require_num("seed");
    SampleOptions opt;
    opt.repair = a.has("repair");
    if (a.has("attempts")) opt.attempts = a.num("attempts", opt.attempts);
    if (a.flags.count("sided")) {
      BipartiteGraph bg = sample_bipartite_in_class(spec, n, seed, opt);
      emit_graph(a, ParsedGraph{bg.g, bg});
    } else {
      emit_graph(a, ParsedGraph{sample_in_class(spec, n, seed, opt), {}});
    }
    a.finish();
    return 0;
  }
  ParsedGraph pg = build_family(a);
  emit_graph(a, pg);
  a.finish();
  return 0;
}

// ---- member -------------------------------------------------------------------

int cmd_member(const Args& a) {
  ClassSpec spec = class_from_flags(a);
  ParsedGraph pg = load_graph(a);
  SearchOptions opt;
  if (a.has("budget")) opt.budget = a.num("budget", opt.budget);
  MembershipResult r = pg.bipartite ? member(spec, *pg.bipartite, opt)
                                    : member(spec, pg.g, opt);
  a.finish();
  json out;
  out["member"] = r.member;
  if (!r.member) {
    out["violation"] = {{"reason", r.violation->reason},
                        {"vertices", r.violation->vertices}};
  }
  std::cout << out.dump() << "\n";
  return r.member ? 0 : kFail;
}

// ---- params -------------------------------------------------------------------

json report_json(const ParamReport& r) {
  return json{{"name", r.name},
              {"value", r.value},
              {"witness", r.witness},
              {"method", r.method}};
}

int cmd_params(const Args& a) {
  ParsedGraph pg = load_graph(a);
  const Graph& g = pg.g;
  std::vector<std::string> want;
  if (a.has("param")) {
    std::string tok;
    std::istringstream ss(a.flags.at("param"));
    while (std::getline(ss, tok, ',')) want.push_back(trim(tok));
  } else {
    want = {"h-index", "degeneracy"};
    if (g.n >= 2) want.push_back("min-pair-sd");
    if (g.n <= 14) want.push_back("sd-graph");
    if (g.n <= 9) want.push_back("contiguity");
    if (g.n <= 12) want.push_back("chain-partition-number");
  }
  json out = json::array();
  for (const std::string& name : want) {
    if (name == "min-pair-sd") {
      out.push_back(report_json(min_pair_sd(g)));
    } else if (name == "sd-graph") {
      out.push_back(report_json(sd_graph(g, (int)a.num("sd-cap", 14))));
    } else if (name == "h-index") {
      out.push_back(report_json(h_index(g)));
    } else if (name == "degeneracy") {
      Degeneracy d = degeneracy(g);
      out.push_back(json{{"name", "degeneracy"},
                         {"value", d.d},
                         {"witness", d.order},
                         {"method", "exact"}});
    } else if (name == "contiguity") {
      out.push_back(
          report_json(contiguity(g, (int)a.num("contiguity-cap", 9))));
    } else if (name == "chain-partition-number") {
      out.push_back(report_json(chain_partition_number(
          g, (int)a.num("max-parts", -1), (int)a.num("cpn-cap", 12))));
    } else {
      throw Usage("unknown parameter: " + name);
    }
  }
  a.finish();
  std::cout << out.dump() << "\n";
  return 0;
}

// ---- label and verify -----------------------------------------------------------

int cmd_label(const Args& a) {
  std::string scheme = a.require("scheme");
  ParsedGraph pg = load_graph(a);
  BipartiteGraph bg = as_sided(pg);
  int w = (int)a.num("width", -1);
  Labeling L;
  if (scheme == "chain") {
    L = chain_scheme(bg, w);
  } else if (scheme == "biclique-union") {
    L = biclique_union_scheme(bg, w);
  } else if (scheme == "peel") {
    L = peel_scheme(bg, (int)a.require_num("d"), nullptr, w);
  } else if (scheme == "two-star") {
    L = two_star_free_scheme(bg, (int)a.require_num("t"), w);
  } else if (scheme == "f1tt") {
    L = f1tt_scheme(bg, (int)a.require_num("t"), w);
  } else if (scheme == "ftt") {
    L = ftt_scheme(bg, (int)a.require_num("t"), w);
  } else if (scheme == "f1t1") {
    L = one_sided_f1t1_scheme(bg, (int)a.require_num("t"), a.has("heavy-a"), w);
  } else if (scheme == "ft1") {
    L = one_sided_ft1_scheme(bg, (int)a.require_num("t"), a.has("heavy-a"), w);
  } else if (scheme == "s222") {
    L = s222_scheme(bg, (int)a.num("parts-cap", 8), w);
  } else if (scheme == "dk") {
    L = dk_scheme(bg, (int)a.require_num("k"), w);
  } else if (scheme == "zk") {
    L = zk_scheme(bg, (int)a.require_num("k"), w);
  } else if (scheme == "edgeless") {
    L = edgeless_labeling(bg.n(), w < 0 ? width_for(bg.n()) : w);
  } else if (scheme == "star") {
    L = star_labeling(bg.n(), (int)a.num("center", 0),
                      w < 0 ? width_for(bg.n()) : w);
  } else {
    throw Usage("unknown scheme: " + scheme);
  }
  a.finish();
  write_out(a, labeling_to_json(L).dump() + "\n");
  return 0;
}

int cmd_verify(const Args& a) {
  ParsedGraph pg = load_graph(a);
  std::string text = read_all(a.str("labeling", "-"));
  Labeling L = labeling_from_json(json::parse(text));
  VerifyReport rep = verify_labeling(pg.g, L);
  a.finish();
  json out;
  out["ok"] = rep.ok();
  out["pairs"] = rep.pairs;
  out["max_bits"] = rep.max_bits;
  out["ratio"] = rep.ratio;
  out["mismatches"] = json::array();
  for (auto [u, v] : rep.mismatches) out["mismatches"].push_back({u, v});
  std::cout << out.dump() << "\n";
  return rep.ok() ? 0 : kFail;
}

// ---- hypercube -----------------------------------------------------------------

bool two_colorable(const Graph& g) {
  std::vector<int> colour(g.n, -1);
  std::vector<int> stack;
  for (int s = 0; s < g.n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      bool odd = false;
      g.adj[v].for_each([&](int u) {
        if (colour[u] < 0) {
          colour[u] = colour[v] ^ 1;
          stack.push_back(u);
        } else if (colour[u] == colour[v]) {
          odd = true;
        }
      });
      if (odd) return false;
    }
  }
  return true;
}

int cmd_hypercube(const Args& a) {
  if (a.positional.empty())
    throw Usage("hypercube needs a mode: encode | decode | tabulate");
  std::string mode = a.positional[0];
  if (mode == "encode") {
    ParsedGraph pg = load_graph(a);
    Embedding emb =
        hypercube_embed(pg.g, a.num("budget", 10'000'000));
    std::vector<int> forest;
    const std::vector<int>* fp = nullptr;
    if (a.has("forest")) {
      forest = parse_int_csv(a.flags.at("forest"));
      fp = &forest;
    }
    HypercubeCode code = hypercube_encode(pg.g, emb, fp);
    std::ostringstream line;
    for (std::size_t i = 0; i < code.entries.size(); ++i)
      line << (i ? "," : "") << code.entries[i];
    a.finish();
    write_out(a, line.str() + "\n");
    return 0;
  }
  if (mode == "decode") {
    std::vector<int> entries = parse_int_csv(read_all(a.str("code", "-")));
    if (entries.size() % 2 != 0)
      throw InvalidInput("code needs an even entry count", entries.size());
    HypercubeCode code{(int)(entries.size() / 2), entries};
    Graph g = hypercube_decode(code);
    emit_graph(a, ParsedGraph{std::move(g), std::nullopt});
    a.finish();
    return 0;
  }
  if (mode == "tabulate") {
    // descriptive only: labelled n-vertex graphs embeddable in a hypercube,
    // with a per-graph search budget; undecided = budget ran out
    int max_n = (int)a.num("max-n", 7);
    if (max_n < 0 || max_n > 7) throw Usage("tabulate supports --max-n 0..7");
    long long budget = a.num("budget", 200'000);
    int workers = (int)a.num("workers", 1);
    a.finish();
    std::ostringstream csv;
    csv << "n,embeddable,undecided\n";
    for (int n = 0; n <= max_n; ++n) {
      std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
      std::vector<long long> good(64, 0), undecided(64, 0);
      parallel_over(total, workers,
                    [&](std::uint64_t lo, std::uint64_t hi, int w) {
                      for (std::uint64_t m = lo; m < hi; ++m) {
                        Graph g = graph_from_mask(n, m);
                        if (!two_colorable(g)) continue;
                        try {
                          hypercube_embed(g, budget);
                          ++good[w];
                        } catch (const NotEmbeddable&) {
                        } catch (const BudgetExceeded&) {
                          ++undecided[w];
                        }
                      }
                    });
      long long g_sum = 0, u_sum = 0;
      for (int w = 0; w < 64; ++w) g_sum += good[w], u_sum += undecided[w];
      csv << n << "," << g_sum << "," << u_sum << "\n";
    }
    write_out(a, csv.str());
    return 0;
  }
  throw Usage("unknown hypercube mode: " + mode);
}

// ---- count ---------------------------------------------------------------------

int cmd_count(const Args& a) {
  ClassSpec spec = class_from_flags(a);
  int n_max = (int)a.require_num("n");
  int cap = (int)a.num("cap", 8);
  int workers = (int)a.num("workers", 1);
  a.finish();
  std::ostringstream csv;
  csv << "n,count\n";
  for (int n = 0; n <= n_max; ++n) {
    if (n > cap) throw InvalidInput("labelled counting cap exceeded", n);
    std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    std::vector<long long> part(64, 0);
    parallel_over(total, workers,
                  [&](std::uint64_t lo, std::uint64_t hi, int w) {
                    for (std::uint64_t m = lo; m < hi; ++m)
                      if (member(spec, graph_from_mask(n, m)).member)
                        ++part[w];
                  });
    long long sum = 0;
    for (int w = 0; w < 64; ++w) sum += part[w];
    csv << n << "," << sum << "\n";
  }
  write_out(a, csv.str());
  return 0;
}

// ---- suites --------------------------------------------------------------------

struct SuiteResult {
  json body;
  bool pass = true;
};

// per-trial seeds derive from --seed + index, so stripes of any width agree
std::uint64_t trial_seed(std::uint64_t base, int trial) {
  return base + std::uint64_t(trial) * 0x9e3779b97f4a7c15ULL;
}

Graph sample_for_suite(const std::string& cls, int n_max, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int n = 4 + (int)(rng() % std::max(1, n_max - 3));
  SampleOptions opt;
  opt.repair = true;
  return sample_in_class(named_class(cls), n, rng(), opt);
}

SuiteResult suite_lemma1(const Args& a) {
  int max = (int)a.num("max", 8);
  ForestPairReport rep = lemma1_check(max);
  SuiteResult r;
  r.pass = rep.ok();
  r.body["suite"] = "lemma1";
  r.body["max"] = max;
  r.body["graphs"] = rep.graphs;
  r.body["counterexamples"] = json::array();
  for (const auto& c : rep.counterexamples)
    r.body["counterexamples"].push_back({{"na", c.na},
                                         {"nb", c.nb},
                                         {"mask", c.mask},
                                         {"both_forests", c.both_forests},
                                         {"inside_targets", c.inside_targets}});
  return r;
}

SuiteResult suite_y_roundtrip(const Args& a) {
  int trials = (int)a.num("trials", 200);
  int n_max = (int)a.num("n-max", 40);
  std::uint64_t seed = (std::uint64_t)a.require_num("seed");
  int workers = (int)a.num("workers", 1);
  std::vector<json> fail(trials);
  std::vector<char> bad(trials, 0);
  parallel_over(trials, workers, [&](std::uint64_t lo, std::uint64_t hi, int) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      Graph g = sample_for_suite("y-free-chordal-bipartite", n_max,
                                 trial_seed(seed, (int)i));
      PeelRecord rec = y_encode(g);
      std::string reason;
      for (const PeelStep& st : rec.steps) {
        if (st.by_degree && st.neighbours.size() > 4) reason = "degree step over 4";
        if (!st.by_degree && st.sym_diff.size() > 6) reason = "sd step over 6";
      }
      Graph back = y_decode(rec);
      for (int u = 0; u < g.n && reason.empty(); ++u)
        for (int v = u + 1; v < g.n; ++v)
          if (back.adjacent(u, v) != g.adjacent(u, v)) {
            reason = "round-trip mismatch";
            break;
          }
      if (!reason.empty()) {
        bad[i] = 1;
        fail[i] = {{"trial", i},
                   {"n", g.n},
                   {"reason", reason},
                   {"graph", graph_to_json(g)}};
      }
    }
  });
  SuiteResult r;
  r.body["suite"] = "y-roundtrip";
  r.body["trials"] = trials;
  r.body["failures"] = json::array();
  for (int i = 0; i < trials; ++i)
    if (bad[i]) r.body["failures"].push_back(fail[i]);
  r.pass = r.body["failures"].empty();
  return r;
}

SuiteResult suite_z_sd(const Args& a) {
  int trials = (int)a.num("trials", 200);
  int n_max = (int)a.num("n-max", 40);
  std::uint64_t seed = (std::uint64_t)a.require_num("seed");
  int workers = (int)a.num("workers", 1);
  std::vector<json> fail(trials);
  std::vector<char> bad(trials, 0);
  std::atomic<long long> with_p14{0};
  parallel_over(trials, workers, [&](std::uint64_t lo, std::uint64_t hi, int) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      Graph g = sample_for_suite("z-free-chordal-bipartite", n_max,
                                 trial_seed(seed, (int)i));
      LongPathSdReport rep = z_property_check(g);
      if (rep.has_p14) ++with_p14;
      if (!rep.ok) {
        bad[i] = 1;
        fail[i] = {{"trial", i},
                   {"n", g.n},
                   {"sd", rep.sd},
                   {"pair", rep.pair},
                   {"graph", graph_to_json(g)}};
      }
    }
  });
  SuiteResult r;
  r.body["suite"] = "z-sd";
  r.body["trials"] = trials;
  r.body["with_p14"] = with_p14.load();
  r.body["failures"] = json::array();
  for (int i = 0; i < trials; ++i)
    if (bad[i]) r.body["failures"].push_back(fail[i]);
  r.pass = r.body["failures"].empty();
  return r;
}

SuiteResult suite_x_layers(const Args& a) {
  int trials = (int)a.num("trials", 200);
  int n_max = (int)a.num("n-max", 40);
  std::uint64_t seed = (std::uint64_t)a.require_num("seed");
  int workers = (int)a.num("workers", 1);
  int max_roots = (int)a.num("max-roots", -1);
  std::vector<json> fail(trials);
  std::vector<char> bad(trials, 0);
  parallel_over(trials, workers, [&](std::uint64_t lo, std::uint64_t hi, int) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      Graph g = sample_for_suite("x-free-chordal-bipartite", n_max,
                                 trial_seed(seed, (int)i));
      for (const Bitset& comp : components(g)) {
        Graph sub = induced(g, comp);
        LayerPathReport rep = x_layer_check(sub, max_roots);
        if (!rep.ok) {
          bad[i] = 1;
          fail[i] = {{"trial", i},
                     {"n", g.n},
                     {"root", rep.root},
                     {"layer", rep.layer},
                     {"p12", rep.p12},
                     {"graph", graph_to_json(sub)}};
        }
      }
    }
  });
  SuiteResult r;
  r.body["suite"] = "x-layers";
  r.body["trials"] = trials;
  r.body["failures"] = json::array();
  for (int i = 0; i < trials; ++i)
    if (bad[i]) r.body["failures"].push_back(fail[i]);
  r.pass = r.body["failures"].empty();
  return r;
}

SuiteResult suite_symdif_bounds(const Args& a) {
  int max = (int)a.num("max", 7);
  if (max < 1 || max > 8) throw Usage("symdif-bounds supports --max 1..8");
  int workers = (int)a.num("workers", 1);
  SuiteResult r;
  r.body["suite"] = "symdif-bounds";
  r.body["max"] = max;
  r.body["counterexamples"] = json::array();
  long long cases = 0;
  for (int n = 1; n <= max; ++n) {
    std::vector<Graph> reps = nonisomorphic_graphs(n);
    cases += (long long)reps.size();
    std::vector<json> found(reps.size());
    std::vector<char> bad(reps.size(), 0);
    parallel_over(reps.size(), workers,
                  [&](std::uint64_t lo, std::uint64_t hi, int) {
                    for (std::uint64_t i = lo; i < hi; ++i) {
                      const Graph& g = reps[i];
                      long long k = contiguity(g).value;
                      long long s = sd_graph(g).value;
                      if (s > 2 * k) {
                        bad[i] = 1;
                        found[i] = {{"n", n},
                                    {"contiguity", k},
                                    {"sd_graph", s},
                                    {"graph", graph_to_json(g)}};
                      }
                    }
                  });
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (bad[i]) r.body["counterexamples"].push_back(found[i]);
  }
  r.body["graphs"] = cases;
  r.pass = r.body["counterexamples"].empty();
  return r;
}

SuiteResult suite_lemma_degree_bound(const Args& a) {
  int max_side = (int)a.num("max-side", 4);
  if (max_side < 1 || max_side > 5)
    throw Usage("lemma-degree-bound supports --max-side 1..5");
  int workers = (int)a.num("workers", 1);
  SuiteResult r;
  r.body["suite"] = "lemma-degree-bound";
  r.body["max_side"] = max_side;
  r.body["counterexamples"] = json::array();
  long long cases = 0;
  for (int t : {2, 3}) {
    int bound = double_star_peel_bound(t);
    for (int na = 1; na <= max_side; ++na)
      for (int nb = na; nb <= max_side; ++nb) {
        BipartiteEnumeration e = enumerate_bipartite(na, nb);
        std::vector<json> found(e.size);
        std::vector<char> bad(e.size, 0);
        std::atomic<long long> seen{0};
        parallel_over(e.size, workers,
                      [&](std::uint64_t lo, std::uint64_t hi, int) {
                        for (std::uint64_t m = lo; m < hi; ++m) {
                          BipartiteGraph bg = e.at(m);
                          if (!is_double_star_free(bg, t).free) continue;
                          ++seen;
                          bool hit = false;
                          for (int v = 0; v < bg.n() && !hit; ++v) {
                            int deg = bg.g.degree(v);
                            int cod = (int)bg.opposite_of(v).count() - deg;
                            hit = deg <= t - 1 || cod <= bound;
                          }
                          if (!hit) {
                            bad[m] = 1;
                            found[m] = {{"t", t},
                                        {"na", na},
                                        {"nb", nb},
                                        {"mask", m},
                                        {"graph", graph_to_json(bg)}};
                          }
                        }
                      });
        cases += seen.load();
        for (std::uint64_t m = 0; m < e.size; ++m)
          if (bad[m]) r.body["counterexamples"].push_back(found[m]);
      }
  }
  r.body["pattern_free_graphs"] = cases;
  r.pass = r.body["counterexamples"].empty();
  return r;
}

int cmd_suite(const Args& a) {
  if (a.positional.empty()) throw Usage("suite needs a name");
  std::string name = a.positional[0];
  SuiteResult r;
  if (name == "lemma1")
    r = suite_lemma1(a);
  else if (name == "y-roundtrip")
    r = suite_y_roundtrip(a);
  else if (name == "z-sd")
    r = suite_z_sd(a);
  else if (name == "x-layers")
    r = suite_x_layers(a);
  else if (name == "symdif-bounds")
    r = suite_symdif_bounds(a);
  else if (name == "lemma-degree-bound")
    r = suite_lemma_degree_bound(a);
  else
    throw Usage("unknown suite: " + name);
  a.finish();
  r.body["pass"] = r.pass;
  std::cout << r.body.dump() << "\n";
  return r.pass ? 0 : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << kUsageText;
    return 2;
  }
  std::string cmd = argv[1];
  if (cmd == "help" || cmd == "--help" || cmd == "-h") {
    std::cout << kUsageText;
    return 0;
  }
  try {
    Args a = parse_args(argc, argv, 2);
    echo_config(cmd, a);
    if (cmd == "gen") return cmd_gen(a);
    if (cmd == "member") return cmd_member(a);
    if (cmd == "params") return cmd_params(a);
    if (cmd == "label") return cmd_label(a);
    if (cmd == "verify") return cmd_verify(a);
    if (cmd == "hypercube") return cmd_hypercube(a);
    if (cmd == "count") return cmd_count(a);
    if (cmd == "suite") return cmd_suite(a);
    throw Usage("unknown command: " + cmd);
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n" << kUsageText;
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const InternalCheck& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cout << error_json(e).dump() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
