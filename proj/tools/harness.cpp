#include "harness.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lct/classifier.hpp"
#include "lct/connectivity.hpp"
#include "lct/families.hpp"
#include "lct/graph6.hpp"

namespace lct::harness {

using json = nlohmann::ordered_json;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

json vertex_list(VertexSet s) { return json(s.to_vector()); }

std::string set_text(VertexSet s) {
  std::string out = "{";
  for (Vertex v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

Outcome combine(const std::vector<Outcome>& all) {
  auto has = [&](Outcome o) { return std::find(all.begin(), all.end(), o) != all.end(); };
  if (has(Outcome::Fail)) return Outcome::Fail;
  if (has(Outcome::Pass)) return Outcome::Pass;
  if (has(Outcome::VacuousPass)) return Outcome::VacuousPass;
  return Outcome::PremiseNotMet;
}

int outcome_slot(Outcome o) {
  switch (o) {
    case Outcome::Pass: return 0;
    case Outcome::Fail: return 1;
    case Outcome::PremiseNotMet: return 2;
    case Outcome::VacuousPass: return 3;
  }
  return 2;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "single_vertex_transversal", "longest_cycles_meet_twice", "decomposition_valid", "edge_separation",
      "dp_length_matches",         "family_consistency",        "fenced_or_transversal", "jump_common_vertex",
      "jump_exclusion",            "two_cross_jumps",           "long_cycle_bound",
  };
  return names;
}

CheckResult meet_twice(const LongestCycleSet& lcs) {
  std::map<VertexSet, int> sets;
  for (const auto& c : lcs.cycles) ++sets[c.vertices()];
  if (lcs.cycles.size() < 2) return {"longest_cycles_meet_twice", Outcome::VacuousPass, "one longest cycle"};
  int best = kMaxVertices + 1;
  for (auto it = sets.begin(); it != sets.end(); ++it) {
    if (it->second > 1) best = std::min(best, it->first.size());
    for (auto jt = std::next(it); jt != sets.end(); ++jt) best = std::min(best, (it->first & jt->first).size());
  }
  return {"longest_cycles_meet_twice", best >= 2 ? Outcome::Pass : Outcome::Fail,
          "min pairwise intersection " + std::to_string(best)};
}

CheckResult edge_separation(const Graph& g, const TreeDecomposition& td) {
  long pairs = 0, bad = 0;
  std::string first;
  for (auto [s, t] : td.tree_edges()) {
    const VertexSet a = branch_at_node(td, s, t).vertices;
    const VertexSet b = branch_at_node(td, t, s).vertices;
    for (Vertex u : a)
      for (Vertex v : b) {
        ++pairs;
        if (!check_separator_property(g, td, s, t, u, v)) {
          if (bad++ == 0)
            first = "edge " + std::to_string(s) + "-" + std::to_string(t) + " pair " + std::to_string(u) + "," +
                    std::to_string(v);
        }
      }
  }
  if (bad) return {"edge_separation", Outcome::Fail, std::to_string(bad) + " unseparated pairs, first " + first};
  return {"edge_separation", pairs ? Outcome::Pass : Outcome::VacuousPass, std::to_string(pairs) + " pairs"};
}

bool sorted_disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  return both.empty();
}

std::string family_problem(const CycleFamilies& f, const LongestCycleSet& lcs) {
  auto on = [&](int i, VertexSet s) { return lcs.cycles[i].vertices() & s; };
  if (!sorted_disjoint(f.x2, f.fenced3)) return "crossing and fenced families overlap";
  for (int i : f.x2)
    if (on(i, f.bag).size() != 2) return "2-crossing cycle meets the bag " + std::to_string(on(i, f.bag).size()) + " times";
  for (int i : f.fenced3)
    if (on(i, f.bag).size() > 3) return "fenced cycle meets the bag too often";
  for (const auto& tf : f.triples) {
    for (int i : tf.three_at_delta)
      if (on(i, f.bag) != tf.delta) return "cycle filed under the wrong triple";
    for (int p = 0; p < 3; ++p)
      for (int i : tf.two_jump[p])
        if (on(i, tf.delta) != tf.pair(p)) return "2-jump cycle filed under the wrong pair";
    for (int i : tf.three_jump)
      if (on(i, tf.delta) != tf.delta) return "3-jump cycle misses a triple vertex";
    const auto j = tf.jumping();
    if (std::adjacent_find(j.begin(), j.end()) != j.end()) return "cycle in two jump families";
  }
  return {};
}

void run_width3_checks(const Graph& g, const TreeDecomposition& td, const TransversalResult& tr, int tw, bool bic,
                       std::vector<CheckResult>& out) {
  const LongestCycleSet& lcs = tr.family;
  std::vector<Outcome> jump_common, exclusion, two_cross;
  int premise_pairs = 0, exclusion_met = 0;
  std::string family_issue, jump_issue;
  long x2_total = 0, fenced_total = 0;
  const bool tw3 = tw == 3;
  for (Node t = 0; t < td.node_count(); ++t) {
    const BagContext ctx(td, t);
    const CycleFamilies fams = build_families(g, ctx, lcs);
    x2_total += static_cast<long>(fams.x2.size());
    fenced_total += static_cast<long>(fams.fenced3.size());
    if (family_issue.empty()) {
      if (auto p = family_problem(fams, lcs); !p.empty()) family_issue = "node " + std::to_string(t) + ": " + p;
    }
    if (!tw3) continue;
    for (const auto& tf : fams.triples) {
      const BagContext dctx = ctx.with_delta(tf.delta);
      const auto pc = check_pairwise_and_common(g, dctx, lcs, fams);
      jump_common.push_back(pc.outcome);
      if (pc.outcome != Outcome::PremiseNotMet) ++premise_pairs;
      if (pc.outcome == Outcome::Fail && jump_issue.empty())
        jump_issue = "node " + std::to_string(t) + " triple " + set_text(tf.delta) +
                     (pc.pairwise_ok ? "" : " no common component") + (pc.common_ok ? "" : " no common inside vertex");
      const auto ex = check_jump_exclusion(g, dctx, tr);
      exclusion.push_back(ex.outcome);
      if (ex.outcome != Outcome::PremiseNotMet) ++exclusion_met;
    }
    if (bic) two_cross.push_back(check_two_cross_claim(g, ctx, tr));
  }
  out.push_back({"family_consistency", family_issue.empty() ? Outcome::Pass : Outcome::Fail,
                 family_issue.empty() ? std::to_string(td.node_count()) + " nodes, " + std::to_string(x2_total) +
                                            " 2-crossing and " + std::to_string(fenced_total) + " fenced entries"
                                      : family_issue});

  if (bic && tw3) {
    const auto rep = check_fenced_or_transversal(g, td, tr, tw);
    std::string detail = std::to_string(rep.nodes.size()) + " nodes";
    if (!rep.failing.empty()) detail += ", first failing node " + std::to_string(rep.failing.front());
    out.push_back({"fenced_or_transversal", rep.outcome, detail});
  } else {
    out.push_back({"fenced_or_transversal", Outcome::PremiseNotMet, "needs 2-connected and treewidth 3"});
  }

  if (tw3) {
    const Outcome o = combine(jump_common);
    out.push_back({"jump_common_vertex", o,
                   jump_issue.empty() ? "premise met at " + std::to_string(premise_pairs) + " (node, triple) pairs"
                                      : jump_issue});
    out.push_back({"jump_exclusion", combine(exclusion),
                   "premise met at " + std::to_string(exclusion_met) + " (node, triple) pairs"});
  } else {
    out.push_back({"jump_common_vertex", Outcome::PremiseNotMet, "needs treewidth 3"});
    out.push_back({"jump_exclusion", Outcome::PremiseNotMet, "needs treewidth 3"});
  }
  if (bic && tw3)
    out.push_back({"two_cross_jumps", combine(two_cross), ""});
  else
    out.push_back({"two_cross_jumps", Outcome::PremiseNotMet, "needs 2-connected and treewidth 3"});
}

void premise_not_met_from(std::vector<CheckResult>& checks, const std::string& reason) {
  for (const auto& name : check_names()) {
    const bool present = std::any_of(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.name == name; });
    if (!present) checks.push_back({name, Outcome::PremiseNotMet, reason});
  }
  std::stable_sort(checks.begin(), checks.end(), [](const CheckResult& a, const CheckResult& b) {
    const auto& names = check_names();
    return std::find(names.begin(), names.end(), a.name) < std::find(names.begin(), names.end(), b.name);
  });
}

}  // namespace

std::vector<CorpusItem> read_corpus(std::istream& in, std::string_view name) {
  std::vector<CorpusItem> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    try {
      out.push_back({parse_graph6(line), std::nullopt, std::string(name) + ":" + std::to_string(lineno)});
    } catch (const ParseError& e) {
      throw ConfigError(std::string(name) + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<CorpusItem> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read corpus " + path);
  return read_corpus(in, path);
}

std::vector<CorpusItem> generated_corpus(const GenSpec& spec) {
  std::vector<CorpusItem> out;
  const std::string base = spec.to_string();
  auto gens = generate(spec);
  out.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    out.push_back({std::move(gens[i].graph), std::move(gens[i].decomposition), base + "#" + std::to_string(i)});
  return out;
}

bool GraphReport::failed() const {
  if (status == "error") return true;
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.outcome == Outcome::Fail; });
}

const CheckResult* GraphReport::check(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

GraphReport verify_graph(const CorpusItem& item, const VerifyOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  const Graph& g = item.graph;
  GraphReport r;
  r.graph = g;
  r.source = item.source;
  r.n = g.order();
  r.m = g.size();
  try {
    r.graph6 = write_graph6(g);
    r.biconnected = is_biconnected(g);
    if (g.order() > opts.treewidth_cap) {
      r.status = "out-of-scope";
      r.note = "treewidth cap exceeded";
      r.seconds = seconds_since(t0);
      return r;
    }
    const TreewidthResult twr = exact_treewidth(g, opts.treewidth_cap);
    r.treewidth = twr.width;
    if (opts.strict && (!r.biconnected || r.treewidth > 3)) {
      r.status = "out-of-scope";
      r.note = !r.biconnected ? "not 2-connected" : "treewidth " + std::to_string(r.treewidth) + " above 3";
      r.seconds = seconds_since(t0);
      return r;
    }

    const LongestCycleSet lcs = enumerate_longest_cycles(g, opts.enumeration);
    if (lcs.cycles.empty()) {
      r.note = "acyclic";
      premise_not_met_from(r.checks, "acyclic graph");
      r.seconds = seconds_since(t0);
      return r;
    }
    TransversalResult tr = opts.hooks.lct ? opts.hooks.lct(g, lcs) : transversal_of(lcs, g.order());
    r.length = lcs.length;
    r.cycle_count = static_cast<long>(lcs.cycles.size());
    r.lct = tr.lct;
    r.witness = tr.witness;

    const bool bic = r.biconnected;
    const int tw = r.treewidth;
    if (bic && tw <= 3)
      r.checks.push_back({"single_vertex_transversal", tr.lct == 1 ? Outcome::Pass : Outcome::Fail,
                          "lct " + std::to_string(tr.lct) + " witness " + set_text(tr.witness)});
    else
      r.checks.push_back({"single_vertex_transversal", Outcome::PremiseNotMet, "needs 2-connected and treewidth <= 3"});
    if (bic)
      r.checks.push_back(meet_twice(lcs));
    else
      r.checks.push_back({"longest_cycles_meet_twice", Outcome::PremiseNotMet, "not 2-connected"});

    const int k = std::max(tw, 3);
    if (g.order() < k + 1) {
      premise_not_met_from(r.checks, "too few vertices for a full decomposition");
    } else {
      TreeDecomposition td;
      if (item.decomposition && item.decomposition->is_full() && item.decomposition->width() == k &&
          validate(g, *item.decomposition).empty())
        td = *item.decomposition;
      else
        td = make_full(g, twr.decomposition, k);
      const auto violations = validate(g, td);
      r.checks.push_back({"decomposition_valid", violations.empty() ? Outcome::Pass : Outcome::Fail,
                          violations.empty() ? std::to_string(td.node_count()) + " full bags of width " + std::to_string(k)
                                             : violations.front().describe()});
      if (violations.empty()) {
        r.checks.push_back(edge_separation(g, td));
        if (td.width() < 14) {
          const int dp = longest_cycle_length_td(g, td);
          r.checks.push_back({"dp_length_matches", dp == lcs.length ? Outcome::Pass : Outcome::Fail,
                              "dp " + std::to_string(dp) + " enumeration " + std::to_string(lcs.length)});
        }
        if (k == 3) run_width3_checks(g, td, tr, tw, bic, r.checks);
      }
      premise_not_met_from(r.checks, k == 3 ? "invalid decomposition" : "needs a width-3 decomposition");
    }

    // Side condition of the lct > 1 argument on 2-connected treewidth-3 graphs.
    std::erase_if(r.checks, [](const CheckResult& c) { return c.name == "long_cycle_bound"; });
    if (bic && tw == 3 && tr.lct > 1)
      r.checks.push_back({"long_cycle_bound", lcs.length >= 5 ? Outcome::Pass : Outcome::Fail,
                          "L " + std::to_string(lcs.length)});
    else
      r.checks.push_back({"long_cycle_bound", Outcome::VacuousPass, "lct > 1 does not occur here"});
    r.transversal = std::move(tr);
  } catch (const CapExceeded& e) {
    r.status = "out-of-scope";
    r.note = e.what();
    r.checks.clear();
  } catch (const Error& e) {
    r.status = "error";
    r.note = e.what();
  }
  r.seconds = seconds_since(t0);
  return r;
}

std::string to_json_line(const GraphReport& r) {
  json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "graph";
  j["index"] = r.index;
  j["graph6"] = r.graph6;
  j["source"] = r.source;
  j["n"] = r.n;
  j["m"] = r.m;
  j["biconnected"] = r.biconnected;
  j["treewidth"] = r.treewidth;
  j["status"] = r.status;
  if (!r.note.empty()) j["note"] = r.note;
  if (r.length > 0) {
    j["longest_cycle_length"] = r.length;
    j["longest_cycle_count"] = r.cycle_count;
    j["lct"] = r.lct;
    j["witness"] = vertex_list(r.witness);
  }
  json checks = json::object();
  for (const auto& c : r.checks) {
    json e;
    e["outcome"] = std::string(to_string(c.outcome));
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks[c.name] = std::move(e);
  }
  j["checks"] = std::move(checks);
  j["timing"] = {{"seconds", r.seconds}};
  return j.dump();
}

std::string strip_timing(std::string_view json_line) {
  json j = json::parse(json_line);
  j.erase("timing");
  return j.dump();
}

namespace {

std::string persist(const std::string& dir, const std::string& name, const std::string& text) {
  std::filesystem::create_directories(dir);
  const auto path = (std::filesystem::path(dir) / name).string();
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
  return path;
}

std::string verify_bundle(const GraphReport& r) {
  std::vector<std::string> extra;
  extra.push_back("source " + r.source);
  for (const auto& c : r.checks)
    if (c.outcome == Outcome::Fail) extra.push_back("failed " + c.name + " " + c.detail);
  if (r.status == "error") extra.push_back("error " + r.note);
  if (r.transversal && r.transversal->lct >= 1)
    return write_bundle(r.graph, *r.transversal, std::min(r.transversal->lct - 1, 2), extra);
  std::string text = "graph6 " + r.graph6 + "\n";
  for (const auto& line : extra) text += line + "\n";
  return text;
}

json header(std::string_view command, const CampaignOptions& opts, std::size_t count) {
  json h;
  h["schema"] = kSchemaVersion;
  h["kind"] = "header";
  h["command"] = command;
  h["source"] = opts.source_description;
  h["graphs"] = count;
  h["strict"] = opts.verify.strict;
  h["enumeration_cap"] = opts.verify.enumeration.max_order;
  return h;
}

}  // namespace

CampaignSummary run_verify(const std::vector<CorpusItem>& items, const CampaignOptions& opts, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  CampaignSummary s;
  out << header("verify", opts, items.size()).dump() << "\n";
  std::map<std::string, std::array<int, 4>> tallies;
  ordered_parallel<GraphReport>(
      items.size(), opts.workers,
      [&](std::size_t i) {
        GraphReport r = verify_graph(items[i], opts.verify);
        r.index = i;
        return r;
      },
      [&](std::size_t i, GraphReport&& r) {
        ++s.graphs;
        if (r.status == "out-of-scope") ++s.out_of_scope;
        if (r.status == "error") ++s.errors;
        for (const auto& c : r.checks) ++tallies[c.name][outcome_slot(c.outcome)];
        if (r.failed()) {
          ++s.failures;
          if (!opts.counterexample_dir.empty())
            s.bundles.push_back(persist(opts.counterexample_dir, "verify-" + std::to_string(i) + ".txt", verify_bundle(r)));
        }
        out << to_json_line(r) << "\n";
      });
  for (const auto& name : check_names())
    if (tallies.contains(name)) s.tallies.emplace_back(name, tallies[name]);
  s.exit_code = s.failures ? kExitCheckFailure : kExitOk;

  json sum;
  sum["schema"] = kSchemaVersion;
  sum["kind"] = "summary";
  sum["graphs"] = s.graphs;
  sum["failures"] = s.failures;
  sum["out_of_scope"] = s.out_of_scope;
  sum["errors"] = s.errors;
  json t = json::object();
  for (const auto& [name, c] : s.tallies)
    t[name] = {{"pass", c[0]}, {"fail", c[1]}, {"premise-not-met", c[2]}, {"vacuous-pass", c[3]}};
  sum["tallies"] = std::move(t);
  sum["bundles"] = s.bundles;
  sum["exit_code"] = s.exit_code;
  sum["timing"] = {{"seconds", seconds_since(t0)}};
  out << sum.dump() << "\n";
  out.flush();
  return s;
}

ConjectureRecord scan_graph(const CorpusItem& item, const EnumerationOptions& opts,
                            const std::function<Finding(const Graph&, const EnumerationOptions&)>& scan) {
  const auto t0 = std::chrono::steady_clock::now();
  ConjectureRecord r;
  r.source = item.source;
  r.n = item.graph.order();
  r.m = item.graph.size();
  try {
    r.graph6 = write_graph6(item.graph);
    Finding f = scan ? scan(item.graph, opts) : conjecture_scan(item.graph, opts);
    r.finding = std::string(to_string(f.kind));
    r.length = f.transversal.family.length;
    r.cycle_count = static_cast<long>(f.transversal.family.cycles.size());
    r.lct = f.transversal.lct;
    r.witness = f.transversal.witness;
    r.bundle = std::move(f.bundle);
  } catch (const Error& e) {
    r.finding = "out-of-scope";
    r.note = e.what();
  }
  r.seconds = seconds_since(t0);
  return r;
}

std::string to_json_line(const ConjectureRecord& r) {
  json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "finding";
  j["index"] = r.index;
  j["graph6"] = r.graph6;
  j["source"] = r.source;
  j["n"] = r.n;
  j["m"] = r.m;
  j["finding"] = r.finding;
  if (!r.note.empty()) j["note"] = r.note;
  if (r.length > 0) {
    j["longest_cycle_length"] = r.length;
    j["longest_cycle_count"] = r.cycle_count;
    j["lct"] = r.lct;
    j["witness"] = vertex_list(r.witness);
  }
  j["timing"] = {{"seconds", r.seconds}};
  return j.dump();
}

CampaignSummary run_conjecture(const std::vector<CorpusItem>& items, const CampaignOptions& opts, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  CampaignSummary s;
  out << header("conjecture", opts, items.size()).dump() << "\n";
  std::map<int, int> histogram;
  ordered_parallel<ConjectureRecord>(
      items.size(), opts.workers,
      [&](std::size_t i) {
        ConjectureRecord r = scan_graph(items[i], opts.verify.enumeration, opts.scan);
        r.index = i;
        return r;
      },
      [&](std::size_t i, ConjectureRecord&& r) {
        ++s.graphs;
        if (r.finding == "out-of-scope") ++s.out_of_scope;
        if (r.lct > 0) ++histogram[r.lct];
        json line = json::parse(to_json_line(r));
        if (!r.bundle.empty()) {
          ++s.counterexamples;
          if (!opts.counterexample_dir.empty()) {
            const auto path = persist(opts.counterexample_dir, "counterexample-" + std::to_string(i) + ".txt",
                                      r.bundle + "source " + r.source + "\n");
            s.bundles.push_back(path);
            line["bundle"] = path;
          }
        }
        out << line.dump() << "\n";
      });
  s.exit_code = s.counterexamples ? kExitCounterexample : kExitOk;

  json sum;
  sum["schema"] = kSchemaVersion;
  sum["kind"] = "summary";
  sum["graphs"] = s.graphs;
  sum["consistent"] = s.graphs - s.out_of_scope - s.counterexamples;
  sum["counterexamples"] = s.counterexamples;
  sum["out_of_scope"] = s.out_of_scope;
  json h = json::object();
  for (auto [k, c] : histogram) h[std::to_string(k)] = c;
  sum["lct_histogram"] = std::move(h);
  sum["bundles"] = s.bundles;
  sum["exit_code"] = s.exit_code;
  sum["timing"] = {{"seconds", seconds_since(t0)}};
  out << sum.dump() << "\n";
  out.flush();
  return s;
}

BundleCheck reverify_persisted(std::string_view text, const VerifyOptions& opts) {
  std::istringstream in{std::string(text)};
  std::string line, g6;
  std::vector<std::string> failed;
  bool evidence = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "graph6") ls >> g6;
    if (key == "longest_cycle_length") evidence = true;
    if (key == "failed") {
      std::string name;
      ls >> name;
      failed.push_back(name);
    }
  }
  if (g6.empty()) return {false, "missing graph6 line"};
  std::string message;
  if (evidence) {
    const BundleCheck ev = reverify_bundle(text, opts.enumeration);
    if (!ev.ok) return ev;
    message = ev.message;
  }
  if (!failed.empty()) {
    Graph g;
    try {
      g = parse_graph6(g6);
    } catch (const ParseError& e) {
      return {false, std::string("graph6: ") + e.what()};
    }
    const GraphReport r = verify_graph({g, std::nullopt, "bundle"}, opts);
    for (const auto& name : failed) {
      const CheckResult* c = r.check(name);
      if (!c || c->outcome != Outcome::Fail) return {false, "check " + name + " no longer fails"};
    }
    message += (message.empty() ? "" : "; ") + std::to_string(failed.size()) + " failing checks reproduce";
  }
  return {true, message.empty() ? "bundle holds no claims" : message};
}

}  // namespace lct::harness

namespace lct::harness {

std::vector<FixtureFact> separation_example_facts() {
  using I = named::SeparationExampleIds;
  const Graph g = named::separation_example();
  const VertexSet s{I::a, I::b, I::c, I::d};
  const PathSegment p1({I::v1, I::a, I::v5});
  const PathSegment p2({I::v3, I::c, I::d, I::b, I::v4});
  const PathSegment p2_twin({I::v1, I::b, I::c, I::d, I::v2});
  const PathSegment cd({I::c, I::d});
  const Cycle c1({I::v1, I::b, I::v2, I::d});
  const Cycle c2({I::v3, I::v4, I::c, I::a, I::b});
  const Cycle c2_twin({I::v1, I::b, I::c, I::v5, I::a});
  const Cycle abd({I::a, I::b, I::d});
  auto is = [&](VertexSet x, int k, Fencing f) { return k_intersect(x, s).count == k && cross_or_fence(g, x, s) == f; };
  auto fenced = [&](VertexSet x) { return cross_or_fence(g, x, s) == Fencing::Fenced; };
  const bool in_graph = p1.lies_in(g) && p2.lies_in(g) && p2_twin.lies_in(g) && cd.lies_in(g) && c1.lies_in(g) &&
                        c2.lies_in(g) && c2_twin.lies_in(g) && abd.lies_in(g);
  return {
      {"all named paths and cycles lie in the graph", in_graph},
      {"P1 = v1 a v5 1-crosses S", is(p1.vertices(), 1, Fencing::Crosses)},
      {"P2 = v3 c d b v4 is 3-fenced by S", is(p2.vertices(), 3, Fencing::Fenced)},
      {"C1 = v1 b v2 d 2-crosses S", is(c1.vertices(), 2, Fencing::Crosses)},
      {"C2 = v3 v4 c a b is 3-fenced by S", is(c2.vertices(), 3, Fencing::Fenced)},
      {"path c d is fenced by S", fenced(cd.vertices())},
      {"cycle a b d a is fenced by S", fenced(abd.vertices())},
      {"P2 is S-equivalent to v1 b c d v2", s_equivalent(p2, p2_twin, s)},
      {"C2 is S-equivalent to v1 b c v5 a", s_equivalent(c2, c2_twin, s)},
  };
}

}  // namespace lct::harness
