#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "harness.hpp"
#include "lct/classifier.hpp"
#include "lct/connectivity.hpp"
#include "lct/families.hpp"
#include "lct/graph6.hpp"

using namespace lct;
using namespace lct::harness;

namespace {

struct Common {
  std::string corpus;
  std::string generate;
  std::optional<std::uint64_t> seed;
  int max_n = kDefaultEnumerationCap;
  int workers = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  std::string out;
  std::string counterexample_dir;
  bool strict = false;
};

void add_source_flags(CLI::App* cmd, Common& c) {
  auto* corpus = cmd->add_option("--corpus", c.corpus, "graph6 corpus file");
  auto* gen = cmd->add_option("--generate", c.generate, "generation spec, e.g. random:k=3,n=9-14,count=1000");
  corpus->excludes(gen);
  cmd->add_option("--seed", c.seed, "seed overriding the spec's seed");
}

void add_campaign_flags(CLI::App* cmd, Common& c) {
  add_source_flags(cmd, c);
  cmd->add_option("--max-n", c.max_n, "enumeration cap on the vertex count")->check(CLI::Range(3, 62));
  cmd->add_option("--workers", c.workers, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--out", c.out, "report file (default stdout)");
  cmd->add_option("--counterexample-dir", c.counterexample_dir, "directory for evidence bundles");
  cmd->add_flag("--strict-preconditions", c.strict, "mark graphs outside the hypotheses out-of-scope");
}

GenSpec spec_of(const Common& c) {
  GenSpec s = GenSpec::parse(c.generate);
  if (c.seed) s.seed = *c.seed;
  return s;
}

std::vector<CorpusItem> corpus_of(const Common& c, std::string& description) {
  if (!c.corpus.empty()) {
    description = c.corpus;
    return load_corpus(c.corpus);
  }
  if (!c.generate.empty()) {
    const GenSpec s = spec_of(c);
    description = s.to_string();
    return generated_corpus(s);
  }
  throw ConfigError("one of --corpus or --generate is required");
}

template <class F>
int with_output(const std::string& path, F&& f) {
  if (path.empty()) return f(std::cout);
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  return f(out);
}

CampaignOptions campaign_options(const Common& c, const std::string& description) {
  CampaignOptions o;
  o.verify.enumeration.max_order = c.max_n;
  o.verify.strict = c.strict;
  o.workers = c.workers;
  o.counterexample_dir = c.counterexample_dir;
  o.source_description = description;
  return o;
}

void print_tallies(const CampaignSummary& s) {
  std::cerr << s.graphs << " graphs, " << s.failures << " failing, " << s.out_of_scope << " out of scope, " << s.errors
            << " errors\n";
  for (const auto& [name, c] : s.tallies)
    std::cerr << "  " << name << ": pass " << c[0] << ", fail " << c[1] << ", premise-not-met " << c[2]
              << ", vacuous-pass " << c[3] << "\n";
}

std::string set_text(VertexSet s, std::span<const char* const> names = {}) {
  std::string out = "{";
  for (Vertex v : s) {
    if (out.size() > 1) out += ",";
    out += names.empty() ? std::to_string(v) : names[v];
  }
  return out + "}";
}

std::string posture_text(const CyclePosture& p) {
  switch (p.tag) {
    case CyclePosture::Tag::Inside: return "inside";
    case CyclePosture::Tag::Outside: return "outside";
    case CyclePosture::Tag::Jump: return std::to_string(p.ell) + "-jump";
  }
  return "?";
}

Graph graph_argument(const std::string& g6, bool fixture) {
  if (fixture) return named::separation_example();
  if (g6.empty()) throw ConfigError("a graph6 string or --fixture is required");
  return parse_graph6(g6);
}

int inspect(const Graph& g, bool fixture, bool families, int max_n) {
  std::span<const char* const> names = fixture ? named::fixture_names() : std::span<const char* const>{};
  std::cout << "graph6 " << write_graph6(g) << "\n";
  std::cout << "n " << g.order() << "\nm " << g.size() << "\nedges";
  for (auto [u, v] : g.edges()) std::cout << ' ' << u << '-' << v;
  std::cout << "\n";
  const bool bic = is_biconnected(g);
  std::cout << "biconnected " << (bic ? "yes" : "no") << "\n";
  const auto twr = exact_treewidth(g);
  std::cout << "treewidth " << twr.width << "\n";
  std::optional<TreeDecomposition> td;
  const int k = std::max(3, twr.width);
  if (g.order() >= k + 1) {
    td = make_full(g, twr.decomposition, k);
    std::cout << "full decomposition: " << td->node_count() << " bags, width " << td->width() << "\n";
    for (Node t = 0; t < td->node_count(); ++t) std::cout << "  bag " << t << " " << set_text(td->bag(t), names) << "\n";
    std::cout << "  tree edges";
    for (auto [s, t] : td->tree_edges()) std::cout << ' ' << s << '-' << t;
    std::cout << "\n";
  }
  EnumerationOptions eo;
  eo.max_order = max_n;
  const auto lcs = enumerate_longest_cycles(g, eo);
  std::cout << "longest_cycle_length " << lcs.length << "\nlongest_cycle_count " << lcs.cycles.size() << "\n";
  if (lcs.cycles.empty()) return kExitOk;
  for (std::size_t i = 0; i < lcs.cycles.size() && i < 50; ++i) {
    std::cout << "  cycle " << i;
    for (Vertex v : lcs.cycles[i].sequence()) std::cout << ' ' << (names.empty() ? std::to_string(v) : names[v]);
    std::cout << "\n";
  }
  if (lcs.cycles.size() > 50) std::cout << "  ...\n";
  const auto tr = transversal_of(lcs, g.order());
  std::cout << "lct " << tr.lct << " witness " << set_text(tr.witness, names) << "\n";

  if (families && td && k == 3) {
    for (Node t = 0; t < td->node_count(); ++t) {
      const BagContext ctx(*td, t);
      const auto f = build_families(g, ctx, lcs);
      std::cout << "node " << t << " bag " << set_text(f.bag, names) << ": 2-crossing " << f.x2.size()
                << ", fenced<=3 " << f.fenced3.size() << "\n";
      for (const auto& tf : f.triples) {
        std::cout << "  triple " << set_text(tf.delta, names) << ": meets-exactly " << tf.three_at_delta.size()
                  << ", 2-jump " << tf.two_jump[0].size() << "/" << tf.two_jump[1].size() << "/" << tf.two_jump[2].size()
                  << ", 3-jump " << tf.three_jump.size() << ", inside " << set_text(ctx.with_delta(tf.delta).inside_vertices(), names)
                  << "\n";
        const BagContext dctx = ctx.with_delta(tf.delta);
        for (std::size_t i = 0; i < lcs.cycles.size() && i < 20; ++i)
          if ((lcs.cycles[i].vertices() & tf.delta).size() >= 2)
            std::cout << "    cycle " << i << " " << posture_text(cycle_posture(dctx, lcs.cycles[i])) << "\n";
      }
    }
  }
  if (fixture) {
    std::cout << "separation claims for S = {a,b,c,d}\n";
    bool all = true;
    for (const auto& f : separation_example_facts()) {
      std::cout << "  " << (f.holds ? "holds " : "FAILS ") << f.claim << "\n";
      all = all && f.holds;
    }
    if (!all) return kExitCheckFailure;
  }
  return kExitOk;
}

int directed_forest_cmd(const Graph& g, int max_n) {
  const auto td = full_tree_decomposition(g, 3);
  EnumerationOptions eo;
  eo.max_order = max_n;
  const auto tr = compute_lct(g, eo);
  const auto df = directed_forest(g, td, tr.family);
  std::cout << "nodes " << td.node_count() << "\nlct " << tr.lct << "\narcs";
  for (auto [s, t] : df.arcs) std::cout << ' ' << s << "->" << t;
  std::cout << "\nsinks";
  for (Node t : df.sinks) std::cout << ' ' << t;
  std::cout << "\nantipodal";
  for (auto [s, t] : df.antipodal) std::cout << ' ' << s << "<->" << t;
  std::cout << "\nmaximal_path";
  for (Node t : df.maximal_path) std::cout << ' ' << t;
  std::cout << "\nhalts_at_antipodal " << (df.halts_at_antipodal ? "yes" : "no") << "\n";
  if (df.arcs.empty())
    std::cout << "construction halts: no node has a fenced longest cycle reaching into a branch\n";
  else if (df.halts_at_antipodal)
    std::cout << "construction halts at an antipodal pair; lct " << (tr.lct == 1 ? "is 1, so no contradiction arises" : "> 1") << "\n";
  else
    std::cout << "construction halts at node " << df.maximal_path.back() << " without an antipodal pair\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Longest-cycle transversals in graphs of treewidth at most 3"};
  app.require_subcommand(1);

  Common verify_c, conj_c, gen_c;
  auto* verify = app.add_subcommand("verify", "run every check over a corpus");
  add_campaign_flags(verify, verify_c);
  auto* conj = app.add_subcommand("conjecture", "compute lct over a corpus and report two-vertex transversals");
  add_campaign_flags(conj, conj_c);

  std::string g6, bundle;
  bool fixture = false, families = false;
  int inspect_max_n = kDefaultEnumerationCap;
  auto* insp = app.add_subcommand("inspect", "describe one graph or re-check a bundle");
  insp->add_option("graph6", g6, "graph6 string");
  insp->add_flag("--fixture", fixture, "use the bundled 9-vertex separation example");
  insp->add_flag("--families", families, "print per-bag families and postures");
  insp->add_option("--bundle", bundle, "re-verify an evidence bundle file");
  insp->add_option("--max-n", inspect_max_n, "enumeration cap")->check(CLI::Range(3, 62));

  std::string df_g6;
  bool df_fixture = false;
  int df_max_n = kDefaultEnumerationCap;
  auto* df = app.add_subcommand("directed-forest", "orient the decomposition tree by fenced longest cycles");
  df->add_option("graph6", df_g6, "graph6 string");
  df->add_flag("--fixture", df_fixture, "use the bundled 9-vertex separation example");
  df->add_option("--max-n", df_max_n, "enumeration cap")->check(CLI::Range(3, 62));

  auto* gen = app.add_subcommand("generate", "write a generated corpus as graph6 lines");
  add_source_flags(gen, gen_c);
  gen->add_option("--out", gen_c.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*verify) {
      std::string desc;
      const auto items = corpus_of(verify_c, desc);
      const auto opts = campaign_options(verify_c, desc);
      return with_output(verify_c.out, [&](std::ostream& out) {
        const auto s = run_verify(items, opts, out);
        print_tallies(s);
        return s.exit_code;
      });
    }
    if (*conj) {
      std::string desc;
      const auto items = corpus_of(conj_c, desc);
      const auto opts = campaign_options(conj_c, desc);
      return with_output(conj_c.out, [&](std::ostream& out) {
        const auto s = run_conjecture(items, opts, out);
        std::cerr << s.graphs << " graphs, " << s.counterexamples << " counterexamples, " << s.out_of_scope
                  << " out of scope\n";
        for (const auto& b : s.bundles) std::cerr << "  bundle " << b << "\n";
        return s.exit_code;
      });
    }
    if (*insp) {
      if (!bundle.empty()) {
        std::ifstream in(bundle);
        if (!in) throw ConfigError("cannot read " + bundle);
        std::stringstream ss;
        ss << in.rdbuf();
        VerifyOptions vo;
        vo.enumeration.max_order = inspect_max_n;
        const auto r = reverify_persisted(ss.str(), vo);
        std::cout << (r.ok ? "bundle verified: " : "bundle REJECTED: ") << r.message << "\n";
        return r.ok ? kExitOk : kExitCheckFailure;
      }
      return inspect(graph_argument(g6, fixture), fixture, families, inspect_max_n);
    }
    if (*df) return directed_forest_cmd(graph_argument(df_g6, df_fixture), df_max_n);
    if (*gen) {
      if (gen_c.generate.empty() || !gen_c.corpus.empty()) throw ConfigError("generate takes --generate, not --corpus");
      const auto items = generated_corpus(spec_of(gen_c));
      return with_output(gen_c.out, [&](std::ostream& out) {
        out << "# " << spec_of(gen_c).to_string() << "\n";
        for (const auto& it : items) out << write_graph6(it.graph) << "\n";
        return kExitOk;
      });
    }
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
