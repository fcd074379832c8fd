#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "harness.hpp"
#include "lct/graph6.hpp"

using namespace lct;
using namespace lct::harness;
using json = nlohmann::json;

namespace {

std::vector<json> lines_of(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(json::parse(line));
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("lct_unit_" + name);
  std::filesystem::remove_all(p);
  return p;
}

const Graph kTriangles(9, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {6, 7}, {7, 8}, {6, 8}});

}  // namespace

TEST_SUITE("corpus") {
  TEST_CASE("reads graph6 lines, skipping comments") {
    std::istringstream in("# header\nC~\n\nIheA@GUAo\r\n");
    const auto items = read_corpus(in, "mem");
    REQUIRE(items.size() == 2);
    CHECK(items[0].graph == named::complete(4));
    CHECK(items[0].source == "mem:2");
    CHECK(items[1].source == "mem:4");
    CHECK_FALSE(items[0].decomposition);
  }

  TEST_CASE("bad lines name their position") {
    std::istringstream in("C~\nC\n");
    try {
      read_corpus(in, "mem");
      FAIL("accepted");
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find("mem:2") != std::string::npos);
    }
    CHECK_THROWS_AS(load_corpus("/nonexistent/corpus.g6"), ConfigError);
  }

  TEST_CASE("generated corpus carries decompositions") {
    const auto items = generated_corpus(GenSpec::parse("random:k=3,n=9-10,count=3,seed=2"));
    REQUIRE(items.size() == 3);
    for (const auto& it : items) CHECK(it.decomposition.has_value());
    CHECK(items[2].source.ends_with("#2"));
  }
}

TEST_SUITE("verify") {
  TEST_CASE("K4 passes every applicable check") {
    const auto r = verify_graph({named::complete(4), std::nullopt, "k4"}, {});
    CHECK(r.status == "checked");
    CHECK(r.lct == 1);
    CHECK(r.length == 4);
    CHECK_FALSE(r.failed());
    REQUIRE(r.check("single_vertex_transversal"));
    CHECK(r.check("single_vertex_transversal")->outcome == Outcome::Pass);
    CHECK(r.check("dp_length_matches")->outcome == Outcome::Pass);
  }

  TEST_CASE("separation example") {
    const auto r = verify_graph({named::separation_example(), std::nullopt, "fixture"}, {});
    CHECK(r.treewidth == 3);
    CHECK_FALSE(r.failed());
    CHECK(r.check("fenced_or_transversal")->outcome == Outcome::Pass);
    CHECK(r.check("decomposition_valid")->outcome == Outcome::Pass);
    CHECK(r.check("edge_separation")->outcome == Outcome::Pass);
    CHECK(r.check("jump_exclusion")->outcome == Outcome::PremiseNotMet);
    CHECK(r.check("long_cycle_bound")->outcome == Outcome::VacuousPass);
  }

  TEST_CASE("Petersen graph: lct 2, outside the width-3 checks") {
    const auto r = verify_graph({named::petersen(), std::nullopt, "petersen"}, {});
    CHECK(r.status == "checked");
    CHECK(r.lct == 2);
    CHECK(r.treewidth == 4);
    CHECK(r.check("single_vertex_transversal")->outcome == Outcome::PremiseNotMet);
    CHECK(r.check("longest_cycles_meet_twice")->outcome == Outcome::Pass);
    CHECK(r.check("dp_length_matches")->outcome == Outcome::Pass);
    CHECK_FALSE(r.failed());

    VerifyOptions strict;
    strict.strict = true;
    const auto s = verify_graph({named::petersen(), std::nullopt, "petersen"}, strict);
    CHECK(s.status == "out-of-scope");
    CHECK(s.checks.empty());
    CHECK_FALSE(s.failed());
  }

  TEST_CASE("not 2-connected") {
    const auto r = verify_graph({named::path(5), std::nullopt, "path"}, {});
    CHECK(r.note == "acyclic");
    CHECK_FALSE(r.failed());
    VerifyOptions strict;
    strict.strict = true;
    CHECK(verify_graph({named::path(5), std::nullopt, "path"}, strict).status == "out-of-scope");
  }

  TEST_CASE("enumeration cap marks the graph out of scope") {
    VerifyOptions o;
    o.enumeration.max_order = 8;
    const auto r = verify_graph({named::petersen(), std::nullopt, "petersen"}, o);
    CHECK(r.status == "out-of-scope");
    CHECK_FALSE(r.failed());
  }
}

TEST_SUITE("campaigns") {
  TEST_CASE("an injected fault fails the run and leaves a bundle") {
    const auto dir = scratch("fault");
    CampaignOptions o;
    o.counterexample_dir = dir.string();
    o.verify.hooks.lct = [](const Graph& g, const LongestCycleSet& lcs) {
      TransversalResult tr = transversal_of(lcs, g.order());
      tr.lct = 2;
      return tr;
    };
    std::vector<CorpusItem> items{{named::complete(4), std::nullopt, "k4"}};
    std::ostringstream out;
    const auto s = run_verify(items, o, out);
    CHECK(s.exit_code == kExitCheckFailure);
    CHECK(s.failures == 1);
    REQUIRE(s.bundles.size() == 1);
    const auto recs = lines_of(out.str());
    REQUIRE(recs.size() == 3);
    CHECK(recs[1]["checks"]["single_vertex_transversal"]["outcome"] == "fail");
    CHECK(recs[2]["exit_code"] == 1);
    const std::string bundle = slurp(s.bundles[0]);
    CHECK(bundle.find("failed single_vertex_transversal") != std::string::npos);
    // The claimed evidence does not survive a clean re-run.
    CHECK_FALSE(reverify_persisted(bundle, {}).ok);
  }

  TEST_CASE("a counterexample from the scan hook is persisted and re-verifies") {
    const auto dir = scratch("counter");
    CampaignOptions o;
    o.counterexample_dir = dir.string();
    o.scan = [](const Graph& g, const EnumerationOptions& e) {
      Finding f;
      f.transversal = compute_lct(g, e);
      f.kind = f.transversal.lct >= 3 ? Finding::Kind::Counterexample : Finding::Kind::Consistent;
      if (f.kind == Finding::Kind::Counterexample) f.bundle = write_bundle(g, f.transversal);
      return f;
    };
    std::vector<CorpusItem> items{{named::complete(4), std::nullopt, "k4"}, {kTriangles, std::nullopt, "triangles"}};
    std::ostringstream out;
    const auto s = run_conjecture(items, o, out);
    CHECK(s.exit_code == kExitCounterexample);
    CHECK(s.counterexamples == 1);
    REQUIRE(s.bundles.size() == 1);
    const auto recs = lines_of(out.str());
    REQUIRE(recs.size() == 4);
    CHECK(recs[1]["finding"] == "consistent");
    CHECK(recs[2]["finding"] == "COUNTEREXAMPLE");
    CHECK(recs[2]["lct"] == 3);
    const auto check = reverify_persisted(slurp(s.bundles[0]), {});
    CHECK(check.ok);
  }

  TEST_CASE("default scan rejects graphs outside its class") {
    std::vector<CorpusItem> items{{kTriangles, std::nullopt, "triangles"}, {named::complete(6), std::nullopt, "k6"}};
    std::ostringstream out;
    const auto s = run_conjecture(items, {}, out);
    CHECK(s.exit_code == kExitOk);
    CHECK(s.out_of_scope == 2);
  }

  TEST_CASE("empty corpus") {
    std::ostringstream out;
    CHECK(run_verify({}, {}, out).exit_code == kExitOk);
    CHECK(lines_of(out.str()).size() == 2);
    std::ostringstream out2;
    CHECK(run_conjecture({}, {}, out2).exit_code == kExitOk);
  }

  TEST_CASE("reports repeat modulo timing, across worker counts") {
    const auto items = generated_corpus(GenSpec::parse("random:k=3,n=9-11,count=12,seed=4"));
    std::vector<std::string> runs;
    for (int workers : {1, 3}) {
      CampaignOptions o;
      o.workers = workers;
      std::ostringstream out;
      run_verify(items, o, out);
      std::string stripped;
      std::istringstream in(out.str());
      std::string line;
      while (std::getline(in, line)) stripped += strip_timing(line) + "\n";
      runs.push_back(stripped);
    }
    CHECK(runs[0] == runs[1]);
  }
}

TEST_SUITE("bundles") {
  TEST_CASE("three disjoint triangles refute every pair") {
    const auto tr = compute_lct(kTriangles);
    REQUIRE(tr.lct == 3);
    const std::string text = write_bundle(kTriangles, tr);
    CHECK(text.find("refute_size 2") != std::string::npos);
    CHECK(reverify_bundle(text).ok);
    CHECK_THROWS_AS(write_bundle(kTriangles, tr, 3), PreconditionError);
  }

  TEST_CASE("tampering is caught") {
    const auto tr = compute_lct(kTriangles);
    std::string text = write_bundle(kTriangles, tr);
    std::string dropped = text;
    dropped.erase(dropped.find("refute 0 1"), dropped.find('\n', dropped.find("refute 0 1")) - dropped.find("refute 0 1") + 1);
    CHECK_FALSE(reverify_bundle(dropped).ok);
    std::string wrong_len = text;
    wrong_len.replace(wrong_len.find("longest_cycle_length 3"), 22, "longest_cycle_length 4");
    CHECK_FALSE(reverify_bundle(wrong_len).ok);
    std::string other_graph = text;
    other_graph.replace(other_graph.find("graph6 ") + 7, write_graph6(kTriangles).size(),
                        write_graph6(named::complete(9)));
    CHECK_FALSE(reverify_bundle(other_graph).ok);
  }
}

TEST_SUITE("parallel order") {
  TEST_CASE("results arrive in index order") {
    for (int workers : {1, 2, 4}) {
      std::vector<std::size_t> seen;
      ordered_parallel<std::size_t>(
          50, workers, [](std::size_t i) { return i * i; },
          [&](std::size_t i, std::size_t&& v) {
            CHECK(v == i * i);
            seen.push_back(i);
          });
      REQUIRE(seen.size() == 50);
      for (std::size_t i = 0; i < 50; ++i) CHECK(seen[i] == i);
    }
  }

  TEST_CASE("work exceptions reach the caller") {
    CHECK_THROWS(ordered_parallel<int>(
        5, 2, [](std::size_t i) -> int { if (i == 3) throw std::runtime_error("boom"); return 0; },
        [](std::size_t, int&&) {}));
  }
}

TEST_SUITE("fixture facts") {
  TEST_CASE("every stated classification holds") {
    const auto facts = separation_example_facts();
    CHECK(facts.size() == 9);
    for (const auto& f : facts) {
      CAPTURE(f.claim);
      CHECK(f.holds);
    }
  }
}
