#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lct/conjecture.hpp"
#include "lct/decomposition.hpp"
#include "lct/errors.hpp"
#include "lct/generator.hpp"
#include "lct/graph.hpp"
#include "lct/longest_cycles.hpp"
#include "lct/transversal.hpp"
#include "lct/treewidth.hpp"

namespace lct::harness {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kExitOk = 0, kExitCheckFailure = 1, kExitConfig = 2, kExitCounterexample = 3 };

/// Bad corpus, flags or generation spec.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct CorpusItem {
  Graph graph;
  /// Decomposition shipped by the generator, if any.
  std::optional<TreeDecomposition> decomposition;
  std::string source;
};

/// graph6 lines; blank lines and lines starting with '#' are skipped.
std::vector<CorpusItem> read_corpus(std::istream& in, std::string_view name);
std::vector<CorpusItem> load_corpus(const std::string& path);
std::vector<CorpusItem> generated_corpus(const GenSpec& spec);

struct VerifyHooks {
  /// Replaces the transversal computation (fault injection).
  std::function<TransversalResult(const Graph&, const LongestCycleSet&)> lct;
};

struct VerifyOptions {
  EnumerationOptions enumeration;
  int treewidth_cap = kDefaultTreewidthCap;
  bool strict = false;
  VerifyHooks hooks;
};

struct CheckResult {
  std::string name;
  Outcome outcome = Outcome::PremiseNotMet;
  std::string detail;
};

struct GraphReport {
  std::size_t index = 0;
  std::string graph6;
  std::string source;
  int n = 0;
  int m = 0;
  bool biconnected = false;
  int treewidth = -1;
  /// "checked", "out-of-scope" or "error".
  std::string status = "checked";
  std::string note;
  int length = 0;
  long cycle_count = 0;
  int lct = 0;
  VertexSet witness;
  std::vector<CheckResult> checks;
  double seconds = 0;
  /// Kept for evidence bundles.
  std::optional<TransversalResult> transversal;
  Graph graph;

  bool failed() const;
  const CheckResult* check(std::string_view name) const;
};

/// Runs every check on one graph. Never throws for graph-level problems; they
/// land in status/note.
GraphReport verify_graph(const CorpusItem& item, const VerifyOptions& opts);

std::string to_json_line(const GraphReport& r);
/// The same line without its "timing" member.
std::string strip_timing(std::string_view json_line);

struct CampaignOptions {
  VerifyOptions verify;
  int workers = 1;
  /// Empty: do not persist bundles.
  std::string counterexample_dir;
  /// Written into the header record.
  std::string source_description;
  /// Replaces conjecture_scan (fault injection).
  std::function<Finding(const Graph&, const EnumerationOptions&)> scan;
};

struct CampaignSummary {
  int graphs = 0;
  int failures = 0;
  int out_of_scope = 0;
  int errors = 0;
  int counterexamples = 0;
  std::vector<std::string> bundles;
  /// Per check: counts of pass, fail, premise-not-met, vacuous-pass.
  std::vector<std::pair<std::string, std::array<int, 4>>> tallies;
  int exit_code = kExitOk;
};

/// Header record, one record per graph in corpus order, summary record.
CampaignSummary run_verify(const std::vector<CorpusItem>& items, const CampaignOptions& opts, std::ostream& out);

struct ConjectureRecord {
  std::size_t index = 0;
  std::string graph6;
  std::string source;
  int n = 0;
  int m = 0;
  std::string finding;
  std::string note;
  int length = 0;
  long cycle_count = 0;
  int lct = 0;
  VertexSet witness;
  std::string bundle;
  double seconds = 0;
};

ConjectureRecord scan_graph(const CorpusItem& item, const EnumerationOptions& opts,
                            const std::function<Finding(const Graph&, const EnumerationOptions&)>& scan = {});
std::string to_json_line(const ConjectureRecord& r);

/// Findings file: header, one finding per graph, summary. Exit code 3 when a
/// counterexample turns up.
CampaignSummary run_conjecture(const std::vector<CorpusItem>& items, const CampaignOptions& opts, std::ostream& out);

/// Re-checks a persisted bundle: the evidence itself, then every "failed <check>"
/// line by running the checks again.
BundleCheck reverify_persisted(std::string_view text, const VerifyOptions& opts);

/// Applies `work` to every item on `workers` threads and hands results to
/// `sink` in index order from the calling thread.
template <class Out>
void ordered_parallel(std::size_t count, int workers, const std::function<Out(std::size_t)>& work,
                      const std::function<void(std::size_t, Out&&)>& sink);

}  // namespace lct::harness

#include "harness_parallel.hpp"

namespace lct::harness {

/// The classifications stated for the bundled 9-vertex separation example.
struct FixtureFact {
  std::string claim;
  bool holds = false;
};
std::vector<FixtureFact> separation_example_facts();

}  // namespace lct::harness
