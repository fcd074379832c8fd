#include "lct/conjecture.hpp"

#include <optional>
#include <set>
#include <sstream>

#include "lct/connectivity.hpp"
#include "lct/errors.hpp"
#include "lct/graph6.hpp"
#include "lct/treewidth.hpp"

namespace lct {

std::string_view to_string(Finding::Kind k) {
  return k == Finding::Kind::Counterexample ? "COUNTEREXAMPLE" : "consistent";
}

Finding conjecture_scan(const Graph& g, const EnumerationOptions& opts) {
  if (!is_biconnected(g)) throw PreconditionError("graph is not 2-connected");
  if (exact_treewidth(g).width > 4) throw PreconditionError("treewidth above 4");
  Finding out;
  out.transversal = compute_lct(g, opts);
  if (out.transversal.lct >= 3) {
    out.kind = Finding::Kind::Counterexample;
    out.bundle = write_bundle(g, out.transversal);
  }
  return out;
}

namespace {

// Calls f on every r-subset of 0..n-1 in lexicographic order.
template <class F>
void for_each_subset(int n, int r, F&& f) {
  std::vector<Vertex> pick(r);
  auto rec = [&](auto&& self, int depth, Vertex from) -> void {
    if (depth == r) {
      f(pick);
      return;
    }
    for (Vertex v = from; v <= n - (r - depth); ++v) {
      pick[depth] = v;
      self(self, depth + 1, v + 1);
    }
  };
  rec(rec, 0, 0);
}

VertexSet set_of(const std::vector<Vertex>& vs) {
  VertexSet out;
  for (Vertex v : vs) out.insert(v);
  return out;
}

}  // namespace

std::string write_bundle(const Graph& g, const TransversalResult& tr, int refute_size,
                         const std::vector<std::string>& extra) {
  if (refute_size < 0 || tr.lct <= refute_size) throw PreconditionError("bundle needs lct above the refuted size");
  std::ostringstream os;
  os << "graph6 " << write_graph6(g) << "\n";
  os << "n " << g.order() << "\n";
  os << "edges";
  for (auto [u, v] : g.edges()) os << ' ' << u << '-' << v;
  os << "\n";
  const auto& cycles = tr.family.cycles;
  os << "longest_cycle_length " << tr.family.length << "\n";
  os << "longest_cycle_count " << cycles.size() << "\n";
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    os << "cycle " << i;
    for (Vertex v : cycles[i].sequence()) os << ' ' << v;
    os << "\n";
  }
  os << "lct " << tr.lct << "\n";
  os << "refute_size " << refute_size << "\n";
  if (refute_size > 0)
    for_each_subset(g.order(), refute_size, [&](const std::vector<Vertex>& pick) {
      const VertexSet s = set_of(pick);
      for (std::size_t i = 0; i < cycles.size(); ++i)
        if (!cycles[i].vertices().intersects(s)) {
          os << "refute";
          for (Vertex v : pick) os << ' ' << v;
          os << ' ' << i << "\n";
          break;
        }
    });
  for (const auto& line : extra) os << line << "\n";
  return os.str();
}

BundleCheck reverify_bundle(std::string_view text, const EnumerationOptions& opts) {
  auto fail = [](std::string m) { return BundleCheck{false, std::move(m)}; };
  std::istringstream in{std::string(text)};
  std::string line, g6;
  int length = -1, refute_size = -1;
  long count = -1;
  std::vector<std::vector<Vertex>> cycles;
  std::vector<std::vector<long>> refutes;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "graph6") {
      ls >> g6;
    } else if (key == "longest_cycle_length") {
      ls >> length;
    } else if (key == "longest_cycle_count") {
      ls >> count;
    } else if (key == "refute_size") {
      ls >> refute_size;
    } else if (key == "cycle") {
      long idx;
      ls >> idx;
      if (idx != static_cast<long>(cycles.size())) return fail("cycle lines out of order");
      std::vector<Vertex> seq;
      for (Vertex v; ls >> v;) seq.push_back(v);
      cycles.push_back(std::move(seq));
    } else if (key == "refute") {
      std::vector<long> nums;
      for (long x; ls >> x;) nums.push_back(x);
      refutes.push_back(std::move(nums));
    }
  }
  if (g6.empty()) return fail("missing graph6 line");
  Graph g;
  try {
    g = parse_graph6(g6);
  } catch (const ParseError& e) {
    return fail(std::string("graph6: ") + e.what());
  }
  if (length < 3 || count < 0 || refute_size < 0) return fail("missing length, count or refute_size");
  if (static_cast<long>(cycles.size()) != count) return fail("cycle count does not match the listed cycles");

  std::set<Cycle> seen;
  std::vector<VertexSet> sets;
  for (const auto& seq : cycles) {
    if (static_cast<int>(seq.size()) != length) return fail("listed cycle has the wrong length");
    for (Vertex v : seq)
      if (v < 0 || v >= g.order()) return fail("cycle vertex out of range");
    std::optional<Cycle> c;
    try {
      c.emplace(seq);
    } catch (const Error&) {
      return fail("listed sequence is not a simple cycle");
    }
    if (!c->lies_in(g)) return fail("listed sequence is not a cycle of the graph");
    if (!seen.insert(*c).second) return fail("duplicate cycle");
    sets.push_back(c->vertices());
  }

  const LongestCycleSet lcs = enumerate_longest_cycles(g, opts);
  if (lcs.length != length) return fail("enumeration finds longest cycle length " + std::to_string(lcs.length));
  if (static_cast<long>(lcs.cycles.size()) != count)
    return fail("enumeration finds " + std::to_string(lcs.cycles.size()) + " longest cycles");

  std::set<std::uint64_t> refuted;
  for (const auto& nums : refutes) {
    if (static_cast<int>(nums.size()) != refute_size + 1) return fail("refute line has the wrong arity");
    VertexSet s;
    for (int j = 0; j < refute_size; ++j) {
      if (nums[j] < 0 || nums[j] >= g.order()) return fail("refuted vertex out of range");
      s.insert(static_cast<Vertex>(nums[j]));
    }
    if (s.size() != refute_size) return fail("refuted vertices repeat");
    const long i = nums.back();
    if (i < 0 || i >= count) return fail("refutation cites a missing cycle");
    if (sets[i].intersects(s)) return fail("refutation cycle meets its vertex set");
    refuted.insert(s.mask());
  }
  std::string missing;
  if (refute_size > 0)
    for_each_subset(g.order(), refute_size, [&](const std::vector<Vertex>& pick) {
      if (missing.empty() && !refuted.contains(set_of(pick).mask())) {
        for (Vertex v : pick) missing += (missing.empty() ? "" : ",") + std::to_string(v);
      }
    });
  if (!missing.empty()) return fail("vertex set {" + missing + "} is not refuted");
  return {true, "no " + std::to_string(refute_size) + " vertices meet all " + std::to_string(count) + " longest cycles"};
}

}  // namespace lct
