#include "lct/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "lct/errors.hpp"
#include "lct/graph6.hpp"

namespace lct {

namespace {

std::vector<int> refine_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n);
  for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = -1;
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> around;
      for (Vertex u : g.neighbor_set(v)) around.push_back(color[u]);
      std::sort(around.begin(), around.end());
      sig[v].insert(sig[v].end(), around.begin(), around.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int r = 0;
    for (auto& [s, id] : rank) id = r++;
    for (Vertex v = 0; v < n; ++v) color[v] = rank[sig[v]];
    if (r == classes) return color;
    classes = r;
  }
}

struct Search {
  const Graph& g;
  int n;
  std::vector<int> cell_of_pos;
  std::vector<int> color;
  std::vector<Vertex> order;
  std::vector<std::uint32_t> cols, best_cols;
  std::vector<Vertex> best_order;
  bool have_best = false;
  std::uint64_t used = 0;
  std::uint64_t version = 0;

  std::uint32_t column(Vertex v, int depth) const {
    std::uint32_t c = 0;
    for (int i = 0; i < depth; ++i) c = (c << 1) | (g.adjacent(v, order[i]) ? 1U : 0U);
    return c;
  }

  void run(int depth, bool greater) {
    if (depth == n) {
      best_cols = cols;
      best_order = order;
      have_best = true;
      ++version;
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if ((used >> v) & 1U || color[v] != cell_of_pos[depth]) continue;
      const std::uint32_t c = column(v, depth);
      bool next = greater || !have_best;
      if (!next) {
        if (c < best_cols[depth]) continue;
        next = c > best_cols[depth];
      }
      const std::uint64_t before = version;
      order[depth] = v;
      cols[depth] = c;
      used |= std::uint64_t{1} << v;
      run(depth + 1, next);
      used &= ~(std::uint64_t{1} << v);
      if (version != before) greater = false;
    }
  }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  const int n = g.order();
  if (n > kCanonicalMaxOrder) throw CapExceeded("canonical labeling is limited to " + std::to_string(kCanonicalMaxOrder) + " vertices");
  Search s{g, n, {}, refine_colors(g), std::vector<Vertex>(n), std::vector<std::uint32_t>(n), {}, {}};
  s.cell_of_pos = s.color;
  std::sort(s.cell_of_pos.begin(), s.cell_of_pos.end());
  s.run(0, false);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[s.best_order[i]] = i;
  return perm;
}

Graph canonical_form(const Graph& g) { return g.relabeled(canonical_labeling(g)); }

std::string canonical_key(const Graph& g) { return write_graph6(canonical_form(g)); }

}  // namespace lct
