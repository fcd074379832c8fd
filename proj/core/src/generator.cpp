#include "lct/generator.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <tuple>

#include "lct/canonical.hpp"
#include "lct/connectivity.hpp"
#include "lct/errors.hpp"
#include "lct/graph6.hpp"

namespace lct {

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

namespace {

template <class T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size())
    throw Error("bad value '" + std::string(value) + "' for " + std::string(key));
  return out;
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

}  // namespace

GenSpec GenSpec::parse(std::string_view text) {
  GenSpec s;
  const auto colon = text.find(':');
  const std::string_view mode = text.substr(0, colon);
  if (mode == "random")
    s.mode = Mode::Random;
  else if (mode == "exhaustive") {
    s.mode = Mode::Exhaustive;
    s.n_min = 0;
    s.n_max = kExhaustiveMaxOrder;
  } else
    throw Error("unknown generation mode '" + std::string(mode) + "'");
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw Error("expected key=value, got '" + std::string(item) + "'");
    const std::string_view key = item.substr(0, eq), value = item.substr(eq + 1);
    if (key == "k") {
      s.k = parse_number<int>(key, value);
    } else if (key == "n") {
      const auto dash = value.find('-');
      s.n_min = parse_number<int>(key, value.substr(0, dash));
      s.n_max = dash == std::string_view::npos ? s.n_min : parse_number<int>(key, value.substr(dash + 1));
    } else if (key == "nmax") {
      s.n_max = parse_number<int>(key, value);
    } else if (key == "count") {
      s.count = parse_number<int>(key, value);
    } else if (key == "p") {
      s.p = parse_number<double>(key, value);
    } else if (key == "biconnected") {
      s.biconnected = parse_number<int>(key, value) != 0;
    } else if (key == "seed") {
      s.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "retries") {
      s.retries = parse_number<int>(key, value);
    } else {
      throw Error("unknown generation key '" + std::string(key) + "'");
    }
  }
  if (s.k < 1) throw Error("k must be at least 1");
  if (s.n_max < s.n_min) throw Error("empty vertex-count range");
  if (s.mode == Mode::Random && s.n_min < s.k + 1) throw Error("a k-tree needs at least k+1 vertices");
  if (s.count < 0) throw Error("count must be non-negative");
  if (!(s.p >= 0.0 && s.p <= 1.0)) throw Error("p must lie in [0, 1]");
  if (s.retries < 0) throw Error("retries must be non-negative");
  return s;
}

std::string GenSpec::to_string() const {
  if (mode == Mode::Exhaustive) return "exhaustive:k=" + std::to_string(k) + ",nmax=" + std::to_string(n_max);
  return "random:k=" + std::to_string(k) + ",n=" + std::to_string(n_min) + "-" + std::to_string(n_max) +
         ",count=" + std::to_string(count) + ",p=" + format_double(p) + ",biconnected=" + (biconnected ? "1" : "0") +
         ",seed=" + std::to_string(seed) + ",retries=" + std::to_string(retries);
}

Generated generate_k_tree(int n, int k, Rng& rng) {
  if (k < 1 || n < k + 1) throw PreconditionError("k-tree needs n >= k+1");
  if (n > kMaxVertices) throw CapExceeded("too many vertices");
  std::vector<Edge> edges;
  std::vector<VertexSet> bags;
  std::vector<TreeEdge> tree;
  struct Clique {
    VertexSet members;
    Node node;
  };
  std::vector<Clique> cliques;

  VertexSet root;
  for (Vertex v = 0; v <= k; ++v) {
    root.insert(v);
    for (Vertex u = 0; u < v; ++u) edges.emplace_back(u, v);
  }
  bags.push_back(root);
  for (Vertex v : root) cliques.push_back({root - VertexSet{v}, 0});

  for (Vertex w = k + 1; w < n; ++w) {
    const Clique c = cliques[rng.below(cliques.size())];
    const Node node = static_cast<Node>(bags.size());
    VertexSet bag = c.members;
    bag.insert(w);
    bags.push_back(bag);
    tree.emplace_back(c.node, node);
    for (Vertex u : c.members) {
      edges.emplace_back(u, w);
      cliques.push_back({bag - VertexSet{u}, node});
    }
  }

  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  rng.shuffle(perm);
  Graph g(n, edges);
  TreeDecomposition td(std::move(bags), std::move(tree), true);
  return {g.relabeled(perm), relabeled(td, perm)};
}

Generated generate_partial_k_tree(int n, int k, double p, bool biconnected, int retries, Rng& rng) {
  Generated out = generate_k_tree(n, k, rng);
  std::vector<Edge> pool = out.graph.edges();
  rng.shuffle(pool);
  const int target = static_cast<int>(std::lround(p * static_cast<double>(pool.size())));
  int deleted = 0, rejected = 0;
  Graph g = out.graph;
  while (deleted < target) {
    if (pool.empty()) throw GenerationError("no edge left to delete; deletion fraction too high");
    const Edge e = pool.back();
    pool.pop_back();
    Graph h = g.without_edge(e.first, e.second);
    if (biconnected && !is_biconnected(h)) {
      if (++rejected > retries) throw GenerationError("retry budget exhausted");
      continue;
    }
    g = std::move(h);
    ++deleted;
  }
  out.graph = std::move(g);
  return out;
}

std::vector<Generated> random_corpus(const GenSpec& spec) {
  Rng rng(spec.seed);
  std::vector<Generated> out;
  out.reserve(spec.count);
  for (int i = 0; i < spec.count; ++i) {
    const int n = rng.between(spec.n_min, spec.n_max);
    out.push_back(generate_partial_k_tree(n, spec.k, spec.p, spec.biconnected, spec.retries, rng));
  }
  return out;
}

namespace {

using Catalog = std::map<std::string, Generated>;

// Inserts the canonical copy of (g, td); returns its key if new.
const std::string* add_canonical(Catalog& cat, const Graph& g, const TreeDecomposition& td) {
  const auto perm = canonical_labeling(g);
  Graph cg = g.relabeled(perm);
  std::string key = write_graph6(cg);
  if (cat.contains(key)) return nullptr;
  auto [it, _] = cat.emplace(std::move(key), Generated{std::move(cg), relabeled(td, perm)});
  return &it->first;
}

}  // namespace

std::vector<Generated> exhaustive_small(int n_max, int k) {
  if (n_max > kExhaustiveMaxOrder) throw CapExceeded("exhaustive generation is limited to " + std::to_string(kExhaustiveMaxOrder) + " vertices");
  if (k < 1 || k + 1 > n_max) throw PreconditionError("exhaustive generation needs k+1 <= n_max");

  Catalog all;
  std::vector<std::string> level;
  {
    const Graph g = named::complete(k + 1);
    level.push_back(*add_canonical(all, g, TreeDecomposition({VertexSet::all(k + 1)}, {}, true)));
  }
  std::vector<std::string> ktrees = level;
  for (int n = k + 2; n <= n_max; ++n) {
    Catalog grown;
    const Vertex w = n - 1;
    for (const auto& key : level) {
      const Generated& base = all.at(key);
      const TreeDecomposition& td = base.decomposition;
      for (Node t = 0; t < td.node_count(); ++t) {
        for (Vertex drop : td.bag(t)) {
          const VertexSet clique = td.bag(t) - VertexSet{drop};
          std::vector<Edge> edges = base.graph.edges();
          for (Vertex u : clique) edges.emplace_back(u, w);
          std::vector<VertexSet> bags = td.bags();
          VertexSet bag = clique;
          bag.insert(w);
          bags.push_back(bag);
          std::vector<TreeEdge> tree = td.tree_edges();
          tree.emplace_back(t, td.node_count());
          add_canonical(grown, Graph(n, edges), TreeDecomposition(std::move(bags), std::move(tree), true));
        }
      }
    }
    level.clear();
    for (auto& [key, gen] : grown) {
      level.push_back(key);
      ktrees.push_back(key);
      all.emplace(key, std::move(gen));
    }
  }

  std::vector<std::string> queue = ktrees;
  while (!queue.empty()) {
    const std::string key = std::move(queue.back());
    queue.pop_back();
    const Generated base = all.at(key);
    for (auto [u, v] : base.graph.edges()) {
      const Graph h = base.graph.without_edge(u, v);
      if (!is_biconnected(h)) continue;
      if (const std::string* added = add_canonical(all, h, base.decomposition)) queue.push_back(*added);
    }
  }

  std::vector<std::pair<std::string, Generated>> items(all.begin(), all.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    return std::make_tuple(a.second.graph.order(), -a.second.graph.size(), std::cref(a.first)) <
           std::make_tuple(b.second.graph.order(), -b.second.graph.size(), std::cref(b.first));
  });
  std::vector<Generated> out;
  out.reserve(items.size());
  for (auto& [key, gen] : items) out.push_back(std::move(gen));
  return out;
}

std::vector<Generated> generate(const GenSpec& spec) {
  if (spec.mode == GenSpec::Mode::Exhaustive) return exhaustive_small(spec.n_max, spec.k);
  return random_corpus(spec);
}

}  // namespace lct
