#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lct/decomposition.hpp"
#include "lct/graph.hpp"

namespace lct {

/// Seeded stream. Draws go through rejection sampling on top of mt19937_64, so
/// a seed yields the same sequence with any standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }
  /// Uniform in [0, 1) with 53 bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

inline constexpr int kExhaustiveMaxOrder = 8;
inline constexpr int kDefaultRetryBudget = 1000;

/// Text form: "random:k=3,n=9-14,count=1000,p=0.3,biconnected=1,seed=1,retries=1000"
/// or "exhaustive:k=3,nmax=8". Missing keys keep their defaults.
struct GenSpec {
  enum class Mode { Random, Exhaustive };
  Mode mode = Mode::Random;
  int k = 3;
  int n_min = 9;
  int n_max = 14;
  int count = 1000;
  /// Fraction of k-tree edges to delete.
  double p = 0.3;
  bool biconnected = true;
  std::uint64_t seed = 1;
  /// Rejected deletions allowed per graph.
  int retries = kDefaultRetryBudget;

  static GenSpec parse(std::string_view text);
  std::string to_string() const;
  friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

struct Generated {
  Graph graph;
  /// Full decomposition of width k from the construction.
  TreeDecomposition decomposition;
};

/// Random k-tree on n vertices grown from a (k+1)-clique, one bag per added
/// vertex. Vertex ids are shuffled. Throws PreconditionError if n < k+1.
Generated generate_k_tree(int n, int k, Rng& rng);

/// Spanning subgraph of a random k-tree: round(p*m) deletions are attempted on
/// random edges; with `biconnected` set, deletions that would break
/// 2-connectivity are rejected and another edge is tried. Throws
/// GenerationError once `retries` rejections pile up or no edge is left to try.
Generated generate_partial_k_tree(int n, int k, double p, bool biconnected, int retries, Rng& rng);

/// spec.count graphs with n uniform in [n_min, n_max], from one Rng seeded with spec.seed.
std::vector<Generated> random_corpus(const GenSpec& spec);

/// Every k-tree on k+1..n_max vertices and every 2-connected spanning subgraph
/// of one, up to isomorphism, in canonical labeling. Ordered by vertex count,
/// then edge count descending, then graph6. Throws CapExceeded for
/// n_max > kExhaustiveMaxOrder and PreconditionError for k+1 > n_max.
std::vector<Generated> exhaustive_small(int n_max, int k);

/// Dispatches on spec.mode.
std::vector<Generated> generate(const GenSpec& spec);

}  // namespace lct
