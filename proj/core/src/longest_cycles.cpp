#include "lct/longest_cycles.hpp"

#include <algorithm>
#include <string>

#include "lct/connectivity.hpp"
#include "lct/errors.hpp"

namespace lct {

std::vector<VertexSet> LongestCycleSet::vertex_sets() const {
  std::vector<VertexSet> out;
  out.reserve(cycles.size());
  for (const auto& c : cycles) out.push_back(c.vertices());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

class Enumerator {
 public:
  Enumerator(const Graph& g, const EnumerationOptions& opts) : g_(g), opts_(opts) {
    if (opts.time_budget) deadline_ = std::chrono::steady_clock::now() + *opts.time_budget;
  }

  LongestCycleSet run() {
    const int n = g_.order();
    for (Vertex s = 0; s < n; ++s) {
      if (n - s < best_) break;
      start_ = s;
      start_nb_ = g_.neighbor_mask(s);
      const std::uint64_t above = g_.vertices().mask() & ~((std::uint64_t{2} << s) - 1);
      path_.assign(1, s);
      extend(s, above);
    }
    LongestCycleSet out;
    out.length = best_;
    out.search_nodes = nodes_;
    out.cycles.reserve(found_.size());
    for (auto& seq : found_) out.cycles.emplace_back(std::move(seq));
    std::sort(out.cycles.begin(), out.cycles.end());
    return out;
  }

 private:
  void check_budget() {
    if (!deadline_ || (nodes_ & 0xFFF) != 0) return;
    if (std::chrono::steady_clock::now() > *deadline_) throw CapExceeded("longest-cycle enumeration exceeded its time budget");
  }

  // `free` holds unvisited vertices larger than the start vertex.
  void extend(Vertex cur, std::uint64_t free) {
    ++nodes_;
    check_budget();
    const int len = static_cast<int>(path_.size());
    for (Vertex w : VertexSet(g_.neighbor_mask(cur) & free)) {
      const std::uint64_t rest = free & ~(std::uint64_t{1} << w);
      path_.push_back(w);
      if (len + 1 >= 3 && (start_nb_ >> w & 1U) && path_[1] < w) record();
      const VertexSet reach = reach_within(g_, w, VertexSet(rest | (std::uint64_t{1} << w)));
      if (len + reach.size() >= std::max(best_, 3) && (reach.mask() & start_nb_ & rest) != 0) extend(w, rest);
      path_.pop_back();
    }
  }

  void record() {
    const int len = static_cast<int>(path_.size());
    if (len < best_) return;
    if (len > best_) {
      best_ = len;
      found_.clear();
    }
    found_.push_back(path_);
  }

  const Graph& g_;
  const EnumerationOptions& opts_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::vector<Vertex> path_;
  std::vector<std::vector<Vertex>> found_;
  Vertex start_ = 0;
  std::uint64_t start_nb_ = 0;
  int best_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

LongestCycleSet enumerate_longest_cycles(const Graph& g, const EnumerationOptions& opts) {
  if (g.order() > opts.max_order)
    throw CapExceeded("enumeration cap is " + std::to_string(opts.max_order) + " vertices, graph has " +
                      std::to_string(g.order()));
  return Enumerator(g, opts).run();
}

}  // namespace lct
