#include "lct/cycles.hpp"

#include <algorithm>
#include <set>

#include "lct/errors.hpp"

namespace lct {

namespace {

VertexSet distinct_set(std::span<const Vertex> seq) {
  VertexSet s;
  for (Vertex v : seq) {
    if (v < 0 || v >= kMaxVertices) throw PreconditionError("vertex id out of range");
    if (s.contains(v)) throw PreconditionError("vertex repeated in sequence");
    s.insert(v);
  }
  return s;
}

}  // namespace

PathSegment::PathSegment(std::vector<Vertex> seq) : seq_(std::move(seq)) {
  if (seq_.empty()) throw PreconditionError("empty path");
  set_ = distinct_set(seq_);
}

bool PathSegment::lies_in(const Graph& g) const {
  for (Vertex v : seq_)
    if (v >= g.order()) return false;
  for (std::size_t i = 0; i + 1 < seq_.size(); ++i)
    if (!g.adjacent(seq_[i], seq_[i + 1])) return false;
  return true;
}

std::vector<Vertex> Cycle::canonical(std::span<const Vertex> seq) {
  const std::size_t n = seq.size();
  if (n == 0) return {};
  const std::size_t m = static_cast<std::size_t>(std::min_element(seq.begin(), seq.end()) - seq.begin());
  const bool forward = seq[(m + 1) % n] < seq[(m + n - 1) % n];
  std::vector<Vertex> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = forward ? seq[(m + i) % n] : seq[(m + n - i) % n];
  return out;
}

Cycle::Cycle(std::vector<Vertex> seq) {
  if (seq.size() < 3) throw PreconditionError("a cycle needs at least 3 vertices");
  set_ = distinct_set(seq);
  seq_ = canonical(seq);
}

bool Cycle::lies_in(const Graph& g) const {
  const std::size_t n = seq_.size();
  for (Vertex v : seq_)
    if (v >= g.order()) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (!g.adjacent(seq_[i], seq_[(i + 1) % n])) return false;
  return true;
}

std::vector<PathSegment> parts(const Cycle& c, VertexSet s) {
  const auto& seq = c.sequence();
  const std::size_t n = seq.size();
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < n; ++i)
    if (s.contains(seq[i])) hits.push_back(i);
  if (hits.size() < 2) throw PreconditionError("cycle meets the set fewer than twice");
  std::vector<PathSegment> out;
  for (std::size_t h = 0; h < hits.size(); ++h) {
    const std::size_t from = hits[h];
    const std::size_t to = hits[(h + 1) % hits.size()];
    std::vector<Vertex> seg;
    for (std::size_t i = from;; i = (i + 1) % n) {
      seg.push_back(seq[i]);
      if (i == to && seg.size() > 1) break;
    }
    out.emplace_back(std::move(seg));
  }
  return out;
}

std::pair<PathSegment, PathSegment> tails(const PathSegment& p, Vertex v) {
  const auto& seq = p.sequence();
  auto it = std::find(seq.begin(), seq.end(), v);
  if (it == seq.end()) throw PreconditionError("vertex is not on the path");
  return {PathSegment({seq.begin(), it + 1}), PathSegment({it, seq.end()})};
}

JoinResult join(const PathSegment& p, const PathSegment& q) {
  std::set<Edge> edges;
  auto add = [&](const PathSegment& s) {
    const auto& seq = s.sequence();
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
      edges.insert(std::minmax(seq[i], seq[i + 1]));
  };
  add(p);
  add(q);
  const VertexSet verts = p.vertices() | q.vertices();
  const int nv = verts.size();
  const int ne = static_cast<int>(edges.size());

  std::vector<std::vector<Vertex>> adj(kMaxVertices);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (Vertex v : verts)
    if (adj[v].size() > 2) return Undefined{};

  // Walk from a start vertex; connectivity is confirmed by visiting every vertex.
  auto walk = [&](Vertex start) {
    std::vector<Vertex> seq{start};
    Vertex prev = -1, cur = start;
    for (;;) {
      Vertex next = -1;
      for (Vertex w : adj[cur])
        if (w != prev) {
          next = w;
          break;
        }
      if (next < 0 || next == start) break;
      seq.push_back(next);
      prev = cur;
      cur = next;
      if (static_cast<int>(seq.size()) > nv) break;
    }
    return seq;
  };

  if (ne == nv && nv >= 3) {
    auto seq = walk(verts.front());
    if (static_cast<int>(seq.size()) != nv) return Undefined{};
    return Cycle(std::move(seq));
  }
  if (ne == nv - 1) {
    if (nv == 1) return PathSegment({verts.front()});
    Vertex start = -1;
    if (adj[p.front()].size() == 1) {
      start = p.front();
    } else {
      for (Vertex v : verts)
        if (adj[v].size() == 1) {
          start = v;
          break;
        }
    }
    if (start < 0) return Undefined{};
    auto seq = walk(start);
    if (static_cast<int>(seq.size()) != nv) return Undefined{};
    return PathSegment(std::move(seq));
  }
  return Undefined{};
}

}  // namespace lct
