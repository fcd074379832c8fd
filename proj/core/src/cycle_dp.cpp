#include <algorithm>
#include <array>
#include <unordered_map>

#include "lct/errors.hpp"
#include "lct/longest_cycles.hpp"

namespace lct {

namespace {

// Per-bag state: for every bag position a 4-bit code (0 unused, 1 interior of a
// partial path, 2 + j endpoint whose path ends at position j), plus a bit that
// marks a completed cycle. Values are the number of edges used so far.
constexpr int kMaxBag = 14;
constexpr std::uint64_t kClosed = std::uint64_t{1} << 63;
constexpr int kUnused = -1;
constexpr int kInterior = -2;

using Table = std::unordered_map<std::uint64_t, int>;

// Vertex-indexed view of a state: code[v] is kUnused, kInterior or the partner vertex.
struct Decoded {
  std::array<int, kMaxVertices> code;
  bool closed = false;
};

struct BagIndex {
  std::vector<Vertex> verts;
  std::array<int, kMaxVertices> pos;

  explicit BagIndex(VertexSet bag) : verts(bag.to_vector()) {
    pos.fill(-1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) pos[verts[i]] = i;
  }
};

Decoded decode(std::uint64_t key, const BagIndex& b) {
  Decoded d;
  d.code.fill(kUnused);
  d.closed = (key & kClosed) != 0;
  for (int i = 0; i < static_cast<int>(b.verts.size()); ++i) {
    const int c = static_cast<int>((key >> (4 * i)) & 0xF);
    d.code[b.verts[i]] = c == 0 ? kUnused : c == 1 ? kInterior : b.verts[c - 2];
  }
  return d;
}

// Returns false if some vertex outside `b` is an endpoint (it could never be closed).
bool encode(const Decoded& d, VertexSet from_bag, const BagIndex& b, std::uint64_t& key) {
  for (Vertex v : from_bag)
    if (b.pos[v] < 0 && d.code[v] >= 0) return false;
  key = d.closed ? kClosed : 0;
  for (int i = 0; i < static_cast<int>(b.verts.size()); ++i) {
    const int c = d.code[b.verts[i]];
    const std::uint64_t bits = c == kUnused ? 0 : c == kInterior ? 1 : static_cast<std::uint64_t>(2 + b.pos[c]);
    key |= bits << (4 * i);
  }
  return true;
}

void relax(Table& t, std::uint64_t key, int value) {
  auto [it, inserted] = t.try_emplace(key, value);
  if (!inserted && it->second < value) it->second = value;
}

int degree_of(int code) { return code == kUnused ? 0 : code == kInterior ? 2 : 1; }

class CycleDp {
 public:
  CycleDp(const Graph& g, const TreeDecomposition& td) : g_(g), td_(td) {}

  int run() {
    const int nodes = td_.node_count();
    if (nodes == 0) return 0;
    for (auto b : td_.bags())
      if (b.size() > kMaxBag) throw CapExceeded("bag too large for the cycle DP");

    parent_.assign(nodes, -1);
    order_.clear();
    std::vector<int> depth(nodes, 0);
    std::vector<bool> seen(nodes, false);
    order_.push_back(0);
    seen[0] = true;
    for (std::size_t i = 0; i < order_.size(); ++i)
      for (Node r : td_.tree_neighbors(order_[i]))
        if (!seen[r]) {
          seen[r] = true;
          parent_[r] = order_[i];
          depth[r] = depth[order_[i]] + 1;
          order_.push_back(r);
        }

    owned_.assign(nodes, {});
    for (auto [u, v] : g_.edges()) {
      Node top = -1;
      for (Node t = 0; t < nodes; ++t)
        if (td_.bag(t).contains(u) && td_.bag(t).contains(v) && (top < 0 || depth[t] < depth[top])) top = t;
      owned_[top].emplace_back(u, v);
    }

    std::vector<Table> tables(nodes);
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
      const Node t = *it;
      const BagIndex bag(td_.bag(t));
      Table cur;
      cur.emplace(0, 0);
      for (Node c : td_.tree_neighbors(t)) {
        if (c == parent_[t]) continue;
        cur = join(cur, lift(tables[c], td_.bag(c), bag), bag);
        Table().swap(tables[c]);
      }
      for (auto [u, v] : owned_[t]) cur = add_edge(cur, bag, u, v);
      tables[t] = std::move(cur);
    }
    int best = 0;
    for (auto [key, value] : tables[0])
      if (key & kClosed) best = std::max(best, value);
    return best;
  }

 private:
  // Re-express a child table over the parent bag: forget and introduce vertices.
  Table lift(const Table& child, VertexSet child_bag, const BagIndex& parent) const {
    const BagIndex cb(child_bag);
    Table out;
    for (auto [key, value] : child) {
      Decoded d = decode(key, cb);
      std::uint64_t k2;
      if (encode(d, child_bag, parent, k2)) relax(out, k2, value);
    }
    return out;
  }

  Table join(const Table& a, const Table& b, const BagIndex& bag) const {
    const int m = static_cast<int>(bag.verts.size());
    Table out;
    for (auto [ka, va] : a) {
      for (auto [kb, vb] : b) {
        const bool ca = ka & kClosed, cb = kb & kClosed;
        if (ca && cb) continue;
        if (ca || cb) {
          // The other side must be empty: a closed cycle admits nothing else.
          if ((ca ? kb : ka) != 0) continue;
          relax(out, ka | kb, va + vb);
          continue;
        }
        // Link graph over positions: one link per partial path on either side.
        std::array<std::array<int, 2>, kMaxBag> links;
        std::array<int, kMaxBag> nlinks{};
        std::array<int, kMaxBag> deg{};
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
          const int c1 = static_cast<int>((ka >> (4 * i)) & 0xF);
          const int c2 = static_cast<int>((kb >> (4 * i)) & 0xF);
          const int d1 = c1 == 0 ? 0 : c1 == 1 ? 2 : 1;
          const int d2 = c2 == 0 ? 0 : c2 == 1 ? 2 : 1;
          deg[i] = d1 + d2;
          if (deg[i] > 2) ok = false;
          if (c1 >= 2) links[i][nlinks[i]++] = c1 - 2;
          if (c2 >= 2) links[i][nlinks[i]++] = c2 - 2;
        }
        if (!ok) continue;

        std::uint64_t key = 0;
        std::array<bool, kMaxBag> visited{};
        bool has_path = false;
        int cycles = 0;
        for (int i = 0; i < m; ++i) {
          if (deg[i] == 2) key |= std::uint64_t{1} << (4 * i);
          if (nlinks[i] != 1 || visited[i]) continue;
          // Walk the path of links from endpoint i.
          int prev = -1, curp = i;
          visited[i] = true;
          for (;;) {
            int next = -1;
            for (int l = 0; l < nlinks[curp]; ++l)
              if (links[curp][l] != prev) {
                next = links[curp][l];
                break;
              }
            prev = curp;
            curp = next;
            visited[curp] = true;
            if (nlinks[curp] == 1) break;
          }
          key |= static_cast<std::uint64_t>(2 + curp) << (4 * i);
          key |= static_cast<std::uint64_t>(2 + i) << (4 * curp);
          has_path = true;
        }
        for (int i = 0; i < m; ++i)
          if (nlinks[i] == 2 && !visited[i]) {
            ++cycles;
            int prev = -1, curp = i;
            while (!visited[curp]) {
              visited[curp] = true;
              int next = links[curp][0] != prev ? links[curp][0] : links[curp][1];
              prev = curp;
              curp = next;
            }
          }
        if (cycles > 1 || (cycles == 1 && has_path)) continue;
        if (cycles == 1) key |= kClosed;
        relax(out, key, va + vb);
      }
    }
    return out;
  }

  Table add_edge(const Table& in, const BagIndex& bag, Vertex u, Vertex v) const {
    Table out;
    for (auto [key, value] : in) {
      relax(out, key, value);
      if (key & kClosed) continue;
      Decoded d = decode(key, bag);
      const int du = degree_of(d.code[u]), dv = degree_of(d.code[v]);
      if (du == 2 || dv == 2) continue;
      if (du == 0 && dv == 0) {
        d.code[u] = v;
        d.code[v] = u;
      } else if (du == 1 && dv == 0) {
        const Vertex a = d.code[u];
        d.code[u] = kInterior;
        d.code[v] = a;
        d.code[a] = v;
      } else if (du == 0 && dv == 1) {
        const Vertex a = d.code[v];
        d.code[v] = kInterior;
        d.code[u] = a;
        d.code[a] = u;
      } else if (d.code[u] == v) {
        bool other_paths = false;
        for (Vertex w : bag.verts) other_paths |= w != u && w != v && d.code[w] >= 0;
        if (other_paths) continue;
        d.code[u] = d.code[v] = kInterior;
        d.closed = true;
      } else {
        const Vertex a = d.code[u], b = d.code[v];
        d.code[u] = d.code[v] = kInterior;
        d.code[a] = b;
        d.code[b] = a;
      }
      std::uint64_t k2;
      encode(d, VertexSet(), bag, k2);
      relax(out, k2, value + 1);
    }
    return out;
  }

  const Graph& g_;
  const TreeDecomposition& td_;
  std::vector<Node> parent_;
  std::vector<Node> order_;
  std::vector<std::vector<Edge>> owned_;
};

}  // namespace

int longest_cycle_length_td(const Graph& g, const TreeDecomposition& td) {
  auto violations = validate(g, td);
  if (!violations.empty()) throw PreconditionError("invalid decomposition: " + violations.front().describe());
  return CycleDp(g, td).run();
}

}  // namespace lct
