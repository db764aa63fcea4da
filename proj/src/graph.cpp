#include "sumfree/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace sumfree {

Graph::Graph(std::vector<std::int64_t> labels)
    : labels_(std::move(labels)), adj_(labels_.size()), loops_(labels_.size(), 0) {}

int Graph::add_vertex(std::int64_t label) {
  labels_.push_back(label);
  adj_.emplace_back();
  loops_.push_back(0);
  return size() - 1;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= size()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    loops_[static_cast<std::size_t>(u)] = 1;
    return;
  }
  auto& au = adj_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return;
  au.insert(it, v);
  auto& av = adj_[static_cast<std::size_t>(v)];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++edges_;
}

int Graph::find_label(std::int64_t label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return has_loop(u);
  const auto& au = neighbors(u);
  return std::binary_search(au.begin(), au.end(), v);
}

int Graph::loop_count() const { return static_cast<int>(std::count(loops_.begin(), loops_.end(), 1)); }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

namespace {

Graph numbered(int m) {
  std::vector<std::int64_t> labels(static_cast<std::size_t>(m));
  std::iota(labels.begin(), labels.end(), 1);
  return Graph(std::move(labels));
}

}  // namespace

Graph path(int m) {
  if (m < 1) throw PreconditionError("path needs m >= 1");
  Graph g = numbered(m);
  for (int i = 0; i + 1 < m; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int m) {
  if (m < 3) throw PreconditionError("cycle needs m >= 3");
  Graph g = path(m);
  g.add_edge(m - 1, 0);
  return g;
}

Graph complete(int m) {
  if (m < 1) throw PreconditionError("complete graph needs m >= 1");
  Graph g = numbered(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) g.add_edge(i, j);
  return g;
}

Graph matching(int k) {
  if (k < 0) throw PreconditionError("matching needs k >= 0");
  Graph g = numbered(2 * k);
  for (int i = 0; i < k; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph out = g;
  const int offset = g.size();
  for (int v = 0; v < h.size(); ++v) out.add_vertex(h.label(v));
  for (int v = 0; v < h.size(); ++v) {
    if (h.has_loop(v)) out.add_edge(offset + v, offset + v);
    for (int w : h.neighbors(v))
      if (v < w) out.add_edge(offset + v, offset + w);
  }
  return out;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int n = g.size() * h.size();
  std::vector<std::int64_t> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 0);
  Graph out(std::move(labels));
  const int hs = h.size();
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < hs; ++j) {
      for (int j2 : h.neighbors(j))
        if (j < j2) out.add_edge(i * hs + j, i * hs + j2);
      for (int i2 : g.neighbors(i))
        if (i < i2) out.add_edge(i * hs + j, i2 * hs + j);
    }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> pos(static_cast<std::size_t>(g.size()), -1);
  Graph out;
  for (int v : vertices) {
    if (v < 0 || v >= g.size()) throw PreconditionError("induced_subgraph: vertex out of range");
    if (pos[static_cast<std::size_t>(v)] >= 0) continue;
    pos[static_cast<std::size_t>(v)] = out.add_vertex(g.label(v));
  }
  for (int v : vertices) {
    const int pv = pos[static_cast<std::size_t>(v)];
    if (g.has_loop(v)) out.add_edge(pv, pv);
    for (int w : g.neighbors(v))
      if (pos[static_cast<std::size_t>(w)] >= 0) out.add_edge(pv, pos[static_cast<std::size_t>(w)]);
  }
  return out;
}

Graph remove_loops(const Graph& g) {
  Graph out(g.labels());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  return out;
}

bool is_triangle_free(const Graph& g) {
  for (int u = 0; u < g.size(); ++u)
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      const auto& nu = g.neighbors(u);
      const auto& nv = g.neighbors(v);
      // common neighbour w > v
      auto iu = std::upper_bound(nu.begin(), nu.end(), v);
      auto iv = std::upper_bound(nv.begin(), nv.end(), v);
      while (iu != nu.end() && iv != nv.end()) {
        if (*iu == *iv) return false;
        if (*iu < *iv) ++iu;
        else ++iv;
      }
    }
  return true;
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats st;
  st.edges = g.edge_count();
  if (g.size() == 0) return st;
  st.min_degree = g.degree(0);
  st.max_degree = g.degree(0);
  for (int v = 1; v < g.size(); ++v) {
    st.min_degree = std::min(st.min_degree, g.degree(v));
    st.max_degree = std::max(st.max_degree, g.degree(v));
  }
  return st;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.size()), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.size(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (int w : g.neighbors(v))
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

namespace {

class P3Packer {
 public:
  explicit P3Packer(const Graph& g) : n_(g.size()), nbr_(static_cast<std::size_t>(g.size()), 0) {
    for (int v = 0; v < n_; ++v)
      for (int w : g.neighbors(v)) nbr_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;
  }

  int best(std::uint64_t rem) {
    // Vertices without a neighbour in rem can never be used.
    for (auto r = rem; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      if ((nbr_[static_cast<std::size_t>(v)] & rem) == 0) rem &= ~(std::uint64_t{1} << v);
    }
    if (std::popcount(rem) < 3) return 0;
    if (auto it = memo_.find(rem); it != memo_.end()) return it->second;
    const int cap = std::popcount(rem) / 3;
    const int v = std::countr_zero(rem);
    const auto vb = std::uint64_t{1} << v;
    int result = best(rem & ~vb);
    const auto nv = nbr_[static_cast<std::size_t>(v)] & rem;
    auto take = [&](int a, int b) {
      if (result >= cap) return;
      const auto used = vb | (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
      result = std::max(result, 1 + best(rem & ~used));
    };
    for (auto ra = nv; ra; ra &= ra - 1) {
      const int a = std::countr_zero(ra);
      // v in the middle
      for (auto rb = nv & ~((std::uint64_t{2} << a) - 1); rb; rb &= rb - 1) take(a, std::countr_zero(rb));
      // v at an end
      for (auto rb = nbr_[static_cast<std::size_t>(a)] & rem & ~vb; rb; rb &= rb - 1) {
        const int b = std::countr_zero(rb);
        if (nv & (std::uint64_t{1} << b)) continue;  // already covered as centre case
        take(a, b);
      }
    }
    memo_.emplace(rem, result);
    return result;
  }

 private:
  int n_;
  std::vector<std::uint64_t> nbr_;
  std::unordered_map<std::uint64_t, int> memo_;
};

int greedy_p3(const Graph& g) {
  const int n = g.size();
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto free_deg = [&](int v) {
    int d = 0;
    for (int w : g.neighbors(v)) d += !used[static_cast<std::size_t>(w)];
    return d;
  };
  int count = 0;
  for (;;) {
    int best_v = -1, best_d = 0;
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      const int d = free_deg(v);
      if (d > 0 && (best_v < 0 || d < best_d)) best_v = v, best_d = d;
    }
    if (best_v < 0) return count;
    const int v = best_v;
    int pick_a = -1, pick_b = -1;
    // Prefer v as an end: v - a - b with a, b low degree.
    int best_score = 0;
    for (int a : g.neighbors(v)) {
      if (used[static_cast<std::size_t>(a)]) continue;
      for (int b : g.neighbors(a)) {
        if (b == v || used[static_cast<std::size_t>(b)]) continue;
        const int score = free_deg(a) + free_deg(b);
        if (pick_a < 0 || score < best_score) pick_a = a, pick_b = b, best_score = score;
      }
    }
    if (pick_a < 0) {
      std::vector<int> free_n;
      for (int a : g.neighbors(v))
        if (!used[static_cast<std::size_t>(a)]) free_n.push_back(a);
      if (free_n.size() >= 2) pick_a = free_n[0], pick_b = free_n[1];
    }
    if (pick_a < 0) {
      used[static_cast<std::size_t>(v)] = 1;
      continue;
    }
    used[static_cast<std::size_t>(v)] = used[static_cast<std::size_t>(pick_a)] = used[static_cast<std::size_t>(pick_b)] = 1;
    ++count;
  }
}

}  // namespace

int disjoint_p3_packing(const Graph& g, int exact_limit) {
  if (g.size() <= std::min(exact_limit, 64)) {
    int total = 0;
    // Components are independent; pack each exactly.
    for (const auto& comp : connected_components(g)) {
      if (comp.size() < 3) continue;
      const Graph c = induced_subgraph(g, comp);
      P3Packer packer(c);
      const auto all = c.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << c.size()) - 1;
      total += packer.best(all);
    }
    return total;
  }
  return greedy_p3(g);
}

bool check_isomorphism_map(const Graph& g, const Graph& h, std::span<const int> f) {
  if (static_cast<int>(f.size()) != g.size() || g.size() != h.size())
    throw PreconditionError("isomorphism map must be a bijection between vertex sets of equal size");
  std::vector<char> hit(static_cast<std::size_t>(h.size()), 0);
  for (int x : f) {
    if (x < 0 || x >= h.size() || hit[static_cast<std::size_t>(x)])
      throw PreconditionError("isomorphism map is not a bijection");
    hit[static_cast<std::size_t>(x)] = 1;
  }
  if (g.edge_count() != h.edge_count()) return false;
  for (int v = 0; v < g.size(); ++v) {
    const int fv = f[static_cast<std::size_t>(v)];
    if (g.has_loop(v) != h.has_loop(fv)) return false;
    if (g.neighbors(v).size() != h.neighbors(fv).size()) return false;
    for (int w : g.neighbors(v))
      if (!h.has_edge(fv, f[static_cast<std::size_t>(w)])) return false;
  }
  return true;
}

namespace {

// Colour refinement over the disjoint union so colours are comparable.
std::pair<std::vector<int>, std::vector<int>> refine(const Graph& g, const Graph& h) {
  const int n = g.size();
  auto vertex = [&](int i) -> std::pair<const Graph*, int> { return i < n ? std::pair{&g, i} : std::pair{&h, i - n}; };
  std::vector<int> colour(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) {
    auto [gr, v] = vertex(i);
    colour[static_cast<std::size_t>(i)] = gr->has_loop(v) ? 1 : 0;
  }
  for (int round = 0; round < 2 * n + 1; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> sig;
    std::vector<std::pair<int, std::vector<int>>> keys(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i) {
      auto [gr, v] = vertex(i);
      const int off = i < n ? 0 : n;
      std::vector<int> nc;
      for (int w : gr->neighbors(v)) nc.push_back(colour[static_cast<std::size_t>(w + off)]);
      std::sort(nc.begin(), nc.end());
      keys[static_cast<std::size_t>(i)] = {colour[static_cast<std::size_t>(i)], std::move(nc)};
      sig.emplace(keys[static_cast<std::size_t>(i)], 0);
    }
    int next = 0;
    for (auto& [k, c] : sig) c = next++;
    std::vector<int> updated(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i) updated[static_cast<std::size_t>(i)] = sig[keys[static_cast<std::size_t>(i)]];
    const bool stable = [&] {
      std::set<int> a(colour.begin(), colour.end()), b(updated.begin(), updated.end());
      return a.size() == b.size();
    }();
    colour = std::move(updated);
    if (stable) break;
  }
  return {std::vector<int>(colour.begin(), colour.begin() + n), std::vector<int>(colour.begin() + n, colour.end())};
}

struct IsoSearch {
  const Graph& g;
  const Graph& h;
  std::vector<int> cg, ch;
  std::vector<int> order;
  std::vector<int> map, used;

  bool consistent(int v, int x) const {
    if (cg[static_cast<std::size_t>(v)] != ch[static_cast<std::size_t>(x)]) return false;
    for (int w = 0; w < g.size(); ++w) {
      const int fw = map[static_cast<std::size_t>(w)];
      if (fw < 0) continue;
      if (g.has_edge(v, w) != h.has_edge(x, fw)) return false;
    }
    return true;
  }

  bool run(std::size_t k) {
    if (k == order.size()) return true;
    const int v = order[k];
    for (int x = 0; x < h.size(); ++x) {
      if (used[static_cast<std::size_t>(x)] || !consistent(v, x)) continue;
      map[static_cast<std::size_t>(v)] = x;
      used[static_cast<std::size_t>(x)] = 1;
      if (run(k + 1)) return true;
      map[static_cast<std::size_t>(v)] = -1;
      used[static_cast<std::size_t>(x)] = 0;
    }
    return false;
  }
};

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.size() > 64 || h.size() > 64) throw LimitExceeded("are_isomorphic supports at most 64 vertices");
  if (g.size() != h.size() || g.edge_count() != h.edge_count() || g.loop_count() != h.loop_count()) return false;
  auto [cg, ch] = refine(g, h);
  auto a = cg, b = ch;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return false;
  IsoSearch s{g, h, cg, ch, {}, std::vector<int>(static_cast<std::size_t>(g.size()), -1),
              std::vector<int>(static_cast<std::size_t>(h.size()), 0)};
  // BFS order keeps every new vertex attached to mapped ones where possible.
  std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
  for (int s0 = 0; s0 < g.size(); ++s0) {
    if (seen[static_cast<std::size_t>(s0)]) continue;
    std::vector<int> queue{s0};
    seen[static_cast<std::size_t>(s0)] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      s.order.push_back(queue[i]);
      for (int w : g.neighbors(queue[i]))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          queue.push_back(w);
        }
    }
  }
  return s.run(0);
}

std::string to_text(const Graph& g) {
  std::ostringstream out;
  out << "g " << g.size() << '\n';
  for (int v = 0; v < g.size(); ++v) out << "v " << v << ' ' << g.label(v) << '\n';
  for (int u = 0; u < g.size(); ++u) {
    if (g.has_loop(u)) out << "e " << u << ' ' << u << '\n';
    for (int v : g.neighbors(u))
      if (u < v) out << "e " << u << ' ' << v << '\n';
  }
  return out.str();
}

Graph from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int declared = -1;
  std::vector<std::int64_t> labels;
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  auto fail = [&](const std::string& why) {
    throw PreconditionError("graph text line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    char tag = 0;
    ls >> tag;
    if (tag == 'g') {
      if (declared >= 0) fail("duplicate header");
      if (!(ls >> declared) || declared < 0) fail("bad vertex count");
      labels.assign(static_cast<std::size_t>(declared), 0);
    } else if (tag == 'v') {
      int idx;
      std::int64_t label;
      if (declared < 0) fail("vertex before header");
      if (!(ls >> idx >> label) || idx < 0 || idx >= declared) fail("bad vertex line");
      labels[static_cast<std::size_t>(idx)] = label;
    } else if (tag == 'e') {
      int u, v;
      if (declared < 0) fail("edge before header");
      if (!(ls >> u >> v) || u < 0 || v < 0 || u >= declared || v >= declared) fail("bad edge line");
      edges.emplace_back(u, v);
    } else {
      fail("unknown record");
    }
    std::string extra;
    if (ls >> extra) fail("trailing tokens");
  }
  if (declared < 0) throw PreconditionError("graph text has no header");
  Graph g(std::move(labels));
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

}  // namespace sumfree
