#include "trv/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace trv {

Coloring::Coloring(int n) : n_(n), edge_((size_t)n * n, -1) {
  if (n < 1) throw std::domain_error("Coloring: n >= 1 required");
}

void Coloring::set_edge(int u, int v, int c) {
  if (u == v) throw std::invalid_argument("Coloring: self-loop");
  if (c < 0 || c >= color_count()) throw std::invalid_argument("Coloring: unknown color");
  edge_[idx(u, v)] = edge_[idx(v, u)] = c;
}

int Coloring::add_color() {
  labels_.emplace_back((size_t)n_, 0);
  return (int)labels_.size() - 1;
}

bool Coloring::valid() const {
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v) {
      int c = edge_[idx(u, v)];
      if (c < 0) return false;
      if (labels_[c][u] == labels_[c][v]) return false;
    }
  return true;
}

ColoringStats count_stats(const Coloring& c) {
  int n = c.n(), nc = c.color_count();
  ColoringStats st;
  st.nc_size.assign(nc, std::vector<int64_t>(n, 0));
  // per color and vertex, sizes of the two neighborhood parts (labels
  // v+1 and v+2 mod 3)
  std::vector<std::vector<int64_t>> part1(nc, std::vector<int64_t>(n, 0)),
      part2(nc, std::vector<int64_t>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      int col = c.edge_color(u, v);
      st.nc_size[col][u]++;
      int j = (c.label(col, v) - c.label(col, u) + 3) % 3;
      if (j == 1)
        part1[col][u]++;
      else
        part2[col][u]++;
    }
  st.delta.assign(nc, std::vector<int64_t>(n, 0));
  for (int col = 0; col < nc; ++col)
    for (int v = 0; v < n; ++v)
      st.delta[col][v] = std::llabs(part1[col][v] - part2[col][v]);
  st.degseq.assign(n, {});
  for (int v = 0; v < n; ++v) {
    for (int col = 0; col < nc; ++col)
      if (st.nc_size[col][v] > 0) st.degseq[v].push_back(st.nc_size[col][v]);
    std::sort(st.degseq[v].rbegin(), st.degseq[v].rend());
  }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z) {
        int exy = c.edge_color(x, y), exz = c.edge_color(x, z), eyz = c.edge_color(y, z);
        if (exy == exz && exz == eyz) {
          st.e3++;
        } else if (exy != exz && exz != eyz && exy != eyz) {
          st.pc3++;
        } else {
          // exactly two edges share a color; apex a, far endpoints p, q
          int col, p, q;
          if (exy == exz) {
            col = exy, p = y, q = z;
          } else if (exy == eyz) {
            col = exy, p = x, q = z;
          } else {
            col = exz, p = x, q = y;
          }
          if (c.label(col, p) != c.label(col, q)) st.pc2++;
        }
      }
  return st;
}

int64_t b_not_color(const Coloring& c, int color, int u, const std::vector<int>& s) {
  int64_t count = 0;
  for (int v : s)
    if (v != u && c.edge_color(u, v) != color) ++count;
  return count;
}

namespace {

void blowup_rec(Coloring& c, const std::vector<int>& verts) {
  if (verts.size() < 2) return;
  int n = (int)verts.size();
  int q = n / 3, r = n % 3;
  int sizes[3] = {q + (r > 0), q + (r > 1), q};
  int col = c.add_color();
  std::vector<int> parts[3];
  int pos = 0;
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < sizes[j]; ++i) {
      parts[j].push_back(verts[pos]);
      c.set_label(col, verts[pos], j);
      ++pos;
    }
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      for (int u : parts[a])
        for (int v : parts[b]) c.set_edge(u, v, col);
  for (int j = 0; j < 3; ++j) blowup_rec(c, parts[j]);
}

}  // namespace

Coloring blowup_coloring(int n) {
  Coloring c(n);
  std::vector<int> verts(n);
  std::iota(verts.begin(), verts.end(), 0);
  blowup_rec(c, verts);
  if (n >= 2 && !c.valid()) throw std::logic_error("blowup_coloring produced invalid coloring");
  return c;
}

int64_t Tournament::cyclic_triangles() const {
  // every non-cyclic triple has exactly one vertex beating the other two
  i128 total = (i128)n * (n - 1) * (n - 2) / 6;
  i128 transitive = 0;
  for (int v = 0; v < n; ++v) {
    int64_t out = out_degree(v);
    transitive += (i128)out * (out - 1) / 2;
  }
  return (int64_t)(total - transitive);
}

int64_t Tournament::out_degree(int v) const {
  int64_t out = 0;
  for (int u = 0; u < n; ++u) out += beats[(size_t)v * n + u];
  return out;
}

int64_t Tournament::in_degree(int v) const { return n - 1 - out_degree(v); }

Tournament orient(const Coloring& c, const std::vector<int>& y) {
  if ((int)y.size() < c.color_count())
    throw std::invalid_argument("orient: y must cover every color");
  Tournament t;
  t.n = c.n();
  t.beats.assign((size_t)t.n * t.n, 0);
  for (int u = 0; u < t.n; ++u)
    for (int v = 0; v < t.n; ++v) {
      if (u == v) continue;
      int col = c.edge_color(u, v);
      if (y[col] != 1 && y[col] != 2) throw std::invalid_argument("orient: y values in {1,2}");
      if (c.label(col, u) == (c.label(col, v) + y[col]) % 3) t.beats[(size_t)u * t.n + v] = 1;
    }
  for (int u = 0; u < t.n; ++u)
    for (int v = u + 1; v < t.n; ++v)
      if (t.beats[(size_t)u * t.n + v] + t.beats[(size_t)v * t.n + u] != 1)
        throw std::logic_error("orient: not a tournament");
  return t;
}

Tournament random_tournament(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tournament t;
  t.n = n;
  t.beats.assign((size_t)n * n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (rng() & 1)
        t.beats[(size_t)u * n + v] = 1;
      else
        t.beats[(size_t)v * n + u] = 1;
    }
  return t;
}

Coloring random_tripartite_coloring(int n, int palette_size, uint64_t seed) {
  if (n < 3 || palette_size < 1)
    throw std::domain_error("random_tripartite_coloring: n >= 3, palette >= 1");
  std::mt19937_64 rng(seed);
  const int retry_cap = 10000;
  for (int attempt = 0; attempt < retry_cap; ++attempt) {
    Coloring c(n);
    for (int p = 0; p < palette_size; ++p) c.add_color();
    for (int p = 0; p < palette_size; ++p)
      for (int v = 0; v < n; ++v) c.set_label(p, v, (int)(rng() % 3));
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) {
        int valid[16], nvalid = 0;
        for (int p = 0; p < palette_size; ++p)
          if (c.label(p, u) != c.label(p, v)) valid[nvalid++] = p;
        if (nvalid == 0) {
          ok = false;  // resample all labelings
          break;
        }
        c.set_edge(u, v, valid[rng() % nvalid]);
      }
    if (ok) return c;
  }
  throw std::runtime_error("random_tripartite_coloring: retry cap exhausted");
}

namespace {

// Exhaustive DFS over canonical edge color assignments. Edges in colex
// order; a triangle completes exactly when its colex-last edge is placed.
struct BruteSearch {
  int n, m;
  std::vector<std::pair<int, int>> edges;          // colex order
  std::vector<int> edge_id;                        // (u,v) -> id
  std::vector<uint32_t> class_mask;                // per color, bitmask of edges
  std::vector<char> colorable;                     // 3-colorability per mask
  std::vector<int> tri_edges;                      // 3 edge ids per triangle
  std::vector<int> tri_of_edge_start, tri_of_edge; // triangles touching an edge
  std::vector<int> assigned;                       // edge -> color or -1
  // triangle state: edges assigned so far, common color (-2 none yet, -1 dead)
  std::vector<int> tri_seen, tri_color;
  int64_t alive;  // triangles that can still become monochromatic
  int64_t e3 = 0, best = 0;

  explicit BruteSearch(int nn) : n(nn), m(nn * (nn - 1) / 2) {
    edges.reserve(m);
    edge_id.assign((size_t)n * n, -1);
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u) {
        edge_id[(size_t)u * n + v] = edge_id[(size_t)v * n + u] = (int)edges.size();
        edges.push_back({u, v});
      }
    build_colorable();
    int t = 0;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        for (int z = y + 1; z < n; ++z) {
          tri_edges.push_back(edge_id[(size_t)x * n + y]);
          tri_edges.push_back(edge_id[(size_t)x * n + z]);
          tri_edges.push_back(edge_id[(size_t)y * n + z]);
          ++t;
        }
    int ntri = t;
    tri_of_edge_start.assign(m + 1, 0);
    for (int i = 0; i < ntri; ++i)
      for (int j = 0; j < 3; ++j) tri_of_edge_start[tri_edges[3 * i + j] + 1]++;
    for (int e = 0; e < m; ++e) tri_of_edge_start[e + 1] += tri_of_edge_start[e];
    tri_of_edge.assign(3 * ntri, 0);
    std::vector<int> fill = tri_of_edge_start;
    for (int i = 0; i < ntri; ++i)
      for (int j = 0; j < 3; ++j) tri_of_edge[fill[tri_edges[3 * i + j]]++] = i;
    assigned.assign(m, -1);
    tri_seen.assign(ntri, 0);
    tri_color.assign(ntri, -2);
    alive = ntri;
  }

  void build_colorable() {
    colorable.assign((size_t)1 << m, 0);
    for (uint32_t mask = 0; mask < ((uint32_t)1 << m); ++mask)
      colorable[mask] = three_colorable(mask) ? 1 : 0;
  }

  bool three_colorable(uint32_t mask) {
    int lab[12];
    std::fill(lab, lab + n, -1);
    return color_vertex(0, mask, lab);
  }
  bool color_vertex(int v, uint32_t mask, int* lab) {
    if (v == n) return true;
    for (int c = 0; c < 3; ++c) {
      bool ok = true;
      for (int u = 0; u < v; ++u) {
        int e = edge_id[(size_t)u * n + v];
        if ((mask >> e) & 1 && lab[u] == c) {
          ok = false;
          break;
        }
      }
      if (ok) {
        lab[v] = c;
        if (color_vertex(v + 1, mask, lab)) return true;
      }
    }
    lab[v] = -1;
    return false;
  }

  void dfs(int e) {
    if (e == m) {
      if (e3 > best) best = e3;
      return;
    }
    // every not-dead triangle is the most this branch can reach
    if (alive <= best) return;
    int used = (int)class_mask.size();
    for (int c = 0; c <= used; ++c) {
      bool fresh = c == used;
      uint32_t newmask = (fresh ? 0u : class_mask[c]) | (1u << e);
      if (!colorable[newmask]) continue;
      if (fresh)
        class_mask.push_back(newmask);
      else
        class_mask[c] = newmask;
      int64_t de3 = 0, dalive = 0;
      apply_triangles(e, c, de3, dalive);
      e3 += de3;
      alive -= dalive;
      assigned[e] = c;

      dfs(e + 1);

      assigned[e] = -1;
      e3 -= de3;
      alive += dalive;
      undo_triangles(e, c);
      if (fresh)
        class_mask.pop_back();
      else
        class_mask[c] &= ~(1u << e);
    }
  }

  // potential: every still-alive triangle could become monochromatic
  int64_t alive_monochromatic_potential() const { return alive; }

  void apply_triangles(int e, int c, int64_t& de3, int64_t& dalive) {
    for (int it = tri_of_edge_start[e]; it < tri_of_edge_start[e + 1]; ++it) {
      int tri = tri_of_edge[it];
      if (tri_color[tri] == -1) {
        tri_seen[tri]++;
        continue;
      }
      if (tri_color[tri] == -2 || tri_color[tri] == c) {
        tri_color[tri] = c;
        tri_seen[tri]++;
        if (tri_seen[tri] == 3) de3++;
      } else {
        tri_color[tri] = -1;  // dead
        tri_seen[tri]++;
        dalive++;
      }
    }
  }

  // reverse of apply; tri_seen tells how far each triangle had advanced
  void undo_triangles(int e, int c) {
    (void)c;
    for (int it = tri_of_edge_start[e]; it < tri_of_edge_start[e + 1]; ++it) {
      int tri = tri_of_edge[it];
      tri_seen[tri]--;
      // recompute this triangle's state from its remaining assigned edges
      int seen = 0, col = -2;
      for (int j = 0; j < 3; ++j) {
        int ee = tri_edges[3 * tri + j];
        if (ee == e || assigned[ee] < 0) continue;
        ++seen;
        if (col == -2)
          col = assigned[ee];
        else if (col != assigned[ee])
          col = -1;
      }
      tri_color[tri] = col;
    }
  }
};

}  // namespace

int64_t brute_force_max(int n, int cutoff) {
  if (n < 3) throw std::domain_error("brute_force_max: n >= 3 required");
  if (n > cutoff || n > 7) throw std::domain_error("brute_force_max: n exceeds search cutoff");
  BruteSearch bs(n);
  bs.dfs(0);
  return bs.best;
}

}  // namespace trv
