#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "trv/numbers.hpp"

namespace trv {

// Edge coloring of K_n in which every color class is tripartite, with the
// witnessing vertex labels (0/1/2 per color). Labels default to 0 for
// vertices untouched by a color.
class Coloring {
 public:
  explicit Coloring(int n);

  int n() const { return n_; }
  int color_count() const { return (int)labels_.size(); }

  int edge_color(int u, int v) const { return edge_[idx(u, v)]; }
  void set_edge(int u, int v, int c);
  int add_color();  // returns the new color id, labels all-zero

  int label(int c, int v) const { return labels_[c][v]; }
  void set_label(int c, int v, int lab) { labels_[(size_t)c][(size_t)v] = (uint8_t)lab; }

  // every edge is colored and endpoint labels differ in the edge's color
  bool valid() const;

 private:
  size_t idx(int u, int v) const { return (size_t)u * n_ + v; }
  int n_;
  std::vector<int> edge_;  // dense n*n, -1 = unset
  std::vector<std::vector<uint8_t>> labels_;
};

struct ColoringStats {
  int64_t e3 = 0;   // monochromatic triangles
  int64_t pc2 = 0;  // two edges share a color, far endpoints in distinct parts
  int64_t pc3 = 0;  // three distinct colors
  std::vector<std::vector<int64_t>> delta;      // [color][vertex] bipartition imbalance
  std::vector<std::vector<int64_t>> degseq;     // [vertex] nonincreasing color degrees
  std::vector<std::vector<int64_t>> nc_size;    // [color][vertex] |N_c(v)|
};

ColoringStats count_stats(const Coloring& c);

// Off-color degree of u into S in color c's complement: edges u-s, s in S,
// not colored c.
int64_t b_not_color(const Coloring& c, int color, int u, const std::vector<int>& s);

// Balanced recursive construction; its monochromatic triangle count is g3(n).
Coloring blowup_coloring(int n);

struct Tournament {
  int n = 0;
  std::vector<uint8_t> beats;  // beats[u*n+v] = 1 iff u -> v
  bool edge(int u, int v) const { return beats[(size_t)u * n + v] != 0; }
  int64_t cyclic_triangles() const;
  int64_t out_degree(int v) const;
  int64_t in_degree(int v) const;
};

// Orient each edge by its color's label cycle: u -> v iff
// label(u) = label(v) + y(c) (mod 3), y(c) in {1,2}. Every monochromatic
// triangle becomes cyclic.
Tournament orient(const Coloring& c, const std::vector<int>& y);

Tournament random_tournament(int n, uint64_t seed);

// Random proper tripartite coloring: independent random labels per palette
// color, then each edge picks uniformly among the colors that separate its
// endpoints; relabels everything (bounded retries) if an edge has no home.
Coloring random_tripartite_coloring(int n, int palette_size, uint64_t seed);

// Exact maximum of e3 over all tripartite colorings of K_n by canonical DFS
// over edges with incremental 3-colorability and branch-and-bound pruning.
int64_t brute_force_max(int n, int cutoff = 6);

}  // namespace trv
