#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace specscan {

// Simple undirected graph on labeled vertices 0..n-1, no loops, no
// multi-edges. Adjacency is one 64-bit neighbor mask per vertex; order is
// capped at 62 to match the single-byte graph6 header.
class Graph {
 public:
  static constexpr int kMaxOrder = 62;

  explicit Graph(int n);

  static Graph from_edges(int n,
                          std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  int size() const;  // edge count

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<size_t>(u)] >> v) & 1u;
  }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  std::uint64_t neighbor_mask(int v) const {
    check_vertex(v);
    return adj_[static_cast<size_t>(v)];
  }
  int degree(int v) const;
  int min_degree() const;
  int max_degree() const;

  template <typename Fn>
  void for_each_edge(Fn&& fn) const {
    for (int u = 0; u < n_; ++u) {
      std::uint64_t m = adj_[static_cast<size_t>(u)] >> (u + 1);
      int v = u + 1;
      while (m) {
        if (m & 1u) fn(u, v);
        m >>= 1;
        ++v;
      }
    }
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
  }
  int n_;
  std::vector<std::uint64_t> adj_;
};

// graph6 parse failure; offset is the byte position inside the record.
struct Graph6Error : std::runtime_error {
  Graph6Error(const std::string& msg, std::size_t off)
      : std::runtime_error(msg + " (offset " + std::to_string(off) + ")"),
        offset(off) {}
  std::size_t offset;
};

// graph6 records with single-byte headers (n <= 62). Parsing round-trips
// byte-exactly through to_graph6; labels are preserved, no canonicalization.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// --- constructors -----------------------------------------------------------

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph add_isolated(const Graph& g, int k);

// Replaces vertex x of the base by an independent set of sizes[x] vertices,
// joining two sets completely when the base vertices are adjacent.
Graph blow_up(const Graph& base, std::span<const int> sizes);
Graph blow_up(const Graph& base, std::initializer_list<int> sizes);

// Replaces edge uv by a path u-w-v through a new vertex w (labeled n).
Graph subdivide_edge(const Graph& g, int u, int v);

// Induced path on n-4 vertices with two pendant vertices attached at each
// end; spectral radius exactly 2 and fixed under internal subdivision.
Graph y_graph(int n);

// Complete graph K_k joined to q independent vertices (complete split graph).
Graph star_clique_join(int k, int q);

// K_{a,b} with one edge subdivided.
Graph subdivided_complete_bipartite(int a, int b);

// --- structural predicates --------------------------------------------------

long long triangle_count_direct(const Graph& g);

// Length of a shortest odd cycle via parity-labeled BFS from every vertex;
// empty iff the graph is bipartite.
std::optional<int> odd_girth(const Graph& g);

struct Bipartition {
  bool bipartite = false;
  std::vector<int> color;  // valid 2-coloring when bipartite
};
Bipartition two_coloring(const Graph& g);
bool is_bipartite(const Graph& g);

bool is_connected(const Graph& g);

// Exact maximum clique size by branch and bound; fine up to n ~ 30.
int clique_number(const Graph& g);

// True iff a (not necessarily induced) cycle of length exactly t exists.
// Rooted DFS over simple paths; intended for small graphs and small t.
bool has_cycle_of_length(const Graph& g, int t);

// Brute-force isomorphism with degree pruning, capped at order 10. Used only
// for recognition against small fixed targets. Order mismatch returns false.
bool are_isomorphic(const Graph& a, const Graph& b);

// --- twin quotient and extremal recognition ---------------------------------

// Partition into classes of identical open neighborhood (such classes are
// automatically independent) plus the quotient graph, one vertex per class,
// ordered by smallest member. The quotient is twin-free, and blowing it back
// up by the class sizes recovers the input up to isomorphism.
struct TwinQuotient {
  Graph quotient;
  std::vector<std::vector<int>> classes;
};
TwinQuotient twin_quotient(const Graph& g);

enum class ExtremalFamily {
  BlowupP2K1,
  Blowup2P2K1,
  BlowupP4K1,
  BlowupP5K1,
  C5PlusIsolated,
  SubdividedBalancedBipartite,
  StarCliqueJoin,
};

const char* family_name(ExtremalFamily f);

// Recognition result. `exact` is false when the match needed the permissive
// blow-up reading (isolated-vertex class absent, or the degenerate empty
// graph); both readings are surfaced in scan reports.
struct Recognition {
  std::optional<ExtremalFamily> family;
  bool exact = true;
};
Recognition recognize_extremal(const Graph& g);

bool is_c5_plus_isolated(const Graph& g);
// Structural test (no brute-force isomorphism): some degree-2 vertex with
// non-adjacent neighbors contracts to exactly K_{a,b}.
bool is_subdivided_complete_bipartite(const Graph& g, int a, int b);
bool is_star_clique_join(const Graph& g, int k, int q);
bool is_y_graph(const Graph& g);

}  // namespace specscan
