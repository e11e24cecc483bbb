#ifndef ISIENERGY_GRAPH_HPP
#define ISIENERGY_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace isienergy {

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored twice: a packed upper-triangular bit set (O(1)
/// queries, graph6 I/O) and sorted neighbor lists (BFS, line graphs).
/// Vertices are 0-indexed internally; text formats are 1-indexed.
class Graph {
public:
    Graph() = default;

    // Throws std::invalid_argument on self-loops or out-of-range endpoints.
    // Duplicate edges (in either orientation) are deduplicated.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const {
        if (u == v) return false;
        if (u > v) std::swap(u, v);
        std::size_t idx = static_cast<std::size_t>(v) * (v - 1) / 2 + u;
        return (bits_[idx >> 6] >> (idx & 63)) & 1u;
    }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& degrees() const { return degrees_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    // Edges as (u,v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

private:
    friend Graph from_bits(int n, const std::vector<std::uint64_t>& bits);

    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint64_t> bits_;       // packed upper triangle, pair (i<j) at j(j-1)/2+i
    std::vector<std::vector<int>> adj_;     // sorted neighbor lists
    std::vector<int> degrees_;
};

// Internal constructor from a packed bit set (used by parsers and generators).
Graph from_bits(int n, const std::vector<std::uint64_t>& bits);

enum class FamilyTag { path, cycle, complete, complete_bipartite, star, empty };

/// A standard graph family with its parameters: n for single-parameter
/// families, (m, n) for complete bipartite.
struct GraphFamily {
    FamilyTag tag;
    int n = 0;
    int m = 0;  // first part size, complete_bipartite only
};

// Canonical vertex labeling: paths/cycles consecutive, bipartite parts
// contiguous, star hub first. Throws std::invalid_argument when the
// family constraints are violated (cycle needs n >= 3, star n >= 2).
Graph build_family(const GraphFamily& f);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int m, int n);
Graph star_graph(int n);   // S_n = K_{1,n-1}, n >= 2
Graph empty_graph(int n);
Graph petersen_graph();
Graph prism_graph();       // triangular prism C_3 x K_2

// Circulant graph on n vertices with connection set S subset of {1..n/2}.
Graph circulant_graph(int n, const std::vector<int>& connections);

Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph complement(const Graph& g);
Graph line_graph(const Graph& g);

// i-fold line graph; i = 0 returns g. Throws std::length_error when an
// intermediate graph would exceed max_vertices.
Graph iterated_line_graph(const Graph& g, int i, int max_vertices = 10000);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);

// Max eccentricity; nullopt when g is disconnected (or empty).
std::optional<int> diameter(const Graph& g);

// Two-coloring when bipartite (colors 0/1 per vertex), nullopt otherwise.
std::optional<std::vector<int>> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

// Common degree k when regular, nullopt otherwise.
std::optional<int> regular_degree(const Graph& g);

// graph6 interchange format. Sizes up to 258047 vertices (short and
// 3-byte length forms). Parse errors throw std::invalid_argument naming
// the byte position.
std::string write_graph6(const Graph& g);
Graph parse_graph6(const std::string& text);

// Edge-list text format: first line "n m", then m lines "u v", 1-indexed.
std::string write_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);

// Relabel with perm[v] = new label of v (perm must be a permutation).
Graph permute_vertices(const Graph& g, const std::vector<int>& perm);

}  // namespace isienergy

#endif
