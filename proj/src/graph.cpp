#include "isienergy/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace isienergy {

namespace {

std::size_t pair_index(int i, int j) {
    // requires i < j
    return static_cast<std::size_t>(j) * (j - 1) / 2 + i;
}

std::size_t bit_words(int n) {
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    return (nbits + 63) / 64;
}

}  // namespace

Graph from_bits(int n, const std::vector<std::uint64_t>& bits) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.bits_ = bits;
    g.bits_.resize(bit_words(n), 0);
    g.adj_.assign(n, {});
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            std::size_t idx = pair_index(i, j);
            if ((g.bits_[idx >> 6] >> (idx & 63)) & 1u) {
                g.adj_[i].push_back(j);
                g.adj_[j].push_back(i);
                ++g.m_;
            }
        }
    }
    g.degrees_.resize(n);
    for (int v = 0; v < n; ++v) g.degrees_[v] = static_cast<int>(g.adj_[v].size());
    return g;
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    std::vector<std::uint64_t> bits(bit_words(n), 0);
    for (const auto& [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") out of range for n=" +
                                        std::to_string(n));
        int a = std::min(u, v), b = std::max(u, v);
        std::size_t idx = pair_index(a, b);
        bits[idx >> 6] |= std::uint64_t{1} << (idx & 63);
    }
    return from_bits(n, bits);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (v > u) result.emplace_back(u, v);
    return result;
}

Graph build_family(const GraphFamily& f) {
    switch (f.tag) {
        case FamilyTag::path: return path_graph(f.n);
        case FamilyTag::cycle: return cycle_graph(f.n);
        case FamilyTag::complete: return complete_graph(f.n);
        case FamilyTag::complete_bipartite: return complete_bipartite_graph(f.m, f.n);
        case FamilyTag::star: return star_graph(f.n);
        case FamilyTag::empty: return empty_graph(f.n);
    }
    throw std::invalid_argument("unknown family tag");
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, edges);
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

Graph complete_bipartite_graph(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("complete bipartite requires m,n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
    return Graph::from_edge_list(m + n, edges);
}

Graph star_graph(int n) {
    if (n < 2) throw std::invalid_argument("star requires n >= 2");
    return complete_bipartite_graph(1, n - 1);
}

Graph empty_graph(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    return Graph::from_edge_list(n, {});
}

Graph petersen_graph() {
    // outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, i + 5);
    }
    return Graph::from_edge_list(10, edges);
}

Graph prism_graph() {
    return Graph::from_edge_list(
        6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph circulant_graph(int n, const std::vector<int>& connections) {
    if (n < 1) throw std::invalid_argument("circulant requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int s : connections) {
        if (s < 1 || s > n / 2)
            throw std::invalid_argument("circulant connection " + std::to_string(s) +
                                        " outside 1..n/2");
        for (int i = 0; i < n; ++i) {
            int j = (i + s) % n;
            if (i != j) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edge_list(n, edges);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    int n1 = g1.vertex_count();
    auto edges = g1.edges();
    for (const auto& [u, v] : g2.edges()) edges.emplace_back(u + n1, v + n1);
    return Graph::from_edge_list(n1 + g2.vertex_count(), edges);
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.adjacent(i, j)) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

Graph line_graph(const Graph& g) {
    // Line-graph vertex v corresponds to the v-th edge of g in
    // lexicographic endpoint order; deterministic for reproducible spectra.
    auto edge_list = g.edges();
    int m = static_cast<int>(edge_list.size());
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            const auto& [u1, v1] = edge_list[a];
            const auto& [u2, v2] = edge_list[b];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) edges.emplace_back(a, b);
        }
    return Graph::from_edge_list(m, edges);
}

Graph iterated_line_graph(const Graph& g, int i, int max_vertices) {
    if (i < 0) throw std::invalid_argument("iteration count must be non-negative");
    Graph current = g;
    for (int step = 0; step < i; ++step) {
        long long next_n = current.edge_count();
        if (next_n > max_vertices)
            throw std::length_error("iterated line graph would have " +
                                    std::to_string(next_n) + " vertices (cap " +
                                    std::to_string(max_vertices) + ")");
        current = line_graph(current);
    }
    return current;
}

namespace {

// BFS distances from src; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u))
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return dist;
}

}  // namespace

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return false;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        seen[s] = true;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int v : g.neighbors(u))
                if (!seen[v]) {
                    seen[v] = true;
                    q.push(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::optional<int> diameter(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0 || !is_connected(g)) return std::nullopt;
    int diam = 0;
    for (int v = 0; v < n; ++v) {
        auto dist = bfs_distances(g, v);
        diam = std::max(diam, *std::max_element(dist.begin(), dist.end()));
    }
    return diam;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

std::optional<int> regular_degree(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return std::nullopt;
    int k = g.degree(0);
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != k) return std::nullopt;
    return k;
}

std::string write_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph6 output limited to n <= 258047");
    }
    int bit = 0, acc = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bit == 6) {
                out.push_back(static_cast<char>(acc + 63));
                bit = 0;
                acc = 0;
            }
        }
    if (bit > 0) out.push_back(static_cast<char>((acc << (6 - bit)) + 63));
    return out;
}

Graph parse_graph6(const std::string& text) {
    // strip optional ">>graph6<<" header and trailing newline
    std::string s = text;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw std::invalid_argument("graph6: empty input");

    for (std::size_t p = 0; p < s.size(); ++p) {
        unsigned char c = static_cast<unsigned char>(s[p]);
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: byte " + std::to_string(int(c)) +
                                        " at position " + std::to_string(p) +
                                        " outside 63..126");
    }

    std::size_t pos = 0;
    long long n;
    if (s[0] == 126) {
        if (s.size() >= 2 && s[1] == 126)
            throw std::invalid_argument("graph6: sizes above 258047 not supported");
        if (s.size() < 4) throw std::invalid_argument("graph6: truncated size field");
        n = ((long long)(s[1] - 63) << 12) | ((long long)(s[2] - 63) << 6) |
            (long long)(s[3] - 63);
        pos = 4;
    } else {
        n = s[0] - 63;
        pos = 1;
    }

    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t need = (nbits + 5) / 6;
    if (s.size() - pos < need)
        throw std::invalid_argument("graph6: truncated bit field (need " +
                                    std::to_string(need) + " data bytes, have " +
                                    std::to_string(s.size() - pos) + ")");
    if (s.size() - pos > need)
        throw std::invalid_argument("graph6: trailing bytes after bit field");

    std::vector<std::uint64_t> bits((nbits + 63) / 64, 0);
    std::size_t bit_pos = 0;
    for (std::size_t k = pos; k < s.size(); ++k) {
        int v = s[k] - 63;
        for (int b = 5; b >= 0 && bit_pos < nbits; --b, ++bit_pos)
            if ((v >> b) & 1) bits[bit_pos >> 6] |= std::uint64_t{1} << (bit_pos & 63);
    }
    return from_bits(static_cast<int>(n), bits);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << (u + 1) << " " << (v + 1) << "\n";
    return out.str();
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    int n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing \"n m\" header");
    if (n < 0 || m < 0) throw std::invalid_argument("edge list: negative n or m");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int k = 0; k < m; ++k) {
        int u, v;
        if (!(in >> u >> v))
            throw std::invalid_argument("edge list: truncated at edge " +
                                        std::to_string(k + 1) + " of " + std::to_string(m));
        edges.emplace_back(u - 1, v - 1);  // 1-indexed on disk
    }
    return Graph::from_edge_list(n, edges);
}

Graph permute_vertices(const Graph& g, const std::vector<int>& perm) {
    int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permutation size mismatch");
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph::from_edge_list(n, edges);
}

}  // namespace isienergy
