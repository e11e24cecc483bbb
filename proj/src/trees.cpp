#include "isienergy/trees.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "isienergy/isi.hpp"

namespace isienergy {

namespace {

// parent of vertex i in a level sequence: nearest earlier vertex one level up
std::vector<int> parents_from_levels(const std::vector<int>& levels) {
    int n = static_cast<int>(levels.size());
    std::vector<int> parent(n, -1);
    for (int i = 1; i < n; ++i)
        for (int j = i - 1; j >= 0; --j)
            if (levels[j] == levels[i] - 1) {
                parent[i] = j;
                break;
            }
    return parent;
}

Graph graph_from_levels(const std::vector<int>& levels) {
    auto parent = parents_from_levels(levels);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < static_cast<int>(levels.size()); ++i)
        edges.emplace_back(parent[i], i);
    return Graph::from_edge_list(static_cast<int>(levels.size()), edges);
}

// canonical rooted level sequence: at every vertex the child subtree
// sequences are ordered non-increasing lexicographically, which yields the
// lexicographically largest level sequence for that rooted tree
std::vector<int> canonical_rooted_sequence(const std::vector<std::vector<int>>& adj,
                                           int root) {
    struct Encoder {
        const std::vector<std::vector<int>>& adj;

        std::vector<int> encode(int v, int from, int depth) const {
            std::vector<std::vector<int>> child_encodings;
            for (int w : adj[v])
                if (w != from) child_encodings.push_back(encode(w, v, depth + 1));
            std::sort(child_encodings.begin(), child_encodings.end(),
                      std::greater<std::vector<int>>());
            std::vector<int> enc{depth};
            for (const auto& ce : child_encodings)
                enc.insert(enc.end(), ce.begin(), ce.end());
            return enc;
        }
    };
    return Encoder{adj}.encode(root, -1, 1);
}

// 1 or 2 adjacent vertices minimizing the largest component of T - v
std::vector<int> tree_centroids(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    if (n == 1) return {0};
    std::vector<int> size(n, 1), order, parent(n, -1);
    order.reserve(n);
    order.push_back(0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int w : adj[v])
            if (w != parent[v]) {
                parent[w] = v;
                order.push_back(w);
            }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) size[parent[*it]] += size[*it];

    std::vector<int> centroids;
    int best = n + 1;
    for (int v = 0; v < n; ++v) {
        int worst = n - size[v];
        for (int w : adj[v])
            if (w != parent[v]) worst = std::max(worst, size[w]);
        if (worst < best) {
            best = worst;
            centroids = {v};
        } else if (worst == best) {
            centroids.push_back(v);
        }
    }
    return centroids;
}

std::vector<int> free_canonical_sequence(const std::vector<int>& levels) {
    int n = static_cast<int>(levels.size());
    auto parent = parents_from_levels(levels);
    std::vector<std::vector<int>> adj(n);
    for (int i = 1; i < n; ++i) {
        adj[i].push_back(parent[i]);
        adj[parent[i]].push_back(i);
    }
    std::vector<int> best;
    for (int c : tree_centroids(adj)) {
        auto seq = canonical_rooted_sequence(adj, c);
        if (seq > best) best = std::move(seq);
    }
    return best;
}

}  // namespace

void enumerate_free_trees(int n, const std::function<void(const Graph&)>& emit,
                          int max_n) {
    if (n < 1) throw std::invalid_argument("tree enumeration requires n >= 1");
    if (n > max_n)
        throw std::invalid_argument("tree enumeration capped at n = " +
                                    std::to_string(max_n));
    if (n == 1) {
        emit(empty_graph(1));
        return;
    }

    // rooted canonical level sequences in decreasing lexicographic order,
    // starting from the path [1, 2, ..., n]
    std::vector<int> levels(n);
    for (int i = 0; i < n; ++i) levels[i] = i + 1;

    while (true) {
        if (levels == free_canonical_sequence(levels)) emit(graph_from_levels(levels));

        // successor: find the last vertex deeper than level 2, move it up by
        // replicating the block that starts at its new parent
        int p = -1;
        for (int i = n - 1; i >= 0; --i)
            if (levels[i] > 2) {
                p = i;
                break;
            }
        if (p < 0) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (levels[i] == levels[p] - 1) {
                q = i;
                break;
            }
        for (int i = p; i < n; ++i) levels[i] = levels[i - (p - q)];
    }
}

std::vector<Graph> free_trees(int n, int max_n) {
    std::vector<Graph> trees;
    enumerate_free_trees(n, [&](const Graph& g) { trees.push_back(g); }, max_n);
    return trees;
}

bool is_path_shape(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 2) return g.edge_count() == n - 1;
    int leaves = 0, inner = 0;
    for (int d : g.degrees()) {
        if (d == 1) ++leaves;
        else if (d == 2) ++inner;
    }
    return g.edge_count() == n - 1 && leaves == 2 && inner == n - 2;
}

bool is_star_shape(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 2) return g.edge_count() == n - 1;
    int hubs = 0, leaves = 0;
    for (int d : g.degrees()) {
        if (d == n - 1) ++hubs;
        else if (d == 1) ++leaves;
    }
    return g.edge_count() == n - 1 && hubs == 1 && leaves == n - 1;
}

ConjectureReport check_conjecture(int n, double tol, bool full_ranking) {
    if (n < 2) throw std::invalid_argument("conjecture check requires n >= 2");
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");

    ConjectureReport r;
    r.n = n;
    double inf = std::numeric_limits<double>::infinity();
    r.min_energy = inf;
    r.max_energy = -inf;
    double second_min = inf, second_max = -inf;
    Graph argmin, argmax;
    std::vector<std::pair<std::string, double>> ranking;

    enumerate_free_trees(n, [&](const Graph& tree) {
        ++r.tree_count;
        double e = isi_energy(tree);
        if (full_ranking) ranking.emplace_back(write_graph6(tree), e);
        if (e < r.min_energy) {
            second_min = r.min_energy;
            r.min_energy = e;
            argmin = tree;
        } else if (e < second_min) {
            second_min = e;
        }
        if (e > r.max_energy) {
            second_max = r.max_energy;
            r.max_energy = e;
            argmax = tree;
        } else if (e > second_max) {
            second_max = e;
        }
    });

    r.argmin_graph6 = write_graph6(argmin);
    r.argmax_graph6 = write_graph6(argmax);
    r.star_is_min = is_star_shape(argmin);
    r.path_is_max = is_path_shape(argmax);
    r.min_gap = std::isfinite(second_min) ? second_min - r.min_energy : inf;
    r.max_gap = std::isfinite(second_max) ? r.max_energy - second_max : inf;
    r.tie_at_min = r.tree_count > 1 && r.min_gap <= tol;
    r.tie_at_max = r.tree_count > 1 && r.max_gap <= tol;
    if (full_ranking) {
        std::sort(ranking.begin(), ranking.end(),
                  [](const auto& a, const auto& b) { return a.second < b.second; });
        r.full_ranking = std::move(ranking);
    }
    return r;
}

std::string conjecture_report_json(const ConjectureReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["tree_count"] = r.tree_count;
    j["min_energy"] = r.min_energy;
    j["max_energy"] = r.max_energy;
    j["argmin"] = r.argmin_graph6;
    j["argmax"] = r.argmax_graph6;
    j["star_is_min"] = r.star_is_min;
    j["path_is_max"] = r.path_is_max;
    j["tie_at_min"] = r.tie_at_min;
    j["tie_at_max"] = r.tie_at_max;
    j["min_gap"] = r.min_gap;
    j["max_gap"] = r.max_gap;
    if (r.full_ranking) {
        auto arr = nlohmann::json::array();
        for (const auto& [g6, e] : *r.full_ranking)
            arr.push_back({{"graph6", g6}, {"energy", e}});
        j["ranking"] = arr;
    }
    return j.dump();
}

}  // namespace isienergy
