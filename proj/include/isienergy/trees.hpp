#ifndef ISIENERGY_TREES_HPP
#define ISIENERGY_TREES_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isienergy/graph.hpp"

namespace isienergy {

// Exhaustive, duplicate-free stream of the non-isomorphic trees on n
// vertices, in a deterministic canonical order. Rooted level sequences
// are generated in decreasing lexicographic order and filtered to the
// centroid-canonical representative of each free tree. Throws
// std::invalid_argument when n < 1 or n > max_n.
void enumerate_free_trees(int n, const std::function<void(const Graph&)>& emit,
                          int max_n = 16);

std::vector<Graph> free_trees(int n, int max_n = 16);

bool is_path_shape(const Graph& g);  // tree with exactly two leaves (or n <= 2)
bool is_star_shape(const Graph& g);  // one hub of degree n-1 (or n <= 2)

struct ConjectureReport {
    int n = 0;
    int tree_count = 0;
    double min_energy = 0;
    double max_energy = 0;
    std::string argmin_graph6;
    std::string argmax_graph6;
    bool star_is_min = false;
    bool path_is_max = false;
    bool tie_at_min = false;   // another tree within tol of the minimum
    bool tie_at_max = false;
    double min_gap = 0;        // distance from the extreme to its nearest rival
    double max_gap = 0;
    std::optional<std::vector<std::pair<std::string, double>>> full_ranking;
};

// Evaluates the ISI energy of every tree on n vertices and reports which
// shapes attain the extremes. Ties within tol are flagged, not asserted
// away. Requires n >= 2.
ConjectureReport check_conjecture(int n, double tol = 1e-9, bool full_ranking = false);

std::string conjecture_report_json(const ConjectureReport& r);

}  // namespace isienergy

#endif
