#pragma once

// Generalized Boolean functions of algebraic degree <= 2: maps from m-bit
// vectors into Z_q, written as a quadratic form
//   f(y) = sum c_{ij} y_i y_j + sum c_i y_i + c0   (mod q).
// The quadratic part induces a graph on the m variables; the constructions
// in this toolkit need the graph, after deleting a chosen set of vertices,
// to be a simple path whose every edge has weight q/2.

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace zccs {

struct GbfGraph {
    struct Edge {
        int a = 0, b = 0;   // a < b
        long weight = 0;    // in [1, q)
    };
    int vertex_count = 0;
    std::vector<Edge> edges;  // sorted by (a, b)
};

enum class PathFailure {
    None,
    Disconnected,     // surviving graph is not connected
    NotAPath,         // connected but has a cycle or a degree-3 vertex
    WrongEdgeWeight,  // a surviving edge has weight != q/2
    NoVertices,       // deletion removed every vertex
    GammaNotEnd,      // requested gamma is not an end of the path
};

struct PathReport {
    bool ok = false;
    PathFailure failure = PathFailure::None;
    std::vector<int> remaining_path;  // surviving vertices in walk order
    std::vector<int> end_vertices;    // path ends, ascending; one entry if trivial
};

const char* to_string(PathFailure f);

struct GbfRestriction;

class Gbf {
public:
    // Coefficients are reduced into [0, q); zero terms are dropped.
    // Quadratic keys must satisfy first < second after normalization.
    Gbf(long q, int m,
        std::map<std::pair<int, int>, long> quad = {},
        std::map<int, long> lin = {},
        long constant = 0);

    long q() const { return q_; }
    int m() const { return m_; }
    const std::map<std::pair<int, int>, long>& quad() const { return quad_; }
    const std::map<int, long>& lin() const { return lin_; }
    long constant() const { return constant_; }

    bool operator==(const Gbf& rhs) const = default;

    // Value at a 0/1 point, reduced into [0, q).
    long eval(const std::vector<int>& point) const;

    // f~(y) = f(1-y_0, ..., 1-y_{m-1}), expanded back into quadratic form.
    Gbf reversed() const;

    // Fix variable `var` to `value` (0 or 1).  The surviving variables are
    // renumbered to 0..m-2; source_index[new] gives the original index.
    GbfRestriction restricted(int var, int value) const;

    GbfGraph quadratic_graph() const;

private:
    long q_ = 2;
    int m_ = 1;
    std::map<std::pair<int, int>, long> quad_;
    std::map<int, long> lin_;
    long constant_ = 0;
};

struct GbfRestriction {
    Gbf g;
    std::vector<int> source_index;  // source_index[new] = original index
};

// Delete the listed vertices from the quadratic graph of g and test whether
// the survivors form a simple path with every edge weight exactly q/2.
// If gamma is given it must additionally be an end of that path.
// Throws on malformed input (indices out of range, duplicates, nothing
// left to delete from, gamma inside the deletion set).
PathReport check_path_reduction(const Gbf& g, const std::vector<int>& deleted,
                                std::optional<int> gamma = std::nullopt);

// Smallest (lexicographically first) set of n vertices whose deletion
// satisfies check_path_reduction, or nullopt if no such set exists.
std::optional<std::vector<int>> find_deletion_set(const Gbf& g, int n);

}  // namespace zccs
