#include "zccs/gbf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace zccs {

namespace {

long mod_q(long v, long q) {
    long r = v % q;
    return r < 0 ? r + q : r;
}

}  // namespace

const char* to_string(PathFailure f) {
    switch (f) {
        case PathFailure::None: return "none";
        case PathFailure::Disconnected: return "disconnected";
        case PathFailure::NotAPath: return "not-a-path";
        case PathFailure::WrongEdgeWeight: return "wrong-edge-weight";
        case PathFailure::NoVertices: return "no-vertices";
        case PathFailure::GammaNotEnd: return "gamma-not-end";
    }
    return "unknown";
}

Gbf::Gbf(long q, int m, std::map<std::pair<int, int>, long> quad,
         std::map<int, long> lin, long constant)
    : q_(q), m_(m) {
    if (q < 2 || q % 2 != 0)
        throw std::invalid_argument("Gbf: q must be an even integer >= 2");
    if (m < 1) throw std::invalid_argument("Gbf: m must be >= 1");
    for (auto& [key, c] : quad) {
        auto [i, j] = key;
        if (i == j) throw std::invalid_argument("Gbf: square term y_i*y_i is just y_i; use a linear term");
        if (i > j) std::swap(i, j);
        if (i < 0 || j >= m) throw std::invalid_argument("Gbf: quadratic index out of range");
        long r = mod_q(c, q);
        if (r != 0) quad_[{i, j}] += r;
    }
    for (auto& [key, c] : quad_) {
        (void)key;
        c = mod_q(c, q);
    }
    std::erase_if(quad_, [](const auto& kv) { return kv.second == 0; });
    for (auto& [i, c] : lin) {
        if (i < 0 || i >= m) throw std::invalid_argument("Gbf: linear index out of range");
        long r = mod_q(c, q);
        if (r != 0) lin_[i] = r;
    }
    constant_ = mod_q(constant, q);
}

long Gbf::eval(const std::vector<int>& point) const {
    if (static_cast<int>(point.size()) != m_)
        throw std::invalid_argument("Gbf::eval: point has wrong arity");
    for (int b : point)
        if (b != 0 && b != 1) throw std::invalid_argument("Gbf::eval: point entries must be 0/1");
    long acc = constant_;
    for (const auto& [key, c] : quad_)
        if (point[static_cast<std::size_t>(key.first)] && point[static_cast<std::size_t>(key.second)])
            acc += c;
    for (const auto& [i, c] : lin_)
        if (point[static_cast<std::size_t>(i)]) acc += c;
    return mod_q(acc, q_);
}

Gbf Gbf::reversed() const {
    // Substitute y_i -> 1 - y_i and expand:
    //   c*y_i*y_j -> c - c*y_i - c*y_j + c*y_i*y_j
    //   c*y_i     -> c - c*y_i
    std::map<std::pair<int, int>, long> quad;
    std::map<int, long> lin;
    long cst = constant_;
    for (const auto& [key, c] : quad_) {
        quad[key] += c;
        lin[key.first] -= c;
        lin[key.second] -= c;
        cst += c;
    }
    for (const auto& [i, c] : lin_) {
        lin[i] -= c;
        cst += c;
    }
    return Gbf(q_, m_, std::move(quad), std::move(lin), cst);
}

GbfRestriction Gbf::restricted(int var, int value) const {
    if (var < 0 || var >= m_) throw std::invalid_argument("Gbf::restricted: variable out of range");
    if (value != 0 && value != 1) throw std::invalid_argument("Gbf::restricted: value must be 0/1");
    if (m_ == 1) throw std::invalid_argument("Gbf::restricted: cannot restrict the last variable");
    auto remap = [var](int i) { return i > var ? i - 1 : i; };
    std::map<std::pair<int, int>, long> quad;
    std::map<int, long> lin;
    long cst = constant_;
    for (const auto& [key, c] : quad_) {
        const auto [i, j] = key;
        if (i == var) {
            if (value) lin[remap(j)] += c;
        } else if (j == var) {
            if (value) lin[remap(i)] += c;
        } else {
            quad[{remap(i), remap(j)}] += c;
        }
    }
    for (const auto& [i, c] : lin_) {
        if (i == var) {
            if (value) cst += c;
        } else {
            lin[remap(i)] += c;
        }
    }
    GbfRestriction out{Gbf(q_, m_ - 1, std::move(quad), std::move(lin), cst), {}};
    out.source_index.reserve(static_cast<std::size_t>(m_ - 1));
    for (int i = 0; i < m_; ++i)
        if (i != var) out.source_index.push_back(i);
    return out;
}

GbfGraph Gbf::quadratic_graph() const {
    GbfGraph g;
    g.vertex_count = m_;
    g.edges.reserve(quad_.size());
    for (const auto& [key, c] : quad_)
        g.edges.push_back({key.first, key.second, c});
    return g;  // map iteration is already (a, b)-sorted
}

PathReport check_path_reduction(const Gbf& g, const std::vector<int>& deleted,
                                std::optional<int> gamma) {
    const int m = g.m();
    std::vector<bool> removed(static_cast<std::size_t>(m), false);
    for (int v : deleted) {
        if (v < 0 || v >= m)
            throw std::out_of_range("check_path_reduction: deleted vertex out of range");
        if (removed[static_cast<std::size_t>(v)])
            throw std::invalid_argument("check_path_reduction: duplicate vertex in deletion set");
        removed[static_cast<std::size_t>(v)] = true;
    }
    if (gamma) {
        if (*gamma < 0 || *gamma >= m)
            throw std::out_of_range("check_path_reduction: gamma out of range");
        if (removed[static_cast<std::size_t>(*gamma)])
            throw std::invalid_argument("check_path_reduction: gamma is in the deletion set");
    }

    PathReport rep;
    std::vector<int> remaining;
    for (int i = 0; i < m; ++i)
        if (!removed[static_cast<std::size_t>(i)]) remaining.push_back(i);
    if (remaining.empty()) {
        rep.failure = PathFailure::NoVertices;
        return rep;
    }

    // Surviving edges.  Every one of them must carry weight q/2; edges
    // touching a deleted vertex are unconstrained.
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
    std::size_t edge_count = 0;
    for (const auto& [key, c] : g.quad()) {
        const auto [a, b] = key;
        if (removed[static_cast<std::size_t>(a)] || removed[static_cast<std::size_t>(b)]) continue;
        if (c != g.q() / 2) {
            rep.failure = PathFailure::WrongEdgeWeight;
            return rep;
        }
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
        ++edge_count;
    }

    // Connectivity over the survivors.
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    std::vector<int> stack{remaining.front()};
    seen[static_cast<std::size_t>(remaining.front())] = true;
    std::size_t reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                stack.push_back(w);
            }
        }
    }
    if (reached != remaining.size()) {
        rep.failure = PathFailure::Disconnected;
        return rep;
    }
    // A connected graph is a simple path iff it is a tree (|E| = |V|-1)
    // with maximum degree 2.
    bool degree_ok = true;
    for (int v : remaining)
        if (adj[static_cast<std::size_t>(v)].size() > 2) degree_ok = false;
    if (edge_count != remaining.size() - 1 || !degree_ok) {
        rep.failure = PathFailure::NotAPath;
        return rep;
    }

    // Walk the path from its smallest end so the report is deterministic.
    int start = remaining.front();
    for (int v : remaining)
        if (adj[static_cast<std::size_t>(v)].size() <= 1) {
            start = v;
            break;
        }
    std::vector<int> walk{start};
    int prev = -1, cur = start;
    while (true) {
        int next = -1;
        for (int w : adj[static_cast<std::size_t>(cur)])
            if (w != prev) next = w;
        if (next < 0) break;
        walk.push_back(next);
        prev = cur;
        cur = next;
    }
    rep.remaining_path = walk;
    if (walk.size() == 1) {
        rep.end_vertices = {walk.front()};
    } else {
        rep.end_vertices = {std::min(walk.front(), walk.back()),
                            std::max(walk.front(), walk.back())};
    }
    if (gamma && std::find(rep.end_vertices.begin(), rep.end_vertices.end(), *gamma) ==
                     rep.end_vertices.end()) {
        rep.failure = PathFailure::GammaNotEnd;
        return rep;
    }
    rep.ok = true;
    return rep;
}

std::optional<std::vector<int>> find_deletion_set(const Gbf& g, int n) {
    const int m = g.m();
    if (n < 0 || n > m - 1)
        throw std::invalid_argument("find_deletion_set: need 0 <= n <= m-1");
    // Enumerate n-subsets of {0..m-1} in lexicographic order.
    std::vector<int> pick(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (check_path_reduction(g, pick).ok) return pick;
        // advance to the next combination
        int i = n - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - n + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return std::nullopt;
}

}  // namespace zccs
