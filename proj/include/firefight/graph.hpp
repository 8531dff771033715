#ifndef FIREFIGHT_GRAPH_HPP
#define FIREFIGHT_GRAPH_HPP

#include "firefight/vertex_mask.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace firefight {

/// Malformed user input: files, strategy strings, out-of-range parameters.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exponential routine was asked to run beyond its configured size guard.
class SizeGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A solver precondition on the instance structure does not hold.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Edge = std::pair<Vertex, Vertex>;
using VertexList = std::vector<Vertex>;

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Undirected simple graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) { build_masks(); }

    /// Throws InputError on self-loops, duplicate edges or out-of-range ids.
    Graph(int n, std::span<const Edge> edges) : adj_(static_cast<std::size_t>(n)) {
        if (n < 0)
            throw InputError("negative vertex count");
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw InputError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
            if (u == v)
                throw InputError("self-loop at vertex " + std::to_string(u));
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& nb : adj_) {
            std::sort(nb.begin(), nb.end());
            if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
                throw InputError("duplicate edge");
        }
        m_ = static_cast<int>(edges.size());
        build_masks();
    }

    [[nodiscard]] int n() const { return static_cast<int>(adj_.size()); }
    [[nodiscard]] int m() const { return m_; }
    [[nodiscard]] const VertexList& neighbors(Vertex v) const { return adj_[v]; }
    [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    [[nodiscard]] bool contains(Vertex v) const { return v >= 0 && v < n(); }

    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const {
        if (has_masks_)
            return masks_[u].test(v);
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    /// True when every vertex id fits in a VertexMask.
    [[nodiscard]] bool maskable() const { return has_masks_; }

    /// Open neighbourhood as a mask. Requires maskable().
    [[nodiscard]] const VertexMask& mask(Vertex v) const { return masks_[v]; }

    [[nodiscard]] VertexMask all_vertices() const { return VertexMask::first_n(n()); }

    /// Edges with u < v, sorted.
    [[nodiscard]] std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (Vertex u = 0; u < n(); ++u)
            for (Vertex v : adj_[u])
                if (u < v)
                    out.emplace_back(u, v);
        return out;
    }

    void require_maskable(const char* who) const {
        if (!has_masks_)
            throw SizeGuardError(std::string(who) + ": graph has more than " +
                                 std::to_string(VertexMask::kCapacity) + " vertices");
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    void build_masks() {
        has_masks_ = n() <= VertexMask::kCapacity;
        if (!has_masks_)
            return;
        masks_.assign(adj_.size(), VertexMask{});
        for (Vertex v = 0; v < n(); ++v)
            masks_[v] = VertexMask::of(adj_[v]);
    }

    std::vector<VertexList> adj_;
    std::vector<VertexMask> masks_;
    int m_ = 0;
    bool has_masks_ = true;
};

/// Incremental edge collector; duplicate insertions are ignored.
class GraphBuilder {
public:
    explicit GraphBuilder(int n = 0) : n_(n) {}

    Vertex add_vertex() { return n_++; }
    Vertex add_vertices(int count) {
        Vertex first = n_;
        n_ += count;
        return first;
    }
    void add_edge(Vertex u, Vertex v) {
        if (u > v)
            std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    [[nodiscard]] int n() const { return n_; }

    [[nodiscard]] Graph build() {
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        return Graph(n_, edges_);
    }

private:
    int n_;
    std::vector<Edge> edges_;
};

/// Shortest-path distances from src in G minus blocked; kUnreachable where no path.
inline std::vector<int> bfs_distances(const Graph& g, Vertex src, std::span<const Vertex> blocked = {}) {
    std::vector<int> dist(static_cast<std::size_t>(g.n()), kUnreachable);
    std::vector<char> off(static_cast<std::size_t>(g.n()), 0);
    for (Vertex b : blocked)
        off[b] = 1;
    if (off[src])
        throw InputError("bfs source is blocked");
    std::deque<Vertex> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (off[w] || dist[w] != kUnreachable)
                continue;
            dist[w] = dist[u] + 1;
            queue.push_back(w);
        }
    }
    return dist;
}

/// Vertex set of v's component in G minus removed, sorted.
inline VertexList connected_component_of(const Graph& g, Vertex v, std::span<const Vertex> removed = {}) {
    auto dist = bfs_distances(g, v, removed);
    VertexList out;
    for (Vertex u = 0; u < g.n(); ++u)
        if (dist[u] != kUnreachable)
            out.push_back(u);
    return out;
}

/// Mask variant of reachability: vertices reachable from src inside `allowed`.
inline VertexMask reachable_within(const Graph& g, Vertex src, const VertexMask& allowed) {
    VertexMask seen = VertexMask::single(src);
    VertexMask layer = seen;
    while (layer.any()) {
        VertexMask next;
        layer.for_each([&](Vertex u) { next |= g.mask(u); });
        next &= allowed;
        next -= seen;
        seen |= next;
        layer = next;
    }
    return seen;
}

/// Connected components as sorted vertex lists, ordered by smallest member.
inline std::vector<VertexList> connected_components(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
    std::vector<VertexList> out;
    for (Vertex r = 0; r < g.n(); ++r) {
        if (comp[r] >= 0)
            continue;
        auto members = connected_component_of(g, r);
        for (Vertex v : members)
            comp[v] = static_cast<int>(out.size());
        out.push_back(std::move(members));
    }
    return out;
}

/// Subgraph induced by `keep` (any order). Returns the graph and the new->old id map.
inline std::pair<Graph, VertexList> induced_subgraph(const Graph& g, VertexList keep) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> index(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i)
        index[keep[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (Vertex u : keep)
        for (Vertex w : g.neighbors(u))
            if (u < w && index[w] >= 0)
                edges.emplace_back(index[u], index[w]);
    return {Graph(static_cast<int>(keep.size()), edges), keep};
}

/// G minus a vertex set; returns the graph and the new->old id map.
inline std::pair<Graph, VertexList> remove_vertices(const Graph& g, std::span<const Vertex> removed) {
    std::vector<char> off(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v : removed)
        off[v] = 1;
    VertexList keep;
    for (Vertex v = 0; v < g.n(); ++v)
        if (!off[v])
            keep.push_back(v);
    return induced_subgraph(g, std::move(keep));
}

/// Twin classes: vertices with equal open (false twins) or equal closed (true twins)
/// neighbourhoods share a class id. Vertices in `excluded` get singleton classes.
/// Swapping two members of a class is an automorphism fixing everything else.
inline std::vector<int> twin_classes(const Graph& g, const VertexMask& excluded = {}) {
    std::vector<int> cls(static_cast<std::size_t>(g.n()), -1);
    std::map<VertexList, int> open_key;
    std::map<VertexList, int> closed_key;
    int next_id = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (g.maskable() && excluded.test(v)) {
            cls[v] = next_id++;
            continue;
        }
        const VertexList& open = g.neighbors(v);
        VertexList closed = open;
        closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
        if (auto it = open_key.find(open); it != open_key.end()) {
            cls[v] = it->second;
        } else if (auto jt = closed_key.find(closed); jt != closed_key.end()) {
            cls[v] = jt->second;
        } else {
            cls[v] = next_id++;
            open_key.emplace(open, cls[v]);
            closed_key.emplace(std::move(closed), cls[v]);
        }
    }
    return cls;
}

} // namespace firefight

#endif // FIREFIGHT_GRAPH_HPP
