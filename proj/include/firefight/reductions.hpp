#ifndef FIREFIGHT_REDUCTIONS_HPP
#define FIREFIGHT_REDUCTIONS_HPP

#include "firefight/instance.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <sstream>

namespace firefight {

/// Where each part of the source graph went in the gadget.
struct ReductionProvenance {
    Vertex source = 0;
    std::optional<Vertex> universal;          // z, diameter-2 gadget only
    std::vector<VertexList> grid;             // grid[i][j] = d_{i+1, j+1}
    VertexList vertex_copy;                   // original vertex -> gadget vertex
    std::vector<std::pair<Edge, Vertex>> edge_vertex;  // sorted by (min, max)
};

struct ReductionOutput {
    Instance instance;
    ReductionProvenance provenance;
};

inline int choose2(int k) { return k * (k - 1) / 2; }

namespace detail {

/// s, optional z, a `layers` x `width` grid with complete bipartite joins
/// between consecutive layers, s joined to layer 1 and the last layer joined to
/// every vertex copy; then one copy per original vertex and one vertex per edge.
struct GadgetLayout {
    GraphBuilder builder{0};
    ReductionProvenance prov;
};

inline GadgetLayout lay_out(const Graph& g, int layers, int width, bool with_z) {
    const int n = g.n();
    GadgetLayout out;
    int next = 0;
    out.prov.source = next++;
    if (with_z)
        out.prov.universal = next++;
    out.prov.grid.assign(static_cast<std::size_t>(layers), VertexList{});
    for (auto& layer : out.prov.grid)
        for (int j = 0; j < width; ++j)
            layer.push_back(next++);
    for (Vertex v = 0; v < n; ++v)
        out.prov.vertex_copy.push_back(next++);
    for (auto e : g.edges())
        out.prov.edge_vertex.emplace_back(e, next++);
    out.builder = GraphBuilder(next);

    auto& b = out.builder;
    const auto& grid = out.prov.grid;
    for (Vertex d : grid.front())
        b.add_edge(out.prov.source, d);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        for (Vertex a : grid[i])
            for (Vertex c : grid[i + 1])
                b.add_edge(a, c);
    for (Vertex d : grid.back())
        for (Vertex c : out.prov.vertex_copy)
            b.add_edge(d, c);
    for (const auto& [e, iv] : out.prov.edge_vertex) {
        b.add_edge(out.prov.vertex_copy[e.first], iv);
        b.add_edge(out.prov.vertex_copy[e.second], iv);
    }
    return out;
}

inline VertexList grid_vertices(const ReductionProvenance& prov) {
    VertexList out;
    for (const auto& layer : prov.grid)
        out.insert(out.end(), layer.begin(), layer.end());
    return out;
}

inline void require_k(int k) {
    if (k < 2)
        throw InputError("reduction needs k >= 2");
}

} // namespace detail

/// k-Clique to Saving k'-Vertices on a graph close to diameter-2 components:
/// k x (k+1) grid, z joined to all vertex and edge copies,
/// k' = k + C(k,2) + 2. The declared modulator is {s} + D; z stays, since it
/// is what gives V + E diameter two.
inline ReductionOutput reduce_clique_to_diameter2(const Graph& g, int k) {
    detail::require_k(k);
    auto lay = detail::lay_out(g, k, k + 1, true);
    const Vertex z = *lay.prov.universal;
    for (Vertex c : lay.prov.vertex_copy)
        lay.builder.add_edge(z, c);
    for (const auto& [e, iv] : lay.prov.edge_vertex)
        lay.builder.add_edge(z, iv);
    ReductionOutput out;
    out.provenance = lay.prov;
    out.instance.graph = lay.builder.build();
    out.instance.source = lay.prov.source;
    VertexList mod = detail::grid_vertices(lay.prov);
    mod.push_back(lay.prov.source);
    std::sort(mod.begin(), mod.end());
    out.instance.modulator = mod;
    out.instance.class_tag = ClassTag::diameter2_components;
    out.instance.demand = k + choose2(k) + 2;
    return out;
}

/// k-Clique to Saving k'-Vertices close to a split graph: vertex copies form a
/// clique, (k-1) x k grid, no z, k' = k + C(k,2) + 1, modulator {s} + D.
inline ReductionOutput reduce_clique_to_split(const Graph& g, int k) {
    detail::require_k(k);
    auto lay = detail::lay_out(g, k - 1, k, false);
    const auto& vc = lay.prov.vertex_copy;
    for (std::size_t a = 0; a < vc.size(); ++a)
        for (std::size_t b = a + 1; b < vc.size(); ++b)
            lay.builder.add_edge(vc[a], vc[b]);
    ReductionOutput out;
    out.provenance = lay.prov;
    out.instance.graph = lay.builder.build();
    out.instance.source = lay.prov.source;
    VertexList mod = detail::grid_vertices(lay.prov);
    mod.push_back(lay.prov.source);
    std::sort(mod.begin(), mod.end());
    out.instance.modulator = mod;
    out.instance.class_tag = ClassTag::split;
    out.instance.demand = k + choose2(k) + 1;
    return out;
}

inline bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover) {
    std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v : cover)
        in[v] = 1;
    for (auto [u, v] : g.edges())
        if (!in[u] && !in[v])
            return false;
    return true;
}

/// Clique parameterized by vertex cover X to Saving k'-Vertices parameterized
/// by distance to stars: G keeps its edges, each edge gets a vertex J_uv,
/// (k-1) x k grid, modulator {s} + D + X, k' = k + C(k,2) + 1.
inline ReductionOutput reduce_cliqueVC_to_stars(const Graph& g, std::span<const Vertex> cover, int k) {
    detail::require_k(k);
    for (Vertex v : cover)
        if (!g.contains(v))
            throw InputError("cover vertex out of range: " + std::to_string(v + 1));
    if (!is_vertex_cover(g, cover))
        throw InputError("given set is not a vertex cover");
    VertexList xs(cover.begin(), cover.end());
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    if (k > static_cast<int>(xs.size()) + 1)
        throw InputError("k must be at most |X| + 1");
    auto lay = detail::lay_out(g, k - 1, k, false);
    const auto& vc = lay.prov.vertex_copy;
    for (auto [u, v] : g.edges())
        lay.builder.add_edge(vc[u], vc[v]);
    ReductionOutput out;
    out.provenance = lay.prov;
    out.instance.graph = lay.builder.build();
    out.instance.source = lay.prov.source;
    VertexList mod = detail::grid_vertices(lay.prov);
    mod.push_back(lay.prov.source);
    for (Vertex x : xs)
        mod.push_back(vc[x]);
    std::sort(mod.begin(), mod.end());
    out.instance.modulator = mod;
    out.instance.class_tag = ClassTag::star_forest;
    out.instance.demand = k + choose2(k) + 1;
    return out;
}

/// Text sidecar for a gadget (1-based ids).
inline std::string reduction_provenance(const ReductionOutput& out) {
    const auto& p = out.provenance;
    std::ostringstream os;
    os << "# reduction provenance v1\n";
    os << "s " << p.source + 1 << '\n';
    if (p.universal)
        os << "z " << *p.universal + 1 << '\n';
    for (std::size_t i = 0; i < p.grid.size(); ++i)
        for (std::size_t j = 0; j < p.grid[i].size(); ++j)
            os << "d " << i + 1 << ' ' << j + 1 << ' ' << p.grid[i][j] + 1 << '\n';
    for (std::size_t v = 0; v < p.vertex_copy.size(); ++v)
        os << "v " << v + 1 << ' ' << p.vertex_copy[v] + 1 << '\n';
    for (const auto& [e, iv] : p.edge_vertex)
        os << "e " << e.first + 1 << ' ' << e.second + 1 << ' ' << iv + 1 << '\n';
    return os.str();
}

} // namespace firefight

#endif // FIREFIGHT_REDUCTIONS_HPP
