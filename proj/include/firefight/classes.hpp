#ifndef FIREFIGHT_CLASSES_HPP
#define FIREFIGHT_CLASSES_HPP

#include "firefight/graph.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace firefight {

enum class ClassTag { clique, cluster, threshold, star_forest, split, diameter2_components };

inline constexpr std::array<ClassTag, 6> kAllClassTags = {
    ClassTag::clique,      ClassTag::cluster, ClassTag::threshold,
    ClassTag::star_forest, ClassTag::split,   ClassTag::diameter2_components};

inline std::string_view to_string(ClassTag tag) {
    switch (tag) {
    case ClassTag::clique: return "clique";
    case ClassTag::cluster: return "cluster";
    case ClassTag::threshold: return "threshold";
    case ClassTag::star_forest: return "star_forest";
    case ClassTag::split: return "split";
    case ClassTag::diameter2_components: return "diameter2_components";
    }
    return "?";
}

inline std::optional<ClassTag> class_tag_from_string(std::string_view name) {
    for (ClassTag t : kAllClassTags)
        if (to_string(t) == name)
            return t;
    return std::nullopt;
}

namespace detail {

inline bool is_clique(const Graph& g) {
    for (Vertex v = 0; v < g.n(); ++v)
        if (g.degree(v) != g.n() - 1)
            return false;
    return true;
}

inline bool is_cluster(const Graph& g) {
    for (const auto& comp : connected_components(g))
        for (Vertex v : comp)
            if (g.degree(v) != static_cast<int>(comp.size()) - 1)
                return false;
    return true;
}

inline bool is_star_forest(const Graph& g) {
    for (const auto& comp : connected_components(g)) {
        int size = static_cast<int>(comp.size());
        if (size <= 2)
            continue;
        int centers = 0;
        for (Vertex v : comp) {
            if (g.degree(v) == size - 1)
                ++centers;
            else if (g.degree(v) != 1)
                return false;
        }
        if (centers != 1)
            return false;
    }
    return true;
}

/// Hammer–Simeone degree-sequence test.
inline bool is_split(const Graph& g) {
    std::vector<int> deg;
    deg.reserve(static_cast<std::size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v)
        deg.push_back(g.degree(v));
    std::sort(deg.begin(), deg.end(), std::greater<>());
    int m = 0;
    for (int i = 0; i < g.n(); ++i)
        if (deg[i] >= i)
            m = i + 1;
    long long lhs = 0;
    long long rhs = static_cast<long long>(m) * (m - 1);
    for (int i = 0; i < g.n(); ++i)
        (i < m ? lhs : rhs) += deg[i];
    return lhs == rhs;
}

inline bool is_diameter2_components(const Graph& g) {
    for (const auto& comp : connected_components(g))
        for (Vertex v : comp) {
            auto dist = bfs_distances(g, v);
            for (Vertex u : comp)
                if (dist[u] > 2)
                    return false;
        }
    return true;
}

} // namespace detail

/// Clique/independent partition of a threshold graph, found by peeling
/// isolated or dominating vertices. Empty optional when g is not threshold.
struct ThresholdSplit {
    VertexList clique;
    VertexList independent;
};

inline std::optional<ThresholdSplit> threshold_split(const Graph& g) {
    std::vector<int> deg(static_cast<std::size_t>(g.n()));
    std::vector<char> alive(static_cast<std::size_t>(g.n()), 1);
    for (Vertex v = 0; v < g.n(); ++v)
        deg[v] = g.degree(v);
    ThresholdSplit out;
    int remaining = g.n();
    while (remaining > 0) {
        Vertex pick = -1;
        bool universal = false;
        for (Vertex v = 0; v < g.n() && pick < 0; ++v) {
            if (!alive[v])
                continue;
            // the last vertex is adjacent to every clique vertex, so it joins a nonempty clique
            if (deg[v] == remaining - 1 && (remaining > 1 || !out.clique.empty())) {
                pick = v;
                universal = true;
            } else if (deg[v] == 0) {
                pick = v;
            }
        }
        if (pick < 0)
            return std::nullopt;
        (universal ? out.clique : out.independent).push_back(pick);
        alive[pick] = 0;
        --remaining;
        for (Vertex w : g.neighbors(pick))
            if (alive[w])
                --deg[w];
    }
    std::sort(out.clique.begin(), out.clique.end());
    std::sort(out.independent.begin(), out.independent.end());
    return out;
}

/// Membership test for each supported class.
inline bool recognize(const Graph& g, ClassTag tag) {
    switch (tag) {
    case ClassTag::clique: return detail::is_clique(g);
    case ClassTag::cluster: return detail::is_cluster(g);
    case ClassTag::threshold: return threshold_split(g).has_value();
    case ClassTag::star_forest: return detail::is_star_forest(g);
    case ClassTag::split: return detail::is_split(g);
    case ClassTag::diameter2_components: return detail::is_diameter2_components(g);
    }
    return false;
}

/// recognize() applied to G minus X.
inline bool recognize_without(const Graph& g, std::span<const Vertex> removed, ClassTag tag) {
    return recognize(remove_vertices(g, removed).first, tag);
}

inline constexpr int kDefaultInducedPathGuard = 25;

/// Length (in edges) of a longest induced path starting at src. Exhaustive
/// search over induced extensions; twins are tried once per extension step.
/// Throws SizeGuardError when n exceeds `guard`.
inline int longest_induced_path_from(const Graph& g, Vertex src, int guard = kDefaultInducedPathGuard) {
    if (g.n() > guard)
        throw SizeGuardError("longest_induced_path_from: n=" + std::to_string(g.n()) +
                             " exceeds guard " + std::to_string(guard));
    g.require_maskable("longest_induced_path_from");
    if (!g.contains(src))
        throw InputError("longest_induced_path_from: source out of range");
    const auto twins = twin_classes(g, VertexMask::single(src));
    int best = 0;
    // forbidden: path vertices plus neighbours of every path vertex but the tail.
    std::function<void(Vertex, const VertexMask&, int)> extend = [&](Vertex tail, const VertexMask& forbidden,
                                                                     int length) {
        best = std::max(best, length);
        if (best == g.n() - 1)
            return;
        VertexMask cand = g.mask(tail) - forbidden;
        std::vector<int> tried;
        cand.for_each([&](Vertex w) {
            if (std::find(tried.begin(), tried.end(), twins[w]) != tried.end())
                return;
            tried.push_back(twins[w]);
            VertexMask next = forbidden | g.mask(tail);
            next.set(tail);
            next.set(w);
            extend(w, next, length + 1);
        });
    };
    extend(src, VertexMask::single(src), 0);
    return best;
}

} // namespace firefight

#endif // FIREFIGHT_CLASSES_HPP
