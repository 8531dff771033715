#ifndef FIREFIGHT_MODULATOR_HPP
#define FIREFIGHT_MODULATOR_HPP

#include "firefight/classes.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>

namespace firefight {

/// Vertex set X with G - X in `class_tag`, found within `budget` deletions.
struct Modulator {
    VertexList vertices;
    ClassTag class_tag = ClassTag::cluster;
    int budget = 0;

    friend bool operator==(const Modulator&, const Modulator&) = default;
};

namespace detail {

/// A forbidden induced subgraph, identified by its vertex count and sorted
/// degree sequence (unique among the small patterns used here).
struct Obstruction {
    int size;
    std::array<int, 5> degrees;
};

inline constexpr Obstruction kP3{3, {1, 1, 2}};
inline constexpr Obstruction kK3{3, {2, 2, 2}};
inline constexpr Obstruction kP4{4, {1, 1, 2, 2}};
inline constexpr Obstruction kC4{4, {2, 2, 2, 2}};
inline constexpr Obstruction k2K2{4, {1, 1, 1, 1}};
inline constexpr Obstruction kC5{5, {2, 2, 2, 2, 2}};

/// Obstruction sets, smallest pattern first.
inline std::vector<Obstruction> obstructions_for(ClassTag tag) {
    switch (tag) {
    case ClassTag::cluster: return {kP3};
    case ClassTag::threshold: return {kP4, kC4, k2K2};
    case ClassTag::star_forest: return {kK3, kC4, kP4};
    case ClassTag::split: return {k2K2, kC4, kC5};
    default: break;
    }
    throw InputError("no finite obstruction set for class " + std::string(to_string(tag)));
}

inline bool matches(const Graph& g, const VertexList& vs, const Obstruction& ob) {
    std::array<int, 5> deg{};
    const int sz = static_cast<int>(vs.size());
    for (int i = 0; i < sz; ++i)
        for (int j = i + 1; j < sz; ++j)
            if (g.adjacent(vs[i], vs[j])) {
                ++deg[i];
                ++deg[j];
            }
    std::sort(deg.begin(), deg.begin() + sz);
    return std::equal(deg.begin(), deg.begin() + sz, ob.degrees.begin());
}

/// Lexicographically first alive vertex subset inducing one of the patterns;
/// patterns are tried by increasing size.
inline std::optional<VertexList> find_obstruction(const Graph& g, const std::vector<char>& alive,
                                                  const std::vector<Obstruction>& patterns) {
    VertexList pool;
    for (Vertex v = 0; v < g.n(); ++v)
        if (alive[v])
            pool.push_back(v);
    std::vector<int> sizes;
    for (const auto& p : patterns)
        if (std::find(sizes.begin(), sizes.end(), p.size) == sizes.end())
            sizes.push_back(p.size);
    std::sort(sizes.begin(), sizes.end());
    for (int size : sizes) {
        VertexList cur;
        std::optional<VertexList> found;
        std::function<void(std::size_t)> rec = [&](std::size_t from) {
            if (found)
                return;
            if (static_cast<int>(cur.size()) == size) {
                for (const auto& p : patterns)
                    if (p.size == size && matches(g, cur, p)) {
                        found = cur;
                        return;
                    }
                return;
            }
            for (std::size_t i = from; i < pool.size() && !found; ++i) {
                cur.push_back(pool[i]);
                rec(i + 1);
                cur.pop_back();
            }
        };
        rec(0);
        if (found)
            return found;
    }
    return std::nullopt;
}

inline bool branch_obstructions(const Graph& g, std::vector<char>& alive, const std::vector<Obstruction>& patterns,
                                int budget, VertexList& deleted) {
    auto ob = find_obstruction(g, alive, patterns);
    if (!ob)
        return true;
    if (budget == 0)
        return false;
    for (Vertex v : *ob) {
        alive[v] = 0;
        deleted.push_back(v);
        if (branch_obstructions(g, alive, patterns, budget - 1, deleted))
            return true;
        deleted.pop_back();
        alive[v] = 1;
    }
    return false;
}

inline bool branch_clique(const Graph& g, std::vector<char>& alive, int budget, VertexList& deleted) {
    Vertex a = -1;
    Vertex b = -1;
    for (Vertex u = 0; u < g.n() && a < 0; ++u)
        for (Vertex v = u + 1; v < g.n(); ++v)
            if (alive[u] && alive[v] && !g.adjacent(u, v)) {
                a = u;
                b = v;
                break;
            }
    if (a < 0)
        return true;
    if (budget == 0)
        return false;
    for (Vertex v : {a, b}) {
        alive[v] = 0;
        deleted.push_back(v);
        if (branch_clique(g, alive, budget - 1, deleted))
            return true;
        deleted.pop_back();
        alive[v] = 1;
    }
    return false;
}

template <typename Branch>
std::optional<Modulator> smallest_by_budget(const Graph& g, ClassTag tag, int k, Branch&& branch) {
    if (k < 0)
        throw InputError("modulator budget must be non-negative");
    for (int budget = 0; budget <= k; ++budget) {
        std::vector<char> alive(static_cast<std::size_t>(g.n()), 1);
        VertexList deleted;
        if (branch(alive, budget, deleted)) {
            std::sort(deleted.begin(), deleted.end());
            return Modulator{deleted, tag, k};
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Distance-to-clique modulator: vertex cover of the complement by 2-way
/// branching on a non-adjacent pair. Returns a minimum set of size <= k.
inline std::optional<Modulator> find_clique_modulator(const Graph& g, int k) {
    return detail::smallest_by_budget(g, ClassTag::clique, k, [&](auto& alive, int budget, auto& deleted) {
        return detail::branch_clique(g, alive, budget, deleted);
    });
}

/// Minimum modulator of size <= k to cluster, threshold, star-forest or split
/// graphs, by branching over the vertices of a forbidden induced subgraph.
inline std::optional<Modulator> find_modulator(const Graph& g, ClassTag tag, int k) {
    if (tag == ClassTag::clique)
        return find_clique_modulator(g, k);
    const auto patterns = detail::obstructions_for(tag);
    return detail::smallest_by_budget(g, tag, k, [&](auto& alive, int budget, auto& deleted) {
        return detail::branch_obstructions(g, alive, patterns, budget, deleted);
    });
}

inline bool verify_modulator(const Graph& g, const Modulator& m) {
    for (Vertex v : m.vertices)
        if (!g.contains(v))
            return false;
    return static_cast<int>(m.vertices.size()) <= m.budget && recognize_without(g, m.vertices, m.class_tag);
}

} // namespace firefight

#endif // FIREFIGHT_MODULATOR_HPP
