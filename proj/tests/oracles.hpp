// Brute-force reference implementations used only by the test suites. They
// deliberately avoid the library's search engine and bitmask fire state.
#ifndef FIREFIGHT_TESTS_ORACLES_HPP
#define FIREFIGHT_TESTS_ORACLES_HPP

#include "firefight/classes.hpp"
#include "firefight/fire.hpp"
#include "firefight/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using firefight::Graph;
using firefight::Vertex;
using firefight::VertexList;

/// Best saved count over all defended *sets*. A set S is playable iff its
/// members, sorted by delta(v) = dist(s, v) in G - (S - v), satisfy
/// delta_(i) >= i; the burned set is then everything reachable from s in G - S.
inline int best_saved_by_subsets(const Graph& g, Vertex s) {
    const int n = g.n();
    int best = 0;
    for (std::uint32_t bits = 0; bits < (1U << n); ++bits) {
        if (bits & (1U << s))
            continue;
        VertexList S;
        for (Vertex v = 0; v < n; ++v)
            if (bits & (1U << v))
                S.push_back(v);
        std::vector<int> delta;
        for (Vertex v : S) {
            VertexList blocked;
            for (Vertex u : S)
                if (u != v)
                    blocked.push_back(u);
            delta.push_back(firefight::bfs_distances(g, s, blocked)[v]);
        }
        std::sort(delta.begin(), delta.end());
        bool ok = true;
        for (std::size_t i = 0; i < delta.size(); ++i)
            ok = ok && delta[i] >= static_cast<int>(i + 1);
        if (!ok)
            continue;
        auto dist = firefight::bfs_distances(g, s, S);
        int burned = 0;
        for (Vertex v = 0; v < n; ++v)
            burned += dist[v] != firefight::kUnreachable;
        best = std::max(best, n - burned);
    }
    return best;
}

/// Best saved count when the firefighter may also pass a round. Plain
/// recursive simulation on vectors, no memoisation.
inline int best_saved_with_passes(const Graph& g, Vertex s) {
    const int n = g.n();
    int best = 0;
    std::function<void(std::vector<char>, std::vector<char>)> rec = [&](std::vector<char> burned,
                                                                        std::vector<char> defended) {
        auto step = [&](std::vector<char> b, const std::vector<char>& d) {
            std::vector<char> nb = b;
            bool changed = false;
            for (Vertex u = 0; u < n; ++u)
                if (b[u])
                    for (Vertex w : g.neighbors(u))
                        if (!b[w] && !d[w]) {
                            nb[w] = 1;
                            changed = true;
                        }
            return std::pair{nb, changed};
        };
        // stop here: run out the fire
        {
            auto b = burned;
            while (true) {
                auto [nb, changed] = step(b, defended);
                b = nb;
                if (!changed)
                    break;
            }
            int cnt = 0;
            for (Vertex v = 0; v < n; ++v)
                cnt += b[v];
            best = std::max(best, n - cnt);
        }
        auto [passed, alive] = step(burned, defended);
        if (!alive)
            return;
        rec(passed, defended);
        for (Vertex v = 0; v < n; ++v) {
            if (burned[v] || defended[v])
                continue;
            auto d = defended;
            d[v] = 1;
            auto [nb, ch] = step(burned, d);
            (void)ch;
            rec(nb, d);
        }
    };
    std::vector<char> burned(n, 0), defended(n, 0);
    burned[s] = 1;
    rec(burned, defended);
    return best;
}

/// Longest induced path from src by trying every ordered vertex sequence.
inline int longest_induced_path_brute(const Graph& g, Vertex src) {
    const int n = g.n();
    int best = 0;
    VertexList path{src};
    std::vector<char> used(n, 0);
    used[src] = 1;
    std::function<void()> rec = [&]() {
        // validate induced-ness of the current sequence from scratch
        for (std::size_t i = 0; i < path.size(); ++i)
            for (std::size_t j = i + 1; j < path.size(); ++j)
                if (g.adjacent(path[i], path[j]) != (j == i + 1))
                    return;
        best = std::max(best, static_cast<int>(path.size()) - 1);
        for (Vertex v = 0; v < n; ++v) {
            if (used[v])
                continue;
            used[v] = 1;
            path.push_back(v);
            rec();
            path.pop_back();
            used[v] = 0;
        }
    };
    rec();
    return best;
}

/// Does the vertex subset induce a graph isomorphic to `pattern`? Tries all
/// bijections.
inline bool induces(const Graph& g, VertexList vs, const Graph& pattern) {
    if (static_cast<int>(vs.size()) != pattern.n())
        return false;
    std::sort(vs.begin(), vs.end());
    do {
        bool ok = true;
        for (int i = 0; i < pattern.n() && ok; ++i)
            for (int j = i + 1; j < pattern.n() && ok; ++j)
                ok = g.adjacent(vs[i], vs[j]) == pattern.adjacent(i, j);
        if (ok)
            return true;
    } while (std::next_permutation(vs.begin(), vs.end()));
    return false;
}

inline Graph make(int n, std::initializer_list<firefight::Edge> edges) {
    std::vector<firefight::Edge> e(edges);
    return Graph(n, e);
}

inline Graph path_graph(int n) {
    std::vector<firefight::Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline Graph cycle_graph(int n) {
    std::vector<firefight::Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return Graph(n, e);
}

inline Graph complete_graph(int n) {
    std::vector<firefight::Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Graph(n, e);
}

/// Any induced copy of any pattern among all vertex subsets of matching size.
inline bool has_induced(const Graph& g, const std::vector<Graph>& patterns) {
    const int n = g.n();
    for (const auto& p : patterns) {
        const int k = p.n();
        if (k > n)
            continue;
        std::vector<char> pick(n, 0);
        std::fill(pick.begin(), pick.begin() + k, 1);
        do {
            VertexList vs;
            for (int i = 0; i < n; ++i)
                if (pick[i])
                    vs.push_back(i);
            if (induces(g, vs, p))
                return true;
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return false;
}

inline std::vector<Graph> forbidden_for(firefight::ClassTag tag) {
    using firefight::ClassTag;
    const Graph p3 = path_graph(3), p4 = path_graph(4), c4 = cycle_graph(4), c5 = cycle_graph(5);
    const Graph k3 = complete_graph(3), two_k2 = make(4, {{0, 1}, {2, 3}}), two_k1 = Graph(2);
    switch (tag) {
    case ClassTag::clique: return {two_k1};
    case ClassTag::cluster: return {p3};
    case ClassTag::threshold: return {p4, c4, two_k2};
    case ClassTag::split: return {two_k2, c4, c5};
    case ClassTag::star_forest: return {k3, c4, p4};
    case ClassTag::diameter2_components: return {};
    }
    return {};
}

/// Minimum deletion set size to reach the class, by subset enumeration
/// (smallest size first); -1 if none of size <= max_k.
inline int min_deletion_brute(const Graph& g, firefight::ClassTag tag, int max_k) {
    const int n = g.n();
    for (int k = 0; k <= std::min(max_k, n); ++k) {
        std::vector<char> pick(n, 0);
        std::fill(pick.begin(), pick.begin() + k, 1);
        do {
            VertexList xs;
            for (int i = 0; i < n; ++i)
                if (pick[i])
                    xs.push_back(i);
            auto rest = firefight::remove_vertices(g, xs).first;
            if (!has_induced(rest, forbidden_for(tag)))
                return k;
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return -1;
}

inline bool has_clique_brute(const Graph& g, int k) {
    const int n = g.n();
    if (k > n)
        return false;
    std::vector<char> pick(n, 0);
    std::fill(pick.begin(), pick.begin() + k, 1);
    do {
        VertexList vs;
        for (int i = 0; i < n; ++i)
            if (pick[i])
                vs.push_back(i);
        bool ok = true;
        for (std::size_t i = 0; i < vs.size() && ok; ++i)
            for (std::size_t j = i + 1; j < vs.size() && ok; ++j)
                ok = g.adjacent(vs[i], vs[j]);
        if (ok)
            return true;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return false;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<firefight::Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng))
                e.emplace_back(i, j);
    return Graph(n, e);
}

/// Calls f(sequence, outcome) for every valid defence sequence without
/// repeats, up to max_len entries, by plain simulation.
template <typename F>
void for_each_valid_strategy(const Graph& g, Vertex s, int max_len, F&& f) {
    VertexList seq;
    std::vector<char> used(g.n(), 0);
    std::function<void()> rec = [&]() {
        auto out = firefight::simulate(g, s, firefight::Strategy{seq});
        if (!out.valid)
            return;
        f(seq, out);
        if (static_cast<int>(seq.size()) == max_len)
            return;
        for (Vertex v = 0; v < g.n(); ++v) {
            if (used[v])
                continue;
            used[v] = 1;
            seq.push_back(v);
            rec();
            seq.pop_back();
            used[v] = 0;
        }
    };
    rec();
}

} // namespace oracle

#endif // FIREFIGHT_TESTS_ORACLES_HPP
