#ifndef FIREFIGHT_EXACT_HPP
#define FIREFIGHT_EXACT_HPP

#include "firefight/classes.hpp"
#include "firefight/search.hpp"

#include <optional>
#include <span>
#include <string>

namespace firefight {

struct SolveResult {
    Strategy best_strategy;
    int best_saved = 0;
    long long explored = 0;
};

struct ExactOptions {
    /// Explicit cap on the defence sequence length; defaults to the longest
    /// induced path from the source.
    std::optional<int> length_bound;
    /// Size guard; raise explicitly for larger instances.
    int max_vertices = 20;
};

/// Every reachable, unburned vertex is a move; of several interchangeable
/// twins only the smallest id is tried.
class ExactPolicy {
public:
    ExactPolicy(const FireRules& rules)
        : rules_(&rules), twins_(twin_classes(rules.graph(), VertexMask::single(rules.source()))) {}

    [[nodiscard]] VertexMask moves(const FireState& st) const {
        VertexMask cand = rules_->reachable_unburned(st);
        VertexMask out;
        std::vector<int> taken;
        cand.for_each([&](Vertex v) {
            if (std::find(taken.begin(), taken.end(), twins_[v]) != taken.end())
                return;
            taken.push_back(twins_[v]);
            out.set(v);
        });
        return out;
    }
    [[nodiscard]] bool prune(const FireState&) const { return false; }
    [[nodiscard]] bool accept(const FireState&, const VertexMask&) const { return true; }

private:
    const FireRules* rules_;
    std::vector<int> twins_;
};

namespace detail {

inline int exact_length_bound(const Graph& g, Vertex s, const ExactOptions& opt) {
    if (g.n() > opt.max_vertices)
        throw SizeGuardError("exact solver: n=" + std::to_string(g.n()) + " exceeds guard " +
                             std::to_string(opt.max_vertices));
    if (!g.contains(s))
        throw InputError("source out of range");
    g.require_maskable("exact solver");
    if (opt.length_bound)
        return *opt.length_bound;
    return longest_induced_path_from(g, s, std::max(opt.max_vertices, kDefaultInducedPathGuard));
}

/// The component of s with dense new ids; vertices outside it can never burn.
struct SourceComponent {
    Graph graph;
    VertexList to_old;
    std::vector<int> to_new;  // -1 outside the component
    Vertex source = 0;
    int outside = 0;

    /// Maps a strategy on the component back to original ids.
    [[nodiscard]] Strategy lift(const Strategy& st) const {
        Strategy out;
        for (Vertex v : st.sequence)
            out.sequence.push_back(to_old[v]);
        return out;
    }
};

inline SourceComponent source_component(const Graph& g, Vertex s) {
    if (!g.contains(s))
        throw InputError("source out of range");
    SourceComponent sc;
    auto [h, map] = induced_subgraph(g, connected_component_of(g, s));
    sc.graph = std::move(h);
    sc.to_old = std::move(map);
    sc.to_new.assign(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < sc.to_old.size(); ++i)
        sc.to_new[sc.to_old[i]] = static_cast<int>(i);
    sc.source = sc.to_new[s];
    sc.outside = g.n() - sc.graph.n();
    return sc;
}

/// Modulator entries checked, mapped into the component, with s added.
inline VertexList normalized_modulator(const Graph& g, const SourceComponent& sc, std::span<const Vertex> X) {
    VertexList out{sc.source};
    for (Vertex x : X) {
        if (!g.contains(x))
            throw InputError("modulator vertex out of range: " + std::to_string(x + 1));
        if (sc.to_new[x] >= 0)
            out.push_back(sc.to_new[x]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace detail

/// Optimal strategy by exhaustive search over defence sequences no longer than
/// the longest induced path from s (or an explicit bound).
inline SolveResult solve_exact(const Graph& g, Vertex s, const ExactOptions& opt = {}) {
    const int bound = detail::exact_length_bound(g, s, opt);
    FireRules rules(g, s);
    ExactPolicy policy(rules);
    SequenceSearch search(rules, policy, bound);
    SolveResult out;
    out.best_saved = search.maximize();
    out.best_strategy = *search.shortest_reaching(out.best_saved);
    out.explored = search.explored();
    return out;
}

/// Saving k-Vertices: can some strategy save at least k vertices?
inline bool decide_saving_k(const Graph& g, Vertex s, int k, const ExactOptions& opt = {}) {
    const int bound = detail::exact_length_bound(g, s, opt);
    FireRules rules(g, s);
    ExactPolicy policy(rules);
    SequenceSearch search(rules, policy, bound);
    return search.reaches(k);
}

} // namespace firefight

#endif // FIREFIGHT_EXACT_HPP
