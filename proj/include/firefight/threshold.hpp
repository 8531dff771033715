#ifndef FIREFIGHT_THRESHOLD_HPP
#define FIREFIGHT_THRESHOLD_HPP

#include "firefight/exact.hpp"

#include <cassert>
#include <map>
#include <variant>

namespace firefight {

/// Vertices outside X with the same X-neighbourhood and the same side of the
/// clique/independent split. Members are sorted by degree in G - X, largest
/// first (ties by id), which is the nesting order of their neighbourhoods.
struct VertexType {
    VertexList modulator_neighbors;  // Y
    bool clique_side = false;
    VertexList members;
};

struct TypePartition {
    VertexList modulator;  // X, sorted
    std::vector<VertexType> types;
    std::vector<int> type_of;  // -1 for modulator vertices
};

inline TypePartition build_type_partition(const Graph& g, std::span<const Vertex> X) {
    TypePartition tp;
    tp.modulator.assign(X.begin(), X.end());
    std::sort(tp.modulator.begin(), tp.modulator.end());
    tp.modulator.erase(std::unique(tp.modulator.begin(), tp.modulator.end()), tp.modulator.end());
    std::vector<char> in_x(static_cast<std::size_t>(g.n()), 0);
    for (Vertex x : tp.modulator) {
        if (!g.contains(x))
            throw InputError("modulator vertex out of range: " + std::to_string(x + 1));
        in_x[x] = 1;
    }
    auto [rest, to_old] = remove_vertices(g, tp.modulator);
    auto split = threshold_split(rest);
    if (!split)
        throw PreconditionError("graph minus the modulator is not a threshold graph");
    std::vector<char> on_clique(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v : split->clique)
        on_clique[to_old[v]] = 1;
    std::vector<int> inner_degree(static_cast<std::size_t>(g.n()), 0);
    for (std::size_t i = 0; i < to_old.size(); ++i)
        inner_degree[to_old[i]] = rest.degree(static_cast<Vertex>(i));

    std::map<std::pair<VertexList, bool>, VertexList> groups;
    for (Vertex v : to_old) {
        VertexList y;
        for (Vertex w : g.neighbors(v))
            if (in_x[w])
                y.push_back(w);
        // clique side sorts first
        groups[{std::move(y), !on_clique[v]}].push_back(v);
    }
    tp.type_of.assign(static_cast<std::size_t>(g.n()), -1);
    for (auto& [key, members] : groups) {
        std::stable_sort(members.begin(), members.end(),
                         [&](Vertex a, Vertex b) { return inner_degree[a] > inner_degree[b]; });
        for (Vertex v : members)
            tp.type_of[v] = static_cast<int>(tp.types.size());
        tp.types.push_back(VertexType{key.first, !key.second, members});
    }
    return tp;
}

/// A template entry: a concrete modulator vertex or an index into
/// TypePartition::types.
struct TypeSymbol {
    int index = 0;
    friend bool operator==(const TypeSymbol&, const TypeSymbol&) = default;
};
using TemplateSymbol = std::variant<Vertex, TypeSymbol>;
using TemplateSequence = std::vector<TemplateSymbol>;

namespace detail {

/// First member in nesting order that is neither burned nor defended.
inline Vertex greedy_member(const VertexType& type, const FireState& st) {
    for (Vertex v : type.members)
        if (!st.burned.test(v) && !st.defended.test(v))
            return v;
    return -1;
}

} // namespace detail

/// Plays a template: type symbols become the greedy member of their type at
/// that round. Invalid when a type has no usable member or a modulator vertex
/// is already burned or defended.
inline SimOutcome instantiate_and_simulate(const Graph& g, Vertex s, const TypePartition& tp,
                                           const TemplateSequence& tmpl) {
    FireRules rules(g, s);
    FireState st = rules.initial();
    Strategy concrete;
    for (const auto& sym : tmpl) {
        Vertex v = -1;
        if (const auto* t = std::get_if<TypeSymbol>(&sym)) {
            if (t->index < 0 || t->index >= static_cast<int>(tp.types.size()))
                throw InputError("template names an unknown type");
            v = detail::greedy_member(tp.types[t->index], st);
#ifndef NDEBUG
            // nesting: the chosen member dominates every other usable member
            if (v >= 0)
                for (Vertex w : tp.types[t->index].members)
                    if (w != v && !st.burned.test(w) && !st.defended.test(w)) {
                        VertexMask closed = g.mask(v);
                        closed.set(v);
                        assert(g.mask(w).is_subset_of(closed | VertexMask::single(w)));
                    }
#endif
        } else {
            v = std::get<Vertex>(sym);
            if (!std::binary_search(tp.modulator.begin(), tp.modulator.end(), v))
                throw InputError("template names a vertex outside the modulator");
        }
        if (v < 0 || st.burned.test(v) || st.defended.test(v)) {
            // report the concrete prefix followed by the offending vertex, if any
            SimOutcome out = simulate(g, s, concrete);
            out.valid = false;
            out.failed_round = static_cast<int>(concrete.size()) + 1;
            return out;
        }
        concrete.sequence.push_back(v);
        st = rules.defend(st, v);
    }
    return simulate(g, s, concrete);
}

/// Moves are the greedy member of every type plus unused modulator vertices,
/// which is exactly the set of templates, one symbol at a time.
class ThresholdPolicy {
public:
    ThresholdPolicy(const TypePartition& tp, Vertex s) : tp_(&tp) {
        for (Vertex x : tp.modulator)
            if (x != s)
                modulator_.set(x);
    }

    [[nodiscard]] VertexMask moves(const FireState& st) const {
        VertexMask out = modulator_ - st.burned - st.defended;
        for (const auto& type : tp_->types)
            if (Vertex v = detail::greedy_member(type, st); v >= 0)
                out.set(v);
        return out;
    }
    [[nodiscard]] bool prune(const FireState&) const { return false; }
    [[nodiscard]] bool accept(const FireState&, const VertexMask&) const { return true; }

private:
    const TypePartition* tp_;
    VertexMask modulator_;
};

/// Optimal strategy when G - X is a threshold graph. Only the component of s
/// is searched; s is added to X when absent. Strategies have at most
/// 2|X|+2 entries, with |X| counted after adding s.
inline SolveResult solve_threshold(const Graph& g, Vertex s, std::span<const Vertex> X) {
    auto sc = detail::source_component(g, s);
    VertexList xs = detail::normalized_modulator(g, sc, X);
    sc.graph.require_maskable("threshold solver");
    TypePartition tp = build_type_partition(sc.graph, xs);
    FireRules rules(sc.graph, sc.source);
    ThresholdPolicy policy(tp, sc.source);
    SequenceSearch search(rules, policy, 2 * static_cast<int>(xs.size()) + 2);
    SolveResult out;
    out.best_saved = search.maximize();
    out.best_strategy = sc.lift(*search.shortest_reaching(out.best_saved));
    out.best_saved += sc.outside;
    out.explored = search.explored();
    return out;
}

} // namespace firefight

#endif // FIREFIGHT_THRESHOLD_HPP
