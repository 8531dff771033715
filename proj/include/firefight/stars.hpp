#ifndef FIREFIGHT_STARS_HPP
#define FIREFIGHT_STARS_HPP

#include "firefight/exact.hpp"

#include <cmath>
#include <functional>
#include <map>

namespace firefight {

/// One component of G - X. For a single edge the smaller id is the centre.
struct Star {
    Vertex center = 0;
    VertexList leaves;
    /// Vertices with a neighbour in X.
    VertexList border;
    /// Border vertices keyed by their exact X-neighbourhood Y.
    std::map<VertexList, VertexList> border_by_subset;

    [[nodiscard]] VertexList vertices() const {
        VertexList out = leaves;
        out.insert(std::lower_bound(out.begin(), out.end(), center), center);
        return out;
    }
    [[nodiscard]] int interior_size() const {
        return static_cast<int>(leaves.size()) + 1 - static_cast<int>(border.size());
    }
};

struct StarDecomposition {
    VertexList modulator;
    std::vector<Star> stars;
    std::vector<int> star_of;                 // -1 for modulator vertices
    std::vector<VertexList> modulator_nbrs;   // N(v) ∩ X for every vertex
    int max_border = 0;                       // largest |B(S)|
};

inline StarDecomposition decompose_stars(const Graph& g, std::span<const Vertex> X) {
    StarDecomposition dec;
    dec.modulator.assign(X.begin(), X.end());
    std::sort(dec.modulator.begin(), dec.modulator.end());
    dec.modulator.erase(std::unique(dec.modulator.begin(), dec.modulator.end()), dec.modulator.end());
    std::vector<char> in_x(static_cast<std::size_t>(g.n()), 0);
    for (Vertex x : dec.modulator) {
        if (!g.contains(x))
            throw InputError("modulator vertex out of range: " + std::to_string(x + 1));
        in_x[x] = 1;
    }
    dec.modulator_nbrs.resize(static_cast<std::size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v)
        for (Vertex w : g.neighbors(v))
            if (in_x[w])
                dec.modulator_nbrs[v].push_back(w);

    auto [rest, to_old] = remove_vertices(g, dec.modulator);
    if (!recognize(rest, ClassTag::star_forest))
        throw PreconditionError("graph minus the modulator is not a star forest");
    dec.star_of.assign(static_cast<std::size_t>(g.n()), -1);
    for (const auto& comp : connected_components(rest)) {
        Star star;
        VertexList members;
        for (Vertex v : comp)
            members.push_back(to_old[v]);
        star.center = members.front();
        for (Vertex v : comp)
            if (rest.degree(v) > 1)
                star.center = to_old[v];
        for (Vertex v : members) {
            dec.star_of[v] = static_cast<int>(dec.stars.size());
            if (v != star.center)
                star.leaves.push_back(v);
            if (!dec.modulator_nbrs[v].empty()) {
                star.border.push_back(v);
                star.border_by_subset[dec.modulator_nbrs[v]].push_back(v);
            }
        }
        dec.max_border = std::max(dec.max_border, static_cast<int>(star.border.size()));
        dec.stars.push_back(std::move(star));
    }
    return dec;
}

/// Which modulator vertices the solution is assumed to defend (with their
/// rounds, 1-based), leave unburned, or let burn. The source is always burned.
struct ModulatorGuess {
    std::vector<std::pair<Vertex, int>> defended;
    VertexList saved;
    VertexList burned;
};

enum class StarClassKind { regular, t_new, t_prime, t_star };

inline std::string_view to_string(StarClassKind kind) {
    switch (kind) {
    case StarClassKind::regular: return "regular";
    case StarClassKind::t_new: return "T_new";
    case StarClassKind::t_prime: return "T_prime";
    case StarClassKind::t_star: return "T_star";
    }
    return "?";
}

/// Stars are equivalent when the centres have the same modulator neighbours,
/// the stars have the same modulator neighbours, and every X-neighbourhood Y
/// occurs on the same number of border vertices.
struct StarSignature {
    VertexList center_nbrs;
    VertexList star_nbrs;
    int border_size = 0;
    std::map<VertexList, int> border_counts;

    friend auto operator<=>(const StarSignature&, const StarSignature&) = default;
};

struct StarEquivClass {
    StarSignature signature;  // of the first member; T_new/T_prime/T_star mix signatures
    std::vector<int> members; // star indices
    int b_t = 0;              // border size towards the burned part of X
    StarClassKind kind = StarClassKind::regular;
};

inline StarSignature star_signature(const StarDecomposition& dec, int star) {
    const Star& st = dec.stars[star];
    StarSignature sig;
    sig.center_nbrs = dec.modulator_nbrs[st.center];
    for (Vertex v : st.vertices())
        sig.star_nbrs.insert(sig.star_nbrs.end(), dec.modulator_nbrs[v].begin(), dec.modulator_nbrs[v].end());
    std::sort(sig.star_nbrs.begin(), sig.star_nbrs.end());
    sig.star_nbrs.erase(std::unique(sig.star_nbrs.begin(), sig.star_nbrs.end()), sig.star_nbrs.end());
    sig.border_size = static_cast<int>(st.border.size());
    for (const auto& [y, vs] : st.border_by_subset)
        sig.border_counts[y] = static_cast<int>(vs.size());
    return sig;
}

namespace detail {

inline bool touches(const VertexList& nbrs, const VertexMask& part) {
    for (Vertex x : nbrs)
        if (part.test(x))
            return true;
    return false;
}

inline int border_towards(const StarDecomposition& dec, int star, const VertexMask& part) {
    int count = 0;
    for (Vertex v : dec.stars[star].vertices())
        count += touches(dec.modulator_nbrs[v], part);
    return count;
}

} // namespace detail

/// Stars among `star_ids` with border vertices towards both the burned and
/// the saved part of the modulator.
inline std::vector<int> vulnerable_stars(const StarDecomposition& dec, std::span<const int> star_ids,
                                         const VertexMask& burned_part, const VertexMask& saved_part) {
    std::vector<int> out;
    for (int i : star_ids)
        if (detail::border_towards(dec, i, burned_part) > 0 && detail::border_towards(dec, i, saved_part) > 0)
            out.push_back(i);
    return out;
}

/// Classes of the given stars with respect to a guess. Vulnerable stars form
/// T_prime, stars with no border towards the burned part form T_star, the rest
/// are grouped by signature; signatures with b_T > 4k+2 are merged into T_new.
inline std::vector<StarEquivClass> build_equiv_classes(const StarDecomposition& dec, std::span<const int> star_ids,
                                                       const VertexMask& burned_part, const VertexMask& saved_part,
                                                       int k) {
    const int limit = 4 * k + 2;
    std::vector<StarEquivClass> out;
    StarEquivClass prime{{}, {}, 0, StarClassKind::t_prime};
    StarEquivClass star{{}, {}, 0, StarClassKind::t_star};
    StarEquivClass fresh{{}, {}, 0, StarClassKind::t_new};
    std::map<StarSignature, std::size_t> index;
    for (int i : star_ids) {
        int b = detail::border_towards(dec, i, burned_part);
        bool to_saved = detail::border_towards(dec, i, saved_part) > 0;
        if (b > 0 && to_saved) {
            prime.members.push_back(i);
        } else if (b == 0) {
            star.members.push_back(i);
        } else if (b > limit) {
            if (fresh.members.empty())
                fresh.signature = star_signature(dec, i);
            fresh.members.push_back(i);
            fresh.b_t = std::max(fresh.b_t, b);
        } else {
            auto sig = star_signature(dec, i);
            auto [it, added] = index.try_emplace(sig, out.size());
            if (added)
                out.push_back(StarEquivClass{sig, {}, b, StarClassKind::regular});
            out[it->second].members.push_back(i);
        }
    }
    for (auto* special : {&fresh, &prime, &star})
        if (!special->members.empty()) {
            if (special->kind != StarClassKind::t_new)
                special->signature = star_signature(dec, special->members.front());
            out.push_back(std::move(*special));
        }
    return out;
}

/// Case without saved modulator vertices: every star touches the burned part.
inline std::vector<StarEquivClass> build_equiv_classes(const StarDecomposition& dec, const VertexMask& burned_part,
                                                       int k) {
    std::vector<int> ids(dec.stars.size());
    for (std::size_t i = 0; i < ids.size(); ++i)
        ids[i] = static_cast<int>(i);
    return build_equiv_classes(dec, ids, burned_part, VertexMask{}, k);
}

/// Upper bound 2^{2k} * l^{2^k} on the number of classes, l = max border size.
inline double equiv_class_bound(const StarDecomposition& dec) {
    const double k = static_cast<double>(dec.modulator.size());
    const double l = std::max(1, dec.max_border);
    return std::pow(2.0, 2 * k) * std::pow(l, std::pow(2.0, k));
}

namespace detail {

/// Interchangeable vertices of one star: the centre alone, and leaves sharing
/// an X-neighbourhood (their neighbourhoods coincide).
inline std::vector<VertexList> star_twin_groups(const StarDecomposition& dec, int star) {
    const Star& st = dec.stars[star];
    std::vector<VertexList> groups{{st.center}};
    std::map<VertexList, VertexList> by_nbrs;
    for (Vertex v : st.leaves)
        by_nbrs[dec.modulator_nbrs[v]].push_back(v);
    for (auto& [y, vs] : by_nbrs)
        groups.push_back(std::move(vs));
    return groups;
}

inline std::vector<int> by_interior(const StarDecomposition& dec, std::vector<int> ids) {
    std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
        int ia = dec.stars[a].interior_size();
        int ib = dec.stars[b].interior_size();
        if (ia != ib)
            return ia > ib;
        return dec.stars[a].center < dec.stars[b].center;
    });
    return ids;
}

inline void add_top_stars(const StarDecomposition& dec, const std::vector<int>& ids, int limit,
                          std::vector<VertexList>& groups) {
    auto sorted = by_interior(dec, ids);
    for (int i = 0; i < std::min<int>(limit, static_cast<int>(sorted.size())); ++i)
        for (auto& grp : star_twin_groups(dec, sorted[i]))
            groups.push_back(std::move(grp));
}

} // namespace detail

/// Candidate defence groups of a class. A group lists interchangeable
/// vertices; a template symbol is instantiated by the first usable member.
///  - regular: every vertex of the 4k+2 stars with the largest interior |S - B(S)|;
///  - T_new: for each i <= 4k+2 the centres of the top i stars whose centre is at
///    distance i from s, together with the regular candidates of each merged signature;
///  - T_prime: every vertex of every vulnerable star;
///  - T_star: one group holding all member vertices (any representative will do).
/// `dist` holds distances from s in the component of s once X_d is removed.
inline std::vector<VertexList> candidate_groups(const StarDecomposition& dec, const StarEquivClass& cls, int k,
                                                const std::vector<int>& dist) {
    const int limit = 4 * k + 2;
    std::vector<VertexList> groups;
    switch (cls.kind) {
    case StarClassKind::regular:
        detail::add_top_stars(dec, cls.members, limit, groups);
        break;
    case StarClassKind::t_new: {
        auto sorted = detail::by_interior(dec, cls.members);
        for (int i = 1; i <= limit; ++i) {
            int taken = 0;
            for (int id : sorted)
                if (taken < i && dist[dec.stars[id].center] == i) {
                    groups.push_back({dec.stars[id].center});
                    ++taken;
                }
        }
        std::map<StarSignature, std::vector<int>> by_sig;
        for (int id : cls.members)
            by_sig[star_signature(dec, id)].push_back(id);
        for (const auto& [sig, ids] : by_sig)
            detail::add_top_stars(dec, ids, limit, groups);
        break;
    }
    case StarClassKind::t_prime:
        for (int id : cls.members)
            for (auto& grp : detail::star_twin_groups(dec, id))
                groups.push_back(std::move(grp));
        break;
    case StarClassKind::t_star: {
        VertexList all;
        for (int id : cls.members) {
            auto vs = dec.stars[id].vertices();
            all.insert(all.end(), vs.begin(), vs.end());
        }
        std::sort(all.begin(), all.end());
        groups.push_back(std::move(all));
        break;
    }
    }
    return groups;
}

/// Flattened candidate set D of a class.
inline VertexList candidate_set(const StarDecomposition& dec, const StarEquivClass& cls, int k,
                                const std::vector<int>& dist) {
    VertexList out;
    for (const auto& grp : candidate_groups(dec, cls, k, dist)) {
        if (cls.kind == StarClassKind::t_star)
            out.push_back(grp.front());
        else
            out.insert(out.end(), grp.begin(), grp.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct StarsOptions {
    /// When false every star vertex of the fire component is a candidate.
    bool restrict_candidates = true;
};

/// Moves under one guess: the guessed modulator vertex on its round, otherwise
/// the first usable member of every candidate group. Vertices cut off from s
/// by X_d never burn and serve as one more group (a wasted defence).
class StarsPolicy {
public:
    StarsPolicy(const Graph& g, const StarDecomposition& dec, Vertex s, const ModulatorGuess& guess,
                const StarsOptions& opt = {}) {
        VertexList blocked;
        for (auto [x, slot] : guess.defended) {
            if (static_cast<int>(slot_vertex_.size()) <= slot)
                slot_vertex_.resize(static_cast<std::size_t>(slot) + 1, -1);
            slot_vertex_[slot] = x;
            defended_part_.set(x);
            blocked.push_back(x);
        }
        for (Vertex x : guess.saved)
            saved_part_.set(x);
        for (Vertex x : guess.burned)
            burned_part_.set(x);

        // component of s once X_d is removed, and distances inside it
        const auto dist = bfs_distances(g, s, blocked);
        std::vector<int> in_component;
        for (std::size_t i = 0; i < dec.stars.size(); ++i)
            if (dist[dec.stars[i].center] != kUnreachable)
                in_component.push_back(static_cast<int>(i));
        const int k = static_cast<int>(dec.modulator.size());
        vulnerable_ = vulnerable_stars(dec, in_component, burned_part_, saved_part_);
        feasible_ = static_cast<int>(vulnerable_.size()) <= 4 * k + 2;
        for (int id : vulnerable_) {
            VertexMask m;
            for (Vertex v : dec.stars[id].vertices())
                m.set(v);
            vulnerable_masks_.push_back(m);
        }

        if (opt.restrict_candidates) {
            for (const auto& cls : build_equiv_classes(dec, in_component, burned_part_, saved_part_, k))
                for (auto& grp : candidate_groups(dec, cls, k, dist))
                    groups_.push_back(std::move(grp));
        } else {
            for (int id : in_component)
                for (Vertex v : dec.stars[id].vertices())
                    groups_.push_back({v});
        }
        VertexList outside;
        for (Vertex v = 0; v < g.n(); ++v)
            if (dec.star_of[v] >= 0 && dist[v] == kUnreachable)
                outside.push_back(v);
        if (!outside.empty())
            groups_.push_back(std::move(outside));
    }

    [[nodiscard]] bool feasible() const { return feasible_; }
    [[nodiscard]] const std::vector<int>& vulnerable() const { return vulnerable_; }

    [[nodiscard]] VertexMask moves(const FireState& st) const {
        const int round = st.round + 1;
        if (round < static_cast<int>(slot_vertex_.size()) && slot_vertex_[round] >= 0) {
            Vertex x = slot_vertex_[round];
            return st.burned.test(x) ? VertexMask{} : VertexMask::single(x);
        }
        VertexMask out;
        for (const auto& grp : groups_)
            for (Vertex v : grp)
                if (!st.burned.test(v) && !st.defended.test(v)) {
                    out.set(v);
                    break;
                }
        return out;
    }

    [[nodiscard]] bool prune(const FireState& st) const {
        return st.burned.intersects(saved_part_) || st.burned.intersects(defended_part_);
    }

    [[nodiscard]] bool accept(const FireState& st, const VertexMask& final_burned) const {
        if (!defended_part_.is_subset_of(st.defended) || final_burned.intersects(saved_part_) ||
            !burned_part_.is_subset_of(final_burned))
            return false;
        for (const auto& m : vulnerable_masks_)
            if (!m.intersects(st.defended))
                return false;
        return true;
    }

private:
    std::vector<Vertex> slot_vertex_;
    VertexMask defended_part_;
    VertexMask saved_part_;
    VertexMask burned_part_;
    std::vector<int> vulnerable_;
    std::vector<VertexMask> vulnerable_masks_;
    std::vector<VertexList> groups_;
    bool feasible_ = true;
};

namespace detail {

/// Calls f for every guess: s burned, every other modulator vertex burned,
/// saved, or defended at a distinct round in [1, length_bound].
template <typename F>
void for_each_guess(const VertexList& modulator, Vertex s, int length_bound, F&& f) {
    VertexList others;
    for (Vertex x : modulator)
        if (x != s)
            others.push_back(x);
    ModulatorGuess guess;
    guess.burned.push_back(s);
    std::vector<char> slot_used(static_cast<std::size_t>(length_bound) + 1, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == others.size()) {
            f(guess);
            return;
        }
        Vertex x = others[i];
        guess.burned.push_back(x);
        rec(i + 1);
        guess.burned.pop_back();
        guess.saved.push_back(x);
        rec(i + 1);
        guess.saved.pop_back();
        for (int slot = 1; slot <= length_bound; ++slot) {
            if (slot_used[slot])
                continue;
            slot_used[slot] = 1;
            guess.defended.emplace_back(x, slot);
            rec(i + 1);
            guess.defended.pop_back();
            slot_used[slot] = 0;
        }
    };
    rec(0);
}

} // namespace detail

/// Optimal strategy when G - X is a disjoint union of stars. Enumerates the
/// modulator guesses and, per guess, defence sequences of length at most
/// 4|X|+2 (|X| counted after adding s) drawn from the class candidates;
/// outcomes inconsistent with the guess are discarded.
inline SolveResult solve_stars(const Graph& g, Vertex s, std::span<const Vertex> X, const StarsOptions& opt = {}) {
    auto sc = detail::source_component(g, s);
    VertexList xs = detail::normalized_modulator(g, sc, X);
    sc.graph.require_maskable("stars solver");
    const Graph& h = sc.graph;
    const Vertex src = sc.source;
    StarDecomposition dec = decompose_stars(h, xs);
    const int bound = 4 * static_cast<int>(xs.size()) + 2;
    FireRules rules(h, src);

    SolveResult out;
    out.best_saved = -1;
    std::optional<Strategy> best;
    detail::for_each_guess(xs, src, bound, [&](const ModulatorGuess& guess) {
        StarsPolicy policy(h, dec, src, guess, opt);
        if (!policy.feasible())
            return;
        SequenceSearch search(rules, policy, bound);
        int value = search.maximize();
        if (value >= 0 && value >= out.best_saved) {
            auto st = search.shortest_reaching(value);
            if (value > out.best_saved || st->size() < best->size() ||
                (st->size() == best->size() && st->sequence < best->sequence))
                best = st;
            out.best_saved = value;
        }
        out.explored += search.explored();
    });
    // the empty strategy is consistent with the guess read off its own outcome
    out.best_strategy = sc.lift(*best);
    out.best_saved += sc.outside;
    return out;
}

} // namespace firefight

#endif // FIREFIGHT_STARS_HPP
