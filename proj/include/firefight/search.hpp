#ifndef FIREFIGHT_SEARCH_HPP
#define FIREFIGHT_SEARCH_HPP

#include "firefight/fire.hpp"
#include "firefight/graph.hpp"

#include <algorithm>
#include <optional>
#include <unordered_set>

namespace firefight {

/// Game position between rounds. `threat` holds the undefended, unburned
/// neighbours of the fire, i.e. what burns at the end of the next round unless
/// defended. `round` is the number of defences made so far.
struct FireState {
    VertexMask burned;
    VertexMask defended;
    VertexMask threat;
    int round = 0;

    [[nodiscard]] bool fire_alive() const { return threat.any(); }
};

/// Mask-based rules of the game on a fixed graph (at most VertexMask::kCapacity vertices).
class FireRules {
public:
    FireRules(const Graph& g, Vertex s) : g_(&g), s_(s) { g.require_maskable("FireRules"); }

    [[nodiscard]] const Graph& graph() const { return *g_; }
    [[nodiscard]] Vertex source() const { return s_; }

    [[nodiscard]] FireState initial() const {
        FireState st;
        st.burned.set(s_);
        st.threat = g_->mask(s_);
        return st;
    }

    /// Defend v (must be unburned) and let the fire advance one step.
    [[nodiscard]] FireState defend(const FireState& st, Vertex v) const {
        FireState next = st;
        next.defended.set(v);
        next.threat.reset(v);
        advance(next);
        ++next.round;
        return next;
    }

    /// One spreading step without a defence.
    void advance(FireState& st) const {
        VertexMask fresh = st.threat;
        st.burned |= fresh;
        VertexMask around;
        fresh.for_each([&](Vertex u) { around |= g_->mask(u); });
        st.threat = around - st.burned - st.defended;
    }

    /// Burned set once the fire has been left to run out.
    [[nodiscard]] VertexMask final_burned(const FireState& st) const {
        FireState cur = st;
        while (cur.fire_alive())
            advance(cur);
        return cur.burned;
    }

    /// Unburned, undefended vertices the fire can still reach.
    [[nodiscard]] VertexMask reachable_unburned(const FireState& st) const {
        return final_burned(st) - st.burned;
    }

    /// Plays a concrete sequence; empty optional if some defence is illegal.
    [[nodiscard]] std::optional<FireState> play(const VertexList& seq) const {
        FireState st = initial();
        for (Vertex v : seq) {
            if (st.burned.test(v) || st.defended.test(v))
                return std::nullopt;
            st = defend(st, v);
        }
        return st;
    }

    /// Upper bound on vertices saved from this position: at most one of the
    /// currently threatened vertices can still be defended before they burn.
    [[nodiscard]] int saved_upper_bound(const FireState& st) const {
        int lost = st.burned.count();
        if (st.fire_alive())
            lost += st.threat.count() - 1;
        return g_->n() - lost;
    }

private:
    const Graph* g_;
    Vertex s_;
};

/// Move-generation policy used by SequenceSearch.
template <typename P>
concept SearchPolicy = requires(const P& p, const FireState& st, const VertexMask& m) {
    { p.moves(st) } -> std::same_as<VertexMask>;
    { p.prune(st) } -> std::same_as<bool>;
    { p.accept(st, m) } -> std::same_as<bool>;
};

/// Depth-first search over defence sequences of bounded length. Positions are
/// memoised on (burned, defended), which also fixes the round. A sequence may
/// stop at any position; its value is the number of vertices that survive once
/// the fire runs out, provided the policy accepts the final position.
/// Ties on value are broken by shorter sequence, then lexicographically smaller.
template <SearchPolicy Policy>
class SequenceSearch {
public:
    SequenceSearch(const FireRules& rules, const Policy& policy, int max_length)
        : rules_(rules), policy_(policy), max_length_(std::max(0, max_length)) {}

    /// Best achievable saved count, or -1 when no accepted sequence exists.
    int maximize() {
        best_ = -1;
        visited_.clear();
        dfs_max(rules_.initial());
        return best_;
    }

    /// Shortest, then lexicographically smallest, accepted sequence saving at
    /// least `value`; nullopt when none exists within the length bound.
    std::optional<Strategy> shortest_reaching(int value) {
        for (int len = 0; len <= max_length_; ++len) {
            visited_.clear();
            VertexList seq;
            if (dfs_exact_length(rules_.initial(), len, value, seq))
                return Strategy{seq};
        }
        return std::nullopt;
    }

    /// True when some accepted sequence saves at least `target`.
    bool reaches(int target) {
        visited_.clear();
        return dfs_target(rules_.initial(), target);
    }

    [[nodiscard]] long long explored() const { return explored_; }

private:
    struct Key {
        VertexMask burned;
        VertexMask defended;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const { return k.burned.hash() * 31 + k.defended.hash(); }
    };

    bool first_visit(const FireState& st) { return visited_.insert(Key{st.burned, st.defended}).second; }

    int leaf_value(const FireState& st) const {
        VertexMask fin = rules_.final_burned(st);
        if (!policy_.accept(st, fin))
            return -1;
        return rules_.graph().n() - fin.count();
    }

    bool can_extend(const FireState& st) const { return st.round < max_length_ && st.fire_alive(); }

    void dfs_max(const FireState& st) {
        ++explored_;
        if (policy_.prune(st))
            return;
        best_ = std::max(best_, leaf_value(st));
        if (!can_extend(st) || rules_.saved_upper_bound(st) <= best_ || !first_visit(st))
            return;
        policy_.moves(st).for_each([&](Vertex v) { dfs_max(rules_.defend(st, v)); });
    }

    bool dfs_target(const FireState& st, int target) {
        ++explored_;
        if (policy_.prune(st) || rules_.saved_upper_bound(st) < target)
            return false;
        if (leaf_value(st) >= target)
            return true;
        if (!can_extend(st) || !first_visit(st))
            return false;
        bool found = false;
        VertexMask moves = policy_.moves(st);
        for (Vertex v = moves.first(); v >= 0 && !found; v = moves.next(v))
            found = dfs_target(rules_.defend(st, v), target);
        return found;
    }

    bool dfs_exact_length(const FireState& st, int len, int target, VertexList& seq) {
        ++explored_;
        if (policy_.prune(st) || rules_.saved_upper_bound(st) < target)
            return false;
        if (st.round == len)
            return leaf_value(st) >= target;
        // A shorter accepted sequence would already have been found.
        if (!st.fire_alive() || !first_visit(st))
            return false;
        VertexMask moves = policy_.moves(st);
        for (Vertex v = moves.first(); v >= 0; v = moves.next(v)) {
            seq.push_back(v);
            if (dfs_exact_length(rules_.defend(st, v), len, target, seq))
                return true;
            seq.pop_back();
        }
        return false;
    }

    const FireRules& rules_;
    const Policy& policy_;
    int max_length_;
    int best_ = -1;
    long long explored_ = 0;
    std::unordered_set<Key, KeyHash> visited_;
};

} // namespace firefight

#endif // FIREFIGHT_SEARCH_HPP
