#ifndef FIREFIGHT_FIRE_HPP
#define FIREFIGHT_FIRE_HPP

#include "firefight/graph.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

namespace firefight {

/// Ordered defence sequence: sequence[i] is defended at round i+1.
struct Strategy {
    VertexList sequence;

    [[nodiscard]] std::size_t size() const { return sequence.size(); }
    [[nodiscard]] bool empty() const { return sequence.empty(); }
    friend bool operator==(const Strategy&, const Strategy&) = default;
};

/// Result of playing a strategy. When invalid, the sets describe the state at
/// the round where the defended vertex was found burning.
struct SimOutcome {
    VertexList burned;
    VertexList defended;
    int saved_count = 0;
    /// Round at which each vertex caught fire; -1 for never. Source is 0.
    std::vector<int> burn_time;
    bool valid = true;
    /// 1-based round of the first illegal defence, when invalid.
    std::optional<int> failed_round;
};

namespace detail {

inline void check_strategy_entries(const Graph& g, const Strategy& strat) {
    std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v : strat.sequence) {
        if (!g.contains(v))
            throw InputError("strategy vertex out of range: " + std::to_string(v + 1));
        if (used[v])
            throw InputError("strategy repeats vertex " + std::to_string(v + 1));
        used[v] = 1;
    }
}

} // namespace detail

/// Plays the game: each round defends the next vertex, then the fire spreads
/// one step; after the sequence the fire runs to a fixpoint.
inline SimOutcome simulate(const Graph& g, Vertex s, const Strategy& strat) {
    if (!g.contains(s))
        throw InputError("source out of range");
    detail::check_strategy_entries(g, strat);

    const auto n = static_cast<std::size_t>(g.n());
    std::vector<int> burn_time(n, -1);
    std::vector<char> defended(n, 0);
    burn_time[s] = 0;
    VertexList frontier{s};
    SimOutcome out;

    auto spread = [&](int round) {
        VertexList next;
        for (Vertex u : frontier)
            for (Vertex w : g.neighbors(u))
                if (burn_time[w] < 0 && !defended[w]) {
                    burn_time[w] = round;
                    next.push_back(w);
                }
        frontier = std::move(next);
    };

    int round = 0;
    for (Vertex v : strat.sequence) {
        ++round;
        if (burn_time[v] >= 0) {
            out.valid = false;
            out.failed_round = round;
            break;
        }
        defended[v] = 1;
        spread(round);
    }
    if (out.valid)
        while (!frontier.empty())
            spread(++round);

    for (Vertex v = 0; v < g.n(); ++v) {
        if (burn_time[v] >= 0)
            out.burned.push_back(v);
        else if (defended[v])
            out.defended.push_back(v);
    }
    out.saved_count = g.n() - static_cast<int>(out.burned.size());
    out.burn_time = std::move(burn_time);
    return out;
}

/// Distance test: v_i must be at distance >= i from s in G[(V \ S) + v_i].
inline bool fast_validity_check(const Graph& g, Vertex s, const Strategy& strat) {
    const auto& seq = strat.sequence;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] == s)
            return false;
        VertexList blocked;
        blocked.reserve(seq.size());
        for (std::size_t j = 0; j < seq.size(); ++j)
            if (j != i)
                blocked.push_back(seq[j]);
        if (std::find(blocked.begin(), blocked.end(), s) != blocked.end())
            return false;
        auto dist = bfs_distances(g, s, blocked);
        if (dist[seq[i]] < static_cast<int>(i + 1))
            return false;
    }
    return true;
}

inline int sav(const SimOutcome& outcome) { return outcome.saved_count; }

/// Parses "2,5,7" (1-based ids) into a strategy on an n-vertex graph.
inline Strategy parse_strategy(std::string_view text, int n) {
    Strategy out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!tok.empty() && tok.front() == ' ')
            tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ')
            tok.remove_suffix(1);
        if (tok.empty()) {
            if (text.find_first_not_of(' ') == std::string_view::npos && out.sequence.empty())
                return out;
            throw InputError("empty entry in strategy string");
        }
        long long id = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), id);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw InputError("bad strategy entry '" + std::string(tok) + "'");
        if (id < 1 || id > n)
            throw InputError("strategy vertex out of range: " + std::string(tok));
        out.sequence.push_back(static_cast<Vertex>(id - 1));
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

inline std::string format_strategy(const Strategy& strat) {
    std::ostringstream out;
    for (std::size_t i = 0; i < strat.sequence.size(); ++i)
        out << (i ? "," : "") << strat.sequence[i] + 1;
    return out.str();
}

} // namespace firefight

#endif // FIREFIGHT_FIRE_HPP
