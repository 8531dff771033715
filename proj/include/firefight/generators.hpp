#ifndef FIREFIGHT_GENERATORS_HPP
#define FIREFIGHT_GENERATORS_HPP

#include "firefight/instance.hpp"

#include <cstdint>
#include <random>

namespace firefight {

/// Seeded source of randomness whose output is identical on every platform:
/// std::mt19937_64 is fully specified, and the range/probability mappings
/// below avoid the implementation-defined std distributions.
class PortableRng {
public:
    explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi].
    int uniform(int lo, int hi) {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        // rejection keeps the mapping unbiased
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
        std::uint64_t x = 0;
        do {
            x = engine_();
        } while (x >= limit);
        return lo + static_cast<int>(x % span);
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return p >= 1.0 || unit() < p; }

private:
    std::mt19937_64 engine_;
};

/// G(n, p): each pair independently an edge with probability p.
inline Graph gen_random(int n, double p, std::uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0)
        throw InputError("gen_random: need n >= 0 and 0 <= p <= 1");
    PortableRng rng(seed);
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.chance(p))
                b.add_edge(u, v);
    return b.build();
}

namespace detail {

inline void sample_inner(GraphBuilder& b, ClassTag tag, int inner, PortableRng& rng) {
    switch (tag) {
    case ClassTag::clique:
        for (Vertex u = 0; u < inner; ++u)
            for (Vertex v = u + 1; v < inner; ++v)
                b.add_edge(u, v);
        break;
    case ClassTag::threshold:
        // creation sequence: each new vertex isolated or dominating
        for (Vertex v = 1; v < inner; ++v)
            if (rng.chance(0.5))
                for (Vertex u = 0; u < v; ++u)
                    b.add_edge(u, v);
        break;
    case ClassTag::star_forest: {
        Vertex next = 0;
        while (next < inner) {
            int size = rng.uniform(1, std::min(inner - next, 6));
            for (Vertex leaf = next + 1; leaf < next + size; ++leaf)
                b.add_edge(next, leaf);
            next += size;
        }
        break;
    }
    default:
        throw InputError("gen_planted: unsupported class " + std::string(to_string(tag)));
    }
}

/// Joins s to the smallest vertex of every component that misses it.
inline Graph connect_source(const Graph& g, Vertex s) {
    GraphBuilder b(g.n());
    for (auto [u, v] : g.edges())
        b.add_edge(u, v);
    for (const auto& comp : connected_components(g))
        if (!std::binary_search(comp.begin(), comp.end(), s))
            b.add_edge(s, comp.front());
    return b.build();
}

} // namespace detail

/// Random member of the class on vertices 0..inner-1, plus k modulator
/// vertices inner..inner+k-1, each adjacent to every other vertex with
/// probability p. The source is the first modulator vertex and is joined to
/// any component it cannot reach.
inline Instance gen_planted(ClassTag tag, int inner_size, int k, double p, std::uint64_t seed) {
    if (inner_size < 0 || k < 0 || p < 0.0 || p > 1.0 || inner_size + k == 0)
        throw InputError("gen_planted: invalid sizes or probability");
    PortableRng rng(seed);
    GraphBuilder b(inner_size + k);
    detail::sample_inner(b, tag, inner_size, rng);
    for (Vertex x = inner_size; x < inner_size + k; ++x)
        for (Vertex v = 0; v < x; ++v)
            if (rng.chance(p))
                b.add_edge(x, v);
    Instance inst;
    inst.graph = b.build();
    inst.class_tag = tag;
    inst.modulator = VertexList{};
    for (Vertex x = inner_size; x < inner_size + k; ++x)
        inst.modulator->push_back(x);
    inst.source = k > 0 ? inner_size : 0;
    if (k > 0)
        inst.graph = detail::connect_source(inst.graph, inst.source);
    return inst;
}

/// Clique C of the given size plus l modulator vertices; each modulator vertex
/// is either sparse (at most l+1 clique neighbours) or dense towards C, chosen
/// by coin flip, so kernel instances exercise both sides of the split. The
/// source is the first modulator vertex.
inline Instance gen_clique_modulator(int clique_size, int l, std::uint64_t seed) {
    if (clique_size < 1 || l < 1)
        throw InputError("gen_clique_modulator: need clique_size >= 1 and l >= 1");
    PortableRng rng(seed);
    GraphBuilder b(clique_size + l);
    detail::sample_inner(b, ClassTag::clique, clique_size, rng);
    for (Vertex x = clique_size; x < clique_size + l; ++x) {
        for (Vertex y = clique_size; y < x; ++y)
            if (rng.chance(0.5))
                b.add_edge(x, y);
        bool sparse = rng.chance(0.5);
        int degree = sparse ? rng.uniform(0, std::min(l + 1, clique_size))
                            : rng.uniform(std::min(l + 2, clique_size), clique_size);
        VertexList pool(static_cast<std::size_t>(clique_size));
        for (int i = 0; i < clique_size; ++i)
            pool[i] = i;
        for (int i = 0; i < degree; ++i) {
            int j = rng.uniform(i, clique_size - 1);
            std::swap(pool[i], pool[j]);
            b.add_edge(x, pool[i]);
        }
    }
    Instance inst;
    inst.graph = b.build();
    inst.source = clique_size;
    inst.graph = detail::connect_source(inst.graph, inst.source);
    inst.class_tag = ClassTag::clique;
    inst.modulator = VertexList{};
    for (Vertex x = clique_size; x < clique_size + l; ++x)
        inst.modulator->push_back(x);
    return inst;
}

} // namespace firefight

#endif // FIREFIGHT_GENERATORS_HPP
