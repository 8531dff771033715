#ifndef FIREFIGHT_KERNEL_HPP
#define FIREFIGHT_KERNEL_HPP

#include "firefight/exact.hpp"
#include "firefight/instance.hpp"

#include <sstream>

namespace firefight {

/// Reduced Saving k-Vertices instance for a clique modulator. All id lists
/// refer to the reduced graph; `old_to_new` maps original ids (-1 = deleted).
struct KernelOutput {
    Instance reduced;
    VertexList x_low;   // modulator vertices with at most l+1 clique neighbours
    VertexList x_high;
    VertexList j;       // clique neighbours of x_low
    VertexList k_ids;   // added clique K
    VertexList l_ids;   // added clique L
    std::vector<int> old_to_new;
    int l = 0;          // modulator size after adding s
    bool applied = false;
};

/// Largest demand the reduction accepts for a clique of size c: c + l - 1.
inline int kernel_max_demand(int clique_size, int l) { return clique_size + l - 1; }

/// Demand on the reduced instance.
inline int kernel_demand(int k, int clique_size, int l, int j, int kk, int ll) {
    if (k >= clique_size)
        return k - clique_size + j + kk + ll;
    if (k >= 2 * l + 1)
        return 2 * l + 1;
    return k;
}

/// Replaces the part of the clique C that no low-degree modulator vertex sees
/// by two small cliques K (l+2 vertices, joined to X_H and J) and L
/// (min(l+1, |C - J|) vertices, joined to J and K). Left unchanged when
/// |C - J| <= 2l+3. s is added to X when absent.
inline KernelOutput kernelize(const Graph& g, Vertex s, std::span<const Vertex> X, int k) {
    if (!g.contains(s))
        throw InputError("source out of range");
    std::vector<char> in_x(static_cast<std::size_t>(g.n()), 0);
    for (Vertex x : X) {
        if (!g.contains(x))
            throw InputError("modulator vertex out of range: " + std::to_string(x + 1));
        in_x[x] = 1;
    }
    in_x[s] = 1;
    VertexList xs, clique;
    for (Vertex v = 0; v < g.n(); ++v)
        (in_x[v] ? xs : clique).push_back(v);
    if (!recognize(induced_subgraph(g, clique).first, ClassTag::clique))
        throw PreconditionError("graph minus the modulator is not a clique");
    const int l = static_cast<int>(xs.size());
    const int c = static_cast<int>(clique.size());
    if (k < 1 || k > kernel_max_demand(c, l))
        throw InputError("demand " + std::to_string(k) + " outside [1, " + std::to_string(kernel_max_demand(c, l)) +
                         "]");

    std::vector<char> in_j(static_cast<std::size_t>(g.n()), 0);
    VertexList x_low, x_high;
    for (Vertex x : xs) {
        int deg_c = 0;
        for (Vertex w : g.neighbors(x))
            deg_c += !in_x[w];
        if (deg_c <= l + 1) {
            x_low.push_back(x);
            for (Vertex w : g.neighbors(x))
                if (!in_x[w])
                    in_j[w] = 1;
        } else {
            x_high.push_back(x);
        }
    }
    VertexList j;
    for (Vertex v : clique)
        if (in_j[v])
            j.push_back(v);
    const int rest = c - static_cast<int>(j.size());

    KernelOutput out;
    out.l = l;
    out.old_to_new.assign(static_cast<std::size_t>(g.n()), -1);
    if (rest <= 2 * l + 3) {
        for (Vertex v = 0; v < g.n(); ++v)
            out.old_to_new[v] = v;
        out.reduced = Instance{g, s, xs, ClassTag::clique, k};
        out.x_low = x_low;
        out.x_high = x_high;
        out.j = j;
        return out;
    }

    out.applied = true;
    VertexList keep;
    for (Vertex v = 0; v < g.n(); ++v)
        if (in_x[v] || in_j[v])
            keep.push_back(v);
    for (std::size_t i = 0; i < keep.size(); ++i)
        out.old_to_new[keep[i]] = static_cast<int>(i);
    const int kept = static_cast<int>(keep.size());
    const int size_k = l + 2;
    const int size_l = std::min(l + 1, rest);
    GraphBuilder b(kept + size_k + size_l);
    for (auto [u, v] : g.edges())
        if (out.old_to_new[u] >= 0 && out.old_to_new[v] >= 0)
            b.add_edge(out.old_to_new[u], out.old_to_new[v]);
    for (int i = 0; i < size_k; ++i)
        out.k_ids.push_back(kept + i);
    for (int i = 0; i < size_l; ++i)
        out.l_ids.push_back(kept + size_k + i);
    auto map = [&](const VertexList& vs) {
        VertexList r;
        for (Vertex v : vs)
            r.push_back(out.old_to_new[v]);
        return r;
    };
    out.x_low = map(x_low);
    out.x_high = map(x_high);
    out.j = map(j);
    auto join_all = [&](const VertexList& a, const VertexList& bs) {
        for (Vertex u : a)
            for (Vertex v : bs)
                if (u != v)
                    b.add_edge(std::min(u, v), std::max(u, v));
    };
    join_all(out.k_ids, out.k_ids);
    join_all(out.l_ids, out.l_ids);
    join_all(out.k_ids, out.x_high);
    join_all(out.k_ids, out.j);
    join_all(out.l_ids, out.j);
    join_all(out.l_ids, out.k_ids);

    out.reduced.graph = b.build();
    out.reduced.source = out.old_to_new[s];
    out.reduced.modulator = map(xs);
    out.reduced.class_tag = ClassTag::clique;
    out.reduced.demand = kernel_demand(k, c, l, static_cast<int>(j.size()), size_k, size_l);
    return out;
}

/// Decides both instances exactly; true when the answers agree.
inline bool check_kernel_equivalence(const Instance& original, const KernelOutput& out,
                                     const ExactOptions& opt = ExactOptions{std::nullopt, 32}) {
    if (!original.demand || !out.reduced.demand)
        throw InputError("kernel equivalence check needs demands on both instances");
    bool a = decide_saving_k(original.graph, original.source, *original.demand, opt);
    bool b = decide_saving_k(out.reduced.graph, out.reduced.source, *out.reduced.demand, opt);
    return a == b;
}

/// Text sidecar: id map (1-based, original then reduced) and the id sets.
inline std::string kernel_provenance(const KernelOutput& out) {
    std::ostringstream os;
    auto list = [&](const char* tag, const VertexList& vs) {
        os << tag;
        for (Vertex v : vs)
            os << ' ' << v + 1;
        os << '\n';
    };
    os << "# kernel provenance v1\n";
    os << "applied " << (out.applied ? 1 : 0) << '\n';
    os << "l " << out.l << '\n';
    for (std::size_t v = 0; v < out.old_to_new.size(); ++v)
        if (out.old_to_new[v] >= 0)
            os << "map " << v + 1 << ' ' << out.old_to_new[v] + 1 << '\n';
    list("xl", out.x_low);
    list("xh", out.x_high);
    list("j", out.j);
    list("kclique", out.k_ids);
    list("lclique", out.l_ids);
    return os.str();
}

} // namespace firefight

#endif // FIREFIGHT_KERNEL_HPP
