#ifndef FIREFIGHT_INSTANCE_HPP
#define FIREFIGHT_INSTANCE_HPP

#include "firefight/classes.hpp"
#include "firefight/graph.hpp"

#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

namespace firefight {

/// A firefighting instance: graph, fire source, and optional modulator,
/// class tag and saving demand.
struct Instance {
    Graph graph;
    Vertex source = 0;
    std::optional<VertexList> modulator;
    std::optional<ClassTag> class_tag;
    std::optional<int> demand;

    friend bool operator==(const Instance&, const Instance&) = default;
};

namespace detail {

[[noreturn]] inline void parse_fail(int line_no, const std::string& what) {
    throw InputError("line " + std::to_string(line_no) + ": " + what);
}

inline Vertex parse_file_id(std::istringstream& in, int n, int line_no) {
    long long id = 0;
    if (!(in >> id))
        parse_fail(line_no, "expected vertex id");
    if (id < 1 || id > n)
        parse_fail(line_no, "vertex id out of range: " + std::to_string(id));
    return static_cast<Vertex>(id - 1);
}

inline void expect_line_end(std::istringstream& in, int line_no) {
    std::string extra;
    if (in >> extra)
        parse_fail(line_no, "unexpected trailing token '" + extra + "'");
}

} // namespace detail

/// Reads the line-oriented instance format (1-based ids in the file).
inline Instance parse_instance(std::istream& input) {
    std::string line;
    int line_no = 0;
    std::optional<int> n;
    int declared_m = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    Instance inst;
    bool have_source = false;

    while (std::getline(input, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::istringstream in(line);
        std::string tag;
        if (!(in >> tag) || tag[0] == '#')
            continue;
        if (tag == "p") {
            std::string kind;
            long long nn = -1;
            long long mm = -1;
            if (n)
                detail::parse_fail(line_no, "duplicate header");
            if (!(in >> kind >> nn >> mm) || kind != "ff" || nn < 0 || mm < 0)
                detail::parse_fail(line_no, "malformed header, expected 'p ff <n> <m>'");
            detail::expect_line_end(in, line_no);
            n = static_cast<int>(nn);
            declared_m = static_cast<int>(mm);
            continue;
        }
        if (!n)
            detail::parse_fail(line_no, "record before 'p ff' header");
        if (tag == "e") {
            Vertex u = detail::parse_file_id(in, *n, line_no);
            Vertex v = detail::parse_file_id(in, *n, line_no);
            detail::expect_line_end(in, line_no);
            if (u == v)
                detail::parse_fail(line_no, "self-loop");
            Edge e = std::minmax(u, v);
            if (!seen.insert(e).second)
                detail::parse_fail(line_no, "duplicate edge");
            edges.push_back(e);
        } else if (tag == "s") {
            if (have_source)
                detail::parse_fail(line_no, "duplicate source line");
            inst.source = detail::parse_file_id(in, *n, line_no);
            detail::expect_line_end(in, line_no);
            have_source = true;
        } else if (tag == "x") {
            if (inst.modulator)
                detail::parse_fail(line_no, "duplicate modulator line");
            VertexList xs;
            while (in >> std::ws && !in.eof())
                xs.push_back(detail::parse_file_id(in, *n, line_no));
            std::sort(xs.begin(), xs.end());
            if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
                detail::parse_fail(line_no, "repeated modulator vertex");
            inst.modulator = std::move(xs);
        } else if (tag == "c") {
            std::string name;
            if (!(in >> name))
                detail::parse_fail(line_no, "expected class tag");
            auto t = class_tag_from_string(name);
            if (!t)
                detail::parse_fail(line_no, "unknown class tag '" + name + "'");
            detail::expect_line_end(in, line_no);
            inst.class_tag = *t;
        } else if (tag == "k") {
            long long k = 0;
            if (!(in >> k))
                detail::parse_fail(line_no, "expected integer demand");
            detail::expect_line_end(in, line_no);
            inst.demand = static_cast<int>(k);
        } else {
            detail::parse_fail(line_no, "unknown record type '" + tag + "'");
        }
    }
    if (!n)
        throw InputError("missing 'p ff' header");
    if (!have_source)
        throw InputError("missing source line");
    if (static_cast<int>(edges.size()) != declared_m)
        throw InputError("header declares " + std::to_string(declared_m) + " edges, found " +
                         std::to_string(edges.size()));
    std::sort(edges.begin(), edges.end());
    inst.graph = Graph(*n, edges);
    return inst;
}

inline Instance parse_instance(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

/// Canonical text form: header, source, modulator, class, demand, then sorted edges.
inline std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    out << "p ff " << inst.graph.n() << ' ' << inst.graph.m() << '\n';
    out << "s " << inst.source + 1 << '\n';
    if (inst.modulator) {
        out << 'x';
        for (Vertex v : *inst.modulator)
            out << ' ' << v + 1;
        out << '\n';
    }
    if (inst.class_tag)
        out << "c " << to_string(*inst.class_tag) << '\n';
    if (inst.demand)
        out << "k " << *inst.demand << '\n';
    for (auto [u, v] : inst.graph.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

/// Checks source/modulator ranges and, when both a tag and modulator are given,
/// that G minus X lies in the tagged class.
inline bool instance_consistent(const Instance& inst) {
    if (!inst.graph.contains(inst.source))
        return false;
    if (inst.modulator) {
        for (Vertex x : *inst.modulator)
            if (!inst.graph.contains(x))
                return false;
        if (inst.class_tag && !recognize_without(inst.graph, *inst.modulator, *inst.class_tag))
            return false;
    }
    return true;
}

} // namespace firefight

#endif // FIREFIGHT_INSTANCE_HPP
