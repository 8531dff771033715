#include "firefight/bench.hpp"
#include "firefight/generators.hpp"
#include "firefight/modulator.hpp"
#include "firefight/reductions.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace firefight;

namespace {

enum Exit { ok = 0, answer_no = 1, input_error = 2 };

Instance read_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    return parse_instance(in);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(path);
    os << text;
    if (!os)
        throw InputError("cannot write " + path);
}

VertexList parse_id_list(const std::string& text, int n) {
    std::string commas = text;
    std::replace(commas.begin(), commas.end(), ' ', ',');
    while (commas.find(",,") != std::string::npos)
        commas.replace(commas.find(",,"), 2, ",");
    return parse_strategy(commas, n).sequence;
}

const VertexList& require_modulator(const Instance& inst) {
    if (!inst.modulator)
        throw InputError("instance has no modulator line (x ...)");
    return *inst.modulator;
}

ClassTag parse_tag(const std::string& name) {
    auto tag = class_tag_from_string(name);
    if (!tag)
        throw InputError("unknown class: " + name);
    return *tag;
}

struct SolveArgs {
    std::string algo = "exact";
    std::string input;
    std::optional<int> length_bound;
};

int run_solve(const SolveArgs& a) {
    Instance inst = read_instance(a.input);
    SolveResult res;
    if (a.algo == "exact") {
        res = solve_exact(inst.graph, inst.source, ExactOptions{a.length_bound, 128});
    } else if (a.algo == "threshold") {
        res = solve_threshold(inst.graph, inst.source, require_modulator(inst));
    } else {
        res = solve_stars(inst.graph, inst.source, require_modulator(inst));
    }
    std::cout << "saved=" << res.best_saved << '\n';
    std::cout << "strategy=" << format_strategy(res.best_strategy) << '\n';
    std::cout << "explored=" << res.explored << '\n';
    if (inst.demand) {
        bool yes = res.best_saved >= *inst.demand;
        std::cout << "demand=" << *inst.demand << ' ' << (yes ? "yes" : "no") << '\n';
        return yes ? ok : answer_no;
    }
    return ok;
}

int run_validate(const std::string& input, const std::string& strategy) {
    Instance inst = read_instance(input);
    Strategy strat = parse_strategy(strategy, inst.graph.n());
    SimOutcome out = simulate(inst.graph, inst.source, strat);
    if (!out.valid) {
        std::cout << "invalid, round=" << *out.failed_round << '\n';
        return answer_no;
    }
    std::cout << "valid, saved=" << out.saved_count << '\n';
    return ok;
}

int run_kernelize(const std::string& input, std::optional<int> k, const std::string& out_path,
                  const std::string& prov_path) {
    Instance inst = read_instance(input);
    if (!k)
        k = inst.demand;
    if (!k)
        throw InputError("no demand: pass -k or add a k line");
    KernelOutput out = kernelize(inst.graph, inst.source, require_modulator(inst), *k);
    write_text(out_path, serialize_instance(out.reduced));
    if (!prov_path.empty())
        write_text(prov_path, kernel_provenance(out));
    std::cerr << (out.applied ? "kernel applied" : "kernel not applied") << ", n=" << out.reduced.graph.n()
              << ", k'=" << *out.reduced.demand << '\n';
    return ok;
}

int run_modulator(const std::string& input, const std::string& cls, int k) {
    Instance inst = read_instance(input);
    ClassTag tag = parse_tag(cls);
    if (tag == ClassTag::diameter2_components)
        throw InputError("no modulator finder for diameter2_components");
    auto m = find_modulator(inst.graph, tag, k);
    if (!m) {
        std::cout << "none of size <= " << k << '\n';
        return answer_no;
    }
    std::cout << 'x';
    for (Vertex v : m->vertices)
        std::cout << ' ' << v + 1;
    std::cout << "\nsize=" << m->vertices.size() << '\n';
    return ok;
}

struct ReduceArgs {
    std::string kind;
    int k = 2;
    std::string cover;
    std::string input;
    std::string out;
    std::string provenance;
};

int run_reduce(const ReduceArgs& a) {
    Instance inst = read_instance(a.input);
    ReductionOutput out;
    if (a.kind == "diam2") {
        out = reduce_clique_to_diameter2(inst.graph, a.k);
    } else if (a.kind == "split") {
        out = reduce_clique_to_split(inst.graph, a.k);
    } else {
        VertexList cover = a.cover.empty() ? require_modulator(inst) : parse_id_list(a.cover, inst.graph.n());
        out = reduce_cliqueVC_to_stars(inst.graph, cover, a.k);
    }
    write_text(a.out, serialize_instance(out.instance));
    if (!a.provenance.empty())
        write_text(a.provenance, reduction_provenance(out));
    return ok;
}

struct GenArgs {
    std::string kind = "planted";
    std::string cls = "threshold";
    int n = 10;
    int k = 1;
    double p = 0.3;
    std::uint64_t seed = 1;
    std::optional<int> demand;
    int count = 1;
    std::string dir;
    std::string out;
};

Instance generate(const GenArgs& a, std::uint64_t seed) {
    if (a.kind == "random")
        return Instance{gen_random(a.n, a.p, seed), 0, std::nullopt, std::nullopt, a.demand};
    Instance inst = a.kind == "clique-modulator" ? gen_clique_modulator(a.n, a.k, seed)
                                                 : gen_planted(parse_tag(a.cls), a.n, a.k, a.p, seed);
    inst.demand = a.demand;
    return inst;
}

int run_gen(const GenArgs& a) {
    if (a.n < 1 || a.k < 0 || a.count < 1)
        throw InputError("sizes must be positive");
    if (a.p < 0 || a.p > 1)
        throw InputError("p must lie in [0, 1]");
    if (a.dir.empty()) {
        if (a.count != 1)
            throw InputError("--count needs --dir");
        write_text(a.out, serialize_instance(generate(a, a.seed)));
        return ok;
    }
    std::filesystem::create_directories(a.dir);
    const std::string stem = a.kind == "planted" ? a.cls : a.kind;
    for (int i = 0; i < a.count; ++i) {
        std::uint64_t seed = a.seed + static_cast<std::uint64_t>(i);
        std::ostringstream name;
        name << stem << '-' << std::setw(5) << std::setfill('0') << seed << ".ff";
        write_text((std::filesystem::path(a.dir) / name.str()).string(), serialize_instance(generate(a, seed)));
    }
    return ok;
}

struct BenchArgs {
    std::string dir;
    std::string algos = "exact,threshold,stars,kernel";
    bool oracle = false;
    std::string out;
    unsigned threads = 0;
};

int run_bench_cmd(const BenchArgs& a) {
    BenchOptions opt;
    opt.algos.clear();
    std::istringstream list(a.algos);
    for (std::string name; std::getline(list, name, ',');)
        if (!name.empty())
            opt.algos.push_back(name);
    opt.oracle = a.oracle;
    opt.threads = a.threads;
    if (!a.out.empty() && a.out != "-")
        opt.reproducer_dir = std::filesystem::absolute(a.out).parent_path();
    auto corpus = load_corpus(a.dir);
    std::vector<BenchRecord> recs;
    try {
        recs = run_bench(corpus, opt);
    } catch (const BenchDisagreement& e) {
        std::cerr << "error: " << e.what() << "; reproducer written to " << e.reproducer.string() << '\n';
        return answer_no;
    }
    std::string csv = bench_csv_header();
    for (const auto& r : recs)
        csv += bench_csv_row(r);
    write_text(a.out, csv);
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Firefighting on graphs: exact and parameterized solvers, kernel, gadgets, benchmarks"};
    app.require_subcommand(1);
    int code = ok;

    SolveArgs solve;
    auto* sc = app.add_subcommand("solve", "Maximize the number of saved vertices");
    sc->add_option("--algo", solve.algo)->check(CLI::IsMember({"exact", "threshold", "stars"}));
    sc->add_option("--input", solve.input)->required();
    sc->add_option("--length-bound", solve.length_bound)->check(CLI::NonNegativeNumber);
    sc->callback([&] { code = run_solve(solve); });

    std::string v_input, v_strategy;
    auto* vc = app.add_subcommand("validate", "Simulate a defence sequence");
    vc->add_option("--input", v_input)->required();
    vc->add_option("--strategy", v_strategy, "comma-separated 1-based ids")->required();
    vc->callback([&] { code = run_validate(v_input, v_strategy); });

    std::string k_input, k_out, k_prov;
    std::optional<int> k_demand;
    auto* kc = app.add_subcommand("kernelize", "Shrink a clique-modulator instance");
    kc->add_option("--input", k_input)->required();
    kc->add_option("-k,--demand", k_demand, "defaults to the instance's k line");
    kc->add_option("--out", k_out, "reduced instance (default stdout)");
    kc->add_option("--provenance", k_prov, "id map sidecar");
    kc->callback([&] { code = run_kernelize(k_input, k_demand, k_out, k_prov); });

    std::string m_input, m_class;
    int m_k = 0;
    auto* mc = app.add_subcommand("modulator", "Find a smallest modulator of size at most k");
    mc->add_option("--input", m_input)->required();
    mc->add_option("--class", m_class)->required();
    mc->add_option("-k", m_k)->required()->check(CLI::NonNegativeNumber);
    mc->callback([&] { code = run_modulator(m_input, m_class, m_k); });

    ReduceArgs reduce;
    auto* rc = app.add_subcommand("reduce", "Build a clique reduction gadget");
    rc->add_option("--kind", reduce.kind)->required()->check(CLI::IsMember({"diam2", "split", "stars-ppt"}));
    rc->add_option("-k", reduce.k)->required();
    rc->add_option("--cover", reduce.cover, "vertex cover for stars-ppt (default: the x line)");
    rc->add_option("--input", reduce.input)->required();
    rc->add_option("--out", reduce.out, "gadget instance (default stdout)");
    rc->add_option("--provenance", reduce.provenance, "provenance sidecar");
    rc->callback([&] { code = run_reduce(reduce); });

    GenArgs gen;
    auto* gc = app.add_subcommand("gen", "Generate instances");
    gc->add_option("--kind", gen.kind)->check(CLI::IsMember({"planted", "random", "clique-modulator"}));
    gc->add_option("--class", gen.cls, "planted class: clique, threshold or star_forest");
    gc->add_option("-n,--size", gen.n, "inner size, random n, or clique size");
    gc->add_option("-k,--modulator-size", gen.k);
    gc->add_option("-p", gen.p);
    gc->add_option("--seed", gen.seed);
    gc->add_option("--demand", gen.demand);
    gc->add_option("--count", gen.count, "instances with consecutive seeds (needs --dir)");
    gc->add_option("--dir", gen.dir);
    gc->add_option("--out", gen.out, "single instance (default stdout)");
    gc->callback([&] { code = run_gen(gen); });

    BenchArgs bench;
    auto* bc = app.add_subcommand("bench", "Run solvers over a corpus of .ff files");
    bc->add_option("--dir", bench.dir)->required();
    bc->add_option("--algos", bench.algos, "comma list of exact, threshold, stars, kernel");
    bc->add_flag("--oracle", bench.oracle, "compare against the exact solver");
    bc->add_option("--out", bench.out, "CSV path (default stdout)");
    bc->add_option("--threads", bench.threads);
    bc->callback([&] { code = run_bench_cmd(bench); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc_parse = app.exit(e);
        return rc_parse == 0 ? ok : input_error;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return input_error;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return input_error;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return input_error;
    }
    return code;
}
