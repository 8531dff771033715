#ifndef FIREFIGHT_BENCH_HPP
#define FIREFIGHT_BENCH_HPP

#include "firefight/exact.hpp"
#include "firefight/kernel.hpp"
#include "firefight/stars.hpp"
#include "firefight/threshold.hpp"

#include <atomic>
#include <cctype>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <thread>

namespace firefight {

struct BenchRecord {
    std::string name;
    std::string algo;
    int n = 0;
    int m = 0;
    int mod_size = 0;
    int saved = 0;     // kernel rows: 1 if the reduced instance is a yes-instance
    double ms = 0;
    long long explored = 0;
    std::optional<bool> agree;
};

struct NamedInstance {
    std::string name;
    Instance instance;
};

struct BenchOptions {
    std::vector<std::string> algos{"exact", "threshold", "stars", "kernel"};
    bool oracle = false;
    unsigned threads = 0;  // 0 = hardware concurrency
    std::filesystem::path reproducer_dir = ".";
    ExactOptions oracle_options{};
};

/// Thrown when an algorithm disagrees with the oracle; the offending instance
/// has been written to `reproducer`.
class BenchDisagreement : public std::runtime_error {
public:
    BenchDisagreement(const std::string& what, std::filesystem::path file)
        : std::runtime_error(what), reproducer(std::move(file)) {}
    std::filesystem::path reproducer;
};

inline const char* bench_csv_header() {
    return "# firefight-bench v1\nname,algo,n,m,mod_size,saved,ms,explored,agree\n";
}

inline std::string bench_csv_row(const BenchRecord& r) {
    std::ostringstream os;
    os << r.name << ',' << r.algo << ',' << r.n << ',' << r.m << ',' << r.mod_size << ',' << r.saved << ',';
    os << std::fixed << std::setprecision(3) << r.ms << ',' << r.explored << ',';
    if (r.agree)
        os << (*r.agree ? "true" : "false");
    os << '\n';
    return os.str();
}

inline bool bench_applicable(const std::string& algo, const Instance& inst) {
    if (algo == "exact")
        return true;
    if (!inst.modulator || !inst.class_tag)
        return false;
    if (algo == "threshold")
        return *inst.class_tag == ClassTag::threshold;
    if (algo == "stars")
        return *inst.class_tag == ClassTag::star_forest;
    if (algo == "kernel")
        return *inst.class_tag == ClassTag::clique && inst.demand.has_value();
    throw InputError("unknown algorithm: " + algo);
}

namespace detail {

struct BenchRow {
    BenchRecord record;
    std::optional<std::string> failure;
};

inline BenchRow bench_one(const NamedInstance& ni, const std::string& algo, const BenchOptions& opt) {
    const Instance& inst = ni.instance;
    BenchRow row;
    auto& r = row.record;
    r.name = ni.name;
    r.algo = algo;
    r.n = inst.graph.n();
    r.m = inst.graph.m();
    r.mod_size = inst.modulator ? static_cast<int>(inst.modulator->size()) : 0;
    const bool oracle = opt.oracle && inst.graph.n() <= opt.oracle_options.max_vertices;

    auto start = std::chrono::steady_clock::now();
    SolveResult res;
    std::optional<bool> kernel_yes;
    if (algo == "exact") {
        res = solve_exact(inst.graph, inst.source, ExactOptions{std::nullopt, 128});
    } else if (algo == "threshold") {
        res = solve_threshold(inst.graph, inst.source, *inst.modulator);
    } else if (algo == "stars") {
        res = solve_stars(inst.graph, inst.source, *inst.modulator);
    } else {
        auto out = kernelize(inst.graph, inst.source, *inst.modulator, *inst.demand);
        kernel_yes = decide_saving_k(out.reduced.graph, out.reduced.source, *out.reduced.demand,
                                     ExactOptions{std::nullopt, 128});
        res.best_saved = *kernel_yes ? 1 : 0;
    }
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    r.saved = res.best_saved;
    r.explored = res.explored;

    if (oracle) {
        if (algo == "exact") {
            r.agree = true;
        } else if (kernel_yes) {
            r.agree = decide_saving_k(inst.graph, inst.source, *inst.demand, opt.oracle_options) == *kernel_yes;
        } else {
            r.agree = solve_exact(inst.graph, inst.source, opt.oracle_options).best_saved == res.best_saved;
        }
        if (!*r.agree)
            row.failure = algo + " disagrees with the oracle on " + ni.name;
    }
    return row;
}

inline std::string reproducer_name(const std::string& name, const std::string& algo) {
    std::string out = "reproducer-" + algo + "-";
    for (char c : name)
        out += std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' ? c : '_';
    return out + ".ff";
}

inline std::filesystem::path write_reproducer(const std::filesystem::path& dir, const NamedInstance& ni,
                                              const std::string& algo, const std::string& message) {
    auto file = dir / reproducer_name(ni.name, algo);
    std::ofstream os(file);
    os << "# " << message << '\n' << serialize_instance(ni.instance);
    if (!os)
        throw InputError("cannot write reproducer " + file.string());
    return file;
}

} // namespace detail

/// Runs every applicable (instance, algorithm) pair. Records come back in
/// corpus order, algorithms in the order given. On the first disagreement in
/// that order the instance is written to a reproducer file and
/// BenchDisagreement is thrown.
inline std::vector<BenchRecord> run_bench(const std::vector<NamedInstance>& corpus, const BenchOptions& opt) {
    for (const auto& a : opt.algos)
        if (a != "exact" && a != "threshold" && a != "stars" && a != "kernel")
            throw InputError("unknown algorithm: " + a);
    struct Job {
        std::size_t instance;
        const std::string* algo;
    };
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (const auto& a : opt.algos)
            if (bench_applicable(a, corpus[i].instance))
                jobs.push_back({i, &a});

    std::vector<detail::BenchRow> rows(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) {
            try {
                rows[j] = detail::bench_one(corpus[jobs[j].instance], *jobs[j].algo, opt);
            } catch (...) {
                errors[j] = std::current_exception();
            }
        }
    };
    unsigned threads = opt.threads ? opt.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1)));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t)
            pool.emplace_back(worker);
        worker();
    }

    std::vector<BenchRecord> out;
    for (std::size_t j = 0; j < jobs.size(); ++j) {
        if (errors[j])
            std::rethrow_exception(errors[j]);
        if (rows[j].failure) {
            auto file = detail::write_reproducer(opt.reproducer_dir, corpus[jobs[j].instance], *jobs[j].algo,
                                                 *rows[j].failure);
            throw BenchDisagreement(*rows[j].failure, file);
        }
        out.push_back(std::move(rows[j].record));
    }
    return out;
}

/// Reads every *.ff file in a directory, sorted by file name.
inline std::vector<NamedInstance> load_corpus(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir))
        throw InputError("not a directory: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".ff")
            files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<NamedInstance> out;
    for (const auto& f : files) {
        std::ifstream in(f);
        try {
            out.push_back({f.stem().string(), parse_instance(in)});
        } catch (const InputError& e) {
            throw InputError(f.filename().string() + ": " + e.what());
        }
    }
    return out;
}

} // namespace firefight

#endif // FIREFIGHT_BENCH_HPP
