#include <fcntl.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "curvmod/catalog.hpp"
#include "curvmod/errors.hpp"
#include "curvmod/reports.hpp"

namespace fs = std::filesystem;
using curvmod::Error;
using nlohmann::ordered_json;

namespace {

struct Output {
    std::string path; // empty = stdout
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw Error("cannot open output file " + path);
        f << text;
    }
};

// Exclusive advisory lock so concurrent runs do not interleave cache writes.
class CacheLock {
public:
    explicit CacheLock(const fs::path& dir) : lock_(dir / "lock") {
        for (int tries = 0; tries < 600; ++tries) {
            fd_ = ::open(lock_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
            if (fd_ >= 0) return;
            std::this_thread::sleep_for(std::chrono::milliseconds(100));
        }
        throw Error("timed out waiting for cache lock " + lock_.string());
    }
    ~CacheLock() {
        if (fd_ >= 0) {
            ::close(fd_);
            ::unlink(lock_.c_str());
        }
    }

private:
    fs::path lock_;
    int fd_ = -1;
};

std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s)
        out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
    return out;
}

// Runs compute() or replays a cached result; cached content is keyed by the
// full parameter string, so hits cannot change results.
std::string with_cache(const std::string& cache_dir, const std::string& key,
                       const std::function<std::string()>& compute) {
    if (cache_dir.empty()) return compute();
    fs::create_directories(cache_dir);
    fs::path file = fs::path(cache_dir) / (sanitize(key) + ".json");
    {
        CacheLock lock(cache_dir);
        if (fs::exists(file)) {
            std::ifstream f(file, std::ios::binary);
            std::ostringstream ss;
            ss << f.rdbuf();
            return ss.str();
        }
    }
    std::string result = compute();
    {
        CacheLock lock(cache_dir);
        std::ofstream f(file, std::ios::binary);
        f << result;
    }
    return result;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

curvmod::SparseMatrix named_matrix(const std::string& name, const std::string& algebra, int node) {
    using namespace curvmod;
    if (name == "bianchi") return bianchi_matrix(catalog_lookup(algebra));
    if (name == "ricci_trace") return ricci_trace_matrix(catalog_lookup(algebra));
    if (name == "dlie-k0" || name == "dlie-k1" || name == "dlie-k2") {
        int k = name.back() - '0';
        return lie_cochain_differential(graded_catalog_lookup(algebra, node), k);
    }
    if (name == "tr-circ-dlie") return tR_circ_dLie(graded_catalog_lookup(algebra, node));
    throw UnknownMatrix("no exportable matrix named '" + name + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact curvature-module and Lie-cohomology computations"};
    app.require_subcommand(1);

    std::string out_path, cache_dir;
    if (const char* env = std::getenv("CURVMOD_CACHE")) cache_dir = env;
    app.add_option("--out", out_path, "write the result to a file instead of stdout");
    app.add_option("--cache", cache_dir, "cache directory (or CURVMOD_CACHE)");

    std::string rep_algebra = "spin10";
    auto* rep = app.add_subcommand("report", "full pipeline for the spin(10) spinor algebra");
    rep->add_option("algebra", rep_algebra, "spin10 or spin10-odd");

    std::string km_algebra;
    auto* km = app.add_subcommand("kmodule", "curvature module report for a catalog algebra");
    km->add_option("--algebra", km_algebra, "catalog name, e.g. so3-split, gl2, spin10c-center")
        ->required();

    std::string pr_algebra;
    auto* pr = app.add_subcommand("prolong", "first prolongation of a catalog algebra");
    pr->add_option("--algebra", pr_algebra, "catalog name")->required();

    std::string co_algebra = "e6-chevalley";
    int co_node = 1, co_degree = 2;
    std::vector<std::uint64_t> co_primes;
    auto* co = app.add_subcommand("cohomology", "Lie algebra cohomology of a one-grading");
    co->add_option("--algebra", co_algebra, "e6-chevalley or a<n>-chevalley");
    co->add_option("--node", co_node, "Bourbaki node, 1-based");
    co->add_option("--degree", co_degree, "cochain degree k");
    co->add_option("--modular-primes", co_primes,
                   "at least 3 primes: probabilistic modular mode")
        ->delimiter(',');

    std::string ks_type = "E6";
    int ks_node = 1, ks_degree = 2;
    auto* ks = app.add_subcommand("kostant", "Bott-Borel-Weil components of H^k");
    ks->add_option("--type", ks_type, "root system type, e.g. E6, A3");
    ks->add_option("--node", ks_node, "Bourbaki node, 1-based");
    ks->add_option("--degree", ks_degree, "cohomology degree k");

    std::string xm_name, xm_algebra;
    int xm_node = 1;
    auto* xm = app.add_subcommand("export-matrix", "bit-exact text export of a named matrix");
    xm->add_option("--name", xm_name,
                   "bianchi | ricci_trace | dlie-k0 | dlie-k1 | dlie-k2 | tr-circ-dlie")
        ->required();
    xm->add_option("--algebra", xm_algebra, "catalog name")->required();
    xm->add_option("--node", xm_node, "Bourbaki node for the graded matrices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto start = std::chrono::steady_clock::now();
    try {
        std::string payload;
        if (rep->parsed()) {
            payload = with_cache(cache_dir, "report-" + rep_algebra,
                                 [&] { return dump(curvmod::full_report(rep_algebra)); });
        } else if (km->parsed()) {
            payload = with_cache(cache_dir, "kmodule-" + km_algebra,
                                 [&] { return dump(curvmod::kmodule_report(km_algebra)); });
        } else if (pr->parsed()) {
            payload = with_cache(cache_dir, "prolong-" + pr_algebra,
                                 [&] { return dump(curvmod::prolong_report(pr_algebra)); });
        } else if (co->parsed()) {
            auto mode = co_primes.empty() ? curvmod::RankMode::Exact : curvmod::RankMode::Modular;
            std::string key = "cohomology-" + co_algebra + "-n" + std::to_string(co_node) + "-k" +
                              std::to_string(co_degree);
            for (auto p : co_primes) key += "-p" + std::to_string(p);
            payload = with_cache(cache_dir, key, [&] {
                return dump(curvmod::cohomology_report(co_algebra, co_node, co_degree, mode,
                                                       co_primes));
            });
        } else if (ks->parsed()) {
            std::string key = "kostant-" + ks_type + "-n" + std::to_string(ks_node) + "-k" +
                              std::to_string(ks_degree);
            payload = with_cache(cache_dir, key,
                                 [&] { return dump(curvmod::kostant_report(ks_type, ks_node,
                                                                           ks_degree)); });
        } else if (xm->parsed()) {
            payload = named_matrix(xm_name, xm_algebra, xm_node).to_text();
        }
        Output{out_path}.write(payload);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    std::fprintf(stderr, "elapsed: %.3fs\n", dt.count());
    return 0;
}
