// pierik: Pieri structure constants in the K-theory of cominuscule
// Grassmannians, with four cross-checking engines.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "cache.hpp"
#include "pierik/engines.hpp"
#include "pierik/errors.hpp"
#include "pierik/ring.hpp"
#include "pierik/tableaux.hpp"
#include "pierik/verify.hpp"
#include "record.hpp"

using namespace pierik;
using cli::CoefficientCache;
using cli::CoefficientRecord;

namespace {

struct Options {
    std::string space;
    std::string lambda;
    std::string nu;
    int p = 0;
    std::string engine = "recursive";
    std::string format = "text";
    std::string suite = "all";
    std::string cache_dir;
    int max_p = -1;
    int threads = 1;
    bool list = false;
};

std::optional<CoefficientCache> open_cache(const Options& opt, const Space& space) {
    std::string dir = opt.cache_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv("PIERIK_CACHE")) {
            dir = env;
        }
    }
    if (dir.empty()) {
        return std::nullopt;
    }
    return CoefficientCache(dir, space);
}

void require_p_range(int p, const Space& space) {
    if (p < 0 || p > space.cap()) {
        throw OutOfRangeP("p must lie in 0.." + std::to_string(space.cap()) + " for " +
                          space.to_string());
    }
}

CoefficientRecord compute_record(const Space& space, const Partition& lambda, int p,
                                 const Partition& nu, Engine engine,
                                 std::optional<CoefficientCache>& cache) {
    CoefficientRecord record{space, lambda, p, nu, 0, engine, 0.0};
    if (cache) {
        if (auto hit = cache->lookup(lambda, p, nu, engine)) {
            record.coefficient = *hit;
            return record;
        }
    }
    auto start = std::chrono::steady_clock::now();
    record.coefficient = coefficient(lambda, p, nu, space, engine);
    record.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (cache) {
        cache->store(record);
    }
    return record;
}

int run_coeff(const Options& opt) {
    Space space = Space::parse(opt.space);
    Partition lambda = Partition::parse(opt.lambda, space.shifted());
    Partition nu = Partition::parse(opt.nu, space.shifted());
    require_p_range(opt.p, space);

    std::vector<Engine> engines;
    if (opt.engine == "all") {
        engines = applicable_engines(space.kind());
    } else {
        Engine engine = parse_engine(opt.engine);
        if (!engine_applicable(engine, space.kind())) {
            throw WrongSpace("engine " + opt.engine + " does not apply to " +
                             space.to_string());
        }
        engines = {engine};
    }

    auto cache = open_cache(opt, space);
    std::vector<CoefficientRecord> records;
    for (Engine engine : engines) {
        records.push_back(compute_record(space, lambda, opt.p, nu, engine, cache));
    }
    for (const auto& record : records) {
        if (opt.format == "json") {
            std::cout << record.to_line() << '\n';
        } else if (engines.size() > 1) {
            std::cout << to_string(record.engine) << ' ' << record.coefficient.get_str()
                      << '\n';
        } else {
            std::cout << record.coefficient.get_str() << '\n';
        }
    }
    for (const auto& record : records) {
        if (record.coefficient != records.front().coefficient) {
            std::cerr << "error: disagreement: engines differ on this coefficient\n";
            return 3;
        }
    }
    return 0;
}

int run_expand(const Options& opt) {
    Space space = Space::parse(opt.space);
    Partition lambda = Partition::parse(opt.lambda, space.shifted());
    require_p_range(opt.p, space);
    Engine engine = parse_engine(opt.engine);
    KVector result = pieri_multiply(KVector::basis(space, lambda), opt.p, engine);
    if (opt.format == "json") {
        std::cout << result.to_json() << '\n';
    } else {
        for (const auto& [nu, coeff] : result.terms()) {
            std::cout << nu.to_string() << '\t' << coeff.get_str() << '\n';
        }
    }
    return 0;
}

int run_table(const Options& opt) {
    Space space = Space::parse(opt.space);
    require_p_range(opt.p, space);
    Engine engine = parse_engine(opt.engine);
    auto cache = open_cache(opt, space);

    struct Pair {
        Partition lambda, nu;
    };
    std::vector<Pair> pairs;
    for (const auto& lambda : all_partitions(space)) {
        for (const auto& nu : partitions_containing(lambda, space)) {
            pairs.push_back({lambda, nu});
        }
    }
    // Records are computed in any order but emitted in the canonical one.
    std::vector<CoefficientRecord> records(pairs.size(),
                                           CoefficientRecord{space, {}, 0, {}, 0, engine});
    std::vector<std::size_t> misses;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        records[i].lambda = pairs[i].lambda;
        records[i].nu = pairs[i].nu;
        records[i].p = opt.p;
        std::optional<Integer> hit;
        if (cache) {
            hit = cache->lookup(pairs[i].lambda, opt.p, pairs[i].nu, engine);
        }
        if (hit) {
            records[i].coefficient = *hit;
        } else {
            misses.push_back(i);
        }
    }
    int workers = std::max(1, opt.threads);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t j = next.fetch_add(1); j < misses.size(); j = next.fetch_add(1)) {
            auto& record = records[misses[j]];
            record.coefficient =
                coefficient(record.lambda, opt.p, record.nu, space, engine);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) {
            pool.emplace_back(work);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    if (cache) {
        for (auto i : misses) {
            cache->store(records[i]);
        }
    }
    for (const auto& record : records) {
        std::cout << record.to_line() << '\n';
    }
    return 0;
}

int run_tableaux(const Options& opt) {
    Space space = Space::parse(opt.space);
    if (!space.shifted()) {
        throw WrongSpace("tableaux are defined for og and lg spaces");
    }
    Partition lambda = Partition::parse(opt.lambda, true);
    Partition nu = Partition::parse(opt.nu, true);
    require_p_range(opt.p, space);
    auto mode = space.kind() == Space::Kind::OG ? TableauMode::KOG : TableauMode::KLG;
    auto tableaux = enumerate_tableaux(make_skew(lambda, nu, space), opt.p, mode);
    std::cout << tableaux.size() << '\n';
    if (opt.list) {
        for (const auto& t : tableaux) {
            std::cout << '\n' << render_tableau(t);
        }
    }
    return 0;
}

int run_check(const Options& opt) {
    Space space = Space::parse(opt.space);
    int max_p = opt.max_p >= 0 ? opt.max_p : space.cap();
    std::vector<std::string> suites;
    if (opt.suite == "all") {
        suites = suite_names();
    } else {
        suites = {opt.suite};
    }
    bool ok = true;
    for (const auto& name : suites) {
        auto result = run_suite(name, space, max_p);
        std::printf("%s %s space=%s cases=%lld elapsed_ms=%.0f\n",
                    result.passed ? "PASS" : "FAIL", result.suite.c_str(),
                    space.to_string().c_str(), result.cases, result.elapsed_ms);
        if (!result.passed) {
            std::printf("  counterexample: %s\n", result.failure.c_str());
            ok = false;
        }
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pieri structure constants in the K-theory of cominuscule Grassmannians"};
    app.require_subcommand(1);
    Options opt;
    int exit_code = 0;

    auto add_space = [&](CLI::App* cmd) {
        cmd->add_option("--space", opt.space, "a:MxK, og:N, or lg:N")->required();
    };
    auto add_engine = [&](CLI::App* cmd, bool with_all) {
        std::vector<std::string> names{"direct", "recursive", "tableau", "lenart"};
        if (with_all) {
            names.push_back("all");
        }
        cmd->add_option("--engine", opt.engine, "evaluation engine")
            ->check(CLI::IsMember(names));
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_cache = [&](CLI::App* cmd) {
        cmd->add_option("--cache", opt.cache_dir,
                        "cache directory (defaults to $PIERIK_CACHE)");
    };

    auto* coeff = app.add_subcommand("coeff", "one Pieri coefficient");
    add_space(coeff);
    coeff->add_option("--lambda", opt.lambda, "partition, e.g. 6,4,1 or -")->required();
    coeff->add_option("--nu", opt.nu, "partition")->required();
    coeff->add_option("--p", opt.p, "special class index")->required();
    add_engine(coeff, true);
    add_format(coeff);
    add_cache(coeff);
    coeff->callback([&] { exit_code = run_coeff(opt); });

    auto* expand = app.add_subcommand("expand", "expand O^lambda * O^p in the basis");
    add_space(expand);
    expand->add_option("--lambda", opt.lambda, "partition")->required();
    expand->add_option("--p", opt.p, "special class index")->required();
    add_engine(expand, false);
    add_format(expand);
    expand->callback([&] { exit_code = run_expand(opt); });

    auto* table = app.add_subcommand("table", "every coefficient of the space as JSON lines");
    add_space(table);
    table->add_option("--p", opt.p, "special class index")->required();
    add_engine(table, false);
    table->add_option("--threads", opt.threads, "worker threads")
        ->check(CLI::Range(1, 64));
    add_cache(table);
    table->callback([&] { exit_code = run_table(opt); });

    auto* tableaux = app.add_subcommand("tableaux", "count (and list) tableaux of a shape");
    add_space(tableaux);
    tableaux->add_option("--lambda", opt.lambda, "partition")->required();
    tableaux->add_option("--nu", opt.nu, "partition")->required();
    tableaux->add_option("--p", opt.p, "content size")->required();
    tableaux->add_flag("--list", opt.list, "print each tableau");
    tableaux->callback([&] { exit_code = run_tableaux(opt); });

    auto* check = app.add_subcommand("check", "run property suites");
    add_space(check);
    check->add_option("--suite", opt.suite, "suite name or 'all'")
        ->check(CLI::IsMember({"all", "engines", "signs", "vanishing", "duality",
                               "symmetry", "associativity"}));
    check->add_option("--max-p", opt.max_p, "largest special class (default: space cap)");
    check->callback([&] { exit_code = run_check(opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
