#include <CLI11.hpp>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "extvan/genfun.hpp"
#include "extvan/pipeline.hpp"

namespace fs = std::filesystem;
using namespace extvan;

namespace {

void write_or_print(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path);
    if (!out) raise(ErrorCode::ConfigError, "cannot write output file: " + out_path);
    out << content;
}

RunConfig load_config(const std::string& path, std::uint64_t seed_override, bool seed_set,
                      int guard_override, bool guard_set) {
    RunConfig cfg = parse_run_config(path);
    if (seed_set) cfg.seed = seed_override;
    if (guard_set) cfg.guard = guard_override;
    return cfg;
}

int analyze_one(const RunConfig& cfg, const std::string& out_path, bool timing, bool quiet) {
    AnalyzeOutcome outcome = run_analyze(cfg, timing);
    std::string json_text = outcome.document.dump(2);
    json_text.push_back('\n');
    if (out_path.empty()) {
        std::cout << json_text;
        if (!quiet) std::cerr << outcome.text_summary;
    } else {
        write_or_print(json_text, out_path);
        if (!quiet) std::cout << outcome.text_summary;
    }
    return 0;
}

int analyze_batch(const std::string& dir, const std::string& out_dir, int jobs, bool timing,
                  std::uint64_t seed_override, bool seed_set, int guard_override, bool guard_set) {
    std::vector<fs::path> configs;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            configs.push_back(entry.path());
    std::sort(configs.begin(), configs.end());
    if (configs.empty()) {
        std::cerr << "no .json configs in " << dir << "\n";
        return 1;
    }
    if (out_dir.empty()) {
        std::cerr << "batch mode needs --out DIRECTORY\n";
        return 1;
    }
    fs::create_directories(out_dir);
    std::atomic<std::size_t> next{0};
    std::atomic<int> worst{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= configs.size()) return;
            int code = 0;
            try {
                RunConfig cfg = load_config(configs[i].string(), seed_override, seed_set,
                                            guard_override, guard_set);
                AnalyzeOutcome outcome = run_analyze(cfg, timing);
                fs::path out = fs::path(out_dir) / configs[i].filename().replace_extension(".report.json");
                std::ofstream f(out);
                f << outcome.document.dump(2) << "\n";
            } catch (const Error& e) {
                std::cerr << configs[i].filename().string() << ": " << e.what() << "\n";
                code = exit_code_for(e);
            }
            int cur = worst.load();
            while (code > cur && !worst.compare_exchange_weak(cur, code)) {
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return worst.load();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ext dimension sequences over finite-dimensional algebras and their "
                 "asymptotic vanishing pattern"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    std::uint64_t seed = 0;
    int guard = 0;
    int jobs = 1;
    bool timing = false, quiet = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "configuration file (JSON)")->required();
        cmd->add_option("--out", out_path, "output path (stdout when omitted)");
        cmd->add_option("--seed", seed, "override the random seed");
        cmd->add_option("--guard", guard, "override the fit guard");
    };

    CLI::App* ext = app.add_subcommand("ext", "print the Ext dimension sequence as CSV");
    add_common(ext);

    CLI::App* analyze = app.add_subcommand("analyze", "run the full vanishing analysis");
    add_common(analyze);
    analyze->add_option("--jobs", jobs, "worker threads when --config is a directory");
    analyze->add_flag("--timing", timing, "include wall-clock timing in the report");
    analyze->add_flag("--quiet", quiet, "suppress the text summary");

    CLI::App* lcm = app.add_subcommand("lcm", "least common multiple of generator degrees");
    std::vector<int> lcm_args;
    lcm->add_option("degrees", lcm_args, "positive integers");

    CLI::App* resolve = app.add_subcommand("resolve", "print resolution generator counts as CSV");
    add_common(resolve);

    CLI11_PARSE(app, argc, argv);

    bool seed_set = analyze->count("--seed") || ext->count("--seed") || resolve->count("--seed");
    bool guard_set = analyze->count("--guard") || ext->count("--guard") || resolve->count("--guard");

    try {
        if (app.got_subcommand(lcm)) {
            if (lcm_args.empty()) {
                std::cerr << "lcm needs at least one degree\n";
                return 1;
            }
            std::cout << lcm_degrees(lcm_args) << "\n";
            return 0;
        }
        if (app.got_subcommand(ext)) {
            RunConfig cfg = load_config(config_path, seed, seed_set, guard, guard_set);
            write_or_print(run_ext_csv(cfg), out_path);
            return 0;
        }
        if (app.got_subcommand(resolve)) {
            RunConfig cfg = load_config(config_path, seed, seed_set, guard, guard_set);
            write_or_print(run_resolve_csv(cfg), out_path);
            return 0;
        }
        if (app.got_subcommand(analyze)) {
            if (fs::is_directory(config_path))
                return analyze_batch(config_path, out_path, jobs, timing, seed, seed_set, guard,
                                     guard_set);
            RunConfig cfg = load_config(config_path, seed, seed_set, guard, guard_set);
            return analyze_one(cfg, out_path, timing, quiet);
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 70;
    }
    return 1;
}
