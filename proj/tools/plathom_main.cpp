/// \file plathom_main.cpp
/// CLI entry point.  Verbs: total | e2 | kh | compare | resolution | check |
/// selftest.  See README.md for the output and cache contract.

#include <CLI11.hpp>

#include "plathom/cli.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <iostream>

using namespace plathom;

int main(int argc, char** argv) {
    CLI::App app{"plathom: plat-presentation link homologies H_{1+1} and H_{1-1}"};
    app.require_subcommand(1);

    CliOptions opts;
    try {
        load_config(opts, "plathom.conf");
    } catch (const std::exception& e) {
        std::cerr << "error config: " << e.what() << "\n";
        return 2;
    }

    app.add_option("--window-margin", opts.margin, "homology window margin")
        ->capture_default_str();
    app.add_option("--format", opts.format, "output format: table | json-like")
        ->check(CLI::IsMember({"table", "json-like"}))
        ->capture_default_str();
    app.add_option("--jobs", opts.jobs, "OpenMP thread count (0 = default)")
        ->capture_default_str();
    app.add_option("--degree-bound", opts.degree_bound, "u-degree bound for algebra suites")
        ->capture_default_str();
    app.add_flag("--no-cache", opts.no_cache, "bypass the result cache");

    std::string word, suite, bits_str;
    auto* c_total = app.add_subcommand("total", "delta-graded total homology H_{1-1}");
    c_total->add_option("word", word, "plat word, e.g. \"n=2; word=[+2,+2,+2]\"")->required();
    auto* c_e2 = app.add_subcommand("e2", "(h,q)-graded E2 page of H_{1+1}");
    c_e2->add_option("word", word)->required();
    auto* c_kh = app.add_subcommand("kh", "Khovanov oracle dimensions");
    c_kh->add_option("word", word)->required();
    auto* c_cmp = app.add_subcommand("compare", "E2 page vs Khovanov oracle");
    c_cmp->add_option("word", word)->required();
    auto* c_res = app.add_subcommand("resolution", "vertex homology of one resolution");
    c_res->add_option("word", word)->required();
    c_res->add_option("bits", bits_str, "resolution bits, e.g. 101")->required();
    auto* c_chk = app.add_subcommand("check", "run a check suite");
    c_chk->add_option("suite", suite,
                      "d2 | moy | invariance | algebra | sl1 | u-action | commutativity")
        ->required();
    c_chk->add_option("word", word, "optional word (d2/commutativity)");
    auto* c_self = app.add_subcommand("selftest", "full acceptance corpus");

    // Let global flags appear after the verb as well.
    for (CLI::App* sub : {c_total, c_e2, c_kh, c_cmp, c_res, c_chk, c_self})
        sub->fallthrough(true);

    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (opts.jobs > 0) omp_set_num_threads(opts.jobs);
#endif

    std::string args = word + "|" + suite + "|" + bits_str;
    std::string command = app.get_subcommands()[0]->get_name();
    std::string key = cache_key(command, args, opts);

    if (!opts.no_cache) {
        std::string hit = cache_lookup(key);
        if (!hit.empty() && (hit[0] == '0' || hit[0] == '1')) {
            std::fputs(hit.c_str() + 2, stdout);
            return hit[0] == '0' ? 0 : 1;
        }
    }

    auto t0 = std::chrono::steady_clock::now();
    RunResult result;
    try {
        if (c_total->parsed())
            result = cmd_total(word, opts);
        else if (c_e2->parsed())
            result = cmd_e2(word, opts);
        else if (c_kh->parsed())
            result = cmd_kh(word, opts);
        else if (c_cmp->parsed())
            result = cmd_compare(word, opts);
        else if (c_res->parsed()) {
            std::vector<int> bits;
            for (char c : bits_str) {
                if (c != '0' && c != '1') throw std::runtime_error("bits must be 0/1");
                bits.push_back(c - '0');
            }
            result = cmd_resolution(word, bits, opts);
        } else if (c_chk->parsed())
            result = cmd_check(suite, word, opts);
        else if (c_self->parsed())
            result = cmd_selftest(opts);
    } catch (const std::exception& e) {
        if (opts.format == "json-like")
            std::printf("{\"error\": \"runtime\", \"message\": \"%s\"}\n", e.what());
        else
            std::printf("error runtime: %s\n", e.what());
        return 2;
    }
    auto t1 = std::chrono::steady_clock::now();
    std::fprintf(stderr, "# elapsed %.3fs\n", std::chrono::duration<double>(t1 - t0).count());

    std::string payload = render(result, opts);
    int code = result.ok() ? 0 : 1;
    if (!opts.no_cache) cache_store(key, std::string(code == 0 ? "0" : "1") + "\n" + payload);
    std::fputs(payload.c_str(), stdout);
    return code;
}
