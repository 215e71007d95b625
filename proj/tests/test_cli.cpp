#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plathom/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace plathom;

TEST_CASE("cmd_total on the unknot (spec example)") {
    CliOptions opts;
    RunResult r = cmd_total("n=1; word=[]", opts);
    REQUIRE(r.dims.size() == 1);
    CHECK(r.dims[0].first == "delta");
    CHECK(r.dims[0].second == "{-1: 1, 1: 1}");
    CHECK(r.ok());
}

TEST_CASE("cmd_compare on the trefoil gives an all-zero diff (spec example)") {
    CliOptions opts;
    RunResult r = cmd_compare("n=2; word=[+2,+2,+2]", opts);
    bool found = false;
    for (const auto& [k, v] : r.dims)
        if (k == "diff") {
            found = true;
            CHECK(v == "{}");
        }
    CHECK(found);
    CHECK(r.ok());
}

TEST_CASE("cmd_check d2 passes on a one-crossing word and the trefoil") {
    CliOptions opts;
    CHECK(cmd_check("d2", "n=1; word=[+1]", opts).ok());
    CHECK(cmd_check("d2", "n=2; word=[+2,+2,+2]", opts).ok());
}

TEST_CASE("cmd_resolution reports the free-module certificate") {
    CliOptions opts;
    RunResult r = cmd_resolution("n=2; word=[+2]", {1}, opts);
    CHECK(r.ok());
    bool free_seen = false;
    for (const CheckLine& c : r.checks)
        if (c.name == "free-module") free_seen = c.ok;
    CHECK(free_seen);
    CHECK(r.dims[0].second == "{1: 1, 3: 1}");
}

TEST_CASE("structured rendering is deterministic and well-formed") {
    CliOptions opts;
    RunResult a = cmd_kh("n=2; word=[+2,+2]", opts);
    RunResult b = cmd_kh("n=2; word=[+2,+2]", opts);
    std::string sa = render_structured(a), sb = render_structured(b);
    CHECK(sa == sb);
    CHECK(sa.find("\"meta\"") < sa.find("\"dims\""));
    CHECK(sa.find("\"dims\"") < sa.find("\"checks\""));
    CHECK(render_table(a).find("result: ok") != std::string::npos);
}

TEST_CASE("cache round trip and corruption detection") {
    std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "plathom-cache-test";
    std::filesystem::remove_all(dir);
    setenv("PLATHOM_CACHE_DIR", dir.c_str(), 1);

    CliOptions opts;
    std::string key = cache_key("total", "n=1; word=[]||", opts);
    CHECK(cache_lookup(key).empty());
    cache_store(key, "payload-bytes\n");
    CHECK(cache_lookup(key) == "payload-bytes\n");

    // Different options produce a different key.
    CliOptions opts2 = opts;
    opts2.margin = 5;
    CHECK(cache_key("total", "n=1; word=[]||", opts2) != key);

    // Corrupt the stored file: checksum mismatch must read as a miss.
    std::ofstream(dir / (key + ".txt"), std::ios::binary) << "deadbeef\ngarbage";
    CHECK(cache_lookup(key).empty());

    unsetenv("PLATHOM_CACHE_DIR");
    std::filesystem::remove_all(dir);
}

TEST_CASE("config file parsing") {
    std::filesystem::path conf =
        std::filesystem::temp_directory_path() / "plathom-test.conf";
    std::ofstream(conf) << "# comment\nwindow-margin = 6\nformat = json-like\nno-cache = true\n";
    CliOptions opts;
    auto keys = load_config(opts, conf.string());
    CHECK(keys.size() == 3);
    CHECK(opts.margin == 6);
    CHECK(opts.format == "json-like");
    CHECK(opts.no_cache);

    std::ofstream(conf) << "bogus-key = 1\n";
    CliOptions opts2;
    CHECK_THROWS(load_config(opts2, conf.string()));
    std::filesystem::remove(conf);
    // Missing file: silently no-op.
    CliOptions opts3;
    CHECK(load_config(opts3, "/nonexistent/plathom.conf").empty());
}

TEST_CASE("check suites: algebra, sl1, u-action, moy, invariance (fast set)") {
    CliOptions opts;
    CHECK(cmd_check("algebra", "", opts).ok());
    CHECK(cmd_check("sl1", "", opts).ok());
    CHECK(cmd_check("u-action", "", opts).ok());
    CHECK(cmd_check("moy", "", opts).ok());
    CHECK(cmd_check("invariance", "", opts).ok());
    CHECK_THROWS(cmd_check("bogus", "", opts));
}
