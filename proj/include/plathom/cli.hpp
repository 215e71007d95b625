/// \file cli.hpp
/// Command surface, rendering, cache, and the acceptance-criteria harness.
///
/// Output contract (determinism): the structured "json-like" format is one
/// top-level object with the fields `meta`, `dims`, `checks`, in that order,
/// each with fixed field ordering; identical inputs and flags produce
/// byte-identical output.  Timing is reported on stderr only.

#pragma once

#include "plathom/graded.hpp"

#include <string>
#include <utility>
#include <vector>

namespace plathom {

inline constexpr const char* kPlathomVersion = "1.0.0";

struct CliOptions {
    int margin = 4;               ///< --window-margin
    std::string format = "table"; ///< --format table|json-like
    int jobs = 0;                 ///< --jobs (0 = leave OpenMP default)
    int degree_bound = 3;         ///< --degree-bound (algebra suites)
    bool no_cache = false;        ///< --no-cache
};

/// Merge `key = value` lines from a plathom.conf file (if present) into
/// opts.  Recognized keys: window-margin, format, jobs, degree-bound,
/// no-cache.  Returns the list of keys set.  Flags win: the caller applies
/// command-line flags after this.
std::vector<std::string> load_config(CliOptions& opts, const std::string& path);

struct CheckLine {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct RunResult {
    std::string command;
    std::string word;  ///< input word text ("" when not applicable)
    std::vector<std::pair<std::string, std::string>> meta;  ///< ordered
    std::vector<std::pair<std::string, std::string>> dims;  ///< name -> table
    std::vector<CheckLine> checks;

    bool ok() const;
};

RunResult cmd_total(const std::string& word, const CliOptions& opts);
RunResult cmd_e2(const std::string& word, const CliOptions& opts);
RunResult cmd_kh(const std::string& word, const CliOptions& opts);
RunResult cmd_compare(const std::string& word, const CliOptions& opts);
RunResult cmd_resolution(const std::string& word, const std::vector<int>& bits,
                         const CliOptions& opts);
/// suite ∈ {d2, moy, invariance, algebra, sl1, u-action, commutativity};
/// word optionally narrows d2/commutativity to one diagram.
RunResult cmd_check(const std::string& suite, const std::string& word, const CliOptions& opts);
/// The full acceptance corpus: one check line per [PRIMARY] criterion.
RunResult cmd_selftest(const CliOptions& opts);

std::string render_structured(const RunResult& r);
std::string render_table(const RunResult& r);
std::string render(const RunResult& r, const CliOptions& opts);

/// Acceptance criteria 1-9 (criterion 10, determinism, is a statement about
/// two process runs; the acceptance binary and `selftest` realize it by
/// re-rendering a second independently computed run).
std::vector<CheckLine> acceptance_criteria(const CliOptions& opts);

/// Content-hash key for the cache: command, canonical arguments, version,
/// and every output-affecting option.
std::string cache_key(const std::string& command, const std::string& args,
                      const CliOptions& opts);
/// Returns the cached payload or "" on miss/corruption (checksum mismatch).
std::string cache_lookup(const std::string& key);
void cache_store(const std::string& key, const std::string& payload);
/// Cache directory: $PLATHOM_CACHE_DIR, else .plathom-cache in the cwd.
std::string cache_dir();

}  // namespace plathom
