// The wpv command line. `run` is the whole program minus process setup, so
// tests drive it directly.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace wpv::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

struct RunStats {
    std::size_t computed = 0;  // volumes produced by the recursion engine
    bool cache_loaded = false;
    bool cache_saved = false;
};

/// --cache, else $WPV_CACHE, else $XDG_DATA_HOME/wpv/volumes.json, else
/// ~/.local/share/wpv/volumes.json.
std::filesystem::path default_cache_path();

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        RunStats* stats = nullptr);

}  // namespace wpv::cli
