#pragma once

#include <cstdint>
#include <string>

namespace schreier {

/// Runtime limits and defaults. Resolution order: built-in defaults, then a
/// config file, then SCHREIER_* environment variables, then CLI flags.
struct Config {
    unsigned enum_cap = 24;       // enumeration / support-size cap
    unsigned ordinal_cap = 64;    // max CNF nesting height accepted by parsers
    std::uint64_t lp_gen_cap = 1u << 20; // facet x generator budget per LP
    std::string theta = "geometric:1/4:1/2";
    std::string tol = "2^-40";
    std::uint64_t seed = 42;

    /// key = value lines, '#' comments; unknown keys rejected.
    static Config from_file(const std::string& path);
    void load_file(const std::string& path);
    /// SCHREIER_ENUM_CAP, SCHREIER_ORDINAL_CAP, SCHREIER_LP_GEN_CAP,
    /// SCHREIER_THETA, SCHREIER_TOL, SCHREIER_SEED.
    void apply_env();
};

} // namespace schreier
