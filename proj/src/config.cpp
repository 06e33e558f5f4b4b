#include "schreier/config.hpp"

#include <cstdlib>
#include <fstream>

#include "schreier/errors.hpp"

namespace schreier {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

void Config::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config file: " + path);
    std::string line;
    unsigned lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError(path + ":" + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "enum_cap")
            enum_cap = static_cast<unsigned>(std::stoul(value));
        else if (key == "ordinal_cap")
            ordinal_cap = static_cast<unsigned>(std::stoul(value));
        else if (key == "lp_gen_cap")
            lp_gen_cap = std::stoull(value);
        else if (key == "theta")
            theta = value;
        else if (key == "tol")
            tol = value;
        else if (key == "seed")
            seed = std::stoull(value);
        else
            throw ParseError(path + ":" + std::to_string(lineno) + ": unknown key " + key);
    }
}

Config Config::from_file(const std::string& path) {
    Config c;
    c.load_file(path);
    return c;
}

void Config::apply_env() {
    auto get = [](const char* name) -> const char* { return std::getenv(name); };
    if (const char* v = get("SCHREIER_ENUM_CAP")) enum_cap = static_cast<unsigned>(std::stoul(v));
    if (const char* v = get("SCHREIER_ORDINAL_CAP"))
        ordinal_cap = static_cast<unsigned>(std::stoul(v));
    if (const char* v = get("SCHREIER_LP_GEN_CAP")) lp_gen_cap = std::stoull(v);
    if (const char* v = get("SCHREIER_THETA")) theta = v;
    if (const char* v = get("SCHREIER_TOL")) tol = v;
    if (const char* v = get("SCHREIER_SEED")) seed = std::stoull(v);
}

} // namespace schreier
