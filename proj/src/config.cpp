#include "minorforge/config.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace minorforge {

Config& Config::global() {
    static Config cfg;
    return cfg;
}

void Config::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\r");
            size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty()) continue;
        if (key == "minor_cap") minor_cap = std::stoi(val);
        else if (key == "hlinked_cap") hlinked_cap = std::stoi(val);
        else if (key == "dense_exact_cap") dense_exact_cap = std::stoi(val);
        else if (key == "mader_exhaustive_cap") mader_exhaustive_cap = std::stoi(val);
        else if (key == "node_budget") node_budget = std::stoll(val);
        else if (key == "subset_budget") subset_budget = std::stoll(val);
        else if (key == "girth_retry_budget") girth_retry_budget = std::stoi(val);
        else if (key == "seed") seed = std::stoull(val);
        else if (key == "deterministic") deterministic = (val == "1" || val == "true");
        else if (key == "jobs") jobs = std::stoi(val);
        else throw std::runtime_error("unknown config key: " + key);
    }
}

void Config::apply_env() {
    if (const char* cap = std::getenv("MINORFORGE_CAP")) minor_cap = std::atoi(cap);
}

}  // namespace minorforge
