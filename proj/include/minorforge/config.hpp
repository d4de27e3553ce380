#pragma once

#include <cstdint>
#include <string>

namespace minorforge {

// Global knobs for search caps and reproducibility. Flags override the
// config file, which overrides these defaults; MINORFORGE_CAP overrides the
// default minor-search cap.
struct Config {
    int minor_cap = 16;            // max v(G) for exact minor search
    int hlinked_cap = 9;           // max v(G) for exhaustive H-linked checks
    int dense_exact_cap = 14;      // max v(G) for exhaustive dense-subgraph search
    int mader_exhaustive_cap = 12; // max v(G) for the exhaustive Mader fallback
    int64_t node_budget = 200000000;  // branch-and-bound node cap per query
    int64_t subset_budget = 20000000; // subset-enumeration cap per query
    int girth_retry_budget = 10000;   // rejection retries for the regular generator
    uint64_t seed = 1;
    bool deterministic = true;
    int jobs = 1;

    static Config& global();
    // Parses key=value lines ('#' comments allowed), then applies
    // MINORFORGE_CAP if set.
    void load_file(const std::string& path);
    void apply_env();
};

}  // namespace minorforge
