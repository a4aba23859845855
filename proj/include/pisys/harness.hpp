// Verification harness: the elementary-transformation scan over all
// indecomposable types, pi-system enumeration (exhaustive and seeded
// sampling), and the per-pi-system extendability sweep.
//
// The sweep is the hot loop. evaluate_cases() has two interchangeable
// implementations: a plain serial reference and an OpenMP kernel that maps
// the same per-index computation across threads. Results are written by
// index and reduced in canonical order, so thread count never changes a
// report byte; the serial path is kept as the oracle the parallel one is
// tested against.
#ifndef PISYS_HARNESS_HPP
#define PISYS_HARNESS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pisys/extend.hpp"
#include "pisys/pisystem.hpp"

namespace pisys {

struct LemmaEntry {
    TypeLabel subsystem_type;
    TypeLabel ambient_type;
    int min_steps = 0;

    friend bool operator==(const LemmaEntry& a, const LemmaEntry& b) {
        return a.subsystem_type == b.subsystem_type && a.ambient_type == b.ambient_type &&
               a.min_steps == b.min_steps;
    }
};

struct LemmaTable {
    int max_rank = 0;
    int max_depth = 0;
    std::vector<LemmaEntry> entries;  // deduplicated, canonical order
};

// For every indecomposable type up to max_rank: breadth-first search from
// the standard simple basis over elementary transformations, collecting the
// full-rank indecomposable results whose classified type differs from the
// ambient, with minimal step counts.
LemmaTable scan_elementary(int max_rank, int max_depth);

struct SampleMode {
    std::uint64_t count = 0;
    std::uint64_t seed = 0;
    int reflections_per_sample = 24;
};

struct EnumerationMode {
    bool exhaustive = true;
    SampleMode sample;  // used when !exhaustive

    static EnumerationMode make_exhaustive() { return {true, {}}; }
    static EnumerationMode sampled(std::uint64_t count, std::uint64_t seed) {
        return {false, {count, seed, 24}};
    }
};

// Exhaustive: every ordered root tuple whose pairwise Cartan integers equal
// the target's Bourbaki Cartan matrix and whose pairwise differences are not
// roots, by depth-first search with per-level pruning. Sampled: images of
// canonical representatives under seeded random reflection sequences
// (splitmix64; reflections preserve pi-systems and every invariant checked
// here). Unreachable targets yield an empty list.
std::vector<PiSystem> enumerate_pisystems(const RootSystem& R, TypeLabel target,
                                          const EnumerationMode& mode);

// The canonical representatives sampled mode reflects around.
std::vector<PiSystem> sample_representatives(const RootSystem& R, TypeLabel target);

struct VerifyReport {
    TypeLabel ambient;
    TypeLabel target_type;
    EnumerationMode mode;
    std::uint64_t total_checked = 0;
    std::uint64_t extendable_count = 0;
    std::uint64_t failing_count = 0;
    std::uint64_t criterion_mismatches = 0;
    std::vector<PiSystem> failing_exemplars;                // first few, canonical order
    std::map<std::string, std::uint64_t> failing_span_type_counts;
};

struct VerifyOptions {
    int threads = 0;  // 0 = all available, 1 = serial reference path
    std::size_t exemplar_bound = 10;
};

// Runs can_extend over every enumerated pi-system; when the target/ambient
// pair is a half-sum shape, also runs the half-sum test and counts
// disagreements with the closure criterion.
VerifyReport verify_theorem(const RootSystem& R, TypeLabel target, const EnumerationMode& mode,
                            const VerifyOptions& options = {});

// Report file conventions.
std::string verify_report_filename(const VerifyReport& report);  // verify_<ambient>_<target>.json

}  // namespace pisys

#endif
