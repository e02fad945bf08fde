#pragma once

#include "liealg/catalog.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace liealg {

struct SweepConfig {
    std::uint64_t seed = 7;
    std::size_t scrambles = 100;         // per idempotence point
    std::size_t odd_dim_scrambles = 10000;
    std::size_t fuzz = 10000;
    std::size_t fuzz_max_dim = 8;
    std::size_t propsim_pairs = 500;
    std::size_t block_pairs = 200;
    std::size_t codim2_scrambles = 100;
    int n3_bound = 2;                    // exhaustive n = 3 tables with entries in [-bound, bound]
    unsigned jobs = 1;
    bool fail_fast = false;
};

struct PropertyResult {
    std::string name;
    bool passed = true;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::vector<std::string> notes;  // first failures and summary facts

    void fail(const std::string& what);
};

PropertyResult check_idempotence(const SweepConfig& cfg);
// G4_2_3 points with λ != 0 classify as aff(R) + aff(R) with a verified witness.
PropertyResult check_g4_2_3_identification(const SweepConfig& cfg);
PropertyResult check_derived_ideal_structure(const SweepConfig& cfg);
PropertyResult check_odd_dimension_decomposability(const SweepConfig& cfg);
PropertyResult check_propsim_engine(const SweepConfig& cfg);
PropertyResult check_codim2_suite(const SweepConfig& cfg);
PropertyResult check_l6_family();
PropertyResult check_redundancy_witnesses();
PropertyResult check_fuzz_completeness(const SweepConfig& cfg);

std::vector<PropertyResult> run_sweep(const SweepConfig& cfg);

// Fixture for block fact (ii): A, B not proportionally similar, [0 A; 0 0] ~p [0 B; 0 0].
struct RightBlockPair {
    Mat A, B;
};
RightBlockPair right_block_counterexample();
// Bounded search over 2x2 integer matrices with entries in [-bound, bound].
std::optional<RightBlockPair> search_right_block_counterexample(int bound);

Mat left_block(const Mat& a);   // [A 0; 0 0], one extra row and column
Mat right_block(const Mat& a);  // [0 A; 0 0]

// Runs f(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& f);

}  // namespace liealg
