// One PASS/FAIL line per acceptance criterion, exit status 1 if any fails.

#include "liealg/properties.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>

using namespace liealg;

namespace {

bool report(const std::string& label, const std::vector<PropertyResult>& parts) {
    bool ok = true;
    for (const auto& p : parts) ok = ok && p.passed;
    std::cout << (ok ? "PASS " : "FAIL ") << label << "\n";
    for (const auto& p : parts) {
        std::cout << "     " << p.name << ": " << p.checked << " checked, " << p.failures << " failed\n";
        for (const auto& n : p.notes) std::cout << "       " << n << "\n";
    }
    std::cout.flush();
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    SweepConfig cfg;
    if (const char* jobs = std::getenv("LIEALG_JOBS")) cfg.jobs = static_cast<unsigned>(std::atoi(jobs));
    if (argc > 1) cfg.seed = std::strtoull(argv[1], nullptr, 10);

    bool ok = true;
    ok &= report("corpus idempotence (>= 60 points x 100 scrambles)", {check_idempotence(cfg)});
    ok &= report("derived ideal structure (abelian G^1, commuting A_G, dim A_G <= 2, exhaustive n = 3)",
                 {check_derived_ideal_structure(cfg)});
    ok &= report("no indecomposable non-nilpotent odd-dimensional result (corpus + 10^4 scrambles)",
                 {check_odd_dimension_decomposability(cfg)});
    ok &= report("proportional similarity engine (laws, witnesses, block facts)", {check_propsim_engine(cfg)});
    ok &= report("codimension-2 suite (pairwise distinct table, round trips, verified M_f)", {check_codim2_suite(cfg)});
    ok &= report("six-dimensional nilpotent family normalization for gamma in {1, 4, 2, -1, -3}", {check_l6_family()});
    ok &= report("parameter redundancy witnesses", {check_redundancy_witnesses()});
    ok &= report("fuzz completeness (10^4 tensors, n <= 8)", {check_fuzz_completeness(cfg)});
    // documented deviation, reported alongside the criteria
    ok &= report("G4_2_3 with lambda != 0 identified with aff(R) + aff(R)", {check_g4_2_3_identification(cfg)});
    std::cout << (ok ? "ALL PASS" : "SOME CRITERIA FAILED") << "\n";
    return ok ? 0 : 1;
}
