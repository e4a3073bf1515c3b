#pragma once

#include <string>
#include <vector>

#include "mcq/exact.hpp"

namespace mcq {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // witness on failure, empty on success
    double ms = 0.0;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

std::vector<std::string> suite_names();  // excludes "all"
/// Runs one named suite (or "all") to the bound; unknown name throws
/// std::invalid_argument.
std::vector<SuiteReport> run_suites(const std::string& name, int max_n);

// Individual identity checks, shared with the acceptance harness. Each throws
// identity_error with a witness on failure and returns normally on success.
namespace checks {
void arith_basics(int max_n);
void dex_properties(int perm_n, int decorated_n);
void qsym_products(int max_deg);
void ribbon_routes(int max_n);
void kostka(int max_n);
void eulerian_routes(int max_n);
void eulerian_lemmas(int max_n);
void gf(int order);
void hilbert_identities(int max_n);
void hilbert_specials(int max_n);
void frobenius_identities(int max_n);
void frobenius_specials(int max_n);
void ps_bridge(int max_n);
void differences(int max_n);
void refined_codes(int max_n);
void rank_homology(int max_n);
void matroid_flags(int max_n);
void cd_routes(int max_n);
void cd_specializations(int max_n);
void equivariant_cd_uniform(int max_n);
void equivariant_cd_characters(int max_n);
void equivariant_cd_files();
}  // namespace checks

}  // namespace mcq
