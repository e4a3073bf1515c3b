// Acceptance gate: one exact-equality criterion per line, nonzero exit on any
// failure. Ranges follow the project requirements; everything is exact
// arithmetic with zero tolerance.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "mcq/verify.hpp"

namespace {

int failures = 0;

void criterion(const char* name, const std::function<void()>& fn) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = true;
    try {
        fn();
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
        ++failures;
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                   .count();
    std::printf("[%s] %-70s (%.1fs)\n", pass ? "PASS" : "FAIL", name, s);
    if (!pass) std::printf("       %s\n", detail.c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    using namespace mcq::checks;
    criterion("1. Hilbert q-identities, both variants, 1 <= r <= n <= 7",
              [] { hilbert_identities(7); });
    criterion("2. Hilbert special ranks r=n and r=n-1, n <= 7",
              [] { hilbert_specials(7); });
    criterion("3. Frobenius identities and special ranks, 1 <= r <= n <= 7", [] {
        frobenius_identities(7);
        frobenius_specials(7);
    });
    criterion("4. Specialization bridge: ps(grFrob) = Hilb = FY count, n <= 7",
              [] { ps_bridge(7); });
    criterion("5. Lemma suite: palindromic slices, differences, refined codes, n <= 7",
              [] {
                  eulerian_lemmas(7);
                  differences(7);
                  refined_codes(7);
              });
    criterion("6. DEX suite, exhaustive for S_n (n <= 8) and decorated (n <= 7)",
              [] { dex_properties(8, 7); });
    criterion("7. Generating function with fixed-point refinement, order 6",
              [] { gf(6); });
    criterion("8. Charney-Davis four routes + specializations, r <= n <= 7, q=1 to 8",
              [] {
                  cd_routes(7);
                  cd_specializations(8);
              });
    criterion("9. Equivariant CD: F-basis (n <= 7), characters (n <= 6), file matroids",
              [] {
                  equivariant_cd_uniform(7);
                  equivariant_cd_characters(6);
                  equivariant_cd_files();
              });
    criterion("10. Rank selection: beta = ribbon Schur (n <= 7), Moebius, flag_h >= 0",
              [] { rank_homology(7); });
    criterion("11. Kostka cross-check: h = sum K s in the F-basis, n <= 5",
              [] { kostka(5); });
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
