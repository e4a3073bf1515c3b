#include "mcq/permstat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mcq/errors.hpp"

namespace mcq {

namespace {

void check_perm_guard(int n) {
    if (n < 0) throw std::invalid_argument("permutation size must be nonnegative");
    if (n > perm_guard())
        throw resource_error("permutation enumeration guard exceeded (n=" + std::to_string(n) +
                             ", guard=" + std::to_string(perm_guard()) + ")");
}

}  // namespace

std::vector<Permutation> gen_permutations(int n) {
    check_perm_guard(n);
    Permutation w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::vector<Permutation> gen_derangements(int n) {
    auto all = gen_permutations(n);
    std::vector<Permutation> out;
    for (auto& w : all)
        if (stats(w).fix == 0) out.push_back(std::move(w));
    return out;
}

std::vector<DecoratedPermutation> gen_decorated(int n) {
    if (n < 0) throw std::invalid_argument("decorated permutation size must be nonnegative");
    if (n > decorated_guard())
        throw resource_error("decorated permutation guard exceeded (n=" + std::to_string(n) +
                             ", guard=" + std::to_string(decorated_guard()) + ")");
    std::vector<DecoratedPermutation> out;
    // choose the support, then a bijection of it; emitted in lex order of the word
    for (uint32_t support = 0; support < (1u << n); ++support) {
        std::vector<int> pos;
        for (int i = 0; i < n; ++i)
            if (support & (1u << i)) pos.push_back(i);
        std::vector<int> vals(pos.size());
        for (size_t i = 0; i < pos.size(); ++i) vals[i] = pos[i] + 1;
        std::sort(vals.begin(), vals.end());
        do {
            DecoratedPermutation w(n, 0);
            for (size_t i = 0; i < pos.size(); ++i) w[pos[i]] = vals[i];
            out.push_back(std::move(w));
        } while (std::next_permutation(vals.begin(), vals.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> gen_reverse_alternating(int n) {
    if (n % 2 != 0) throw std::invalid_argument("reverse alternating permutations need even n");
    std::vector<Permutation> out;
    for (auto& w : gen_permutations(n)) {
        bool ok = true;
        for (int i = 0; i + 1 < n && ok; ++i)
            ok = (i % 2 == 0) ? (w[i] < w[i + 1]) : (w[i] > w[i + 1]);
        if (ok) out.push_back(std::move(w));
    }
    return out;
}

std::vector<Permutation> gen_alternating(int n) {
    if (n % 2 != 1) throw std::invalid_argument("alternating permutations need odd n");
    std::vector<Permutation> out;
    for (auto& w : gen_permutations(n)) {
        bool ok = true;
        for (int i = 0; i + 1 < n && ok; ++i)
            ok = (i % 2 == 0) ? (w[i] > w[i + 1]) : (w[i] < w[i + 1]);
        if (ok) out.push_back(std::move(w));
    }
    return out;
}

PermStats stats(const Permutation& sigma) {
    const int n = static_cast<int>(sigma.size());
    PermStats s;
    for (int i = 0; i < n; ++i) {
        if (sigma[i] > i + 1) ++s.exc;
        if (sigma[i] == i + 1) ++s.fix;
        if (i + 1 < n && sigma[i] > sigma[i + 1]) {
            s.des_set |= 1u << i;
            s.maj += i + 1;
        }
        for (int j = i + 1; j < n; ++j)
            if (sigma[i] > sigma[j]) ++s.inv;
    }
    return s;
}

namespace {

// Comparison key in the total order 1bar < ... < nbar < 0 < 1 < ... < n:
// barred j maps to j, the letter 0 to n+1, unbarred j to n+1+j.
int barred_key(int letter, bool barred, int n) {
    if (letter == 0) return n + 1;
    return barred ? letter : n + 1 + letter;
}

}  // namespace

uint32_t dex(const Permutation& sigma) {
    const int n = static_cast<int>(sigma.size());
    uint32_t out = 0;
    for (int i = 0; i + 1 < n; ++i) {
        int a = barred_key(sigma[i], sigma[i] > i + 1, n);
        int b = barred_key(sigma[i + 1], sigma[i + 1] > i + 2, n);
        if (a > b) out |= 1u << i;
    }
    return out;
}

uint32_t dex_decorated(const DecoratedPermutation& sigma) {
    const int n = static_cast<int>(sigma.size());
    uint32_t out = 0;
    for (int i = 0; i + 1 < n; ++i) {
        int a = barred_key(sigma[i], sigma[i] > i + 1, n);
        int b = barred_key(sigma[i + 1], sigma[i + 1] > i + 2, n);
        if (a > b) out |= 1u << i;
    }
    return out;
}

int exc_decorated(const DecoratedPermutation& sigma) {
    bool all_zero = true;
    int exc = 0;
    for (size_t i = 0; i < sigma.size(); ++i) {
        if (sigma[i] != 0) all_zero = false;
        if (sigma[i] > static_cast<int>(i) + 1) ++exc;
    }
    return all_zero ? -1 : exc;
}

int maj_decorated(const DecoratedPermutation& sigma) {
    bool all_zero = std::all_of(sigma.begin(), sigma.end(), [](int x) { return x == 0; });
    if (all_zero) return -1;
    int maj = 0;
    for (size_t i = 0; i + 1 < sigma.size(); ++i)
        if (sigma[i] > sigma[i + 1]) maj += static_cast<int>(i) + 1;
    return maj;
}

int fix2(const DecoratedPermutation& sigma) {
    return static_cast<int>(std::count(sigma.begin(), sigma.end(), 0));
}

std::string decorated_str(const DecoratedPermutation& sigma) {
    std::ostringstream os;
    if (sigma.size() <= 9) {
        for (int x : sigma) os << x;
    } else {
        for (size_t i = 0; i < sigma.size(); ++i) {
            if (i) os << ",";
            os << sigma[i];
        }
    }
    return os.str();
}

LaurentQT eulerian_A_q(int n) {
    LaurentQT out;
    for (const auto& w : gen_permutations(n)) {
        auto s = stats(w);
        out += LaurentQT::monomial(s.exc, QPoly::monomial(s.maj - s.exc));
    }
    return out;
}

LaurentQT eulerian_d_q(int n) {
    LaurentQT out;
    for (const auto& w : gen_derangements(n)) {
        auto s = stats(w);
        out += LaurentQT::monomial(s.exc, QPoly::monomial(s.maj - s.exc));
    }
    return out;
}

LaurentQT eulerian_binomial_q(int n) {
    // recurrence route
    LaurentQT rec = 1;
    for (int k = 1; k <= n; ++k)
        rec += LaurentQT::monomial(1, q_binomial(n, k)) * eulerian_A_q(k);
    // decorated-permutation route
    LaurentQT dir;
    for (const auto& w : gen_decorated(n)) {
        int exc = exc_decorated(w), maj = maj_decorated(w);
        dir += LaurentQT::monomial(exc + 1, QPoly::monomial(maj - exc));
    }
    if (rec != dir)
        throw identity_error("binomial Eulerian q-polynomial: recurrence and decorated "
                             "enumeration disagree at n=" + std::to_string(n));
    return rec;
}

namespace {

LaurentQT at_q1(const LaurentQT& f) {
    LaurentQT out;
    for (const auto& [e, c] : f.coeffs()) out += LaurentQT::monomial(e, QPoly(c.eval_one()));
    return out;
}

}  // namespace

LaurentQT eulerian_A(int n) { return at_q1(eulerian_A_q(n)); }
LaurentQT eulerian_d(int n) { return at_q1(eulerian_d_q(n)); }
LaurentQT eulerian_binomial(int n) { return at_q1(eulerian_binomial_q(n)); }

}  // namespace mcq
