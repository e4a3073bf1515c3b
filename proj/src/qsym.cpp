#include "mcq/qsym.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <tuple>

#include "mcq/errors.hpp"
#include "mcq/permstat.hpp"

namespace mcq {

namespace {

int shuffle_guard() {
    int def = 14;
    if (const char* s = std::getenv("MCQ_MAX_N")) {
        int v = std::atoi(s);
        if (v > 0) return std::max(def, v);
    }
    return def;
}

}  // namespace

std::vector<int> subset_to_list(Subset s) {
    std::vector<int> out;
    for (int i = 0; s >> i; ++i)
        if (s & (1u << i)) out.push_back(i + 1);
    return out;
}

Subset list_to_subset(const std::vector<int>& xs) {
    Subset s = 0;
    for (int x : xs) {
        if (x < 1) throw validation_error("subset elements must be positive");
        s |= 1u << (x - 1);
    }
    return s;
}

int subset_sum(Subset s) {
    int total = 0;
    for (int i = 0; s >> i; ++i)
        if (s & (1u << i)) total += i + 1;
    return total;
}

std::vector<int> composition_of(Subset s, int n) {
    std::vector<int> comp;
    int prev = 0;
    for (int i = 1; i < n; ++i)
        if (s & (1u << (i - 1))) {
            comp.push_back(i - prev);
            prev = i;
        }
    comp.push_back(n - prev);
    if (n == 0) comp.clear();
    return comp;
}

Subset descent_set_of_composition(const std::vector<int>& comp) {
    Subset s = 0;
    int acc = 0;
    for (size_t i = 0; i + 1 < comp.size(); ++i) {
        acc += comp[i];
        s |= 1u << (acc - 1);
    }
    return s;
}

QSymElem::QSymElem(long c) {
    if (c != 0) graded_[0][0] = LaurentQT(c);
}

QSymElem QSymElem::fundamental(Subset s, int degree, LaurentQT coeff) {
    QSymElem x;
    x.add_term(degree, s, coeff);
    return x;
}

LaurentQT QSymElem::coeff(int degree, Subset s) const {
    auto it = graded_.find(degree);
    if (it == graded_.end()) return {};
    auto jt = it->second.find(s);
    return jt == it->second.end() ? LaurentQT() : jt->second;
}

bool QSymElem::homogeneous(int* degree_out) const {
    if (graded_.size() > 1) return false;
    if (degree_out && !graded_.empty()) *degree_out = graded_.begin()->first;
    return true;
}

void QSymElem::add_term(int degree, Subset s, const LaurentQT& c) {
    if (c.is_zero()) return;
    auto& slot = graded_[degree][s];
    slot += c;
    if (slot.is_zero()) {
        graded_[degree].erase(s);
        if (graded_[degree].empty()) graded_.erase(degree);
    }
}

QSymElem& QSymElem::operator+=(const QSymElem& o) {
    for (const auto& [deg, terms] : o.graded_)
        for (const auto& [s, c] : terms) add_term(deg, s, c);
    return *this;
}

QSymElem& QSymElem::operator-=(const QSymElem& o) {
    for (const auto& [deg, terms] : o.graded_)
        for (const auto& [s, c] : terms) add_term(deg, s, -c);
    return *this;
}

QSymElem QSymElem::scaled(const LaurentQT& f) const {
    QSymElem out;
    for (const auto& [deg, terms] : graded_)
        for (const auto& [s, c] : terms) out.add_term(deg, s, c * f);
    return out;
}

QSymElem QSymElem::eval_t_minus_one() const {
    QSymElem out;
    for (const auto& [deg, terms] : graded_)
        for (const auto& [s, c] : terms) out.add_term(deg, s, LaurentQT(c.eval_t_minus_one()));
    return out;
}

namespace {

// Canonical word with descent set S in [n-1]: fill the increasing runs from
// the last run backwards with the smallest unused letters, ascending inside
// each run. (S={1}, n=3 gives 312.)
std::vector<int> canonical_word(Subset s, int n) {
    auto comp = composition_of(s, n);
    std::vector<int> word(n);
    int next = 1;
    int end = n;
    for (auto it = comp.rbegin(); it != comp.rend(); ++it) {
        int start = end - *it;
        for (int p = start; p < end; ++p) word[p] = next++;
        end = start;
    }
    return word;
}

uint32_t descent_mask(const std::vector<int>& w) {
    uint32_t out = 0;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) out |= 1u << i;
    return out;
}

// F_{S,a} * F_{T,b} expanded over shuffles of canonical words; memoized.
const std::map<Subset, Int>& shuffle_table(int a, Subset s, int b, Subset t) {
    static std::map<std::tuple<int, Subset, int, Subset>, std::map<Subset, Int>> memo;
    auto key = std::make_tuple(a, s, b, t);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    if (a + b > shuffle_guard())
        throw resource_error("quasisymmetric product degree guard exceeded (degree=" +
                             std::to_string(a + b) + ", guard=" + std::to_string(shuffle_guard()) +
                             ")");
    auto u = canonical_word(s, a);
    auto v = canonical_word(t, b);
    for (int& x : v) x += a;

    std::map<Subset, Int> table;
    const int n = a + b;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != a) continue;
        std::vector<int> w(n);
        int iu = 0, iv = 0;
        for (int p = 0; p < n; ++p) w[p] = (mask & (1u << p)) ? u[iu++] : v[iv++];
        table[descent_mask(w)] += 1;
    }
    return memo.emplace(key, std::move(table)).first->second;
}

}  // namespace

QSymElem operator*(const QSymElem& a, const QSymElem& b) {
    QSymElem out;
    for (const auto& [da, ta] : a.graded())
        for (const auto& [sa, ca] : ta)
            for (const auto& [db, tb] : b.graded())
                for (const auto& [sb, cb] : tb) {
                    const LaurentQT c = ca * cb;
                    for (const auto& [s, mult] : shuffle_table(da, sa, db, sb))
                        out.add_term(da + db, s, c * LaurentQT(QPoly(mult)));
                }
    return out;
}

QSymElem f_basis(Subset s, int n) {
    if (n < 0) throw std::invalid_argument("degree must be nonnegative");
    if (n >= 1 && (s >> (n - 1)) != 0)
        throw validation_error("descent subset must lie inside [n-1]");
    if (n == 0 && s != 0) throw validation_error("descent subset must lie inside [n-1]");
    return QSymElem::fundamental(s, n);
}

QSymElem h_complete(int n) { return f_basis(0, n); }

QSymElem h_of_composition(const std::vector<int>& comp) {
    QSymElem out(1);
    for (int p : comp) {
        if (p < 0) throw std::invalid_argument("composition parts must be nonnegative");
        if (p > 0) out *= h_complete(p);
    }
    return out;
}

namespace {

// Standard Young tableaux of a partition shape, reported as descent masks:
// i is a descent when i+1 sits in a strictly lower row than i.
void syt_rec(const std::vector<int>& shape, std::vector<int>& fill, int placed, int n,
             std::vector<int>& row_of, std::vector<uint32_t>& out) {
    if (placed == n) {
        uint32_t mask = 0;
        for (int i = 1; i < n; ++i)
            if (row_of[i] > row_of[i - 1]) mask |= 1u << (i - 1);
        out.push_back(mask);
        return;
    }
    for (size_t r = 0; r < shape.size(); ++r) {
        if (fill[r] >= shape[r]) continue;
        if (r > 0 && fill[r - 1] <= fill[r]) continue;
        fill[r]++;
        row_of[placed] = static_cast<int>(r);
        syt_rec(shape, fill, placed + 1, n, row_of, out);
        fill[r]--;
    }
}

std::vector<uint32_t> syt_descent_masks(const std::vector<int>& shape) {
    int n = 0;
    for (int p : shape) n += p;
    std::vector<int> fill(shape.size(), 0), row_of(std::max(n, 1), 0);
    std::vector<uint32_t> out;
    if (n == 0) {
        out.push_back(0);
        return out;
    }
    syt_rec(shape, fill, 0, n, row_of, out);
    return out;
}

}  // namespace

QSymElem schur(const std::vector<int>& partition) {
    for (size_t i = 0; i + 1 < partition.size(); ++i)
        if (partition[i] < partition[i + 1])
            throw validation_error("partition parts must be weakly decreasing");
    for (int p : partition)
        if (p <= 0) throw validation_error("partition parts must be positive");
    int n = 0;
    for (int p : partition) n += p;
    QSymElem out;
    for (uint32_t mask : syt_descent_masks(partition)) out.add_term(n, mask, LaurentQT(1));
    return out;
}

QSymElem ribbon_schur(Subset r, int n) {
    if (n < 1) throw std::invalid_argument("ribbon degree must be positive");
    if ((r >> (n - 1)) != 0) throw validation_error("descent subset must lie inside [n-1]");
    if (n > perm_guard())
        throw resource_error("ribbon degree guard exceeded (n=" + std::to_string(n) + ")");

    // Route 1: standard tableaux of the ribbon, via permutations with the
    // prescribed descent set.
    QSymElem direct;
    {
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = i + 1;
        do {
            if (descent_mask(w) != r) continue;
            std::vector<int> inv(n);
            for (int i = 0; i < n; ++i) inv[w[i] - 1] = i + 1;
            direct.add_term(n, descent_mask(inv), LaurentQT(1));
        } while (std::next_permutation(w.begin(), w.end()));
    }

    // Route 2: inclusion-exclusion over coarsenings into complete homogeneous
    // products.
    QSymElem incl;
    const int nr = std::popcount(r);
    for (Subset t = r;; t = (t - 1) & r) {
        int sign = ((nr - std::popcount(t)) % 2 == 0) ? 1 : -1;
        QSymElem h = h_of_composition(composition_of(t, n));
        incl += (sign > 0) ? h : QSymElem() - h;
        if (t == 0) break;
    }

    if (direct != incl)
        throw identity_error("ribbon expansion: tableau and inclusion-exclusion routes disagree");
    return direct;
}

std::map<std::vector<int>, LaurentQT> to_monomial(const QSymElem& x) {
    std::map<std::vector<int>, LaurentQT> out;
    for (const auto& [deg, terms] : x.graded()) {
        uint32_t full = (deg >= 1) ? ((1u << (deg - 1)) - 1) : 0;
        for (Subset t = full;; t = (t - 1) & full) {
            LaurentQT c;
            for (Subset s = t;; s = (s - 1) & t) {
                auto it = terms.find(s);
                if (it != terms.end()) c += it->second;
                if (s == 0) break;
            }
            if (!c.is_zero()) out[composition_of(t, deg)] = c;
            if (t == 0) break;
        }
    }
    return out;
}

bool is_symmetric(const QSymElem& x) {
    auto mono = to_monomial(x);
    std::map<std::vector<int>, bool> seen;
    for (const auto& [comp, c] : mono) {
        std::vector<int> sorted = comp;
        std::sort(sorted.begin(), sorted.end());
        if (seen.count(sorted)) continue;
        seen[sorted] = true;
        std::vector<int> perm = sorted;
        do {
            auto it = mono.find(perm);
            const LaurentQT other = (it == mono.end()) ? LaurentQT() : it->second;
            if (other != c) return false;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return true;
}

long kostka_number(const std::vector<int>& lambda, const std::vector<int>& nu) {
    // DP over intermediate shapes, adding one horizontal strip per content part
    std::map<std::vector<int>, long> cur;
    cur[std::vector<int>(lambda.size(), 0)] = 1;
    for (int part : nu) {
        std::map<std::vector<int>, long> next;
        for (const auto& [mu, ways] : cur) {
            // add horizontal strip of size `part`: choose additions a_r with
            // mu[r] + a_r <= lambda[r] and mu[r] + a_r <= mu[r-1] (strict
            // column condition: new shape row r cannot exceed old row r-1)
            std::vector<int> a(lambda.size(), 0);
            std::function<void(size_t, int)> go = [&](size_t row, int remaining) {
                if (row == lambda.size()) {
                    if (remaining == 0) {
                        std::vector<int> nu2 = mu;
                        for (size_t r = 0; r < nu2.size(); ++r) nu2[r] += a[r];
                        next[nu2] += ways;
                    }
                    return;
                }
                int cap = lambda[row] - mu[row];
                if (row > 0) cap = std::min(cap, mu[row - 1] - mu[row]);
                for (int x = 0; x <= std::min(cap, remaining); ++x) {
                    a[row] = x;
                    go(row + 1, remaining - x);
                }
                a[row] = 0;
            };
            go(0, part);
        }
        cur = std::move(next);
    }
    auto it = cur.find(lambda);
    return it == cur.end() ? 0 : it->second;
}

LaurentQT ps_normalized(const QSymElem& x, int degree) {
    LaurentQT out;
    for (const auto& [deg, terms] : x.graded()) {
        if (deg != degree)
            throw validation_error("principal specialization requires a homogeneous element");
        for (const auto& [s, c] : terms)
            out += c * LaurentQT(QPoly::monomial(subset_sum(s)));
    }
    return out;
}

std::string QSymElem::latex() const {
    if (graded_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [deg, terms] : graded_)
        for (const auto& [s, c] : terms) {
            if (!first) os << " + ";
            first = false;
            os << "\\left(" << c.str() << "\\right) F_{\\{";
            auto xs = subset_to_list(s);
            for (size_t i = 0; i < xs.size(); ++i) {
                if (i) os << ",";
                os << xs[i];
            }
            os << "\\}," << deg << "}";
        }
    return os.str();
}

}  // namespace mcq
