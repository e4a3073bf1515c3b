#include <algorithm>
#include <cstdlib>

#include "mcq/permstat.hpp"

namespace mcq {

namespace {

// MCQ_MAX_N raises (or lowers) every enumeration guard uniformly.
int env_guard(int def) {
    if (const char* s = std::getenv("MCQ_MAX_N")) {
        int v = std::atoi(s);
        if (v > 0) return std::max(def, v);
    }
    return def;
}

}  // namespace

int perm_guard() { return env_guard(12); }
int decorated_guard() { return env_guard(10); }

}  // namespace mcq
