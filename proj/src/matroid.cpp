#include "mcq/matroid.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mcq/errors.hpp"

namespace mcq {

int flats_guard() { return 5000; }

std::string flat_str(Flat f) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int i = 0; f >> i; ++i)
        if (f & (Flat(1) << i)) {
            if (!first) os << ",";
            first = false;
            os << i + 1;
        }
    os << "}";
    return os.str();
}

MatroidFlats::MatroidFlats(int ground, std::vector<Flat> flats) : n_(ground) {
    if (ground < 1 || ground > 30) throw validation_error("ground set size must be in [1,30]");
    if (static_cast<int>(flats.size()) > flats_guard())
        throw resource_error("flat count exceeds guard (" + std::to_string(flats.size()) + " > " +
                             std::to_string(flats_guard()) + ")");
    std::sort(flats.begin(), flats.end());
    if (std::adjacent_find(flats.begin(), flats.end()) != flats.end())
        throw validation_error("duplicate flat in input");
    for (Flat f : flats)
        if (f & ~full()) throw validation_error("flat " + flat_str(f) + " not inside the ground set");

    auto has = [&](Flat f) { return std::binary_search(flats.begin(), flats.end(), f); };
    if (!has(full())) throw validation_error("axiom F1 violated: ground set is not a flat");
    if (!has(0))
        throw validation_error("axiom F1 violated: empty set is not a flat (loops present?)");

    // F2: closed under intersection
    for (Flat a : flats)
        for (Flat b : flats)
            if (!has(a & b))
                throw validation_error("axiom F2 violated: " + flat_str(a) + " \xE2\x88\xA9 " +
                                       flat_str(b) + " = " + flat_str(a & b) + " is not a flat");

    // F3: the covers of each flat partition the remaining elements
    for (Flat f : flats) {
        if (f == full()) continue;
        // covers of f: minimal flats strictly containing f
        std::vector<Flat> covers;
        for (Flat g : flats) {
            if (g == f || (g & f) != f) continue;
            bool minimal = true;
            for (Flat h : flats)
                if (h != f && h != g && (h & f) == f && (g & h) == h) {
                    minimal = false;
                    break;
                }
            if (minimal) covers.push_back(g);
        }
        for (int e = 0; e < n_; ++e) {
            if (f & (Flat(1) << e)) continue;
            int hits = 0;
            for (Flat g : covers)
                if (g & (Flat(1) << e)) ++hits;
            if (hits != 1)
                throw validation_error("axiom F3 violated: element " + std::to_string(e + 1) +
                                       " outside flat " + flat_str(f) + " lies in " +
                                       std::to_string(hits) + " covers");
        }
    }

    // gradedness: every maximal proper subflat of f must carry the same rank
    std::sort(flats.begin(), flats.end(),
              [](Flat a, Flat b) { return std::popcount(a) != std::popcount(b)
                                              ? std::popcount(a) < std::popcount(b)
                                              : a < b; });
    rank_map_[0] = 0;
    for (Flat f : flats) {
        if (f == 0) continue;
        std::vector<Flat> maximal;
        for (Flat g : flats) {
            if (g == f || (g & f) != g) continue;
            bool is_max = true;
            for (Flat h : flats)
                if (h != g && h != f && (h & f) == h && (g & h) == g) {
                    is_max = false;
                    break;
                }
            if (is_max) maximal.push_back(g);
        }
        int r = -1;
        for (Flat g : maximal) {
            int rg = rank_map_.at(g);  // subflats precede f in popcount order
            if (r == -1) r = rg;
            if (rg != r)
                throw validation_error("lattice of flats is not graded: flat " + flat_str(f) +
                                       " has maximal subflats of different ranks");
        }
        rank_map_[f] = r + 1;
    }
    rank_ = rank_map_.at(full());
    flats_ = std::move(flats);
}

int MatroidFlats::rank_of(Flat f) const {
    auto it = rank_map_.find(f);
    if (it == rank_map_.end()) throw validation_error(flat_str(f) + " is not a flat");
    return it->second;
}

std::vector<Flat> MatroidFlats::above(Flat f) const {
    std::vector<Flat> out;
    for (Flat g : flats_)
        if (g != f && (g & f) == f) out.push_back(g);
    return out;
}

Flat MatroidFlats::apply_perm(Flat f, const std::vector<int>& g) {
    Flat out = 0;
    for (int i = 0; f >> i; ++i)
        if (f & (Flat(1) << i)) out |= Flat(1) << (g[i] - 1);
    return out;
}

bool MatroidFlats::is_automorphism(const std::vector<int>& g, Flat* bad) const {
    if (static_cast<int>(g.size()) != n_) return false;
    for (Flat f : flats_)
        if (!is_flat(apply_perm(f, g))) {
            if (bad) *bad = f;
            return false;
        }
    return true;
}

MatroidFlats uniform_matroid(int r, int n) {
    if (r < 1 || r > n) throw std::invalid_argument("uniform matroid needs 1 <= r <= n");
    std::vector<Flat> flats;
    Flat full = (Flat(1) << n) - 1;
    for (Flat f = 0; f < full; ++f)
        if (std::popcount(f) <= r - 1) flats.push_back(f);
    flats.push_back(full);
    return MatroidFlats(n, std::move(flats));
}

MatroidFlats from_flats_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("flats file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("ground") || !j.contains("flats"))
        throw validation_error("flats file must be {\"ground\": n, \"flats\": [[...]...]}");
    if (!j["ground"].is_number_integer() || !j["flats"].is_array())
        throw validation_error("flats file has wrong field types");
    int n = j["ground"].get<int>();
    if (n < 1 || n > 30) throw validation_error("ground set size must be in [1,30]");
    std::vector<Flat> flats;
    for (const auto& fj : j["flats"]) {
        if (!fj.is_array()) throw validation_error("each flat must be an array of integers");
        Flat f = 0;
        int prev = 0;
        for (const auto& ej : fj) {
            if (!ej.is_number_integer()) throw validation_error("flat elements must be integers");
            int e = ej.get<int>();
            if (e < 1 || e > n)
                throw validation_error("flat element " + std::to_string(e) + " outside [1," +
                                       std::to_string(n) + "]");
            if (e <= prev) throw validation_error("flat elements must be strictly increasing");
            prev = e;
            f |= Flat(1) << (e - 1);
        }
        flats.push_back(f);
    }
    return MatroidFlats(n, std::move(flats));
}

MatroidFlats from_flats_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open flats file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_flats_json(ss.str());
}

std::vector<int> parse_cycles(const std::string& text, int n) {
    std::vector<int> g(n);
    for (int i = 0; i < n; ++i) g[i] = i + 1;
    size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(') throw validation_error("cycle notation must look like \"(1 2)(3 4)\"");
        ++pos;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) throw validation_error("malformed cycle notation");
            int v = std::stoi(text.substr(start, pos - start));
            if (v < 1 || v > n)
                throw validation_error("cycle entry " + std::to_string(v) + " outside [1," +
                                       std::to_string(n) + "]");
            cyc.push_back(v);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') ++pos;
        }
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
            if (g[from - 1] != from) throw validation_error("element repeated across cycles");
            g[from - 1] = to;
        }
        skip_ws();
    }
    return g;
}

}  // namespace mcq
