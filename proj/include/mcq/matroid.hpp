#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mcq {

/// Subsets of the ground set [n] as bitmasks (element i is bit i-1).
using Flat = uint32_t;

int flats_guard();  // default 5000, MCQ_MAX_N does not raise this one

/// A loopless matroid presented by its lattice of flats. Validation enforces
/// the flat axioms and gradedness; rank is computed from chain lengths.
class MatroidFlats {
  public:
    /// Validates: full set and empty set present, intersection-closed, unique
    /// cover containing each outside element, graded. Throws validation_error
    /// naming the violated axiom and a witness.
    MatroidFlats(int ground, std::vector<Flat> flats);

    int ground() const { return n_; }
    int rank() const { return rank_; }
    Flat full() const { return n_ >= 1 ? (Flat(1) << n_) - 1 : 0; }
    const std::vector<Flat>& flats() const { return flats_; }  // sorted by rank, then value
    int rank_of(Flat f) const;
    bool is_flat(Flat f) const { return rank_map_.count(f) != 0; }
    /// Flats strictly containing f, in enumeration order.
    std::vector<Flat> above(Flat f) const;

    /// Image of a flat under a ground-set permutation (1-based images).
    static Flat apply_perm(Flat f, const std::vector<int>& g);
    /// True iff g (a permutation of [n] in one-line form) maps flats to flats.
    bool is_automorphism(const std::vector<int>& g, Flat* bad = nullptr) const;

  private:
    int n_ = 0;
    int rank_ = 0;
    std::vector<Flat> flats_;
    std::map<Flat, int> rank_map_;
};

MatroidFlats uniform_matroid(int r, int n);
MatroidFlats from_flats_json(const std::string& text);
MatroidFlats from_flats_file(const std::string& path);

std::string flat_str(Flat f);

/// Parse cycle notation like "(1 2)(3 4)" into a one-line permutation of [n].
std::vector<int> parse_cycles(const std::string& text, int n);

}  // namespace mcq
