#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "idlat/monomial_ideal.hpp"

namespace idlat {

/// Outcome of one polynomial-ring counterexample: the two sides, how they
/// relate, and a monomial witnessing that the inclusion is strict.
struct ExampleOutcome {
    int index = 0;             // 1..4
    std::string description;
    std::string lhs_text;      // computed left side, canonical notation
    std::string rhs_text;
    std::string relation;      // "proper_subset" (lhs < rhs) or "proper_superset"
    bool matches_stated_form = false; // computed sides equal the stated closed forms
    bool strict_inclusion = false;
    ExponentVector witness;    // in the larger side, not in the smaller
    std::string witness_text;
    bool ok = false;
};

struct Section4Report {
    std::vector<ExampleOutcome> examples;
    bool all_ok = false;
};

/// Rebuilds the four polynomial-ring examples where the lattice equalities
/// fail, checks each stated inclusion and its strictness direction, and
/// reports a witness monomial for the gap. The witness is searched by
/// (total degree ascending, lexicographically descending) over the
/// degree-bounded box of the larger side's generators; example 3's witness
/// comes out as x^2*y*z.
Section4Report run_section4_examples();

/// Searches the first monomial in `larger` but not in `smaller`, in
/// (degree ascending, lex descending) order over coordinates bounded by the
/// larger side's generators. Requires that the inclusion is strict.
ExponentVector strictness_witness(const MonomialIdeal& larger, const MonomialIdeal& smaller);

/// Exhaustive check of the lattice equalities over the four ideals of the
/// ring Z2 x Z2, for every ideal tuple of each length up to max_n.
struct Z2Z2Report {
    int max_n = 0;
    std::uint64_t tuples_checked = 0;
    bool all_hold = false;
};
Z2Z2Report check_z2z2_identities(int max_n = 4);

} // namespace idlat
