#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "idlat/combinatorics.hpp"
#include "idlat/monomial_set.hpp"

namespace idlat {

/// The symbolic instance of the inclusion L(n) G(2)G(4)... in G(1)G(3)...
/// for n ideals treated as variables: the left product expands over all
/// even-size subset sums, the right over all odd-size subset sums.
struct DaggerInstance {
    int n = 0;
    std::vector<LinearFormFactor> even_factors; // k = 2, 4, ..., 2*floor(n/2)
    std::vector<LinearFormFactor> odd_factors;  // k = 1, 3, ..., 2*ceil(n/2)-1
};

/// Factor lists in (subset size, lexicographic) order. Counts are
/// 2^(n-1) - 1 even factors and 2^(n-1) odd factors. Requires n >= 1.
DaggerInstance build_instance(int n);

struct DegreeAudit {
    int p_degree = 0;  // 2^(n-1) - 1
    int q0_degree = 0; // 2^(n-1)
};

/// Total degrees of the two expansions, computed from the factor lists and
/// cross-checked against the binomial parity sums.
DegreeAudit degree_audit(const DaggerInstance& instance);

enum class MembershipMode {
    kShiftIntoQ0,  // for m in P, test the n shifts m + e_i against Q0
    kMaterializeQ, // materialize Q = shifted_down_set(Q0), test m in Q
};

enum class StreamPolicy {
    kAutomatic, // stream the final even-side multiplication for n >= 7
    kAlways,
    kNever,
};

struct VerifyConfig {
    std::size_t max_counterexamples = 100;
    std::uint64_t memory_cap_bytes = MemoryBudget::kDefaultCapBytes;
    int worker_count = 1;
    MembershipMode mode = MembershipMode::kShiftIntoQ0;
    StreamPolicy stream = StreamPolicy::kAutomatic;
};

struct DaggerTiming {
    double expand_even_s = 0;
    double expand_odd_s = 0;
    double shift_s = 0;
    double membership_s = 0;
    double total_s = 0;
};

struct DaggerReport {
    int n = 0;
    /// True is a proof of the inclusion for every commutative ring. False is
    /// inconclusive for the conjecture, never a refutation: the symbolic
    /// criterion is sufficient, not known to be necessary.
    bool holds = false;
    std::string status;        // "ok" or "resource_abort"
    std::string phase_reached; // expand_even | expand_odd | shift | membership | done
    std::string mode;          // "shift" or "materialize"
    bool p_materialized = false;
    bool q_materialized = false;
    std::uint64_t p_size = 0;             // exact |P| when materialized, else 0
    std::uint64_t p_penultimate_size = 0; // streamed runs: |P'| before the last factor
    std::uint64_t p_checked = 0;          // membership probes performed
    std::uint64_t q0_size = 0;
    std::uint64_t q_size = 0; // only when q_materialized
    int p_degree = 0;
    int q0_degree = 0;
    /// Failed membership probes. Exact count of missing monomials when P is
    /// materialized; an upper estimate when streamed (a monomial is probed
    /// once per factorization across the held-out factor).
    std::uint64_t missing_count = 0;
    std::vector<ExponentVector> counterexamples; // lex-smallest misses, capped
    std::uint64_t peak_elements = 0;
    std::uint64_t peak_bytes_estimate = 0;
    std::uint64_t memory_cap_bytes = 0;
    std::string abort_reason; // empty unless status == "resource_abort"
    DaggerTiming timing;
};

/// Runs the symbolic membership criterion for n ideals: every monomial m of
/// the even-side expansion P must admit an i with m + e_i in the odd-side
/// expansion Q0. Verdict and sizes are identical for any worker_count.
/// Resource exhaustion returns a partial report with status
/// "resource_abort" rather than throwing. Throws domain_error for n < 1.
DaggerReport verify_dagger(int n, const VerifyConfig& config = {});

} // namespace idlat
