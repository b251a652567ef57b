#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "idlat/budget.hpp"
#include "idlat/combinatorics.hpp"
#include "idlat/exponent_vector.hpp"

namespace idlat {

/// One factor of a G(k) product: a sum of variables, represented by the set
/// of 1-based variable indices it contains.
struct LinearFormFactor {
    IndexSubset support;

    bool operator==(const LinearFormFactor&) const = default;
};

/// A deduplicated finite set of exponent vectors of one common total degree:
/// the support of an expanded product, coefficients discarded.
///
/// Elements are packed into 64-bit words, one fixed-width field per
/// coordinate (64/n_vars bits, at most 32). Packing admits every degree the
/// engine targets (degree < 2^(64/n_vars)); construction throws domain_error
/// beyond that. Codes are kept sorted ascending, which for this layout is
/// lexicographic order on coordinates.
class MonomialSet {
public:
    /// Empty set of the given shape.
    MonomialSet(int n_vars, int degree);
    /// Deduplicating constructor; every element must have the given n_vars
    /// and one common total degree.
    MonomialSet(int n_vars, std::vector<ExponentVector> elements);

    /// Adopts already-sorted, deduplicated packed codes (engine output).
    static MonomialSet from_sorted_codes(int n_vars, int degree,
                                         std::vector<std::uint64_t> codes);

    int n_vars() const noexcept { return n_vars_; }
    int degree() const noexcept { return degree_; }
    std::size_t size() const noexcept { return codes_.size(); }
    bool empty() const noexcept { return codes_.empty(); }

    bool contains(const ExponentVector& m) const;
    std::vector<ExponentVector> elements() const;

    // Packed access for the expansion engine and the verifier.
    int coord_bits() const noexcept { return bits_; }
    std::span<const std::uint64_t> codes() const noexcept { return codes_; }
    std::vector<std::uint64_t>&& take_codes() && noexcept { return std::move(codes_); }

    static int coord_bits_for(int n_vars);
    static std::uint64_t encode(const ExponentVector& m, int bits);
    static ExponentVector decode(std::uint64_t code, int n_vars, int bits);
    static int decode_degree(std::uint64_t code, int n_vars, int bits) noexcept;
    static std::uint64_t unit_code(int n_vars, int index, int bits);

    /// Every stored code decodes to the declared total degree; used by the
    /// verifier as a hard homogeneity audit.
    bool is_homogeneous() const noexcept;

    bool operator==(const MonomialSet&) const = default;

private:
    int n_vars_ = 0;
    int degree_ = 0;
    int bits_ = 0;
    std::vector<std::uint64_t> codes_; // sorted ascending, unique
};

struct ExpandConfig {
    std::uint64_t memory_cap_bytes = MemoryBudget::kDefaultCapBytes;
    /// Shared accounting for a larger computation; overrides memory_cap_bytes
    /// when set.
    MemoryBudget* budget = nullptr;
};

/// Degree-1 monomial set of a linear form: {e_i : i in support}.
MonomialSet linear_form(const IndexSubset& support, int n_vars);

/// Support of the expanded product of the factors, deduplicated:
///   { f_1 + ... + f_m : f_j in factors[j] }.
/// The empty factor list yields {0}, the empty product. Left-fold with a
/// deduplicated intermediate after each multiplication; factors with fewer
/// terms multiply first. Throws domain_error on n_vars mismatch and
/// resource_error past the memory cap.
MonomialSet expand_product(int n_vars, std::span<const MonomialSet> factors,
                           const ExpandConfig& config = {});

/// { q - e_i : q in q0, i in 1..n_vars, q_i >= 1 }, deduplicated. Coordinates
/// that would go negative are skipped (x_i does not divide the monomial).
MonomialSet shifted_down_set(const MonomialSet& q0, const ExpandConfig& config = {});

struct SubsetWitness {
    bool holds = false;
    std::uint64_t missing_count = 0;
    std::vector<ExponentVector> counterexamples; // first misses in lex order, capped
};

/// Is p a subset of q? Counterexamples list the elements of p missing from q,
/// capped at max_counterexamples; missing_count is the exact total.
SubsetWitness is_subset_with_witness(const MonomialSet& p, const MonomialSet& q,
                                     std::size_t max_counterexamples = 100);

} // namespace idlat
