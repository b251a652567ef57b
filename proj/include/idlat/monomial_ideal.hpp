#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idlat/exponent_vector.hpp"

namespace idlat {

/// A finitely generated monomial ideal of a polynomial ring, held as its
/// unique minimal generating set (no generator divides another). The zero
/// ideal is the empty generator set; the unit ideal is generated by the
/// constant monomial 1.
class MonomialIdeal {
public:
    explicit MonomialIdeal(int n_vars) : n_vars_(validated(n_vars)) {}
    /// Minimalizes: deduplicates and drops generators divisible by another.
    MonomialIdeal(int n_vars, std::vector<ExponentVector> generators);

    static MonomialIdeal zero(int n_vars) { return MonomialIdeal(n_vars); }
    static MonomialIdeal unit(int n_vars) {
        return MonomialIdeal(n_vars, {ExponentVector::zeros(n_vars)});
    }

    int n_vars() const noexcept { return n_vars_; }
    const std::vector<ExponentVector>& generators() const noexcept { return generators_; }
    bool is_zero() const noexcept { return generators_.empty(); }
    bool is_unit() const noexcept {
        return generators_.size() == 1 && generators_.front().degree() == 0;
    }

    bool operator==(const MonomialIdeal&) const = default;

private:
    static int validated(int n_vars);

    int n_vars_ = 0;
    std::vector<ExponentVector> generators_; // minimal, sorted lexicographically
};

/// a + b: generated by the union of the generators (the GCD of the lattice).
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);

/// a * b: generated by pairwise exponent sums.
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);

/// a n b: generated by pairwise componentwise maxima (the LCM of the lattice).
MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// b subset of a: every generator of b divisible by some generator of a.
bool ideal_contains(const MonomialIdeal& a, const MonomialIdeal& b);

/// m in a: m divisible by some generator.
bool monomial_in_ideal(const ExponentVector& m, const MonomialIdeal& a);

/// G(k): product over all k-subsets of the subset sum. Requires 1 <= k <= n.
MonomialIdeal big_G(int k, std::span<const MonomialIdeal> ideals);

/// L(k): product over all k-subsets of the subset intersection.
MonomialIdeal big_L(int k, std::span<const MonomialIdeal> ideals);

/// Canonical textual form: "<x^2*y, x*y^2>", zero ideal "<>", unit "<1>".
/// Variables print as x,y,z (n <= 3), a..f (n <= 6), else x1..xn.
std::string to_string(const MonomialIdeal& ideal);
std::string monomial_to_string(const ExponentVector& m, int n_vars);

/// Parses the notation above; accepts all three variable schemes
/// (x1..xn, a..f, x/y/z) in any input. Throws domain_error on syntax errors
/// or variables outside n_vars.
MonomialIdeal parse_ideal(std::string_view text, int n_vars);
ExponentVector parse_monomial(std::string_view text, int n_vars);

/// Smallest n_vars that can host every variable mentioned in the text.
int infer_n_vars(std::string_view text);

} // namespace idlat
