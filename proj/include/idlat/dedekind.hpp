#pragma once

#include <cstdint>
#include <vector>

#include "idlat/combinatorics.hpp"

namespace idlat {

/// Valuation semantics for n ideals of a Dedekind domain over p primes:
/// entry (i, j) is the exponent of prime j in the factorization of ideal i.
/// Ideal product adds exponents, sum takes minima, intersection maxima.
class ValuationMatrix {
public:
    ValuationMatrix(int n_ideals, int n_primes, std::vector<int> entries);
    static ValuationMatrix from_rows(const std::vector<std::vector<int>>& rows);

    int n_ideals() const noexcept { return n_ideals_; }
    int n_primes() const noexcept { return n_primes_; }
    int at(int ideal, int prime) const {
        return entries_[static_cast<std::size_t>(ideal) * static_cast<std::size_t>(n_primes_) +
                        static_cast<std::size_t>(prime)];
    }
    OrderedMultiset column(int prime) const;

    bool operator==(const ValuationMatrix&) const = default;

private:
    int n_ideals_ = 0;
    int n_primes_ = 0;
    std::vector<int> entries_; // row-major, all >= 0
};

/// Exponent row of the sum of the ideals in s: componentwise min.
std::vector<int> gcd_valuation(const ValuationMatrix& m, const IndexSubset& s);
/// Exponent row of the intersection: componentwise max.
std::vector<int> lcm_valuation(const ValuationMatrix& m, const IndexSubset& s);

/// Verifies G(n) L(2) L(4) ... = L(1) L(3) ... in exponents, per prime:
/// both sides' exponent sums must agree for every column. True for every
/// matrix (Dedekind domains satisfy the equality); false flags a bug.
bool check_star(const ValuationMatrix& m);
/// Dual check, L(n) G(2) G(4) ... = G(1) G(3) ...
bool check_doublestar(const ValuationMatrix& m);

struct IntegerValuations {
    std::vector<std::uint64_t> primes; // sorted union of prime divisors
    ValuationMatrix matrix;
};

/// Factors positive integers (ideals of Z) into a valuation matrix by trial
/// division. Throws domain_error on zero (the zero ideal is excluded).
IntegerValuations integers_to_valuations(const std::vector<std::uint64_t>& values);

} // namespace idlat
