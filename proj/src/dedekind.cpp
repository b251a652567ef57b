#include "idlat/dedekind.hpp"

#include <algorithm>
#include <map>

namespace idlat {

ValuationMatrix::ValuationMatrix(int n_ideals, int n_primes, std::vector<int> entries)
    : n_ideals_(n_ideals), n_primes_(n_primes), entries_(std::move(entries)) {
    if (n_ideals_ < 1) throw domain_error("ValuationMatrix: need at least one ideal");
    if (n_primes_ < 0) throw domain_error("ValuationMatrix: negative prime count");
    if (entries_.size() !=
        static_cast<std::size_t>(n_ideals_) * static_cast<std::size_t>(n_primes_)) {
        throw domain_error("ValuationMatrix: entry count mismatch");
    }
    for (int e : entries_) {
        if (e < 0) throw domain_error("ValuationMatrix: negative exponent");
    }
}

ValuationMatrix ValuationMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) throw domain_error("ValuationMatrix: no rows");
    const std::size_t p = rows.front().size();
    std::vector<int> entries;
    entries.reserve(rows.size() * p);
    for (const auto& row : rows) {
        if (row.size() != p) throw domain_error("ValuationMatrix: ragged rows");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return ValuationMatrix(static_cast<int>(rows.size()), static_cast<int>(p),
                           std::move(entries));
}

OrderedMultiset ValuationMatrix::column(int prime) const {
    std::vector<std::int64_t> vals;
    vals.reserve(static_cast<std::size_t>(n_ideals_));
    for (int i = 0; i < n_ideals_; ++i) vals.push_back(at(i, prime));
    return OrderedMultiset(std::move(vals));
}

namespace {

std::vector<int> subset_valuation(const ValuationMatrix& m, const IndexSubset& s, bool take_min) {
    if (s.max_member() > m.n_ideals()) {
        throw domain_error("subset valuation: member exceeds ideal count");
    }
    std::vector<int> row(static_cast<std::size_t>(m.n_primes()));
    for (int j = 0; j < m.n_primes(); ++j) {
        int v = m.at(s.members().front() - 1, j);
        for (int i : s) {
            const int e = m.at(i - 1, j);
            v = take_min ? std::min(v, e) : std::max(v, e);
        }
        row[static_cast<std::size_t>(j)] = v;
    }
    return row;
}

} // namespace

std::vector<int> gcd_valuation(const ValuationMatrix& m, const IndexSubset& s) {
    return subset_valuation(m, s, /*take_min=*/true);
}

std::vector<int> lcm_valuation(const ValuationMatrix& m, const IndexSubset& s) {
    return subset_valuation(m, s, /*take_min=*/false);
}

namespace {

/// Per column: the full-set extremum plus the even-k subset-extrema sums on
/// the left must equal the odd-k sums on the right. G contributes minima,
/// L maxima; ideal products add exponents, so multisets enter through sums.
bool check_identity(const ValuationMatrix& m, bool star) {
    const int n = m.n_ideals();
    for (int j = 0; j < m.n_primes(); ++j) {
        const OrderedMultiset col = m.column(j);
        // (*): G(n) on the left, L(k) elsewhere; (**): the dual.
        std::int64_t lhs = star ? lower_multiset(col, n).sum() : upper_multiset(col, n).sum();
        std::int64_t rhs = 0;
        for (int k = 2; k <= n; k += 2) {
            lhs += star ? upper_multiset(col, k).sum() : lower_multiset(col, k).sum();
        }
        for (int k = 1; k <= n; k += 2) {
            rhs += star ? upper_multiset(col, k).sum() : lower_multiset(col, k).sum();
        }
        if (lhs != rhs) return false;
    }
    return true;
}

} // namespace

bool check_star(const ValuationMatrix& m) { return check_identity(m, /*star=*/true); }

bool check_doublestar(const ValuationMatrix& m) { return check_identity(m, /*star=*/false); }

IntegerValuations integers_to_valuations(const std::vector<std::uint64_t>& values) {
    if (values.empty()) throw domain_error("integers_to_valuations: no values");
    std::vector<std::map<std::uint64_t, int>> factorizations;
    factorizations.reserve(values.size());
    std::map<std::uint64_t, int> prime_index;
    for (std::uint64_t v : values) {
        if (v == 0) throw domain_error("integers_to_valuations: zero ideal excluded");
        std::map<std::uint64_t, int> factors;
        std::uint64_t rest = v;
        for (std::uint64_t d = 2; d * d <= rest; d += (d == 2 ? 1 : 2)) {
            while (rest % d == 0) {
                ++factors[d];
                rest /= d;
            }
        }
        if (rest > 1) ++factors[rest];
        for (const auto& [p, e] : factors) prime_index.emplace(p, 0);
        factorizations.push_back(std::move(factors));
    }
    IntegerValuations out{
        {}, ValuationMatrix(static_cast<int>(values.size()), 0, {})};
    int next = 0;
    for (auto& [p, idx] : prime_index) {
        idx = next++;
        out.primes.push_back(p);
    }
    const int n_primes = next;
    std::vector<int> entries(values.size() * static_cast<std::size_t>(n_primes), 0);
    for (std::size_t i = 0; i < factorizations.size(); ++i) {
        for (const auto& [p, e] : factorizations[i]) {
            entries[i * static_cast<std::size_t>(n_primes) +
                    static_cast<std::size_t>(prime_index[p])] = e;
        }
    }
    out.matrix = ValuationMatrix(static_cast<int>(values.size()), n_primes, std::move(entries));
    return out;
}

} // namespace idlat
