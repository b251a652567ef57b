#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "idlat/errors.hpp"

namespace idlat {

/// Exact binomial coefficient C(n, k). Returns 0 for k > n; throws
/// domain_error on negative arguments or uint64 overflow.
std::uint64_t binomial(int n, int k);

/// A nonempty subset of {1,...,n}, stored strictly increasing.
class IndexSubset {
public:
    IndexSubset() = default;
    explicit IndexSubset(std::vector<int> members);
    IndexSubset(std::initializer_list<int> members)
        : IndexSubset(std::vector<int>(members)) {}

    const std::vector<int>& members() const noexcept { return members_; }
    int size() const noexcept { return static_cast<int>(members_.size()); }
    int max_member() const noexcept { return members_.empty() ? 0 : members_.back(); }
    bool contains(int i) const;

    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    bool operator==(const IndexSubset&) const = default;
    auto operator<=>(const IndexSubset&) const = default;

private:
    std::vector<int> members_; // strictly increasing, all >= 1
};

/// All C(n,k) k-element subsets of {1,...,n} in lexicographic order.
/// Requires 1 <= k <= n.
std::vector<IndexSubset> k_subsets(int n, int k);

/// A multiset of integers, stored sorted ascending. Equality is multiset
/// equality (element counts).
class OrderedMultiset {
public:
    OrderedMultiset() = default;
    explicit OrderedMultiset(std::vector<std::int64_t> values);
    OrderedMultiset(std::initializer_list<std::int64_t> values)
        : OrderedMultiset(std::vector<std::int64_t>(values)) {}

    const std::vector<std::int64_t>& values() const noexcept { return values_; }
    int size() const noexcept { return static_cast<int>(values_.size()); }
    bool empty() const noexcept { return values_.empty(); }
    std::int64_t sum() const noexcept;

    /// Multiset join (disjoint union): counts add.
    static OrderedMultiset joined(const OrderedMultiset& a, const OrderedMultiset& b);

    bool operator==(const OrderedMultiset&) const = default;

private:
    std::vector<std::int64_t> values_; // ascending
};

/// Suprema of all k-subsets of positions: the multiset
/// [max(v_{i_1},...,v_{i_k}) : {i_1,...,i_k} in C({1..n}, k)].
/// Subsets range over positions, so repeated values contribute repeatedly.
/// Result size is exactly C(n, k). Requires 1 <= k <= |values|.
OrderedMultiset upper_multiset(const OrderedMultiset& values, int k);

/// Infima of all k-subsets of positions; dual of upper_multiset.
OrderedMultiset lower_multiset(const OrderedMultiset& values, int k);

struct MaxMinCheck {
    bool first_holds;  // sup_n n lower evens vs lower odds
    bool second_holds; // inf_n n upper evens vs upper odds
};

/// Checks both max-min multiset identities over a totally ordered value set:
///   upper_n u lower_2 u ... u lower_{2 floor(n/2)} = lower_1 u lower_3 u ...
///   lower_n u upper_2 u ... u upper_{2 floor(n/2)} = upper_1 u upper_3 u ...
/// Both are theorems for every input; a false return exposes an
/// implementation bug, which the tests exploit. Requires |values| >= 1.
MaxMinCheck check_maxmin_identities(const OrderedMultiset& values);

} // namespace idlat
