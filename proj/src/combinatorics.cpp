#include "idlat/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace idlat {

std::uint64_t binomial(int n, int k) {
    if (n < 0 || k < 0) throw domain_error("binomial: negative argument");
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > std::numeric_limits<std::uint64_t>::max()) {
            throw domain_error("binomial: result exceeds 64 bits");
        }
    }
    return static_cast<std::uint64_t>(r);
}

IndexSubset::IndexSubset(std::vector<int> members) : members_(std::move(members)) {
    if (members_.empty()) throw domain_error("IndexSubset: empty subset");
    std::sort(members_.begin(), members_.end());
    if (members_.front() < 1) throw domain_error("IndexSubset: members must be >= 1");
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
        throw domain_error("IndexSubset: duplicate member");
    }
}

bool IndexSubset::contains(int i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
}

std::vector<IndexSubset> k_subsets(int n, int k) {
    if (k < 1 || k > n) throw domain_error("k_subsets: need 1 <= k <= n");
    std::vector<IndexSubset> out;
    out.reserve(static_cast<std::size_t>(binomial(n, k)));
    std::vector<int> cur(static_cast<std::size_t>(k));
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        out.push_back(IndexSubset(cur));
        // next combination in lexicographic order
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

OrderedMultiset::OrderedMultiset(std::vector<std::int64_t> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
}

std::int64_t OrderedMultiset::sum() const noexcept {
    return std::accumulate(values_.begin(), values_.end(), std::int64_t{0});
}

OrderedMultiset OrderedMultiset::joined(const OrderedMultiset& a, const OrderedMultiset& b) {
    std::vector<std::int64_t> merged;
    merged.reserve(a.values_.size() + b.values_.size());
    std::merge(a.values_.begin(), a.values_.end(), b.values_.begin(), b.values_.end(),
               std::back_inserter(merged));
    OrderedMultiset out;
    out.values_ = std::move(merged);
    return out;
}

namespace {

enum class Pick { kMin, kMax };

OrderedMultiset subset_extrema(const OrderedMultiset& values, int k, Pick pick) {
    const int n = values.size();
    if (k < 1 || k > n) throw domain_error("subset extrema: need 1 <= k <= |values|");
    const auto& v = values.values();
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(binomial(n, k)));
    for (const IndexSubset& s : k_subsets(n, k)) {
        std::int64_t e = v[static_cast<std::size_t>(s.members().front() - 1)];
        for (int pos : s.members()) {
            const std::int64_t x = v[static_cast<std::size_t>(pos - 1)];
            e = pick == Pick::kMax ? std::max(e, x) : std::min(e, x);
        }
        out.push_back(e);
    }
    return OrderedMultiset(std::move(out));
}

} // namespace

OrderedMultiset upper_multiset(const OrderedMultiset& values, int k) {
    return subset_extrema(values, k, Pick::kMax);
}

OrderedMultiset lower_multiset(const OrderedMultiset& values, int k) {
    return subset_extrema(values, k, Pick::kMin);
}

MaxMinCheck check_maxmin_identities(const OrderedMultiset& values) {
    const int n = values.size();
    if (n < 1) throw domain_error("check_maxmin_identities: empty multiset");

    OrderedMultiset lhs1 = upper_multiset(values, n);
    OrderedMultiset lhs2 = lower_multiset(values, n);
    OrderedMultiset rhs1, rhs2;
    for (int k = 2; k <= n; k += 2) {
        lhs1 = OrderedMultiset::joined(lhs1, lower_multiset(values, k));
        lhs2 = OrderedMultiset::joined(lhs2, upper_multiset(values, k));
    }
    for (int k = 1; k <= n; k += 2) {
        rhs1 = OrderedMultiset::joined(rhs1, lower_multiset(values, k));
        rhs2 = OrderedMultiset::joined(rhs2, upper_multiset(values, k));
    }
    return MaxMinCheck{lhs1 == rhs1, lhs2 == rhs2};
}

} // namespace idlat
