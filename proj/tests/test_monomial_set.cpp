#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <vector>

#include "idlat/monomial_set.hpp"

using idlat::ExpandConfig;
using idlat::expand_product;
using idlat::ExponentVector;
using idlat::IndexSubset;
using idlat::is_subset_with_witness;
using idlat::linear_form;
using idlat::MonomialSet;
using idlat::shifted_down_set;

namespace {

// Independent oracle: expand by picking one term from every factor with
// nested recursion, collecting coordinate sums in a tree set.
void naive_pick(const std::vector<std::vector<std::vector<int>>>& factors, std::size_t level,
                std::vector<int>& acc, std::set<std::vector<int>>& out) {
    if (level == factors.size()) {
        out.insert(acc);
        return;
    }
    for (const auto& term : factors[level]) {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += term[i];
        naive_pick(factors, level + 1, acc, out);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] -= term[i];
    }
}

std::set<std::vector<int>> naive_expand(const std::vector<std::vector<std::vector<int>>>& factors,
                                        int n_vars) {
    std::set<std::vector<int>> out;
    std::vector<int> acc(static_cast<std::size_t>(n_vars), 0);
    naive_pick(factors, 0, acc, out);
    return out;
}

std::uint64_t pascal_binomial(int n, int k) {
    std::vector<std::vector<std::uint64_t>> p(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
        p[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i + 1), 1);
        for (int j = 1; j < i; ++j) {
            p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                p[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                p[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
        }
    }
    return k <= n ? p[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] : 0;
}

} // namespace

TEST_CASE("linear_form builds unit-vector sets") {
    const MonomialSet xy = linear_form(IndexSubset{1, 2}, 2);
    CHECK(xy.elements() == std::vector<ExponentVector>{{0, 1}, {1, 0}});
    CHECK(xy.degree() == 1);

    const MonomialSet z = linear_form(IndexSubset{3}, 3);
    CHECK(z.elements() == std::vector<ExponentVector>{{0, 0, 1}});

    const MonomialSet all6 = linear_form(IndexSubset{1, 2, 3, 4, 5, 6}, 6);
    CHECK(all6.size() == 6);
    for (const auto& e : all6.elements()) CHECK(e.degree() == 1);

    CHECK_THROWS_AS(linear_form(IndexSubset{4}, 3), idlat::domain_error);
}

TEST_CASE("expand_product: empty product is {1}") {
    const MonomialSet one = expand_product(2, {});
    CHECK(one.degree() == 0);
    CHECK(one.elements() == std::vector<ExponentVector>{{0, 0}});
}

TEST_CASE("expand_product: (x+y)^2 support") {
    const std::vector<MonomialSet> factors = {linear_form(IndexSubset{1, 2}, 2),
                                              linear_form(IndexSubset{1, 2}, 2)};
    const MonomialSet sq = expand_product(2, factors);
    CHECK(sq.elements() == std::vector<ExponentVector>{{0, 2}, {1, 1}, {2, 0}});
}

TEST_CASE("expand_product: n_vars mismatch") {
    const std::vector<MonomialSet> bad = {linear_form(IndexSubset{1}, 2),
                                          linear_form(IndexSubset{1}, 3)};
    CHECK_THROWS_AS(expand_product(2, bad), idlat::domain_error);
}

TEST_CASE("even-side factors of six ideals expand homogeneously") {
    // degree = C(6,2) + C(6,4) + C(6,6), summed independently from bitmasks
    int expected_degree = 0;
    for (unsigned mask = 1; mask < 64; ++mask) {
        const int k = std::popcount(mask);
        if (k >= 2 && k % 2 == 0) ++expected_degree;
    }
    CHECK(expected_degree == 31);

    std::vector<MonomialSet> factors;
    for (unsigned mask = 1; mask < 64; ++mask) {
        const int k = std::popcount(mask);
        if (k < 2 || k % 2 != 0) continue;
        std::vector<int> members;
        for (int i = 0; i < 6; ++i) {
            if (mask >> i & 1u) members.push_back(i + 1);
        }
        factors.push_back(linear_form(IndexSubset(std::move(members)), 6));
    }
    const MonomialSet p = expand_product(6, factors);
    CHECK(p.degree() == expected_degree);
    CHECK(p.is_homogeneous());
    CHECK(p.size() <= pascal_binomial(31 + 5, 5));
}

TEST_CASE("shifted_down_set examples") {
    CHECK(shifted_down_set(MonomialSet(2, {{1, 1}})).elements() ==
          std::vector<ExponentVector>{{0, 1}, {1, 0}});
    CHECK(shifted_down_set(MonomialSet(2, {{2, 0}})).elements() ==
          std::vector<ExponentVector>{{1, 0}});
    CHECK(shifted_down_set(MonomialSet(2, {{0, 0}})).empty());
}

TEST_CASE("is_subset_with_witness") {
    const MonomialSet p(2, {{1, 0}, {0, 1}});
    const MonomialSet q(2, {{1, 0}, {0, 1}});
    const auto equal = is_subset_with_witness(p, q);
    CHECK(equal.holds);
    CHECK(equal.counterexamples.empty());

    const auto miss = is_subset_with_witness(MonomialSet(2, {{1, 1}}), MonomialSet(2, {{1, 0}}));
    CHECK_FALSE(miss.holds);
    CHECK(miss.missing_count == 1);
    CHECK(miss.counterexamples == std::vector<ExponentVector>{{1, 1}});
}

TEST_CASE("is_subset_with_witness caps counterexamples deterministically") {
    std::vector<ExponentVector> many;
    for (int i = 0; i <= 12; ++i) many.push_back({i, 12 - i});
    const MonomialSet p(2, std::move(many));
    const MonomialSet q(2, 12); // empty
    const auto w = is_subset_with_witness(p, q, 5);
    CHECK_FALSE(w.holds);
    CHECK(w.missing_count == 13);
    REQUIRE(w.counterexamples.size() == 5);
    // lex-smallest first
    CHECK(w.counterexamples.front() == ExponentVector{0, 12});
    CHECK(w.counterexamples.back() == ExponentVector{4, 8});
}

TEST_CASE("expand_product matches the naive oracle on 200 seeded instances") {
    std::mt19937_64 rng(987654321);
    for (int trial = 0; trial < 200; ++trial) {
        const int n_vars = 1 + static_cast<int>(rng() % 3);
        const int n_factors = static_cast<int>(rng() % 5); // 0..4
        std::vector<std::vector<std::vector<int>>> raw;
        std::vector<MonomialSet> factors;
        for (int f = 0; f < n_factors; ++f) {
            const int degree = static_cast<int>(rng() % 3);
            const int distinct = static_cast<int>(
                std::min<std::uint64_t>(3, pascal_binomial(degree + n_vars - 1, n_vars - 1)));
            const int terms = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(distinct));
            std::set<std::vector<int>> termset;
            while (static_cast<int>(termset.size()) < terms) {
                std::vector<int> t(static_cast<std::size_t>(n_vars), 0);
                for (int d = 0; d < degree; ++d) ++t[rng() % static_cast<std::uint64_t>(n_vars)];
                termset.insert(std::move(t));
            }
            std::vector<std::vector<int>> termlist(termset.begin(), termset.end());
            std::vector<ExponentVector> elems;
            for (const auto& t : termlist) elems.push_back(ExponentVector{std::vector<int>(t)});
            raw.push_back(std::move(termlist));
            factors.push_back(MonomialSet(n_vars, std::move(elems)));
        }
        const MonomialSet got = expand_product(n_vars, factors);
        const auto expected = naive_expand(raw, n_vars);
        REQUIRE(got.size() == expected.size());
        for (const auto& e : got.elements()) {
            REQUIRE(expected.count(e.coords()) == 1);
        }
    }
}

TEST_CASE("expand_product is order-independent") {
    std::mt19937_64 rng(5150);
    std::vector<MonomialSet> factors = {
        linear_form(IndexSubset{1, 2}, 3),   linear_form(IndexSubset{2, 3}, 3),
        linear_form(IndexSubset{1, 3}, 3),   linear_form(IndexSubset{1, 2, 3}, 3),
        MonomialSet(3, {{2, 0, 0}, {0, 1, 1}}),
    };
    const MonomialSet reference = expand_product(3, factors);
    for (int shuffle = 0; shuffle < 10; ++shuffle) {
        std::shuffle(factors.begin(), factors.end(), rng);
        CHECK(expand_product(3, factors) == reference);
    }
}

TEST_CASE("homogeneity: output degree is the sum of factor degrees") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 50; ++trial) {
        const int n_vars = 1 + static_cast<int>(rng() % 4);
        std::vector<MonomialSet> factors;
        int degree_sum = 0;
        const int n_factors = 1 + static_cast<int>(rng() % 4);
        for (int f = 0; f < n_factors; ++f) {
            const int degree = static_cast<int>(rng() % 4);
            const int distinct = static_cast<int>(
                std::min<std::uint64_t>(3, pascal_binomial(degree + n_vars - 1, n_vars - 1)));
            const int terms = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(distinct));
            std::set<std::vector<int>> termset;
            while (static_cast<int>(termset.size()) < terms) {
                std::vector<int> t(static_cast<std::size_t>(n_vars), 0);
                for (int d = 0; d < degree; ++d) ++t[rng() % static_cast<std::uint64_t>(n_vars)];
                termset.insert(std::move(t));
            }
            std::vector<ExponentVector> elems;
            for (const auto& t : termset) elems.push_back(ExponentVector{std::vector<int>(t)});
            factors.push_back(MonomialSet(n_vars, std::move(elems)));
            degree_sum += degree;
        }
        const MonomialSet out = expand_product(n_vars, factors);
        CHECK(out.degree() == degree_sum);
        CHECK(out.is_homogeneous());
        const std::uint64_t bound =
            pascal_binomial(degree_sum + n_vars - 1, n_vars - 1);
        CHECK(out.size() <= bound);
    }
}

TEST_CASE("MonomialSet rejects mixed degrees and oversized coordinates") {
    CHECK_THROWS_AS(MonomialSet(2, {{1, 0}, {1, 1}}), idlat::domain_error);
    CHECK_THROWS_AS(MonomialSet(8, {ExponentVector{std::vector<int>{256, 0, 0, 0, 0, 0, 0, 0}}}),
                    idlat::domain_error);
    CHECK_THROWS_AS(MonomialSet(8, 256), idlat::domain_error);
}

TEST_CASE("expansion past the memory cap reports a structured resource error") {
    std::vector<MonomialSet> factors;
    for (int i = 0; i < 12; ++i) factors.push_back(linear_form(IndexSubset{1, 2, 3, 4}, 4));
    ExpandConfig config;
    config.memory_cap_bytes = 2048;
    try {
        expand_product(4, factors, config);
        FAIL("expected resource_error");
    } catch (const idlat::resource_error& e) {
        CHECK(e.cap_bytes() == 2048);
        CHECK(e.estimate_bytes() > 2048);
        CHECK(e.reason() == "memory cap exceeded");
    }
}
