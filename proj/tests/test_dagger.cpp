#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>
#include <random>

#include "idlat/dagger.hpp"
#include "idlat/json_out.hpp"

using idlat::build_instance;
using idlat::DaggerReport;
using idlat::degree_audit;
using idlat::ExponentVector;
using idlat::expand_product;
using idlat::IndexSubset;
using idlat::linear_form;
using idlat::MembershipMode;
using idlat::MonomialSet;
using idlat::StreamPolicy;
using idlat::VerifyConfig;
using idlat::verify_dagger;

namespace {

// Parity-split subset counts straight from bitmasks.
std::pair<int, int> parity_counts(int n) {
    int even = 0;
    int odd = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        const int k = std::popcount(mask);
        if (k % 2 == 0) {
            if (k >= 2) ++even;
        } else {
            ++odd;
        }
    }
    return {even, odd};
}

nlohmann::ordered_json report_without_timing(const DaggerReport& r) {
    auto j = idlat::dagger_report_json(r);
    j.erase("timing");
    return j;
}

MonomialSet expand_side(const std::vector<idlat::LinearFormFactor>& factors, int n) {
    std::vector<MonomialSet> sets;
    for (const auto& f : factors) sets.push_back(linear_form(f.support, n));
    return expand_product(n, sets);
}

} // namespace

TEST_CASE("build_instance small cases") {
    const auto one = build_instance(1);
    CHECK(one.even_factors.empty());
    REQUIRE(one.odd_factors.size() == 1);
    CHECK(one.odd_factors[0].support == IndexSubset{1});

    const auto two = build_instance(2);
    REQUIRE(two.even_factors.size() == 1);
    CHECK(two.even_factors[0].support == IndexSubset{1, 2});
    REQUIRE(two.odd_factors.size() == 2);
    CHECK(two.odd_factors[0].support == IndexSubset{1});
    CHECK(two.odd_factors[1].support == IndexSubset{2});

    CHECK_THROWS_AS(build_instance(0), idlat::domain_error);
}

TEST_CASE("build_instance six-ideal factor grouping") {
    const auto six = build_instance(6);
    CHECK(six.even_factors.size() == 31);
    CHECK(six.odd_factors.size() == 32);
    // factor groups split by subset size: 15/15/1 even and 6/20/6 odd,
    // matching the binomial counts C(6,k)
    auto count_size = [](const std::vector<idlat::LinearFormFactor>& fs, int k) {
        return std::count_if(fs.begin(), fs.end(),
                             [k](const auto& f) { return f.support.size() == k; });
    };
    CHECK(count_size(six.even_factors, 2) == 15);
    CHECK(count_size(six.even_factors, 4) == 15);
    CHECK(count_size(six.even_factors, 6) == 1);
    CHECK(count_size(six.odd_factors, 1) == 6);
    CHECK(count_size(six.odd_factors, 3) == 20);
    CHECK(count_size(six.odd_factors, 5) == 6);
}

TEST_CASE("degree audit matches the parity sums for every n up to 7") {
    for (int n = 1; n <= 7; ++n) {
        const auto audit = degree_audit(build_instance(n));
        const auto [even, odd] = parity_counts(n);
        CHECK(audit.p_degree == even);
        CHECK(audit.q0_degree == odd);
        CHECK(audit.p_degree == (1 << (n - 1)) - 1);
        CHECK(audit.q0_degree == (1 << (n - 1)));
    }
}

TEST_CASE("verify n=1: empty even product") {
    const DaggerReport r = verify_dagger(1);
    CHECK(r.holds);
    CHECK(r.p_size == 1);
    CHECK(r.q0_size == 1);
    CHECK(r.p_degree == 0);
    CHECK(r.q0_degree == 1);
    CHECK(r.status == "ok");

    const auto inst = build_instance(1);
    CHECK(expand_side(inst.even_factors, 1).elements() == std::vector<ExponentVector>{{0}});
    CHECK(expand_side(inst.odd_factors, 1).elements() == std::vector<ExponentVector>{{1}});
}

TEST_CASE("verify n=2: hand-expanded sides") {
    const auto inst = build_instance(2);
    const MonomialSet p = expand_side(inst.even_factors, 2);
    const MonomialSet q0 = expand_side(inst.odd_factors, 2);
    CHECK(p.elements() == std::vector<ExponentVector>{{0, 1}, {1, 0}});
    CHECK(q0.elements() == std::vector<ExponentVector>{{1, 1}});
    CHECK(idlat::shifted_down_set(q0).elements() ==
          std::vector<ExponentVector>{{0, 1}, {1, 0}});

    const DaggerReport r = verify_dagger(2);
    CHECK(r.holds);
    CHECK(r.p_size == 2);
    CHECK(r.q0_size == 1);
}

TEST_CASE("verify holds for n = 3, 4, 5") {
    for (int n : {3, 4, 5}) {
        const DaggerReport r = verify_dagger(n);
        CHECK(r.holds);
        CHECK(r.counterexamples.empty());
        CHECK(r.missing_count == 0);
        CHECK(r.status == "ok");
        CHECK(r.p_degree == (1 << (n - 1)) - 1);
    }
}

TEST_CASE("shift and materialize modes agree") {
    for (int n : {1, 2, 3, 4, 5}) {
        VerifyConfig shift;
        shift.mode = MembershipMode::kShiftIntoQ0;
        VerifyConfig materialize;
        materialize.mode = MembershipMode::kMaterializeQ;
        const DaggerReport a = verify_dagger(n, shift);
        const DaggerReport b = verify_dagger(n, materialize);
        CHECK(a.holds == b.holds);
        CHECK(a.p_size == b.p_size);
        CHECK(a.q0_size == b.q0_size);
        CHECK(a.missing_count == b.missing_count);
        CHECK_FALSE(a.q_materialized);
        CHECK(b.q_materialized);
        CHECK(b.q_size > 0);
    }
}

TEST_CASE("worker count does not change the report") {
    VerifyConfig one;
    one.worker_count = 1;
    VerifyConfig two;
    two.worker_count = 2;
    VerifyConfig eight;
    eight.worker_count = 8;
    const auto r1 = report_without_timing(verify_dagger(5, one));
    const auto r2 = report_without_timing(verify_dagger(5, two));
    const auto r8 = report_without_timing(verify_dagger(5, eight));
    CHECK(r1 == r2);
    CHECK(r1 == r8);
}

TEST_CASE("streaming the final factor agrees with full materialization") {
    for (int n : {3, 4, 5}) {
        VerifyConfig streamed;
        streamed.stream = StreamPolicy::kAlways;
        VerifyConfig full;
        full.stream = StreamPolicy::kNever;
        const DaggerReport s = verify_dagger(n, streamed);
        const DaggerReport f = verify_dagger(n, full);
        CHECK(s.holds == f.holds);
        CHECK(s.missing_count == 0);
        CHECK_FALSE(s.p_materialized);
        CHECK(s.p_penultimate_size > 0);
        CHECK(s.p_checked >= f.p_size); // probes cover every factorization
        CHECK(f.p_materialized);
    }
}

TEST_CASE("P and Q0 are symmetric under coordinate permutations") {
    std::mt19937_64 rng(1234);
    for (int n : {3, 4, 5}) {
        const auto inst = build_instance(n);
        for (const MonomialSet& side :
             {expand_side(inst.even_factors, n), expand_side(inst.odd_factors, n)}) {
            std::vector<int> perm(static_cast<std::size_t>(n));
            for (int trial = 0; trial < 10; ++trial) {
                for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
                std::shuffle(perm.begin(), perm.end(), rng);
                for (const ExponentVector& e : side.elements()) {
                    std::vector<int> permuted(static_cast<std::size_t>(n));
                    for (int i = 0; i < n; ++i) {
                        permuted[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
                            e[i];
                    }
                    REQUIRE(side.contains(ExponentVector{std::move(permuted)}));
                }
            }
        }
    }
}

TEST_CASE("every Q0 element has all coordinates >= 1") {
    for (int n : {1, 2, 3, 4, 5}) {
        const auto inst = build_instance(n);
        const MonomialSet q0 = expand_side(inst.odd_factors, n);
        for (const ExponentVector& e : q0.elements()) {
            for (int i = 0; i < n; ++i) REQUIRE(e[i] >= 1);
        }
    }
}

TEST_CASE("memory cap produces a partial report, not a crash") {
    VerifyConfig tight;
    tight.memory_cap_bytes = 64 << 10; // far below what n=6 needs
    const DaggerReport r = verify_dagger(6, tight);
    CHECK(r.status == "resource_abort");
    CHECK_FALSE(r.holds);
    CHECK_FALSE(r.abort_reason.empty());
    CHECK(r.phase_reached == "expand_even");
    CHECK(r.peak_bytes_estimate <= tight.memory_cap_bytes);
    CHECK(r.timing.total_s >= 0);
}
