#include "idlat/dagger.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>
#include <thread>

#include "idlat/code_set.hpp"

namespace idlat {

DaggerInstance build_instance(int n) {
    if (n < 1) throw domain_error("build_instance: n must be >= 1");
    if (n > 24) throw domain_error("build_instance: 2^(n-1) factors exceed practical limits");
    DaggerInstance inst;
    inst.n = n;
    for (int k = 2; k <= n; k += 2) {
        for (IndexSubset& s : k_subsets(n, k)) inst.even_factors.push_back({std::move(s)});
    }
    for (int k = 1; k <= n; k += 2) {
        for (IndexSubset& s : k_subsets(n, k)) inst.odd_factors.push_back({std::move(s)});
    }
    const std::uint64_t half = std::uint64_t{1} << (n - 1);
    if (inst.even_factors.size() != half - 1 || inst.odd_factors.size() != half) {
        throw std::logic_error("build_instance: factor count mismatch");
    }
    return inst;
}

DegreeAudit degree_audit(const DaggerInstance& instance) {
    const int n = instance.n;
    std::uint64_t even_sum = 0;
    std::uint64_t odd_sum = 0;
    for (int k = 2; k <= n; k += 2) even_sum += binomial(n, k);
    for (int k = 1; k <= n; k += 2) odd_sum += binomial(n, k);
    if (even_sum != instance.even_factors.size() || odd_sum != instance.odd_factors.size()) {
        throw std::logic_error("degree_audit: factor lists disagree with binomial sums");
    }
    return DegreeAudit{static_cast<int>(even_sum), static_cast<int>(odd_sum)};
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Probe target: either Q0 plus the unit shifts, or a materialized Q.
struct MembershipOracle {
    const CodeSet* q0 = nullptr;
    const CodeSet* q = nullptr;
    std::vector<std::uint64_t> units;

    bool passes(std::uint64_t m) const {
        if (q != nullptr) return q->contains(m);
        for (std::uint64_t u : units) {
            if (q0->contains(m + u)) return true;
        }
        return false;
    }
};

struct MembershipResult {
    std::uint64_t checked = 0;
    std::uint64_t missing = 0;
    std::set<std::uint64_t> worst; // lex-smallest missing codes, capped
};

void note_miss(MembershipResult& r, std::uint64_t code, std::size_t cap) {
    ++r.missing;
    if (cap == 0) return;
    if (r.worst.size() < cap) {
        r.worst.insert(code);
    } else if (code < *r.worst.rbegin()) {
        r.worst.insert(code);
        r.worst.erase(std::prev(r.worst.end()));
    }
}

/// Splits [0, total) into contiguous slices, one worker each, and merges the
/// per-slice results. The merged result is independent of the slicing, so
/// reports are identical for any worker count.
template <typename Body>
MembershipResult run_sliced(std::size_t total, int workers, std::size_t cap, Body&& body) {
    std::size_t w = workers < 1 ? 1 : static_cast<std::size_t>(workers);
    w = std::min(w, std::max<std::size_t>(total, 1));
    if (w == 1) {
        MembershipResult r;
        body(0, total, r);
        return r;
    }
    std::vector<MembershipResult> parts(w);
    std::vector<std::thread> threads;
    threads.reserve(w);
    for (std::size_t i = 0; i < w; ++i) {
        const std::size_t lo = total * i / w;
        const std::size_t hi = total * (i + 1) / w;
        threads.emplace_back([&body, &parts, i, lo, hi] { body(lo, hi, parts[i]); });
    }
    for (std::thread& t : threads) t.join();
    MembershipResult merged;
    for (MembershipResult& p : parts) {
        merged.checked += p.checked;
        merged.missing += p.missing;
        for (std::uint64_t code : p.worst) {
            if (merged.worst.size() < cap) {
                merged.worst.insert(code);
            } else if (!merged.worst.empty() && code < *merged.worst.rbegin()) {
                merged.worst.insert(code);
                merged.worst.erase(std::prev(merged.worst.end()));
            }
        }
    }
    return merged;
}

MembershipResult check_codes(std::span<const std::uint64_t> codes, const MembershipOracle& oracle,
                             std::size_t cap, int workers) {
    return run_sliced(codes.size(), workers, cap,
                      [&codes, &oracle, cap](std::size_t lo, std::size_t hi, MembershipResult& r) {
                          for (std::size_t i = lo; i < hi; ++i) {
                              ++r.checked;
                              if (!oracle.passes(codes[i])) note_miss(r, codes[i], cap);
                          }
                      });
}

MembershipResult check_products(std::span<const std::uint64_t> base,
                                std::span<const std::uint64_t> terms,
                                const MembershipOracle& oracle, std::size_t cap, int workers) {
    return run_sliced(base.size(), workers, cap,
                      [&base, &terms, &oracle, cap](std::size_t lo, std::size_t hi,
                                                    MembershipResult& r) {
                          for (std::size_t i = lo; i < hi; ++i) {
                              for (std::uint64_t t : terms) {
                                  const std::uint64_t m = base[i] + t;
                                  ++r.checked;
                                  if (!oracle.passes(m)) note_miss(r, m, cap);
                              }
                          }
                      });
}

void audit_homogeneity(const MonomialSet& s, int expected_degree, const char* what) {
    if (s.degree() != expected_degree || !s.is_homogeneous()) {
        throw std::logic_error(std::string("homogeneity violation in ") + what);
    }
}

} // namespace

DaggerReport verify_dagger(int n, const VerifyConfig& config) {
    const Clock::time_point t_start = Clock::now();
    DaggerInstance instance = build_instance(n);
    const DegreeAudit audit = degree_audit(instance);

    MemoryBudget budget(config.memory_cap_bytes);
    const int bits = MonomialSet::coord_bits_for(n);

    DaggerReport report;
    report.n = n;
    report.p_degree = audit.p_degree;
    report.q0_degree = audit.q0_degree;
    report.mode = config.mode == MembershipMode::kShiftIntoQ0 ? "shift" : "materialize";
    report.memory_cap_bytes = config.memory_cap_bytes;
    report.status = "ok";

    auto enter_phase = [&](const char* phase) {
        report.phase_reached = phase;
        budget.set_phase(phase);
    };

    try {
        ExpandConfig expand_cfg;
        expand_cfg.budget = &budget;

        // Even side first: its expansion dominates the footprint, and holding
        // Q0 alongside it would double the peak.
        enter_phase("expand_even");
        Clock::time_point t_phase = Clock::now();
        std::vector<MonomialSet> even_sets;
        even_sets.reserve(instance.even_factors.size());
        for (const LinearFormFactor& f : instance.even_factors) {
            even_sets.push_back(linear_form(f.support, n));
        }
        const bool stream_final = !even_sets.empty() &&
                                  (config.stream == StreamPolicy::kAlways ||
                                   (config.stream == StreamPolicy::kAutomatic && n >= 7));

        MonomialSet p_side(n, 0);           // P itself, or P' when streaming
        MonomialSet held_out_factor(n, 0);  // last factor of a streamed run
        if (!stream_final) {
            p_side = expand_product(n, even_sets, expand_cfg);
            audit_homogeneity(p_side, audit.p_degree, "P");
            report.p_size = p_side.size();
            report.p_materialized = true;
        } else {
            // Hold out one factor with the most terms; stream its terms
            // against the membership target instead of materializing P.
            std::stable_sort(even_sets.begin(), even_sets.end(),
                             [](const MonomialSet& a, const MonomialSet& b) {
                                 return a.size() < b.size();
                             });
            held_out_factor = std::move(even_sets.back());
            even_sets.pop_back();
            p_side = expand_product(n, even_sets, expand_cfg);
            audit_homogeneity(p_side, audit.p_degree - held_out_factor.degree(), "P'");
            report.p_penultimate_size = p_side.size();
        }
        TrackedBytes p_charge(&budget, p_side.size() * sizeof(std::uint64_t));
        report.timing.expand_even_s = seconds_since(t_phase);

        // Odd side.
        enter_phase("expand_odd");
        t_phase = Clock::now();
        std::vector<MonomialSet> odd_sets;
        odd_sets.reserve(instance.odd_factors.size());
        for (const LinearFormFactor& f : instance.odd_factors) {
            odd_sets.push_back(linear_form(f.support, n));
        }
        MonomialSet q0 = expand_product(n, odd_sets, expand_cfg);
        audit_homogeneity(q0, audit.q0_degree, "Q0");
        TrackedBytes q0_charge(&budget, q0.size() * sizeof(std::uint64_t));
        report.q0_size = q0.size();
        report.timing.expand_odd_s = seconds_since(t_phase);

        // Membership target.
        MembershipOracle oracle;
        CodeSet target(&budget);
        if (config.mode == MembershipMode::kMaterializeQ) {
            enter_phase("shift");
            t_phase = Clock::now();
            MonomialSet q = shifted_down_set(q0, expand_cfg);
            TrackedBytes q_charge(&budget, q.size() * sizeof(std::uint64_t));
            report.q_size = q.size();
            report.q_materialized = true;
            target.reserve(q.size());
            for (std::uint64_t code : q.codes()) target.insert(code);
            oracle.q = &target;
            report.timing.shift_s = seconds_since(t_phase);
        } else {
            target.reserve(q0.size());
            for (std::uint64_t code : q0.codes()) target.insert(code);
            oracle.q0 = &target;
            for (int i = 1; i <= n; ++i) {
                oracle.units.push_back(MonomialSet::unit_code(n, i, bits));
            }
        }
        q0 = MonomialSet(n, audit.q0_degree); // drop the sorted Q0 codes
        q0_charge.reset();

        // Membership phase.
        enter_phase("membership");
        t_phase = Clock::now();
        MembershipResult result;
        if (!stream_final) {
            result = check_codes(p_side.codes(), oracle, config.max_counterexamples,
                                 config.worker_count);
        } else {
            result = check_products(p_side.codes(), held_out_factor.codes(), oracle,
                                    config.max_counterexamples, config.worker_count);
        }
        report.p_checked = result.checked;
        report.missing_count = result.missing;
        report.holds = result.missing == 0;
        for (std::uint64_t code : result.worst) {
            report.counterexamples.push_back(MonomialSet::decode(code, n, bits));
        }
        report.timing.membership_s = seconds_since(t_phase);
        enter_phase("done");
    } catch (const resource_error& e) {
        report.status = "resource_abort";
        report.abort_reason = e.reason();
        report.holds = false;
    }

    report.peak_bytes_estimate = budget.peak_bytes();
    report.peak_elements = budget.peak_bytes() / sizeof(std::uint64_t);
    report.timing.total_s = seconds_since(t_start);
    return report;
}

} // namespace idlat
