#include "idlat/section4.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "idlat/combinatorics.hpp"
#include "idlat/errors.hpp"

namespace idlat {

namespace {

MonomialIdeal ideal_pow(const MonomialIdeal& a, int e) {
    MonomialIdeal acc = MonomialIdeal::unit(a.n_vars());
    for (int i = 0; i < e; ++i) acc = ideal_product(acc, a);
    return acc;
}

/// Enumerates exponent tuples of total degree `degree` with coordinates
/// bounded by `cap`, in lexicographically descending order.
bool next_witness_candidate(std::vector<int>& coords, int pos, int remaining, int cap,
                            const std::function<bool(const std::vector<int>&)>& accept) {
    const int n = static_cast<int>(coords.size());
    if (pos == n - 1) {
        if (remaining > cap) return false;
        coords[static_cast<std::size_t>(pos)] = remaining;
        return accept(coords);
    }
    for (int c = std::min(cap, remaining); c >= 0; --c) {
        coords[static_cast<std::size_t>(pos)] = c;
        if (next_witness_candidate(coords, pos + 1, remaining - c, cap, accept)) return true;
    }
    return false;
}

} // namespace

ExponentVector strictness_witness(const MonomialIdeal& larger, const MonomialIdeal& smaller) {
    const int n = larger.n_vars();
    int cap = 0;
    int max_degree = 0;
    for (const ExponentVector& g : larger.generators()) {
        max_degree = std::max(max_degree, g.degree());
        for (int j = 0; j < n; ++j) cap = std::max(cap, g[j]);
    }
    // Some generator of the larger side is always a witness, so the search
    // terminates within this box.
    ExponentVector found;
    std::vector<int> coords(static_cast<std::size_t>(n), 0);
    for (int d = 0; d <= max_degree; ++d) {
        const bool hit = next_witness_candidate(
            coords, 0, d, cap, [&](const std::vector<int>& c) {
                ExponentVector m{std::vector<int>(c)};
                if (monomial_in_ideal(m, larger) && !monomial_in_ideal(m, smaller)) {
                    found = std::move(m);
                    return true;
                }
                return false;
            });
        if (hit) return found;
    }
    throw domain_error("strictness_witness: inclusion is not strict");
}

namespace {

ExampleOutcome check_example(int index, std::string description, const MonomialIdeal& lhs,
                             const MonomialIdeal& rhs, const MonomialIdeal& stated_lhs,
                             const MonomialIdeal& stated_rhs, bool lhs_is_smaller) {
    ExampleOutcome out;
    out.index = index;
    out.description = std::move(description);
    out.lhs_text = to_string(lhs);
    out.rhs_text = to_string(rhs);
    out.matches_stated_form = lhs == stated_lhs && rhs == stated_rhs;

    const MonomialIdeal& smaller = lhs_is_smaller ? lhs : rhs;
    const MonomialIdeal& larger = lhs_is_smaller ? rhs : lhs;
    out.relation = lhs_is_smaller ? "proper_subset" : "proper_superset";
    out.strict_inclusion =
        ideal_contains(larger, smaller) && !ideal_contains(smaller, larger);
    if (out.strict_inclusion) {
        out.witness = strictness_witness(larger, smaller);
        out.witness_text = monomial_to_string(out.witness, larger.n_vars());
    }
    out.ok = out.matches_stated_form && out.strict_inclusion;
    return out;
}

} // namespace

Section4Report run_section4_examples() {
    Section4Report report;

    // (1) a1 = <x^2 y>, a2 = <x y^2> in R[x,y]:
    //     L(2) G(2) = <x^4 y^3, x^3 y^4>  strictly inside  <x^3 y^3> = G(1) = L(1).
    {
        const MonomialIdeal a1 = parse_ideal("<x^2*y>", 2);
        const MonomialIdeal a2 = parse_ideal("<x*y^2>", 2);
        const MonomialIdeal lhs = ideal_product(ideal_intersect(a1, a2), ideal_sum(a1, a2));
        const MonomialIdeal rhs = ideal_product(a1, a2);
        report.examples.push_back(check_example(
            1, "L(2)G(2) < G(1) for <x^2*y>, <x*y^2>", lhs, rhs,
            parse_ideal("<x^4*y^3, x^3*y^4>", 2), parse_ideal("<x^3*y^3>", 2),
            /*lhs_is_smaller=*/true));
    }

    // (2) a1 = <x>, a2 = <y>, a3 = <z>:
    //     G(3) L(2) = <x,y,z><xyz>^2  strictly inside  <xyz>^2 = L(1) L(3).
    {
        const std::array<MonomialIdeal, 3> ideals = {
            parse_ideal("<x>", 3), parse_ideal("<y>", 3), parse_ideal("<z>", 3)};
        const MonomialIdeal lhs = ideal_product(big_G(3, ideals), big_L(2, ideals));
        const MonomialIdeal rhs = ideal_product(big_L(1, ideals), big_L(3, ideals));
        const MonomialIdeal xyz = parse_ideal("<x*y*z>", 3);
        report.examples.push_back(check_example(
            2, "G(3)L(2) < L(1)L(3) for <x>, <y>, <z>", lhs, rhs,
            ideal_product(parse_ideal("<x, y, z>", 3), ideal_pow(xyz, 2)), ideal_pow(xyz, 2),
            /*lhs_is_smaller=*/true));
    }

    // (3) a1 = <x,y>, a2 = <y,z>, a3 = <z,x>: the inclusion reverses,
    //     G(3) L(2) strictly contains L(1) L(3), witnessed by x^2 y z.
    {
        const std::array<MonomialIdeal, 3> ideals = {
            parse_ideal("<x, y>", 3), parse_ideal("<y, z>", 3), parse_ideal("<z, x>", 3)};
        const MonomialIdeal lhs = ideal_product(big_G(3, ideals), big_L(2, ideals));
        const MonomialIdeal rhs = ideal_product(big_L(1, ideals), big_L(3, ideals));
        MonomialIdeal stated_lhs = parse_ideal("<x, y, z>", 3);
        for (const char* f : {"<x, y*z>", "<y, z*x>", "<z, x*y>"}) {
            stated_lhs = ideal_product(stated_lhs, parse_ideal(f, 3));
        }
        MonomialIdeal stated_rhs = parse_ideal("<x*y, y*z, z*x>", 3);
        for (const char* f : {"<x, y>", "<y, z>", "<z, x>"}) {
            stated_rhs = ideal_product(stated_rhs, parse_ideal(f, 3));
        }
        report.examples.push_back(check_example(
            3, "G(3)L(2) > L(1)L(3) for <x,y>, <y,z>, <z,x>", lhs, rhs, stated_lhs,
            stated_rhs, /*lhs_is_smaller=*/false));
    }

    // (4) a1 = <x^2 y z>, a2 = <x y^2 z>, a3 = <x y z^2>:
    //     L(3) G(2) = <xyz>^5 <x,y><y,z><z,x>  strictly inside
    //     G(1) G(3) = <xyz>^5 <x,y,z>.
    {
        const std::array<MonomialIdeal, 3> ideals = {parse_ideal("<x^2*y*z>", 3),
                                                     parse_ideal("<x*y^2*z>", 3),
                                                     parse_ideal("<x*y*z^2>", 3)};
        const MonomialIdeal lhs = ideal_product(big_L(3, ideals), big_G(2, ideals));
        const MonomialIdeal rhs = ideal_product(big_G(1, ideals), big_G(3, ideals));
        const MonomialIdeal xyz5 = ideal_pow(parse_ideal("<x*y*z>", 3), 5);
        MonomialIdeal stated_lhs = xyz5;
        for (const char* f : {"<x, y>", "<y, z>", "<z, x>"}) {
            stated_lhs = ideal_product(stated_lhs, parse_ideal(f, 3));
        }
        report.examples.push_back(check_example(
            4, "L(3)G(2) < G(1)G(3) for <x^2*y*z>, <x*y^2*z>, <x*y*z^2>", lhs, rhs,
            stated_lhs, ideal_product(xyz5, parse_ideal("<x, y, z>", 3)),
            /*lhs_is_smaller=*/true));
    }

    report.all_ok = std::all_of(report.examples.begin(), report.examples.end(),
                                [](const ExampleOutcome& e) { return e.ok; });
    return report;
}

// --- Z2 x Z2 ----------------------------------------------------------------

namespace {

// Elements of Z2 x Z2 coded 0..3 as bit pairs; addition is XOR, product AND.
// An ideal is coded as a 4-bit membership mask over the elements.
using RingSet = unsigned;

constexpr unsigned kZeroOnly = 1u << 0;

RingSet xor_closure(RingSet s) {
    RingSet cur = s | kZeroOnly;
    while (true) {
        RingSet next = cur;
        for (int a = 0; a < 4; ++a) {
            if (!(cur >> a & 1u)) continue;
            for (int b = 0; b < 4; ++b) {
                if (cur >> b & 1u) next |= 1u << (a ^ b);
            }
        }
        if (next == cur) return cur;
        cur = next;
    }
}

RingSet set_sum(RingSet a, RingSet b) { return xor_closure(a | b); }

RingSet set_product(RingSet a, RingSet b) {
    RingSet prods = kZeroOnly;
    for (int x = 0; x < 4; ++x) {
        if (!(a >> x & 1u)) continue;
        for (int y = 0; y < 4; ++y) {
            if (b >> y & 1u) prods |= 1u << (x & y);
        }
    }
    return xor_closure(prods);
}

std::vector<RingSet> all_ideals() {
    std::vector<RingSet> ideals;
    for (RingSet s = 0; s < 16; ++s) {
        if (!(s & kZeroOnly)) continue;
        if (xor_closure(s) != s) continue;
        bool absorbing = true;
        for (int r = 0; r < 4 && absorbing; ++r) {
            for (int x = 0; x < 4; ++x) {
                if ((s >> x & 1u) && !(s >> (r & x) & 1u)) {
                    absorbing = false;
                    break;
                }
            }
        }
        if (absorbing) ideals.push_back(s);
    }
    return ideals;
}

RingSet fold_subset(const std::vector<RingSet>& tuple, const IndexSubset& s, bool use_sum) {
    auto it = s.begin();
    RingSet acc = tuple[static_cast<std::size_t>(*it - 1)];
    for (++it; it != s.end(); ++it) {
        const RingSet next = tuple[static_cast<std::size_t>(*it - 1)];
        acc = use_sum ? set_sum(acc, next) : (acc & next);
    }
    return acc;
}

RingSet product_over_subsets(const std::vector<RingSet>& tuple, int k, bool use_sum) {
    RingSet acc = 0xFu; // unit ideal = whole ring
    for (const IndexSubset& s : k_subsets(static_cast<int>(tuple.size()), k)) {
        acc = set_product(acc, fold_subset(tuple, s, use_sum));
    }
    return acc;
}

bool identities_hold(const std::vector<RingSet>& tuple) {
    const int n = static_cast<int>(tuple.size());
    // (*)_n : G(n) L(2) L(4) ... = L(1) L(3) ...
    RingSet star_lhs = product_over_subsets(tuple, n, /*use_sum=*/true);
    RingSet star_rhs = 0xFu;
    // (**)_n: L(n) G(2) G(4) ... = G(1) G(3) ...
    RingSet dstar_lhs = product_over_subsets(tuple, n, /*use_sum=*/false);
    RingSet dstar_rhs = 0xFu;
    for (int k = 2; k <= n; k += 2) {
        star_lhs = set_product(star_lhs, product_over_subsets(tuple, k, false));
        dstar_lhs = set_product(dstar_lhs, product_over_subsets(tuple, k, true));
    }
    for (int k = 1; k <= n; k += 2) {
        star_rhs = set_product(star_rhs, product_over_subsets(tuple, k, false));
        dstar_rhs = set_product(dstar_rhs, product_over_subsets(tuple, k, true));
    }
    return star_lhs == star_rhs && dstar_lhs == dstar_rhs;
}

} // namespace

Z2Z2Report check_z2z2_identities(int max_n) {
    if (max_n < 1) throw domain_error("check_z2z2_identities: max_n must be >= 1");
    Z2Z2Report report;
    report.max_n = max_n;
    report.all_hold = true;
    const std::vector<RingSet> ideals = all_ideals();
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
        while (true) {
            std::vector<RingSet> tuple;
            tuple.reserve(pick.size());
            for (std::size_t i : pick) tuple.push_back(ideals[i]);
            ++report.tuples_checked;
            if (!identities_hold(tuple)) report.all_hold = false;
            // advance the odometer
            std::size_t pos = 0;
            while (pos < pick.size() && ++pick[pos] == ideals.size()) {
                pick[pos] = 0;
                ++pos;
            }
            if (pos == pick.size()) break;
        }
    }
    return report;
}

} // namespace idlat
