#include "idlat/monomial_set.hpp"

#include <algorithm>
#include <numeric>

#include "idlat/code_set.hpp"

namespace idlat {

int MonomialSet::coord_bits_for(int n_vars) {
    if (n_vars < 1) throw domain_error("MonomialSet: n_vars must be >= 1");
    return std::min(32, 64 / n_vars);
}

std::uint64_t MonomialSet::encode(const ExponentVector& m, int bits) {
    const int n = m.size();
    std::uint64_t code = 0;
    for (int j = 0; j < n; ++j) {
        const std::uint64_t c = static_cast<std::uint64_t>(m[j]);
        if (c >= (std::uint64_t{1} << bits)) {
            throw domain_error("MonomialSet: coordinate exceeds packed field width");
        }
        code |= c << ((n - 1 - j) * bits);
    }
    return code;
}

ExponentVector MonomialSet::decode(std::uint64_t code, int n_vars, int bits) {
    const std::uint64_t mask = (bits == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
    std::vector<int> coords(static_cast<std::size_t>(n_vars));
    for (int j = 0; j < n_vars; ++j) {
        coords[static_cast<std::size_t>(j)] =
            static_cast<int>((code >> ((n_vars - 1 - j) * bits)) & mask);
    }
    return ExponentVector(std::move(coords));
}

int MonomialSet::decode_degree(std::uint64_t code, int n_vars, int bits) noexcept {
    const std::uint64_t mask = (bits == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
    int deg = 0;
    for (int j = 0; j < n_vars; ++j) deg += static_cast<int>((code >> (j * bits)) & mask);
    return deg;
}

std::uint64_t MonomialSet::unit_code(int n_vars, int index, int bits) {
    if (index < 1 || index > n_vars) throw domain_error("MonomialSet: unit index out of range");
    return std::uint64_t{1} << ((n_vars - index) * bits);
}

MonomialSet::MonomialSet(int n_vars, int degree)
    : n_vars_(n_vars), degree_(degree), bits_(coord_bits_for(n_vars)) {
    if (degree < 0) throw domain_error("MonomialSet: negative degree");
    if (degree > 0 && bits_ < 64 && static_cast<std::uint64_t>(degree) >= (std::uint64_t{1} << bits_)) {
        throw domain_error("MonomialSet: degree exceeds packed capacity for this n_vars");
    }
}

MonomialSet::MonomialSet(int n_vars, std::vector<ExponentVector> elements)
    : MonomialSet(n_vars, elements.empty() ? 0 : elements.front().degree()) {
    codes_.reserve(elements.size());
    for (const ExponentVector& m : elements) {
        if (m.size() != n_vars_) throw domain_error("MonomialSet: element has wrong n_vars");
        if (m.degree() != degree_) throw domain_error("MonomialSet: mixed total degrees");
        codes_.push_back(encode(m, bits_));
    }
    std::sort(codes_.begin(), codes_.end());
    codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
}

MonomialSet MonomialSet::from_sorted_codes(int n_vars, int degree,
                                           std::vector<std::uint64_t> codes) {
    MonomialSet s(n_vars, degree);
    s.codes_ = std::move(codes);
    return s;
}

bool MonomialSet::contains(const ExponentVector& m) const {
    if (m.size() != n_vars_ || m.degree() != degree_) return false;
    const std::uint64_t code = encode(m, bits_);
    return std::binary_search(codes_.begin(), codes_.end(), code);
}

std::vector<ExponentVector> MonomialSet::elements() const {
    std::vector<ExponentVector> out;
    out.reserve(codes_.size());
    for (std::uint64_t code : codes_) out.push_back(decode(code, n_vars_, bits_));
    return out;
}

bool MonomialSet::is_homogeneous() const noexcept {
    for (std::uint64_t code : codes_) {
        if (decode_degree(code, n_vars_, bits_) != degree_) return false;
    }
    return true;
}

MonomialSet linear_form(const IndexSubset& support, int n_vars) {
    if (support.max_member() > n_vars) {
        throw domain_error("linear_form: support member exceeds n_vars");
    }
    std::vector<ExponentVector> elems;
    elems.reserve(static_cast<std::size_t>(support.size()));
    for (int i : support) elems.push_back(ExponentVector::unit(n_vars, i));
    return MonomialSet(n_vars, std::move(elems));
}

MonomialSet expand_product(int n_vars, std::span<const MonomialSet> factors,
                           const ExpandConfig& config) {
    if (n_vars < 1) throw domain_error("expand_product: n_vars must be >= 1");
    int out_degree = 0;
    for (const MonomialSet& f : factors) {
        if (f.n_vars() != n_vars) throw domain_error("expand_product: n_vars mismatch");
        out_degree += f.degree();
    }
    const int bits = MonomialSet::coord_bits_for(n_vars);
    if (bits < 64 && static_cast<std::uint64_t>(out_degree) >= (std::uint64_t{1} << bits)) {
        throw domain_error("expand_product: output degree exceeds packed capacity");
    }

    MemoryBudget local(config.memory_cap_bytes);
    MemoryBudget* budget = config.budget != nullptr ? config.budget : &local;

    // Fewer-term factors first keeps the deduplicated intermediates small.
    std::vector<std::size_t> order(factors.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&factors](std::size_t a, std::size_t b) {
        return factors[a].size() < factors[b].size();
    });

    CodeSet acc(budget);
    acc.insert(0); // empty product = 1
    for (std::size_t idx : order) {
        const MonomialSet& f = factors[idx];
        CodeSet next(budget);
        next.reserve(acc.size());
        acc.for_each([&](std::uint64_t partial) {
            for (std::uint64_t term : f.codes()) next.insert(partial + term);
        });
        acc = std::move(next);
    }

    std::vector<std::uint64_t> codes = acc.extract_sorted();
    acc.clear_and_release();
    return MonomialSet::from_sorted_codes(n_vars, out_degree, std::move(codes));
}

MonomialSet shifted_down_set(const MonomialSet& q0, const ExpandConfig& config) {
    const int n = q0.n_vars();
    const int bits = q0.coord_bits();
    const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;

    MemoryBudget local(config.memory_cap_bytes);
    MemoryBudget* budget = config.budget != nullptr ? config.budget : &local;

    CodeSet shifted(budget);
    shifted.reserve(q0.size());
    for (std::uint64_t code : q0.codes()) {
        for (int j = 0; j < n; ++j) {
            const int shift = j * bits;
            if (((code >> shift) & mask) >= 1) {
                shifted.insert(code - (std::uint64_t{1} << shift));
            }
        }
    }
    std::vector<std::uint64_t> codes = shifted.extract_sorted();
    shifted.clear_and_release();
    return MonomialSet::from_sorted_codes(n, q0.degree() > 0 ? q0.degree() - 1 : 0,
                                          std::move(codes));
}

SubsetWitness is_subset_with_witness(const MonomialSet& p, const MonomialSet& q,
                                     std::size_t max_counterexamples) {
    if (p.n_vars() != q.n_vars()) throw domain_error("is_subset_with_witness: n_vars mismatch");
    SubsetWitness w;
    auto pc = p.codes();
    auto qc = q.codes();
    std::size_t qi = 0;
    for (std::uint64_t code : pc) {
        while (qi < qc.size() && qc[qi] < code) ++qi;
        const bool hit = qi < qc.size() && qc[qi] == code;
        if (!hit) {
            ++w.missing_count;
            if (w.counterexamples.size() < max_counterexamples) {
                w.counterexamples.push_back(
                    MonomialSet::decode(code, p.n_vars(), p.coord_bits()));
            }
        }
    }
    w.holds = w.missing_count == 0;
    return w;
}

} // namespace idlat
