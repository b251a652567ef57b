#include "idlat/monomial_ideal.hpp"

#include <algorithm>
#include <cctype>

#include "idlat/combinatorics.hpp"

namespace idlat {

int MonomialIdeal::validated(int n_vars) {
    if (n_vars < 1) throw domain_error("MonomialIdeal: n_vars must be >= 1");
    return n_vars;
}

namespace {

/// Keeps only the minimal generators: drops duplicates and anything another
/// generator divides.
std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::stable_sort(gens.begin(), gens.end(),
                     [](const ExponentVector& a, const ExponentVector& b) {
                         return a.degree() < b.degree();
                     });
    std::vector<ExponentVector> kept;
    for (const ExponentVector& g : gens) {
        bool dominated = false;
        for (const ExponentVector& h : kept) {
            if (h.divides(g)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(g);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b, const char* op) {
    if (a.n_vars() != b.n_vars()) {
        throw domain_error(std::string(op) + ": n_vars mismatch");
    }
}

} // namespace

MonomialIdeal::MonomialIdeal(int n_vars, std::vector<ExponentVector> generators)
    : n_vars_(validated(n_vars)) {
    for (const ExponentVector& g : generators) {
        if (g.size() != n_vars_) throw domain_error("MonomialIdeal: generator has wrong n_vars");
    }
    generators_ = minimalize(std::move(generators));
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b, "ideal_sum");
    std::vector<ExponentVector> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal(a.n_vars(), std::move(gens));
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b, "ideal_product");
    std::vector<ExponentVector> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const ExponentVector& g : a.generators()) {
        for (const ExponentVector& h : b.generators()) gens.push_back(g + h);
    }
    return MonomialIdeal(a.n_vars(), std::move(gens));
}

MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b, "ideal_intersect");
    std::vector<ExponentVector> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const ExponentVector& g : a.generators()) {
        for (const ExponentVector& h : b.generators()) gens.push_back(g.lcm(h));
    }
    return MonomialIdeal(a.n_vars(), std::move(gens));
}

bool ideal_contains(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b, "ideal_contains");
    for (const ExponentVector& g : b.generators()) {
        if (!monomial_in_ideal(g, a)) return false;
    }
    return true;
}

bool monomial_in_ideal(const ExponentVector& m, const MonomialIdeal& a) {
    if (m.size() != a.n_vars()) throw domain_error("monomial_in_ideal: length mismatch");
    for (const ExponentVector& g : a.generators()) {
        if (g.divides(m)) return true;
    }
    return false;
}

namespace {

MonomialIdeal subset_fold(int k, std::span<const MonomialIdeal> ideals, bool use_sum) {
    const int n = static_cast<int>(ideals.size());
    if (k < 1 || k > n) throw domain_error("big_G/big_L: need 1 <= k <= number of ideals");
    const int n_vars = ideals.front().n_vars();
    for (const MonomialIdeal& a : ideals) {
        if (a.n_vars() != n_vars) throw domain_error("big_G/big_L: n_vars mismatch");
    }
    MonomialIdeal acc = MonomialIdeal::unit(n_vars);
    for (const IndexSubset& s : k_subsets(n, k)) {
        auto it = s.begin();
        MonomialIdeal term = ideals[static_cast<std::size_t>(*it - 1)];
        for (++it; it != s.end(); ++it) {
            const MonomialIdeal& next = ideals[static_cast<std::size_t>(*it - 1)];
            term = use_sum ? ideal_sum(term, next) : ideal_intersect(term, next);
        }
        acc = ideal_product(acc, term);
    }
    return acc;
}

} // namespace

MonomialIdeal big_G(int k, std::span<const MonomialIdeal> ideals) {
    return subset_fold(k, ideals, /*use_sum=*/true);
}

MonomialIdeal big_L(int k, std::span<const MonomialIdeal> ideals) {
    return subset_fold(k, ideals, /*use_sum=*/false);
}

// --- textual notation ------------------------------------------------------

namespace {

std::string var_name(int index, int n_vars) {
    if (n_vars <= 3) {
        static const char* names[] = {"x", "y", "z"};
        return names[index];
    }
    if (n_vars <= 6) return std::string(1, static_cast<char>('a' + index));
    return "x" + std::to_string(index + 1);
}

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    [[noreturn]] void fail(const std::string& what) {
        throw domain_error("parse error at position " + std::to_string(pos) + ": " + what);
    }
    int read_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        int value = 0;
        for (std::size_t i = start; i < pos; ++i) {
            value = value * 10 + (text[i] - '0');
            if (value > 1'000'000) fail("integer too large");
        }
        return value;
    }

    /// Variable index (0-based): x<digits> is 1-based explicit; bare a..f map
    /// to 0..5 and bare x,y,z to 0,1,2.
    int read_var_index() {
        skip_ws();
        if (pos >= text.size()) fail("expected variable");
        const char c = text[pos];
        if (c == 'x' && pos + 1 < text.size() &&
            std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
            ++pos;
            const int idx = read_int();
            if (idx < 1) fail("variable index must be >= 1");
            return idx - 1;
        }
        ++pos;
        if (c >= 'a' && c <= 'f') return c - 'a';
        if (c == 'x') return 0;
        if (c == 'y') return 1;
        if (c == 'z') return 2;
        fail(std::string("unknown variable '") + c + "'");
    }
};

ExponentVector parse_monomial_at(Cursor& cur, int n_vars) {
    std::vector<int> coords(static_cast<std::size_t>(n_vars), 0);
    bool first = true;
    while (true) {
        if (!first && !cur.eat('*')) break;
        cur.skip_ws();
        if (cur.peek() == '1') {
            ++cur.pos; // the constant factor
        } else {
            const int idx = cur.read_var_index();
            if (idx >= n_vars) {
                cur.fail("variable index " + std::to_string(idx + 1) + " exceeds n_vars = " +
                         std::to_string(n_vars));
            }
            int exp = 1;
            if (cur.eat('^')) exp = cur.read_int();
            coords[static_cast<std::size_t>(idx)] += exp;
        }
        first = false;
    }
    if (first) cur.fail("expected monomial");
    return ExponentVector(std::move(coords));
}

} // namespace

std::string monomial_to_string(const ExponentVector& m, int n_vars) {
    if (m.size() != n_vars) throw domain_error("monomial_to_string: length mismatch");
    if (m.degree() == 0) return "1";
    std::string out;
    for (int j = 0; j < n_vars; ++j) {
        if (m[j] == 0) continue;
        if (!out.empty()) out += "*";
        out += var_name(j, n_vars);
        if (m[j] > 1) out += "^" + std::to_string(m[j]);
    }
    return out;
}

std::string to_string(const MonomialIdeal& ideal) {
    std::string out = "<";
    bool first = true;
    for (const ExponentVector& g : ideal.generators()) {
        if (!first) out += ", ";
        out += monomial_to_string(g, ideal.n_vars());
        first = false;
    }
    out += ">";
    return out;
}

ExponentVector parse_monomial(std::string_view text, int n_vars) {
    if (n_vars < 1) throw domain_error("parse_monomial: n_vars must be >= 1");
    Cursor cur{text};
    ExponentVector m = parse_monomial_at(cur, n_vars);
    if (!cur.done()) cur.fail("trailing input after monomial");
    return m;
}

MonomialIdeal parse_ideal(std::string_view text, int n_vars) {
    if (n_vars < 1) throw domain_error("parse_ideal: n_vars must be >= 1");
    Cursor cur{text};
    if (!cur.eat('<')) cur.fail("expected '<'");
    std::vector<ExponentVector> gens;
    if (cur.peek() != '>') {
        while (true) {
            gens.push_back(parse_monomial_at(cur, n_vars));
            if (!cur.eat(',')) break;
        }
    }
    if (!cur.eat('>')) cur.fail("expected '>'");
    if (!cur.done()) cur.fail("trailing input after '>'");
    return MonomialIdeal(n_vars, std::move(gens));
}

int infer_n_vars(std::string_view text) {
    Cursor cur{text};
    int max_index = -1;
    while (!cur.done()) {
        const char c = cur.peek();
        if (c == 'x' && cur.pos + 1 < cur.text.size() &&
            std::isdigit(static_cast<unsigned char>(cur.text[cur.pos + 1]))) {
            max_index = std::max(max_index, cur.read_var_index());
        } else if ((c >= 'a' && c <= 'f') || c == 'x' || c == 'y' || c == 'z') {
            max_index = std::max(max_index, cur.read_var_index());
        } else {
            ++cur.pos;
        }
    }
    return max_index + 1;
}

} // namespace idlat
