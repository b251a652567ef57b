#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "idlat/errors.hpp"

namespace idlat {

/// A point of N^n. Plays three roles: a monomial in n variables, a valuation
/// profile, an element of a product expansion. Coordinates are non-negative.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::vector<int> coords);
    ExponentVector(std::initializer_list<int> coords)
        : ExponentVector(std::vector<int>(coords)) {}

    static ExponentVector zeros(int n_vars);
    /// Unit vector e_i for a 1-based variable index.
    static ExponentVector unit(int n_vars, int index);

    const std::vector<int>& coords() const noexcept { return coords_; }
    int size() const noexcept { return static_cast<int>(coords_.size()); }
    int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    int degree() const noexcept {
        return std::accumulate(coords_.begin(), coords_.end(), 0);
    }

    ExponentVector operator+(const ExponentVector& rhs) const;
    /// Componentwise max: the exponent vector of lcm of two monomials.
    ExponentVector lcm(const ExponentVector& rhs) const;
    /// Componentwise <=: this monomial divides rhs.
    bool divides(const ExponentVector& rhs) const;
    /// this - e_i (1-based); requires coordinate i >= 1.
    ExponentVector shifted_down(int index) const;

    bool operator==(const ExponentVector&) const = default;
    auto operator<=>(const ExponentVector&) const = default; // lexicographic

private:
    std::vector<int> coords_;
};

} // namespace idlat
