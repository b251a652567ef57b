#include "idlat/exponent_vector.hpp"

#include <algorithm>

namespace idlat {

ExponentVector::ExponentVector(std::vector<int> coords) : coords_(std::move(coords)) {
    for (int c : coords_) {
        if (c < 0) throw domain_error("ExponentVector: negative coordinate");
    }
}

ExponentVector ExponentVector::zeros(int n_vars) {
    if (n_vars < 1) throw domain_error("ExponentVector::zeros: n_vars must be >= 1");
    return ExponentVector(std::vector<int>(static_cast<std::size_t>(n_vars), 0));
}

ExponentVector ExponentVector::unit(int n_vars, int index) {
    if (index < 1 || index > n_vars) throw domain_error("ExponentVector::unit: index out of range");
    ExponentVector e = zeros(n_vars);
    e.coords_[static_cast<std::size_t>(index - 1)] = 1;
    return e;
}

ExponentVector ExponentVector::operator+(const ExponentVector& rhs) const {
    if (size() != rhs.size()) throw domain_error("ExponentVector: size mismatch in +");
    ExponentVector out = *this;
    for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] += rhs.coords_[i];
    return out;
}

ExponentVector ExponentVector::lcm(const ExponentVector& rhs) const {
    if (size() != rhs.size()) throw domain_error("ExponentVector: size mismatch in lcm");
    ExponentVector out = *this;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        out.coords_[i] = std::max(out.coords_[i], rhs.coords_[i]);
    }
    return out;
}

bool ExponentVector::divides(const ExponentVector& rhs) const {
    if (size() != rhs.size()) throw domain_error("ExponentVector: size mismatch in divides");
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] > rhs.coords_[i]) return false;
    }
    return true;
}

ExponentVector ExponentVector::shifted_down(int index) const {
    if (index < 1 || index > size()) throw domain_error("ExponentVector: shift index out of range");
    if (coords_[static_cast<std::size_t>(index - 1)] < 1) {
        throw domain_error("ExponentVector: coordinate already zero");
    }
    ExponentVector out = *this;
    --out.coords_[static_cast<std::size_t>(index - 1)];
    return out;
}

} // namespace idlat
