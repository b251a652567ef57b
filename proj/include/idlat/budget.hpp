#pragma once

#include <cstdint>
#include <string>

#include "idlat/errors.hpp"

namespace idlat {

/// Byte-count accounting for the set-expansion engine. Large transient and
/// retained structures register their footprint here; exceeding the cap (or
/// running the host out of physical memory) raises resource_error instead of
/// thrashing. Estimates count slot arrays and code vectors at 8 bytes per
/// element; they are deliberately conservative, not an RSS measurement.
class MemoryBudget {
public:
    static constexpr std::uint64_t kDefaultCapBytes = 8ull << 30; // 8 GiB

    explicit MemoryBudget(std::uint64_t cap_bytes = kDefaultCapBytes)
        : cap_bytes_(cap_bytes) {}

    void set_phase(std::string phase) { phase_ = std::move(phase); }
    const std::string& phase() const noexcept { return phase_; }

    /// Registers `bytes` of new footprint. Throws resource_error when the
    /// running estimate would exceed the cap, or when the host reports less
    /// than `bytes` + headroom of available physical memory.
    void acquire(std::uint64_t bytes);

    void release(std::uint64_t bytes) noexcept {
        current_bytes_ = bytes > current_bytes_ ? 0 : current_bytes_ - bytes;
    }

    std::uint64_t current_bytes() const noexcept { return current_bytes_; }
    std::uint64_t peak_bytes() const noexcept { return peak_bytes_; }
    std::uint64_t cap_bytes() const noexcept { return cap_bytes_; }

private:
    std::uint64_t cap_bytes_;
    std::uint64_t current_bytes_ = 0;
    std::uint64_t peak_bytes_ = 0;
    std::string phase_ = "";
};

/// RAII registration of a fixed-size allocation against a budget (may be null).
class TrackedBytes {
public:
    TrackedBytes() = default;
    TrackedBytes(MemoryBudget* budget, std::uint64_t bytes) : budget_(budget), bytes_(bytes) {
        if (budget_ != nullptr && bytes_ > 0) budget_->acquire(bytes_);
    }
    TrackedBytes(TrackedBytes&& other) noexcept : budget_(other.budget_), bytes_(other.bytes_) {
        other.budget_ = nullptr;
        other.bytes_ = 0;
    }
    TrackedBytes& operator=(TrackedBytes&& other) noexcept {
        if (this != &other) {
            reset();
            budget_ = other.budget_;
            bytes_ = other.bytes_;
            other.budget_ = nullptr;
            other.bytes_ = 0;
        }
        return *this;
    }
    TrackedBytes(const TrackedBytes&) = delete;
    TrackedBytes& operator=(const TrackedBytes&) = delete;
    ~TrackedBytes() { reset(); }

    void reset() noexcept {
        if (budget_ != nullptr && bytes_ > 0) budget_->release(bytes_);
        budget_ = nullptr;
        bytes_ = 0;
    }

private:
    MemoryBudget* budget_ = nullptr;
    std::uint64_t bytes_ = 0;
};

/// Available physical memory as reported by the host (0 when unknown).
std::uint64_t available_physical_bytes();

} // namespace idlat
