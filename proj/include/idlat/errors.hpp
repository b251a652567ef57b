#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace idlat {

/// Violated precondition: bad subset bounds, mismatched variable counts,
/// values outside the operation's domain.
class domain_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation outgrew its memory budget (or the machine's available
/// memory). Carries the telemetry known at abort time so callers can still
/// emit a partial report.
class resource_error : public std::runtime_error {
public:
    resource_error(std::string phase, std::uint64_t estimate_bytes,
                   std::uint64_t cap_bytes, std::string reason)
        : std::runtime_error("resource limit in phase '" + phase + "': " + reason +
                             " (estimate " + std::to_string(estimate_bytes) +
                             " B, cap " + std::to_string(cap_bytes) + " B)"),
          phase_(std::move(phase)),
          estimate_bytes_(estimate_bytes),
          cap_bytes_(cap_bytes),
          reason_(std::move(reason)) {}

    const std::string& phase() const noexcept { return phase_; }
    std::uint64_t estimate_bytes() const noexcept { return estimate_bytes_; }
    std::uint64_t cap_bytes() const noexcept { return cap_bytes_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::string phase_;
    std::uint64_t estimate_bytes_;
    std::uint64_t cap_bytes_;
    std::string reason_;
};

} // namespace idlat
