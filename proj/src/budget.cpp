#include "idlat/budget.hpp"

#include <fstream>
#include <string>

namespace idlat {

std::uint64_t available_physical_bytes() {
    std::ifstream meminfo("/proc/meminfo");
    std::string key;
    std::uint64_t kb = 0;
    while (meminfo >> key >> kb) {
        if (key == "MemAvailable:") return kb * 1024;
        meminfo.ignore(256, '\n');
    }
    return 0;
}

void MemoryBudget::acquire(std::uint64_t bytes) {
    const std::uint64_t next = current_bytes_ + bytes;
    if (next > cap_bytes_) {
        throw resource_error(phase_, next, cap_bytes_, "memory cap exceeded");
    }
    // Large growth steps also respect the machine: abort cleanly rather than
    // letting the OOM killer end the process without a report.
    constexpr std::uint64_t kProbeThreshold = 16ull << 20; // 16 MiB
    constexpr std::uint64_t kHeadroom = 256ull << 20;      // 256 MiB
    if (bytes >= kProbeThreshold) {
        const std::uint64_t avail = available_physical_bytes();
        if (avail != 0 && bytes + kHeadroom > avail) {
            throw resource_error(phase_, next, cap_bytes_, "available physical memory exhausted");
        }
    }
    current_bytes_ = next;
    if (current_bytes_ > peak_bytes_) peak_bytes_ = current_bytes_;
}

} // namespace idlat
