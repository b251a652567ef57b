#include "idlat/code_set.hpp"

#include <algorithm>

namespace idlat {

void CodeSet::rehash(std::size_t new_slots) {
    // Old and new tables coexist during the move; charge both.
    if (budget_ != nullptr) budget_->acquire(new_slots * sizeof(std::uint64_t));
    std::vector<std::uint64_t> fresh(new_slots, 0);
    const std::size_t new_mask = new_slots - 1;
    for (std::uint64_t key : slots_) {
        if (key == 0) continue;
        std::size_t pos = mix64(key) & new_mask;
        while (fresh[pos] != 0) pos = (pos + 1) & new_mask;
        fresh[pos] = key;
    }
    if (budget_ != nullptr) budget_->release(slots_.size() * sizeof(std::uint64_t));
    slots_ = std::move(fresh);
    mask_ = new_mask;
}

std::vector<std::uint64_t> CodeSet::extract_sorted() const {
    TrackedBytes charge(budget_, size() * sizeof(std::uint64_t));
    std::vector<std::uint64_t> out;
    out.reserve(size());
    for_each([&out](std::uint64_t key) { out.push_back(key); });
    std::sort(out.begin(), out.end());
    charge.reset(); // ownership passes to the caller
    return out;
}

} // namespace idlat
