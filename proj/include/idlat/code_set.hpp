#pragma once

#include <cstdint>
#include <vector>

#include "idlat/budget.hpp"

namespace idlat {

inline std::uint64_t mix64(std::uint64_t x) noexcept {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

/// Open-addressing hash set of packed exponent codes. Linear probing over a
/// power-of-two table; 0 is a valid key and handled by a side flag. Slot
/// storage is registered with an optional MemoryBudget so expansions abort
/// with a structured error instead of thrashing.
class CodeSet {
public:
    explicit CodeSet(MemoryBudget* budget = nullptr) : budget_(budget) {}

    CodeSet(CodeSet&& other) noexcept
        : slots_(std::move(other.slots_)),
          mask_(other.mask_),
          count_(other.count_),
          has_zero_(other.has_zero_),
          budget_(other.budget_) {
        other.detach();
    }

    CodeSet& operator=(CodeSet&& other) noexcept {
        if (this != &other) {
            if (budget_ != nullptr) budget_->release(slots_.size() * sizeof(std::uint64_t));
            slots_ = std::move(other.slots_);
            mask_ = other.mask_;
            count_ = other.count_;
            has_zero_ = other.has_zero_;
            budget_ = other.budget_;
            other.detach();
        }
        return *this;
    }

    CodeSet(const CodeSet&) = delete;
    CodeSet& operator=(const CodeSet&) = delete;

    ~CodeSet() {
        if (budget_ != nullptr) budget_->release(slots_.size() * sizeof(std::uint64_t));
    }

    std::size_t size() const noexcept { return count_ + (has_zero_ ? 1 : 0); }
    bool empty() const noexcept { return size() == 0; }

    std::uint64_t footprint_bytes() const noexcept {
        return slots_.size() * sizeof(std::uint64_t);
    }

    /// Pre-sizes the table for `expected` keys.
    void reserve(std::size_t expected) {
        std::size_t want = kMinSlots;
        while (want * 2 < expected * 3) want <<= 1; // keep load <= 2/3
        if (want > slots_.size()) rehash(want);
    }

    /// Returns true if the key was newly inserted.
    bool insert(std::uint64_t key) {
        if (key == 0) {
            const bool fresh = !has_zero_;
            has_zero_ = true;
            return fresh;
        }
        if ((count_ + 1) * 3 > slots_.size() * 2) {
            rehash(slots_.empty() ? kMinSlots : slots_.size() * 2);
        }
        std::size_t pos = mix64(key) & mask_;
        while (slots_[pos] != 0) {
            if (slots_[pos] == key) return false;
            pos = (pos + 1) & mask_;
        }
        slots_[pos] = key;
        ++count_;
        return true;
    }

    bool contains(std::uint64_t key) const noexcept {
        if (key == 0) return has_zero_;
        if (slots_.empty()) return false;
        std::size_t pos = mix64(key) & mask_;
        while (slots_[pos] != 0) {
            if (slots_[pos] == key) return true;
            pos = (pos + 1) & mask_;
        }
        return false;
    }

    template <typename F>
    void for_each(F&& f) const {
        if (has_zero_) f(std::uint64_t{0});
        for (std::uint64_t s : slots_) {
            if (s != 0) f(s);
        }
    }

    /// All keys, sorted ascending. The extraction buffer is budget-tracked.
    std::vector<std::uint64_t> extract_sorted() const;

    /// Drops the table and returns its footprint to the budget.
    void clear_and_release() {
        if (budget_ != nullptr) budget_->release(slots_.size() * sizeof(std::uint64_t));
        slots_.clear();
        slots_.shrink_to_fit();
        mask_ = 0;
        count_ = 0;
        has_zero_ = false;
    }

private:
    static constexpr std::size_t kMinSlots = 16;

    void detach() noexcept {
        slots_.clear();
        mask_ = 0;
        count_ = 0;
        has_zero_ = false;
        budget_ = nullptr;
    }

    void rehash(std::size_t new_slots);

    std::vector<std::uint64_t> slots_;
    std::size_t mask_ = 0;
    std::size_t count_ = 0;
    bool has_zero_ = false;
    MemoryBudget* budget_ = nullptr;
};

} // namespace idlat
