#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ekr {

// Flat bit row sized at construction; unused high bits stay zero.
class BitRow {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    BitRow() = default;
    explicit BitRow(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }

    void set(std::size_t i) { words_[i >> 6] |= 1ULL << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1ULL; }

    void set_all() {
        for (auto& w : words_) w = ~0ULL;
        trim();
    }
    void clear() {
        for (auto& w : words_) w = 0ULL;
    }
    void flip_all() {
        for (auto& w : words_) w = ~w;
        trim();
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::size_t count() const {
        std::size_t total = 0;
        for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    std::size_t and_count(const BitRow& other) const {
        std::size_t total = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return total;
    }

    BitRow& operator&=(const BitRow& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    bool operator==(const BitRow& other) const = default;

    std::size_t find_first() const { return scan(0); }
    std::size_t find_next(std::size_t prev) const { return scan(prev + 1); }

private:
    void trim() {
        if (bits_ & 63) words_.back() &= (1ULL << (bits_ & 63)) - 1;
        if (bits_ == 0 && !words_.empty()) words_.back() = 0;
    }

    std::size_t scan(std::size_t from) const {
        if (from >= bits_) return npos;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~0ULL << (from & 63));
        while (true) {
            if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size()) return npos;
            w = words_[wi];
        }
    }

    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace ekr
