#ifndef DEFLOG_BITS_HPP
#define DEFLOG_BITS_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace deflog {

/// Fixed-width dynamic bitset sized once at construction.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void clear() { for (auto& w : w_) w = 0; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }

    bool intersects(const Bits& other) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & other.w_[i]) return true;
        return false;
    }

    Bits& operator|=(const Bits& other) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= other.w_[i];
        return *this;
    }

    Bits& operator&=(const Bits& other) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= other.w_[i];
        return *this;
    }

    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                unsigned b = std::countr_zero(w);
                f(wi * 64 + b);
                w &= w - 1;
            }
        }
    }

    friend bool operator==(const Bits& a, const Bits& b) { return a.w_ == b.w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace deflog

#endif
