#pragma once

// p-adic valuation value type: a nonnegative integer or INFINITY (the
// valuation of 0). Addition absorbs INFINITY, min treats it as neutral.

#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace mz {

class Valuation {
public:
    static Valuation finite(std::uint64_t v) {
        if (v == kInf) throw std::overflow_error("Valuation: finite value too large");
        return Valuation(v);
    }
    static Valuation infinity() { return Valuation(kInf); }

    bool is_infinite() const { return v_ == kInf; }
    std::uint64_t value() const {
        if (is_infinite()) throw std::domain_error("Valuation: INFINITY has no finite value");
        return v_;
    }

    friend Valuation operator+(Valuation a, Valuation b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return finite(a.v_ + b.v_);
    }
    friend Valuation min(Valuation a, Valuation b) { return a.v_ <= b.v_ ? a : b; }

    friend bool operator==(Valuation a, Valuation b) { return a.v_ == b.v_; }
    friend bool operator!=(Valuation a, Valuation b) { return a.v_ != b.v_; }
    // INFINITY compares greater than every finite valuation.
    friend bool operator<(Valuation a, Valuation b) { return a.v_ < b.v_; }
    friend bool operator<=(Valuation a, Valuation b) { return a.v_ <= b.v_; }
    friend bool operator>(Valuation a, Valuation b) { return a.v_ > b.v_; }
    friend bool operator>=(Valuation a, Valuation b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, Valuation v) {
        if (v.is_infinite()) return os << "inf";
        return os << v.v_;
    }

private:
    explicit Valuation(std::uint64_t v) : v_(v) {}
    static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t v_;
};

} // namespace mz
