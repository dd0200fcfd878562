#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bgph {

// Arithmetic context for the prime field F_p. Residues travel as uint16_t;
// p is capped at 251 so that c*x + y for residues stays below 2^16, which is
// the bound the vectorized row kernels rely on.
class prime_field {
public:
    explicit prime_field(unsigned p) : p_(static_cast<std::uint16_t>(p)) {
        if (p < 2 || p > 251) throw std::invalid_argument("field characteristic must be a prime in [2, 251]");
        for (unsigned d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument("field characteristic must be prime");
        inv_.assign(p_, 0);
        for (std::uint32_t a = 1; a < p_; ++a)
            for (std::uint32_t b = 1; b < p_; ++b)
                if (a * b % p_ == 1) { inv_[a] = static_cast<std::uint16_t>(b); break; }
    }

    std::uint16_t p() const { return p_; }

    std::uint16_t add(std::uint16_t a, std::uint16_t b) const {
        std::uint32_t s = std::uint32_t(a) + b;
        return static_cast<std::uint16_t>(s >= p_ ? s - p_ : s);
    }
    std::uint16_t sub(std::uint16_t a, std::uint16_t b) const {
        return static_cast<std::uint16_t>(a >= b ? a - b : a + p_ - b);
    }
    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
        return static_cast<std::uint16_t>(std::uint32_t(a) * b % p_);
    }
    std::uint16_t neg(std::uint16_t a) const { return a == 0 ? 0 : static_cast<std::uint16_t>(p_ - a); }
    std::uint16_t inv(std::uint16_t a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return inv_[a];
    }

    // Reduces an arbitrary signed integer; used for the (-1)^k signs of the
    // second differential.
    std::uint16_t from_int(long long v) const {
        long long r = v % p_;
        if (r < 0) r += p_;
        return static_cast<std::uint16_t>(r);
    }

    bool operator==(const prime_field& o) const { return p_ == o.p_; }

private:
    std::uint16_t p_;
    std::vector<std::uint16_t> inv_;
};

}  // namespace bgph
