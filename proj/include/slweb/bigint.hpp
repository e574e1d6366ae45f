#ifndef SLWEB_BIGINT_HPP
#define SLWEB_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace slweb {

// Signed arbitrary-precision integer, base 2^32.  Only the operations
// fraction-free elimination needs: +, -, *, exact division, compare.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);

    bool is_zero() const { return mag_.empty(); }
    int sign() const { return mag_.empty() ? 0 : (neg_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    // Exact quotient; throws if the division leaves a remainder.
    BigInt div_exact(const BigInt& o) const;

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }

    bool operator==(const BigInt& o) const { return neg_ == o.neg_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }

    std::string str() const;  // decimal

    // Value reduced modulo a positive 62-bit prime (for the modular
    // rank fast path).
    std::uint64_t mod(std::uint64_t p) const;

private:
    bool neg_ = false;
    std::vector<std::uint32_t> mag_;  // little-endian, no leading zeros

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
};

}  // namespace slweb

#endif
