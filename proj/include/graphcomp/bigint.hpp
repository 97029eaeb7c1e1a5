#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace graphcomp {

/**
 * Arbitrary-precision signed integer.
 *
 * Sign-and-magnitude over little-endian 32-bit limbs. All arithmetic is
 * exact; there is no overflow and no rounding anywhere. The canonical form
 * has no leading zero limbs and a non-negative zero, so defaulted equality
 * is value equality.
 */
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t value);

    /// Parses an optionally signed decimal string. Throws
    /// std::invalid_argument on anything else (including the empty string).
    static BigInt from_string(std::string_view text);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }

    /// -1, 0 or +1.
    int signum() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    /// Exact decimal representation, e.g. "-34". Never scientific notation.
    std::string to_string() const;

    bool fits_uint64() const;
    /// Throws std::overflow_error unless 0 <= *this < 2^64.
    std::uint64_t to_uint64() const;

    /// Value modulo `modulus`, reduced into [0, modulus). Requires modulus > 0.
    std::uint64_t remainder_u64(std::uint64_t modulus) const;

    BigInt operator-() const;

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);

    friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
    friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
    friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);

    friend bool operator==(const BigInt&, const BigInt&) = default;
    std::strong_ordering operator<=>(const BigInt& rhs) const;

    friend std::ostream& operator<<(std::ostream& os, const BigInt& value);

private:
    // Little-endian limbs of the magnitude; empty means zero.
    std::vector<std::uint32_t> limbs_;
    bool negative_ = false;

    void trim();
    static int compare_magnitude(const BigInt& a, const BigInt& b);
    static std::vector<std::uint32_t> add_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
};

/// base^exponent with a non-negative integer exponent; pow(0, 0) == 1.
BigInt pow(const BigInt& base, std::uint64_t exponent);

} // namespace graphcomp
