#include "graphcomp/bigint.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace graphcomp {

namespace {

constexpr std::uint64_t kBase = std::uint64_t{1} << 32;

// 10^9 is the largest power of ten below 2^32; decimal I/O works in these chunks.
constexpr std::uint32_t kDecChunk = 1'000'000'000u;
constexpr int kDecChunkDigits = 9;

} // namespace

BigInt::BigInt(std::int64_t value) {
    if (value == 0) return;
    negative_ = value < 0;
    // Avoid overflow on INT64_MIN by negating in unsigned space.
    std::uint64_t magnitude = negative_ ? ~static_cast<std::uint64_t>(value) + 1
                                        : static_cast<std::uint64_t>(value);
    limbs_.push_back(static_cast<std::uint32_t>(magnitude & 0xffffffffu));
    if (magnitude >> 32) limbs_.push_back(static_cast<std::uint32_t>(magnitude >> 32));
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::compare_magnitude(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    const std::vector<std::uint32_t>& longer = a.size() >= b.size() ? a : b;
    const std::vector<std::uint32_t>& shorter = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> out;
    out.reserve(longer.size() + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < longer.size(); ++i) {
        std::uint64_t sum = carry + longer[i];
        if (i < shorter.size()) sum += shorter[i];
        out.push_back(static_cast<std::uint32_t>(sum & 0xffffffffu));
        carry = sum >> 32;
    }
    if (carry) out.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

std::vector<std::uint32_t> BigInt::sub_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow;
        if (i < b.size()) diff -= static_cast<std::int64_t>(b[i]);
        if (diff < 0) {
            diff += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(diff));
    }
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    if (!out.is_zero()) out.negative_ = !out.negative_;
    return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (negative_ == rhs.negative_) {
        limbs_ = add_magnitude(limbs_, rhs.limbs_);
        return *this;
    }
    int cmp = compare_magnitude(*this, rhs);
    if (cmp == 0) {
        limbs_.clear();
        negative_ = false;
    } else if (cmp > 0) {
        limbs_ = sub_magnitude(limbs_, rhs.limbs_);
    } else {
        limbs_ = sub_magnitude(rhs.limbs_, limbs_);
        negative_ = rhs.negative_;
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
    if (this == &rhs) {
        limbs_.clear();
        negative_ = false;
        return *this;
    }
    negative_ = !negative_;
    *this += rhs;
    if (!is_zero()) negative_ = !negative_;
    return *this;
}

BigInt operator*(const BigInt& lhs, const BigInt& rhs) {
    BigInt out;
    if (lhs.is_zero() || rhs.is_zero()) return out;
    out.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
        const std::uint64_t a = lhs.limbs_[i];
        if (a == 0) continue;
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            // a * b + existing + carry < 2^64 since each factor is < 2^32.
            std::uint64_t cur = a * rhs.limbs_[j] + out.limbs_[i + j] + carry;
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + rhs.limbs_.size();
        while (carry) {
            std::uint64_t cur = out.limbs_[k] + carry;
            out.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    out.negative_ = lhs.negative_ != rhs.negative_;
    out.trim();
    return out;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
    *this = *this * rhs;
    return *this;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
    if (negative_ != rhs.negative_)
        return negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int cmp = compare_magnitude(*this, rhs);
    if (negative_) cmp = -cmp;
    if (cmp < 0) return std::strong_ordering::less;
    if (cmp > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

BigInt BigInt::from_string(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size())
        throw std::invalid_argument("BigInt::from_string: no digits in \"" + std::string(text) + "\"");
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("BigInt::from_string: invalid digit in \"" + std::string(text) + "\"");
    }

    BigInt out;
    // Consume the digits in 9-digit chunks: out = out * 10^9 + chunk.
    while (pos < text.size()) {
        std::size_t take = std::min<std::size_t>(kDecChunkDigits, text.size() - pos);
        std::uint32_t chunk = 0;
        std::uint32_t chunk_base = 1;
        for (std::size_t i = 0; i < take; ++i) {
            chunk = chunk * 10 + static_cast<std::uint32_t>(text[pos + i] - '0');
            chunk_base *= 10;
        }
        std::uint64_t carry = chunk;
        for (std::size_t i = 0; i < out.limbs_.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(out.limbs_[i]) * chunk_base + carry;
            out.limbs_[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        while (carry) {
            out.limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
            carry >>= 32;
        }
        pos += take;
    }
    out.trim();
    out.negative_ = negative && !out.limbs_.empty();
    return out;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> mag = limbs_;
    std::vector<std::uint32_t> chunks;
    while (!mag.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = mag.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | mag[i];
            mag[i] = static_cast<std::uint32_t>(cur / kDecChunk);
            rem = cur % kDecChunk;
        }
        chunks.push_back(static_cast<std::uint32_t>(rem));
        while (!mag.empty() && mag.back() == 0) mag.pop_back();
    }

    std::string out;
    out.reserve(chunks.size() * kDecChunkDigits + 1);
    if (negative_) out.push_back('-');
    out += std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out.append(kDecChunkDigits - part.size(), '0');
        out += part;
    }
    return out;
}

bool BigInt::fits_uint64() const {
    return !negative_ && limbs_.size() <= 2;
}

std::uint64_t BigInt::to_uint64() const {
    if (!fits_uint64())
        throw std::overflow_error("BigInt::to_uint64: value out of range");
    std::uint64_t out = 0;
    if (limbs_.size() > 0) out = limbs_[0];
    if (limbs_.size() > 1) out |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    return out;
}

std::uint64_t BigInt::remainder_u64(std::uint64_t modulus) const {
    if (modulus == 0) throw std::invalid_argument("BigInt::remainder_u64: zero modulus");
    // Fold limbs from the top: rem = (rem * 2^32 + limb) mod m, using unsigned
    // __int128 so any 64-bit modulus works.
    unsigned __int128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        rem = ((rem << 32) | limbs_[i]) % modulus;
    }
    std::uint64_t out = static_cast<std::uint64_t>(rem);
    if (negative_ && out != 0) out = modulus - out;
    return out;
}

std::ostream& operator<<(std::ostream& os, const BigInt& value) {
    return os << value.to_string();
}

BigInt pow(const BigInt& base, std::uint64_t exponent) {
    if (exponent == 0) return BigInt(1);
    // Left-to-right binary powering: the multiplications by `base` stay cheap
    // when the base is small, which is the common case here (i^n in the
    // closed-form bipartite count).
    int bits = 64;
    while (bits > 0 && ((exponent >> (bits - 1)) & 1) == 0) --bits;
    BigInt result(1);
    for (int b = bits; b-- > 0;) {
        result *= result;
        if ((exponent >> b) & 1) result *= base;
    }
    return result;
}

} // namespace graphcomp
