#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "graphcomp/bigint.hpp"

namespace graphcomp {

/// Odometer step over multi-indices 0 <= index[t] <= bound[t], last
/// coordinate fastest. Returns false once the index has wrapped past the
/// last position (leaving it at all zeros).
bool next_multi_index(std::span<int> index, std::span<const int> bound);

/**
 * Truncated multivariate exponential generating function with exact integer
 * coefficients.
 *
 * The stored coefficient at (m1,...,mk) is the counting value f(m1,...,mk),
 * i.e. the series coefficient of prod x_t^{m_t} times prod m_t!. Under this
 * normalization the series product becomes a pure-integer binomial
 * convolution, and exp/log stay integer-valued on their domains.
 *
 * Caps are fixed at construction; every binary operation requires equal
 * caps, so truncation is always explicit. Storage is dense: all entries
 * within the caps exist, zero-filled by default.
 */
class Egf {
public:
    /// Zero series over the given caps. Arity is caps.size(), which must be
    /// at least 1; each cap must be non-negative.
    explicit Egf(std::vector<int> caps);

    static Egf zero(std::vector<int> caps) { return Egf(std::move(caps)); }

    /// Multiplicative identity: 1 at the all-zero index, 0 elsewhere.
    static Egf one(std::vector<int> caps);

    /// 0/1 series from a predicate over multi-indices.
    template <typename Pred>
    static Egf from_indicator(std::vector<int> caps, Pred&& pred) {
        Egf out(std::move(caps));
        std::vector<int> index(out.arity(), 0);
        std::size_t offset = 0;
        do {
            if (pred(std::span<const int>(index))) out.coeffs_[offset] = BigInt(1);
            ++offset;
        } while (next_multi_index(index, out.caps_));
        return out;
    }

    int arity() const { return static_cast<int>(caps_.size()); }
    const std::vector<int>& caps() const { return caps_; }
    std::size_t size() const { return coeffs_.size(); }

    /// Coefficient at `index` (counting value). Throws std::out_of_range if
    /// the index is outside the caps.
    const BigInt& coefficient(std::span<const int> index) const;
    void set_coefficient(std::span<const int> index, BigInt value);

    friend bool operator==(const Egf&, const Egf&) = default;

    friend Egf add(const Egf& f, const Egf& g);
    friend Egf scale(const Egf& f, const BigInt& factor);
    friend Egf mul(const Egf& f, const Egf& g);
    friend Egf exp(const Egf& f);
    friend Egf log(const Egf& h);

private:
    std::vector<int> caps_;
    std::vector<std::size_t> strides_; // first coordinate slowest
    std::vector<BigInt> coeffs_;

    std::size_t offset_of(std::span<const int> index) const;
};

/// Coefficientwise sum. Throws std::invalid_argument on a caps mismatch.
Egf add(const Egf& f, const Egf& g);

/// Coefficientwise multiple.
Egf scale(const Egf& f, const BigInt& factor);

/// Series product, truncated at the caps: the binomial convolution
/// h(m) = sum over splits i+j=m of prod_t C(m_t,i_t) * f(i) * g(j).
Egf mul(const Egf& f, const Egf& g);

/// Left fold of mul over a non-empty list of identically shaped series.
Egf product(std::span<const Egf> factors);

/// Series exponential. Requires a zero constant term; the result is
/// integer-valued by construction (the recurrence below never divides).
Egf exp(const Egf& f);

/// Series logarithm, the inverse of exp on its domain. Requires constant
/// term 1.
Egf log(const Egf& h);

} // namespace graphcomp
