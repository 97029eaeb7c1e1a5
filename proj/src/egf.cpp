#include "graphcomp/egf.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "graphcomp/combinatorics.hpp"

namespace graphcomp {

bool next_multi_index(std::span<int> index, std::span<const int> bound) {
    for (std::size_t t = index.size(); t-- > 0;) {
        if (index[t] < bound[t]) {
            ++index[t];
            return true;
        }
        index[t] = 0;
    }
    return false;
}

namespace {

void require_same_shape(const Egf& f, const Egf& g, const char* op) {
    if (f.caps() != g.caps())
        throw std::invalid_argument(std::string(op) + ": operands have different caps");
}

int max_cap(const std::vector<int>& caps) {
    return *std::max_element(caps.begin(), caps.end());
}

} // namespace

Egf::Egf(std::vector<int> caps) : caps_(std::move(caps)) {
    if (caps_.empty()) throw std::invalid_argument("Egf: arity must be at least 1");
    std::size_t total = 1;
    for (int cap : caps_) {
        if (cap < 0) throw std::invalid_argument("Egf: caps must be non-negative");
        std::size_t extent = static_cast<std::size_t>(cap) + 1;
        if (total > std::numeric_limits<std::size_t>::max() / extent)
            throw std::invalid_argument("Egf: caps describe too many coefficients");
        total *= extent;
    }
    strides_.resize(caps_.size());
    std::size_t stride = 1;
    for (std::size_t t = caps_.size(); t-- > 0;) {
        strides_[t] = stride;
        stride *= static_cast<std::size_t>(caps_[t]) + 1;
    }
    coeffs_.resize(total);
}

Egf Egf::one(std::vector<int> caps) {
    Egf out(std::move(caps));
    out.coeffs_[0] = BigInt(1);
    return out;
}

std::size_t Egf::offset_of(std::span<const int> index) const {
    if (index.size() != caps_.size())
        throw std::out_of_range("Egf: index arity does not match series arity");
    std::size_t offset = 0;
    for (std::size_t t = 0; t < caps_.size(); ++t) {
        if (index[t] < 0 || index[t] > caps_[t])
            throw std::out_of_range("Egf: index outside caps");
        offset += static_cast<std::size_t>(index[t]) * strides_[t];
    }
    return offset;
}

const BigInt& Egf::coefficient(std::span<const int> index) const {
    return coeffs_[offset_of(index)];
}

void Egf::set_coefficient(std::span<const int> index, BigInt value) {
    coeffs_[offset_of(index)] = std::move(value);
}

Egf add(const Egf& f, const Egf& g) {
    require_same_shape(f, g, "add");
    Egf out(f.caps());
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
        out.coeffs_[i] = f.coeffs_[i] + g.coeffs_[i];
    }
    return out;
}

Egf scale(const Egf& f, const BigInt& factor) {
    Egf out(f.caps());
    if (factor.is_zero()) return out;
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
        out.coeffs_[i] = f.coeffs_[i] * factor;
    }
    return out;
}

Egf mul(const Egf& f, const Egf& g) {
    require_same_shape(f, g, "mul");
    const int arity = f.arity();
    const BinomialTable binom(max_cap(f.caps()));

    Egf out(f.caps());
    std::vector<int> m(arity, 0), i(arity, 0), j(arity, 0);
    std::size_t offset = 0;
    do {
        BigInt acc;
        std::fill(i.begin(), i.end(), 0);
        do {
            const BigInt& fv = f.coefficient(i);
            if (fv.is_zero()) continue;
            for (int t = 0; t < arity; ++t) j[t] = m[t] - i[t];
            const BigInt& gv = g.coefficient(j);
            if (gv.is_zero()) continue;
            BigInt weight = binom.at(m[0], i[0]);
            for (int t = 1; t < arity; ++t) weight *= binom.at(m[t], i[t]);
            acc += weight * fv * gv;
        } while (next_multi_index(i, m));
        out.coeffs_[offset++] = std::move(acc);
    } while (next_multi_index(m, f.caps()));
    return out;
}

Egf product(std::span<const Egf> factors) {
    if (factors.empty()) throw std::invalid_argument("product: empty factor list");
    Egf out = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) {
        out = mul(out, factors[i]);
    }
    return out;
}

// exp and log both walk the coefficient array in lexicographic multi-index
// order and apply the derivative recurrence along the first positive
// coordinate t of the target index m:
//
//   h(m) = sum over i <= m - e_t of  prod_s C((m-e_t)_s, i_s) * f(i + e_t) * h(m - e_t - i)
//
// which is d h / d x_t = (d f / d x_t) * h written in labeled normalization.
// Every h (resp. f) value on the right has a lexicographically smaller
// index, so a single forward pass fills the array. No division occurs:
// exp output is integral for integral input, and log divides only by the
// constant term h(0) = 1.

Egf exp(const Egf& f) {
    std::vector<int> origin(f.arity(), 0);
    if (!f.coefficient(origin).is_zero())
        throw std::invalid_argument("exp: series must have zero constant term");

    const int arity = f.arity();
    const BinomialTable binom(max_cap(f.caps()));
    Egf h(f.caps());
    h.coeffs_[0] = BigInt(1);

    std::vector<int> m(arity, 0), base(arity, 0), i(arity, 0), shifted(arity, 0), rest(arity, 0);
    std::size_t offset = 0;
    while (next_multi_index(m, f.caps())) {
        ++offset;
        int t = 0;
        while (m[t] == 0) ++t;
        base = m;
        --base[t];

        BigInt acc;
        std::fill(i.begin(), i.end(), 0);
        do {
            shifted = i;
            ++shifted[t];
            const BigInt& fv = f.coefficient(shifted);
            if (fv.is_zero()) continue;
            for (int s = 0; s < arity; ++s) rest[s] = base[s] - i[s];
            const BigInt& hv = h.coefficient(rest);
            if (hv.is_zero()) continue;
            BigInt weight = binom.at(base[0], i[0]);
            for (int s = 1; s < arity; ++s) weight *= binom.at(base[s], i[s]);
            acc += weight * fv * hv;
        } while (next_multi_index(i, base));
        h.coeffs_[offset] = std::move(acc);
    }
    return h;
}

Egf log(const Egf& h) {
    std::vector<int> origin(h.arity(), 0);
    if (h.coefficient(origin) != BigInt(1))
        throw std::invalid_argument("log: series must have constant term 1");

    const int arity = h.arity();
    const BinomialTable binom(max_cap(h.caps()));
    Egf f(h.caps());

    std::vector<int> m(arity, 0), base(arity, 0), i(arity, 0), shifted(arity, 0), rest(arity, 0);
    std::size_t offset = 0;
    while (next_multi_index(m, h.caps())) {
        ++offset;
        int t = 0;
        while (m[t] == 0) ++t;
        base = m;
        --base[t];

        // Solve the recurrence for f(m): the i = base term contributes
        // exactly f(m) * h(0) = f(m).
        BigInt acc = h.coeffs_[offset];
        std::fill(i.begin(), i.end(), 0);
        do {
            shifted = i;
            ++shifted[t];
            if (shifted == m) continue;
            const BigInt& fv = f.coefficient(shifted);
            if (fv.is_zero()) continue;
            for (int s = 0; s < arity; ++s) rest[s] = base[s] - i[s];
            const BigInt& hv = h.coefficient(rest);
            if (hv.is_zero()) continue;
            BigInt weight = binom.at(base[0], i[0]);
            for (int s = 1; s < arity; ++s) weight *= binom.at(base[s], i[s]);
            acc -= weight * fv * hv;
        } while (next_multi_index(i, base));
        f.coeffs_[offset] = std::move(acc);
    }
    return f;
}

} // namespace graphcomp
