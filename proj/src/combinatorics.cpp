#include "graphcomp/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphcomp {

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be non-negative");
    if (k < 0 || k > n) return BigInt(0);
    k = std::min(k, n - k);
    // One Pascal row at a time, keeping only columns 0..k.
    std::vector<BigInt> row(static_cast<std::size_t>(k) + 1);
    row[0] = BigInt(1);
    for (std::int64_t i = 1; i <= n; ++i) {
        for (std::int64_t j = std::min(i, k); j >= 1; --j) {
            row[j] += row[j - 1];
        }
    }
    return row[k];
}

BigInt stirling2(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling2: arguments must be non-negative");
    if (k > n) return BigInt(0);
    if (n == 0) return BigInt(1); // S(0,0)
    if (k == 0) return BigInt(0);
    // Row-by-row triangle, keeping columns 0..k only.
    std::vector<BigInt> row(static_cast<std::size_t>(k) + 1);
    row[0] = BigInt(1); // row n'=0
    for (std::int64_t i = 1; i <= n; ++i) {
        for (std::int64_t j = std::min(i, k); j >= 1; --j) {
            row[j] = BigInt(j) * row[j] + row[j - 1];
        }
        row[0] = BigInt(0);
    }
    return row[k];
}

BigInt bell(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("bell: n must be non-negative");
    // Bell triangle (Aitken's array); bell(i) appears at the head of row i.
    std::vector<BigInt> prev{BigInt(1)};
    for (std::int64_t i = 1; i <= n; ++i) {
        std::vector<BigInt> row(static_cast<std::size_t>(i) + 1);
        row[0] = prev.back();
        for (std::size_t j = 1; j < row.size(); ++j) {
            row[j] = row[j - 1] + prev[j - 1];
        }
        prev = std::move(row);
    }
    return prev[0];
}

BigInt factorial(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("factorial: n must be non-negative");
    BigInt out(1);
    for (std::int64_t i = 2; i <= n; ++i) out *= BigInt(i);
    return out;
}

BinomialTable::BinomialTable(int max_n) {
    if (max_n < 0) throw std::invalid_argument("BinomialTable: max_n must be non-negative");
    rows_.resize(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) {
        auto& row = rows_[n];
        row.resize(static_cast<std::size_t>(n) + 1);
        row[0] = row[n] = BigInt(1);
        for (int k = 1; k < n; ++k) {
            row[k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
        }
    }
}

const BigInt& BinomialTable::at(int n, int k) const {
    if (n < 0 || n >= static_cast<int>(rows_.size()))
        throw std::out_of_range("BinomialTable::at: n outside precomputed range");
    if (k < 0 || k > n) return zero_;
    return rows_[n][k];
}

StirlingTable::StirlingTable(int max_n) {
    if (max_n < 0) throw std::invalid_argument("StirlingTable: max_n must be non-negative");
    rows_.resize(static_cast<std::size_t>(max_n) + 1);
    rows_[0] = {BigInt(1)};
    for (int n = 1; n <= max_n; ++n) {
        auto& row = rows_[n];
        row.resize(static_cast<std::size_t>(n) + 1);
        row[0] = BigInt(0);
        for (int k = 1; k <= n; ++k) {
            row[k] = rows_[n - 1][k - 1];
            if (k < n) row[k] += BigInt(k) * rows_[n - 1][k];
        }
    }
}

const BigInt& StirlingTable::at(int n, int k) const {
    if (n < 0 || n >= static_cast<int>(rows_.size()))
        throw std::out_of_range("StirlingTable::at: n outside precomputed range");
    if (k < 0 || k > n) return zero_;
    return rows_[n][k];
}

} // namespace graphcomp
