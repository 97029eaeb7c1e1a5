#pragma once

#include <cstdint>
#include <vector>

#include "graphcomp/bigint.hpp"

namespace graphcomp {

/// C(n, k). Requires n >= 0; returns 0 for k < 0 or k > n, so sums over
/// formal ranges vanish where they should.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Stirling number of the second kind S(n, k): partitions of an n-set into
/// k non-empty blocks. Requires n, k >= 0.
BigInt stirling2(std::int64_t n, std::int64_t k);

/// n-th Bell number (total set partitions of an n-set). Requires n >= 0.
BigInt bell(std::int64_t n);

/// n!. Requires n >= 0.
BigInt factorial(std::int64_t n);

/**
 * Precomputed Pascal triangle, rows 0..max_n. All entries are built by the
 * Pascal identity; no division is involved. at() follows the same
 * out-of-range-is-zero convention as binomial().
 */
class BinomialTable {
public:
    explicit BinomialTable(int max_n);

    int max_n() const { return static_cast<int>(rows_.size()) - 1; }

    /// Requires 0 <= n <= max_n.
    const BigInt& at(int n, int k) const;

private:
    std::vector<std::vector<BigInt>> rows_;
    BigInt zero_;
};

/**
 * Precomputed triangle of Stirling numbers of the second kind, rows
 * 0..max_n, built by S(n,k) = k*S(n-1,k) + S(n-1,k-1).
 */
class StirlingTable {
public:
    explicit StirlingTable(int max_n);

    int max_n() const { return static_cast<int>(rows_.size()) - 1; }

    /// Requires 0 <= n <= max_n; returns 0 for k < 0 or k > n.
    const BigInt& at(int n, int k) const;

private:
    std::vector<std::vector<BigInt>> rows_;
    BigInt zero_;
};

} // namespace graphcomp
