#pragma once

#include <cstdint>
#include <vector>

#include "graphcomp/bigint.hpp"

namespace graphcomp {

/**
 * Triangular coefficient array a_{m,i} with
 *
 *   C(K_{m,n}) = sum over i = 1..m+1 of a_{m,i} * i^n.
 *
 * Row m holds entries i = 0..m+1; a_{m,0} is always 0, a_{m,m+1} is always
 * 1, and every row sums to 1 (the m-by-0 graph has a single composition).
 */
struct ATable {
    std::vector<std::vector<BigInt>> rows;

    int max_row() const { return static_cast<int>(rows.size()) - 1; }

    /// a_{m,i} with the vanishing convention: 0 for i < 0 or i > m+1.
    const BigInt& at(int m, int i) const;
};

/// Builds rows 0..max_row from Stirling numbers of the second kind:
/// a_{m,i} = sum over k of C(k-1, i-1) * (-1)^(k-i) * S(m+1, k).
ATable a_table_stirling(int max_row);

/// Builds the same table from the two-sum recurrence
/// a_{m,n} = sum_{i=0}^{m-1} C(m-1,i) a_{m-1-i,n-1}
///         - sum_{i=1}^{m-1} C(m-1,i) a_{m-1-i,n}.
ATable a_table_recurrence(int max_row);

/// Coefficients of rho_m(z) = z * sum_k S(m+1,k) (z-1)^(k-1), expanded in
/// powers of z (index = power). Identical to a-table row m.
std::vector<BigInt> rho_row(int m);

/// C(K_{m,n}) by the closed form: builds only a-table row m, then sums
/// a_{m,i} * i^n with big-integer powers. The fast path for large n.
BigInt count_bipartite(int m, std::uint64_t n);

/// C(K_{m,n}) by EGF extraction: coefficient (m,n) of exp of the
/// connected-K_{m,n} indicator series.
BigInt count_bipartite_via_egf(int m, int n);

/// Number of connected labeled bipartite graphs with parts of sizes m and n
/// (all m+n vertices present, sides distinguished): coefficient (m,n) of
/// log of the series 2^(ij). Throws std::domain_error for (0,0).
BigInt connected_bipartite_count(int m, int n);

} // namespace graphcomp
