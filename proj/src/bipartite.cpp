#include "graphcomp/bipartite.hpp"

#include <stdexcept>

#include "graphcomp/combinatorics.hpp"
#include "graphcomp/egf.hpp"

namespace graphcomp {

namespace {

const BigInt kZero(0);

bool bipartite_connected(int m, int n) {
    return (m > 0 && n > 0) || m + n == 1;
}

// Row m of the a-table from the Stirling closed form. Shared by the full
// table builder and the single-row fast path in count_bipartite.
std::vector<BigInt> a_row_stirling(int m, const StirlingTable& stirling,
                                   const BinomialTable& binom) {
    std::vector<BigInt> row(static_cast<std::size_t>(m) + 2);
    for (int i = 1; i <= m + 1; ++i) {
        BigInt acc;
        for (int k = i; k <= m + 1; ++k) {
            BigInt term = binom.at(k - 1, i - 1) * stirling.at(m + 1, k);
            if ((k - i) % 2 == 0) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        row[i] = std::move(acc);
    }
    return row;
}

} // namespace

const BigInt& ATable::at(int m, int i) const {
    if (m < 0 || m > max_row()) throw std::out_of_range("ATable::at: row outside table");
    if (i < 0 || i > m + 1) return kZero;
    return rows[m][i];
}

ATable a_table_stirling(int max_row) {
    if (max_row < 0) throw std::invalid_argument("a_table_stirling: max_row must be non-negative");
    const StirlingTable stirling(max_row + 1);
    const BinomialTable binom(max_row + 1);
    ATable table;
    table.rows.reserve(static_cast<std::size_t>(max_row) + 1);
    for (int m = 0; m <= max_row; ++m) {
        table.rows.push_back(a_row_stirling(m, stirling, binom));
    }
    return table;
}

ATable a_table_recurrence(int max_row) {
    if (max_row < 0)
        throw std::invalid_argument("a_table_recurrence: max_row must be non-negative");
    const BinomialTable binom(max_row == 0 ? 0 : max_row - 1);
    ATable table;
    table.rows.resize(static_cast<std::size_t>(max_row) + 1);
    table.rows[0] = {BigInt(0), BigInt(1)};
    for (int m = 1; m <= max_row; ++m) {
        auto& row = table.rows[m];
        row.resize(static_cast<std::size_t>(m) + 2);
        for (int n = 1; n <= m + 1; ++n) {
            BigInt acc;
            for (int i = 0; i <= m - 1; ++i) {
                acc += binom.at(m - 1, i) * table.at(m - 1 - i, n - 1);
            }
            for (int i = 1; i <= m - 1; ++i) {
                acc -= binom.at(m - 1, i) * table.at(m - 1 - i, n);
            }
            row[n] = std::move(acc);
        }
    }
    return table;
}

std::vector<BigInt> rho_row(int m) {
    if (m < 0) throw std::invalid_argument("rho_row: m must be non-negative");
    const StirlingTable stirling(m + 1);
    // Accumulate sum_k S(m+1,k) (z-1)^(k-1), then shift once for the
    // leading factor z.
    std::vector<BigInt> acc(static_cast<std::size_t>(m) + 1);
    std::vector<BigInt> power{BigInt(1)}; // (z-1)^(k-1)
    for (int k = 1; k <= m + 1; ++k) {
        const BigInt& s = stirling.at(m + 1, k);
        for (std::size_t d = 0; d < power.size(); ++d) {
            acc[d] += s * power[d];
        }
        // power *= (z - 1)
        power.resize(power.size() + 1);
        for (std::size_t d = power.size(); d-- > 0;) {
            BigInt next = d > 0 ? power[d - 1] : BigInt(0);
            next -= power[d];
            power[d] = std::move(next);
        }
    }
    std::vector<BigInt> out(static_cast<std::size_t>(m) + 2);
    for (std::size_t d = 0; d <= static_cast<std::size_t>(m); ++d) {
        out[d + 1] = std::move(acc[d]);
    }
    return out;
}

BigInt count_bipartite(int m, std::uint64_t n) {
    if (m < 0) throw std::invalid_argument("count_bipartite: m must be non-negative");
    const StirlingTable stirling(m + 1);
    const BinomialTable binom(m + 1);
    const std::vector<BigInt> row = a_row_stirling(m, stirling, binom);
    BigInt acc;
    for (int i = 1; i <= m + 1; ++i) {
        if (row[i].is_zero()) continue;
        acc += row[i] * pow(BigInt(i), n);
    }
    return acc;
}

BigInt count_bipartite_via_egf(int m, int n) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("count_bipartite_via_egf: sides must be non-negative");
    Egf indicator = Egf::from_indicator({m, n}, [](std::span<const int> idx) {
        return bipartite_connected(idx[0], idx[1]);
    });
    const std::vector<int> target{m, n};
    return exp(indicator).coefficient(target);
}

BigInt connected_bipartite_count(int m, int n) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("connected_bipartite_count: sides must be non-negative");
    if (m == 0 && n == 0)
        throw std::domain_error("connected_bipartite_count: (0,0) is outside the domain");
    Egf all_graphs({m, n});
    std::vector<int> idx{0, 0};
    do {
        all_graphs.set_coefficient(
            idx, pow(BigInt(2), static_cast<std::uint64_t>(idx[0]) * static_cast<std::uint64_t>(idx[1])));
    } while (next_multi_index(idx, all_graphs.caps()));
    const std::vector<int> target{m, n};
    return log(all_graphs).coefficient(target);
}

} // namespace graphcomp
