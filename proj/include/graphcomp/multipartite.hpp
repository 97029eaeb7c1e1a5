#pragma once

#include <span>
#include <vector>

#include "graphcomp/bigint.hpp"

namespace graphcomp {

/// Part sizes (a_1,...,a_n) of a complete multipartite graph K_{a_1,...,a_n}.
/// At least one part; parts of size 0 are allowed (they contribute nothing).
class PartSpec {
public:
    explicit PartSpec(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int part_count() const { return static_cast<int>(parts_.size()); }
    std::int64_t total_vertices() const;

private:
    std::vector<int> parts_;
};

/// Connectivity of K with the given part sizes: connected iff at least two
/// parts are non-empty, or the graph is a single vertex.
bool multipartite_connected(std::span<const int> sizes);

/// Number of compositions of K_{a_1,...,a_n}, computed as the coefficient
/// at (a_1,...,a_n) of exp of the connectivity indicator series.
BigInt count_multipartite(const PartSpec& spec);

/// Edge count of K_{a_1,...,a_n}: sum over i < j of a_i * a_j.
BigInt multipartite_edge_count(const PartSpec& spec);

} // namespace graphcomp
