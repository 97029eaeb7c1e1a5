#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graphcomp/bigint.hpp"
#include "graphcomp/multipartite.hpp"

namespace graphcomp {

/// Labeled simple undirected graph on vertices {0,...,v-1}.
class Graph {
public:
    explicit Graph(int vertex_count);

    /// Adds the undirected edge {u, w}. Duplicates are ignored; self-loops
    /// and out-of-range endpoints throw std::invalid_argument.
    void add_edge(int u, int w);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    std::int64_t edge_count() const { return edges_; }
    bool adjacent(int u, int w) const;
    const std::vector<int>& neighbors(int u) const { return adj_.at(u); }

private:
    std::vector<std::vector<int>> adj_; // sorted, unique
    std::int64_t edges_ = 0;
};

Graph complete_bipartite(int m, int n);
Graph complete_multipartite(const PartSpec& spec);

/// Error from the edge-list text parser; the 1-based source line is part of
/// the message and available via line().
class EdgeListError : public std::runtime_error {
public:
    EdgeListError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

/**
 * Parses the edge-list text format: the first meaningful line is the vertex
 * count, each following line is "u w" with 0 <= u,w < v. Lines starting
 * with '#' (after whitespace) are comments; blank lines are skipped.
 * Duplicate edges collapse; self-loops are rejected.
 */
Graph from_edge_list(std::string_view text);

/// True iff the subgraph induced by `block` is connected. Singleton blocks
/// are connected; the empty block is vacuously connected (callers working
/// with partitions never pass one).
bool is_connected(const Graph& g, std::span<const int> block);

/**
 * Streaming enumerator of all set partitions of {0,...,n-1}, encoded as
 * restricted-growth strings (block labels first appear in increasing
 * order), in lexicographic order. Yields each of the bell(n) partitions
 * exactly once.
 */
class SetPartitionCursor {
public:
    explicit SetPartitionCursor(int element_count);

    /// Block label per element; labels()[i] is the block containing i.
    const std::vector<int>& labels() const { return labels_; }
    int block_count() const;

    /// Steps to the lexicographic successor. Returns false once all
    /// partitions have been visited.
    bool advance();

private:
    std::vector<int> labels_;
    std::vector<int> prefix_max_;
};

/**
 * Number of compositions of g: set partitions of the vertex set whose every
 * block induces a connected subgraph. Pure enumeration over all bell(v)
 * partitions; the empty graph has exactly one composition (the empty
 * partition). Callers own the cost model.
 */
BigInt count_compositions(const Graph& g);

/**
 * Number of spanning connected subgraphs of K_{m,n}: edge subsets whose
 * graph on all m+n vertices is connected. Enumerates all 2^(m*n) subsets;
 * throws std::invalid_argument for m*n > 20 and std::domain_error for
 * (0,0).
 */
BigInt connected_bipartite_bruteforce(int m, int n);

} // namespace graphcomp
