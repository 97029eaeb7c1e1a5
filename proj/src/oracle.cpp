#include "graphcomp/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace graphcomp {

Graph::Graph(int vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("Graph: vertex count must be non-negative");
    adj_.resize(static_cast<std::size_t>(vertex_count));
}

void Graph::add_edge(int u, int w) {
    const int v = vertex_count();
    if (u < 0 || u >= v || w < 0 || w >= v)
        throw std::invalid_argument("Graph::add_edge: vertex index out of range");
    if (u == w) throw std::invalid_argument("Graph::add_edge: self-loops are not allowed");
    auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), w);
    if (it != adj_[u].end() && *it == w) return;
    adj_[u].insert(it, w);
    adj_[w].insert(std::lower_bound(adj_[w].begin(), adj_[w].end(), u), u);
    ++edges_;
}

bool Graph::adjacent(int u, int w) const {
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), w);
}

Graph complete_bipartite(int m, int n) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("complete_bipartite: sides must be non-negative");
    Graph g(m + n);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            g.add_edge(i, m + j);
        }
    }
    return g;
}

Graph complete_multipartite(const PartSpec& spec) {
    const auto& parts = spec.parts();
    std::vector<int> start(parts.size() + 1, 0);
    for (std::size_t p = 0; p < parts.size(); ++p) start[p + 1] = start[p] + parts[p];
    Graph g(start.back());
    for (std::size_t p = 0; p < parts.size(); ++p) {
        for (std::size_t q = p + 1; q < parts.size(); ++q) {
            for (int u = start[p]; u < start[p + 1]; ++u) {
                for (int w = start[q]; w < start[q + 1]; ++w) {
                    g.add_edge(u, w);
                }
            }
        }
    }
    return g;
}

EdgeListError::EdgeListError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

// Strips comments/blank lines; returns false for lines to skip.
bool meaningful_line(std::string_view line, std::string_view& trimmed) {
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return false;
    if (line[begin] == '#') return false;
    std::size_t end = line.find_last_not_of(" \t\r");
    trimmed = line.substr(begin, end - begin + 1);
    return true;
}

int parse_int_token(std::string_view token, int line_no, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
        throw EdgeListError(line_no, std::string("expected non-negative integer for ") + what +
                                         ", got \"" + std::string(token) + "\"");
    return value;
}

} // namespace

Graph from_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    int vertex_count = -1;
    Graph g(0);

    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view trimmed;
        if (!meaningful_line(raw, trimmed)) continue;

        std::istringstream fields{std::string(trimmed)};
        if (vertex_count < 0) {
            std::string tok, extra;
            fields >> tok;
            if (fields >> extra)
                throw EdgeListError(line_no, "expected a single vertex count, got \"" + std::string(trimmed) + "\"");
            vertex_count = parse_int_token(tok, line_no, "vertex count");
            g = Graph(vertex_count);
            continue;
        }

        std::string a, b, extra;
        fields >> a >> b;
        if (b.empty() || (fields >> extra))
            throw EdgeListError(line_no, "expected \"u w\", got \"" + std::string(trimmed) + "\"");
        int u = parse_int_token(a, line_no, "vertex");
        int w = parse_int_token(b, line_no, "vertex");
        if (u >= vertex_count || w >= vertex_count)
            throw EdgeListError(line_no, "vertex index " + std::to_string(std::max(u, w)) +
                                             " out of range (vertex count is " +
                                             std::to_string(vertex_count) + ")");
        if (u == w) throw EdgeListError(line_no, "self-loop " + std::to_string(u) + " " + std::to_string(w));
        g.add_edge(u, w);
    }
    if (vertex_count < 0) throw EdgeListError(line_no, "missing vertex count line");
    return g;
}

bool is_connected(const Graph& g, std::span<const int> block) {
    if (block.size() <= 1) return true;
    std::vector<char> in_block(g.vertex_count(), 0);
    for (int u : block) in_block.at(u) = 1;

    std::vector<int> stack{block[0]};
    std::vector<char> seen(g.vertex_count(), 0);
    seen[block[0]] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u)) {
            if (in_block[w] && !seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == block.size();
}

SetPartitionCursor::SetPartitionCursor(int element_count) {
    if (element_count < 0)
        throw std::invalid_argument("SetPartitionCursor: element count must be non-negative");
    labels_.assign(static_cast<std::size_t>(element_count), 0);
    prefix_max_.assign(static_cast<std::size_t>(element_count), 0);
}

int SetPartitionCursor::block_count() const {
    return labels_.empty() ? 0 : prefix_max_.back() + 1;
}

bool SetPartitionCursor::advance() {
    // Lexicographic RGS successor: find the rightmost label that may still
    // grow (labels_[i] <= prefix_max_[i-1]), bump it, zero the suffix.
    for (std::size_t i = labels_.size(); i-- > 1;) {
        if (labels_[i] <= prefix_max_[i - 1]) {
            ++labels_[i];
            prefix_max_[i] = std::max(prefix_max_[i - 1], labels_[i]);
            for (std::size_t j = i + 1; j < labels_.size(); ++j) {
                labels_[j] = 0;
                prefix_max_[j] = prefix_max_[i];
            }
            return true;
        }
    }
    return false;
}

namespace {

// All blocks of the partition given by `labels` induce connected subgraphs.
// One DFS per block, walking only same-label neighbors.
bool blocks_all_connected(const Graph& g, const std::vector<int>& labels, int block_count,
                          std::vector<int>& block_size, std::vector<int>& block_seed,
                          std::vector<char>& seen, std::vector<int>& stack) {
    const int v = g.vertex_count();
    block_size.assign(block_count, 0);
    block_seed.assign(block_count, -1);
    for (int u = 0; u < v; ++u) {
        int b = labels[u];
        if (block_size[b]++ == 0) block_seed[b] = u;
    }
    seen.assign(v, 0);
    for (int b = 0; b < block_count; ++b) {
        if (block_size[b] == 1) continue;
        int reached = 1;
        seen[block_seed[b]] = 1;
        stack.clear();
        stack.push_back(block_seed[b]);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u)) {
                if (labels[w] == b && !seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        if (reached != block_size[b]) return false;
    }
    return true;
}

} // namespace

BigInt count_compositions(const Graph& g) {
    const int v = g.vertex_count();
    if (v == 0) return BigInt(1);

    SetPartitionCursor cursor(v);
    std::vector<int> block_size, block_seed, stack;
    std::vector<char> seen;
    std::uint64_t count = 0;
    do {
        if (blocks_all_connected(g, cursor.labels(), cursor.block_count(), block_size, block_seed,
                                 seen, stack)) {
            ++count;
        }
    } while (cursor.advance());
    return BigInt::from_string(std::to_string(count));
}

BigInt connected_bipartite_bruteforce(int m, int n) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("connected_bipartite_bruteforce: sides must be non-negative");
    if (m == 0 && n == 0)
        throw std::domain_error("connected_bipartite_bruteforce: (0,0) is outside the domain");
    const std::int64_t edges = static_cast<std::int64_t>(m) * n;
    if (edges > 20)
        throw std::invalid_argument(
            "connected_bipartite_bruteforce: m*n exceeds the 2^20 enumeration limit");
    if (edges == 0) return BigInt(m + n == 1 ? 1 : 0);

    const int v = m + n;
    std::vector<int> root(v);
    std::uint64_t connected = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << edges); ++mask) {
        for (int u = 0; u < v; ++u) root[u] = u;
        auto find = [&](int u) {
            while (root[u] != u) {
                root[u] = root[root[u]];
                u = root[u];
            }
            return u;
        };
        int components = v;
        for (int bit = 0; bit < edges; ++bit) {
            if (!(mask & (std::uint32_t{1} << bit))) continue;
            int u = bit / n;
            int w = m + bit % n;
            int ru = find(u), rw = find(w);
            if (ru != rw) {
                root[ru] = rw;
                --components;
            }
        }
        if (components == 1) ++connected;
    }
    return BigInt(static_cast<std::int64_t>(connected));
}

} // namespace graphcomp
