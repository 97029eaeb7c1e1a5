#include "graphcomp/multipartite.hpp"

#include <stdexcept>

#include "graphcomp/egf.hpp"

namespace graphcomp {

PartSpec::PartSpec(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("PartSpec: at least one part is required");
    for (int a : parts_) {
        if (a < 0) throw std::invalid_argument("PartSpec: part sizes must be non-negative");
    }
}

std::int64_t PartSpec::total_vertices() const {
    std::int64_t total = 0;
    for (int a : parts_) total += a;
    return total;
}

bool multipartite_connected(std::span<const int> sizes) {
    int positive = 0;
    std::int64_t total = 0;
    for (int a : sizes) {
        if (a > 0) ++positive;
        total += a;
    }
    return positive >= 2 || total == 1;
}

BigInt count_multipartite(const PartSpec& spec) {
    Egf indicator = Egf::from_indicator(spec.parts(), multipartite_connected);
    return exp(indicator).coefficient(spec.parts());
}

BigInt multipartite_edge_count(const PartSpec& spec) {
    const auto& parts = spec.parts();
    BigInt acc;
    std::int64_t suffix = 0;
    for (std::size_t i = parts.size(); i-- > 0;) {
        acc += BigInt(parts[i]) * BigInt(suffix);
        suffix += parts[i];
    }
    return acc;
}

} // namespace graphcomp
