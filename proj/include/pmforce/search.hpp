#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace pmforce {

/// Exact minimum hitting set of a set family over integer elements.
///
/// Branch-and-bound over elements in increasing order, include-branch first;
/// the lower bound is a greedy packing of pairwise disjoint unhit sets. Among
/// optimal hitting sets the lexicographically least one is returned. Every set
/// must be nonempty.
std::vector<int> min_hitting_set(std::span<const std::vector<int>> sets);

/// Symmetric conflict relation over `n` items stored as bit rows.
class ConflictGraph {
public:
    explicit ConflictGraph(int n);

    void add(int a, int b);
    [[nodiscard]] bool conflicts(int a, int b) const;
    [[nodiscard]] int size() const noexcept { return n_; }
    [[nodiscard]] std::span<const std::uint64_t> row(int a) const;

private:
    int n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

/// Exact maximum family of pairwise non-conflicting items (maximum independent
/// set), bounded by a greedy clique cover. Returns the lexicographically least
/// optimal family as sorted item indices.
std::vector<int> max_independent_family(const ConflictGraph& conflicts);

/// Builds conflicts between sets that share at least one element. Sets must be sorted.
ConflictGraph overlap_conflicts(std::span<const std::vector<int>> sets);

} // namespace pmforce
