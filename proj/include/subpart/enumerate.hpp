#pragma once

#include "subpart/bigint.hpp"
#include "subpart/space.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace subpart {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

/// Number of d-subspaces of V(n,q). Throws Error(BadRange) unless 0 <= d <= n.
BigInt gaussian_binomial(int n, int d, int q);

/// Deterministic stream of the d-subspaces of V(n,q).
///
/// Order: pivot-column patterns in lexicographic order; within a pattern the
/// free entries run as an odometer with the last free entry fastest.
class SubspaceStream {
public:
    SubspaceStream(Field field, int n, int d);

    std::optional<Subspace> next();

    /// Restricts the stream to one pivot pattern. Patterns are disjoint, so
    /// a pool of consumers can each take a slice of pivot_patterns().
    static SubspaceStream for_pattern(Field field, int n, std::vector<int> pivots);
    static std::vector<std::vector<int>> pivot_patterns(int n, int d);

private:
    bool advance_pattern();
    void start_pattern();

    Field field_;
    int n_;
    int d_;
    bool single_pattern_ = false;
    bool done_ = false;
    std::vector<int> pivots_;
    std::vector<std::pair<int, int>> free_;  // (row, col) of each free entry
    std::vector<Element> odometer_;
};

/// All d-subspaces of V(n,q) in stream order.
/// Throws Error(BudgetExceeded) if their number exceeds the budget.
std::vector<Subspace> all_subspaces(const Field& field, int n, int d,
                                    std::uint64_t budget = kDefaultEnumerationBudget);

/// The hyperplane kernel(a) for a nonzero functional a.
Subspace hyperplane_of(std::span<const Element> functional, const Field& field);

/// The Theta_n hyperplanes of V(n,q), one per normalized functional, in the
/// lexicographic order of those functionals.
std::vector<Subspace> all_hyperplanes(const Field& field, int n);

/// The Theta_{n - dim U} hyperplanes containing U.
std::vector<Subspace> hyperplanes_containing(const Subspace& u);

/// Returns the subspace whose point set is exactly the given points (nonzero
/// vectors of length n, each standing for its 1-subspace), or nullopt.
std::optional<Subspace> recognize_subspace(std::span<const Vector> point_set, int n, const Field& field);

/// The hyperplane-count criterion: a set of Theta_d points lying in exactly
/// Theta_{n-d} hyperplanes is a d-subspace.
struct HyperplaneCriterion {
    std::uint64_t point_count = 0;
    std::optional<int> dimension;  // d with Theta_d == point_count, if any
    std::uint64_t containing_hyperplanes = 0;
    bool is_subspace = false;
};

HyperplaneCriterion hyperplane_criterion(std::span<const Vector> point_set, int n, const Field& field);

}  // namespace subpart
