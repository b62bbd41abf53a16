#pragma once

#include "subpart/analyze.hpp"
#include "subpart/partition.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace subpart {

inline constexpr std::uint64_t kDefaultOraclePointBudget = 127;

/// Prune partial covers with more than `limit` members of dimension below `cut`.
struct BelowCutLimit {
    int cut = 0;
    std::size_t limit = 0;
};

struct SearchOptions {
    int max_dim = 0;                             // 0 means n - 1
    std::optional<PartitionType> type_filter;    // emit only partitions of exactly this type
    std::optional<std::size_t> size_limit;       // emit only partitions with at most this many members
    std::optional<std::uint64_t> count_limit;    // stop after this many emissions
    std::optional<BelowCutLimit> below_cut;
    bool canonical_seed = false;                 // one first member per dimension
    std::uint64_t node_budget = 0;               // 0: unlimited
    double time_limit_seconds = 0;               // 0: unlimited
    std::uint64_t point_budget = kDefaultOraclePointBudget;
    unsigned threads = 1;
    std::string checkpoint_path;                 // written when a budget runs out
    std::string resume_path;                     // continue from a checkpoint
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t emitted = 0;
    bool complete = false;  // the whole tree was explored
};

/// Return false to stop the search.
using PartitionSink = std::function<bool(const SubspacePartition&)>;

/// Exact cover of the points of V(n,q) by subspaces of dimension 1..max_dim.
/// Always branches on the least uncovered point; candidates through it are
/// tried largest dimension first, then in SubspaceStream order. Every
/// labeled partition is emitted exactly once unless canonical_seed is set.
///
/// Throws Error(BudgetExceeded) when Theta_n exceeds the point budget, or when
/// the node or time budget runs out (after writing the checkpoint, if
/// requested). With threads > 1 the subtrees under the first member are
/// distributed over workers and emitted in sequential order; checkpoints
/// then are not supported.
SearchStats enumerate_partitions(int n, int q, const SearchOptions& options, const PartitionSink& sink);
std::vector<SubspacePartition> collect_partitions(int n, int q, const SearchOptions& options);

struct MinSizeResult {
    std::size_t size = 0;
    SubspacePartition witness;
    SearchStats stats;
};

/// Smallest partition of V(n,q) whose largest member has dimension exactly
/// t, by branch and bound. Throws Error(BadRange) unless 1 <= t < n and
/// Error(BudgetExceeded) as enumerate_partitions.
MinSizeResult min_partition_size(int n, int t, int q, const SearchOptions& options = {});

struct ConjectureFinding {
    PartitionType type;
    int cut = 0;
    Classification classification = Classification::NotASubspace;
    std::optional<int> union_dim;
    std::string note;
};

struct ConjectureReport {
    int n = 0, q = 0;
    int cut_lo = 0, cut_hi = 0;
    std::uint64_t partitions = 0;
    std::uint64_t cuts_examined = 0;
    std::uint64_t minimum_gap_cuts = 0;  // |ST| = sigma and d_{s-1} < d_s < 2 d_{s-1}
    std::uint64_t proved_cases = 0;      // one of conditions (i)-(iii) also holds
    std::uint64_t open_cases = 0;
    std::uint64_t asserted_failures = 0;
    std::vector<std::string> failures;         // proved-regime violations
    std::vector<ConjectureFinding> findings;   // open-regime outcomes
    bool open_regime_reached = false;
    SearchStats stats;
};

/// Examines every partition (dimensions up to n - 1) at every occurring cut
/// in [cut_lo, cut_hi]. Proved cases are asserted; open cases become findings.
ConjectureReport conjecture_search(int n, int q, int cut_lo, int cut_hi, const SearchOptions& options = {});

}  // namespace subpart
