#pragma once

#include "subpart/bigint.hpp"
#include "subpart/hstats.hpp"
#include "subpart/partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace subpart {

/// Assert: violations inside proved hypotheses are failures, everything else
/// is a finding. Explore: every outcome is a finding and nothing fails.
enum class CheckMode { Assert, Explore };

enum class Classification {
    SpreadCase,     // one dimension d_1, n_1 = q^{d_1} + 1, dim W = 2 d_1
    OnePlusQtCase,  // two dimensions, n_1 = q^{d_2}, n_2 = 1, dim W = d_1 + d_2
    CorollaryCase,  // union is a d_s-subspace
    OtherSubspace,  // union is a subspace matching none of the above
    NotASubspace,
    NotMinimum,
};

std::string to_string(Classification c);
std::string to_string(CheckMode m);

struct BoundReport {
    int cut = 0;
    int below = 0;
    std::size_t supertail_size = 0;
    BigInt sigma_bound;
    BigInt slack;  // |ST| - sigma
    bool holds = false;
};

/// |ST| >= sigma_q(d_s, d_{s-1}). Throws Error(BadCut).
BoundReport supertail_bound_check(const SubspacePartition& p, int cut);

struct UnionStructure {
    std::vector<Vector> union_points;
    std::optional<Subspace> subspace;
    Classification classification = Classification::NotASubspace;
};

/// Recognizes the union of pairwise point-disjoint subspaces and classifies
/// it by the numerology of the members. A union of dimension `cut` that is
/// neither case (a) nor (b) is CorollaryCase. Throws Error(NotDisjoint).
UnionStructure union_structure(const std::vector<Subspace>& members, int n, const Field& field,
                               std::optional<int> cut = std::nullopt);

struct SupertailReport {
    CheckMode mode = CheckMode::Assert;
    int cut = 0;    // d_s
    int below = 0;  // d_{s-1}
    int s = 0;
    std::vector<Subspace> members;
    PartitionType supertail_type;
    std::size_t size = 0;
    BigInt sigma_bound;
    bool is_minimum = false;
    bool gap = false;  // d_s < 2 d_{s-1}
    bool cond_i = false;
    bool cond_ii = false;
    bool cond_iii = false;
    bool hypotheses_met = false;  // is_minimum && gap && (i || ii || iii)
    UnionStructure structure;
    Classification classification = Classification::NotASubspace;
    std::optional<BigInt> beta0;
    std::optional<BigInt> c0;
    std::optional<AlphaContext> alpha;
    std::vector<std::string> checks;    // asserted statements that held
    std::vector<std::string> failures;
    std::vector<std::string> findings;

    bool passed() const { return failures.empty(); }
};

/// The full supertail analysis at cut d_s. Throws Error(BadCut).
SupertailReport theorem15_check(const SubspacePartition& p, int cut, CheckMode mode = CheckMode::Assert);

struct Lemma31Report {
    int cut = 0, below = 0, smallest = 0;
    bool holds = false;  // d_s <= d_{s-1} + d_1
};

/// Throws Error(HypothesisNotMet) unless |ST| = sigma and d_s < 2 d_{s-1}.
Lemma31Report lemma31_check(const SubspacePartition& p, int cut);

struct Corollary16Report {
    enum class Branch { I, II };
    int s = 0;
    int cut = 0;       // d_s
    int next_cut = 0;  // d_{s+1}
    bool branch_i_hypotheses = false;
    bool branch_ii_hypotheses = false;
    Branch branch = Branch::II;
    BigInt bound;
    std::size_t extended_size = 0;  // |d_{s+1}-supertail|
    bool holds = false;
    std::optional<BigInt> branch_i_bound;  // evaluated too when both branches apply
    std::vector<std::string> findings;
};

/// Bound on the d_{s+1}-supertail. When both branches' hypotheses hold the
/// second branch is asserted and the first is recorded as a finding.
/// Throws Error(HypothesisNotMet) if s = m, |ST| != sigma, or neither branch applies.
Corollary16Report corollary16_check(const SubspacePartition& p, int cut);

}  // namespace subpart
