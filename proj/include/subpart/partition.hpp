#pragma once

#include "subpart/bigint.hpp"
#include "subpart/space.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace subpart {

/// The type [d_1^{n_1}, ..., d_m^{n_m}] of a partition: occurring dimensions
/// in increasing order with positive multiplicities. Multiplicities are exact
/// so that types of partitions far too large to build can still be checked.
class PartitionType {
public:
    struct Entry {
        int dim;
        BigInt count;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    PartitionType() = default;
    /// Entries in any order; repeated dimensions are merged, zero counts dropped.
    explicit PartitionType(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    std::vector<int> dims() const;
    BigInt count(int dim) const;
    BigInt size() const;
    bool empty() const noexcept { return entries_.empty(); }

    /// "[3^8,2^1,1^4]": largest dimension first.
    std::string to_string() const;

    friend bool operator==(const PartitionType&, const PartitionType&) = default;

private:
    std::vector<Entry> entries_;
};

/// A collection of nontrivial subspaces of V(n,q) that should cover every
/// nonzero vector exactly once. Construction does not check the cover; use
/// validate().
class SubspacePartition {
public:
    SubspacePartition(Field field, int n, std::vector<Subspace> members);

    const Field& field() const noexcept { return field_; }
    int ambient_dim() const noexcept { return n_; }
    const std::vector<Subspace>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    PartitionType type() const;
    /// Number of members of dimension d.
    std::size_t count(int d) const;

    friend bool operator==(const SubspacePartition&, const SubspacePartition&) = default;

private:
    Field field_;
    int n_;
    std::vector<Subspace> members_;
};

/// The partition {V} of V(n,q).
SubspacePartition singleton_partition(const Field& field, int n);

struct ValidationFailure {
    enum class Kind { UncoveredPoint, DoublyCoveredPoint, TrivialMember, ForeignMember };
    Kind kind;
    Vector point;                 // for point failures
    std::size_t member_a = 0;     // offending member, or first cover
    std::size_t member_b = 0;     // second cover
    std::string describe() const;
};

struct ValidationReport {
    bool valid = false;
    PartitionType type;
    std::size_t size = 0;
    std::vector<ValidationFailure> failures;  // every violation, not just the first
};

ValidationReport validate(const SubspacePartition& p);

/// Sum n_d (q^d - 1) == q^n - 1.
bool check_packing(const PartitionType& type, int n, int q);
/// n >= d_i + d_j for distinct occurring dimensions, n >= 2 d_i when n_{d_i} >= 2.
bool check_dimension(const PartitionType& type, int n);

struct SigmaParams {
    int n, t, q, k, r;  // n = k t + r, 0 <= r < t
};
/// Throws Error(BadRange) unless 1 <= t < n.
SigmaParams sigma_params(int n, int t, int q);
/// Minimum size of a partition of V(n,q) whose largest member has dimension t.
BigInt sigma(int n, int t, int q);

enum class CutMode {
    Occurring,   // the cut must be an occurring dimension d_s with s >= 2
    Permissive,  // any cut with d_1 < d
};

/// Members of dimension below the cut d.
struct Supertail {
    int cut = 0;           // d_s
    int below = 0;         // d_{s-1}: largest dimension in the supertail
    int s = 0;             // 1-based index of the cut among occurring dims (0 if not occurring)
    std::vector<Subspace> members;
    std::vector<std::size_t> member_indices;  // positions in the partition
    PartitionType type;
};

/// Throws Error(BadCut) if d <= d_1, or (Occurring mode) d is not an occurring dimension.
Supertail supertail(const SubspacePartition& p, int d, CutMode mode = CutMode::Occurring);

/// The strict partial-spread upper bound l q^d + (q^{r_d} + q^{r_d - 1})/2 + 1
/// for n = k d + r_d, 1 <= r_d < d, l = q^{r_d} sum_{i=0}^{k-2} q^{i d}.
/// The expression can be a half-integer, so it is kept doubled.
struct PartialSpreadBound {
    int n, d, q, k, r;
    BigInt ell;
    BigInt twice_value;

    /// True iff a partial spread of this size satisfies size < bound.
    bool admits(const BigInt& size) const { return 2 * size < twice_value; }
    /// Largest size strictly below the bound.
    BigInt max_size() const { return (twice_value - 1) / 2; }
};

/// Throws Error(BadRange) when r_d == 0 or d is out of 1 <= d < n.
PartialSpreadBound drake_freeman_bound(int n, int d, int q);

}  // namespace subpart
