#pragma once

#include "subpart/bigint.hpp"
#include "subpart/partition.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace subpart {

/// Member-in-hyperplane incidence for every hyperplane of V(n,q).
///
/// Hyperplane h is the kernel of the h-th normalized functional in
/// lexicographic order, so hyperplane indices coincide with PointIndex.
class IncidenceTable {
public:
    /// Tests every member against every hyperplane. Chunks of hyperplanes are
    /// processed by up to `threads` workers; the result does not depend on it.
    static IncidenceTable full_scan(const SubspacePartition& p, unsigned threads = 1);
    /// Marks, for each member, only the hyperplanes through it (the points of
    /// its annihilator). Independent of full_scan; the two must agree.
    static IncidenceTable dual_scan(const SubspacePartition& p);

    std::size_t hyperplane_count() const noexcept { return functionals_.size(); }
    std::size_t member_count() const noexcept { return members_; }
    bool contains(std::size_t h, std::size_t m) const noexcept { return cells_[h * members_ + m] != 0; }
    const Vector& functional(std::size_t h) const noexcept { return functionals_[h]; }

    friend bool operator==(const IncidenceTable&, const IncidenceTable&) = default;

private:
    IncidenceTable(std::vector<Vector> functionals, std::size_t members)
        : functionals_(std::move(functionals)), members_(members), cells_(functionals_.size() * members, 0) {}

    std::vector<Vector> functionals_;
    std::size_t members_;
    std::vector<std::uint8_t> cells_;
};

/// b_{H,d}: number of members of dimension d inside H. Only nonzero counts are stored.
struct HyperplaneProfile {
    Subspace hyperplane;
    std::map<int, std::uint64_t> b;

    std::uint64_t count(int d) const {
        auto it = b.find(d);
        return it == b.end() ? 0 : it->second;
    }
};

/// Throws Error(NotAHyperplane) if h is not an (n-1)-subspace of p's ambient space.
HyperplaneProfile profile(const SubspacePartition& p, const Subspace& h);

/// Multiplicities s_b of the profile vectors b_H (indexed by the occurring
/// dimensions in increasing order) over all hyperplanes.
struct ProfileHistogram {
    std::vector<int> dims;
    std::map<std::vector<std::uint64_t>, std::uint64_t> entries;

    std::uint64_t total() const;
};

ProfileHistogram histogram(const SubspacePartition& p);
ProfileHistogram histogram(const SubspacePartition& p, const IncidenceTable& table);

struct IdentityCheck {
    std::string name;
    BigInt lhs;
    BigInt rhs;
    bool holds() const { return lhs == rhs; }
};

struct HedenLehmannReport {
    bool hypothesis_met = false;         // two members with dimensions in [1, n-2]
    std::vector<int> checked_dims;
    std::vector<int> skipped_dims;       // occurring dimensions outside [1, n-2]
    std::vector<IdentityCheck> checks;
    bool incidence_paths_agree = false;  // full scan == dual scan

    bool passed() const;
};

/// The four double-counting identities over the profile histogram, with
/// Theta_j = 0 for j <= 0.
HedenLehmannReport verify_heden_lehmann(const SubspacePartition& p);

struct SizeIdentityReport {
    std::size_t hyperplanes_checked = 0;
    std::vector<std::size_t> violations;  // hyperplane indices

    bool passed() const { return violations.empty(); }
};

/// |P| = 1 + sum_i b_{H,d_i} q^{d_i} for every hyperplane H.
SizeIdentityReport verify_size_identity(const SubspacePartition& p);

/// c_H = q^{n-d_s} - sum_{i>=s} (n_{d_i} - b_{H,d_i}) q^{d_i-d_s}. Throws
/// Error(IdentityViolation) if c_H < 0 or sum_{i<s} (n_{d_i} - b_{H,d_i}) q^{d_i}
/// differs from c_H q^{d_s}; Error(BadCut) if d_s is not an occurring
/// dimension. At d_s = d_1 the lower sum is empty and c_H = 0.
BigInt c_of_hyperplane(const SubspacePartition& p, int cut, const Subspace& h);
/// c_H for every hyperplane, in IncidenceTable order.
std::vector<BigInt> c_values(const SubspacePartition& p, int cut);

struct BetaStats {
    int cut = 0;
    int top = 0;                       // t: largest dimension in the supertail
    std::size_t supertail_size = 0;
    std::vector<BigInt> beta;          // beta_H per hyperplane
    BigInt beta0;
    bool minimum_case = false;         // |ST| = q^t + 1 and cut < 2t
    std::optional<BigInt> c0;          // sum n_i Theta_i = (c0 q^cut - 1)/(q-1)
    std::vector<std::string> violations;

    bool passed() const { return violations.empty(); }
};

/// Throws Error(EmptySupertail) if no member lies below the cut.
BetaStats beta_stats(const SubspacePartition& p, int cut);

/// Parameters and checks of the regime n = k d + r_d (k >= 2, 1 <= r_d < d),
/// d = t + r_t (1 <= r_t < t), n_d = l q^d, |ST| = q^t + 1, where the family
/// is every member of the largest dimension d.
struct AppendixRegime {
    int d = 0, t = 0, k = 0, r_d = 0, r_t = 0;
    BigInt ell, delta, gamma;
    bool support_in_range = false;     // alpha_i != 0 => delta <= i <= l
    bool gap_empty = false;            // alpha_i == 0 for delta < i < l
    bool alpha_delta_matches = false;  // alpha_delta == Theta_{(k-1)d}
    bool x_matches = false;            // x == n_d Theta_{(k-1)d + r_d}
    bool y_matches = false;            // y == C(n_d,2) Theta_{(k-2)d + r_d}
};

/// Checks for a supertail of type [t^1, a^{q^t}], the family being the a-subspaces.
struct PairRegime {
    int t = 0, a = 0;
    bool divisibility = false;         // alpha_i != 0 => q^{t-a} | i
    bool empty_forces_top = false;     // b_{H,a} == 0 => b_{H,t} == 1
    BigInt alpha0_expected;            // Theta_{n-t} - Theta_{n-t-a}
    bool alpha0_matches = false;
    BigInt quadratic_lhs;              // sum_{i>=1} alpha_i (i - q^{t-a}) (i - q^t)
    BigInt quadratic_rhs;              // Theta_{n+t-a} - Theta_{n+t-2a} - q^{2t-a} alpha_0
    bool quadratic_matches = false;
    bool quadratic_nonpositive = false;
};

struct AlphaContext {
    int family_dim = 0;
    std::uint64_t family_size = 0;
    std::map<std::uint64_t, std::uint64_t> alpha;  // i -> alpha_i, nonzero entries
    BigInt x, y, z;                               // sum i a_i, sum C(i,2) a_i, sum a_i
    std::optional<AppendixRegime> appendix;
    std::optional<PairRegime> pair;
    std::vector<std::string> violations;

    std::uint64_t alpha_at(std::uint64_t i) const {
        auto it = alpha.find(i);
        return it == alpha.end() ? 0 : it->second;
    }
    bool passed() const { return violations.empty(); }
};

/// Histogram of how many family members (all members of the given
/// dimension) each hyperplane contains, with its moments. The appendix and
/// pair regimes are detected and checked automatically.
AlphaContext alpha_histogram(const SubspacePartition& p, int family_dim);

struct MomentReport {
    int family_dim = 0;
    std::uint64_t family_size = 0;
    IdentityCheck x, y, z;

    bool passed() const { return x.holds() && y.holds() && z.holds(); }
};

/// x = n_f Theta_{n-f}, y = C(n_f,2) Theta_{n-2f}, sum_{i>=0} alpha_i = Theta_n.
MomentReport verify_moment_identities(const SubspacePartition& p, int family_dim);

}  // namespace subpart
