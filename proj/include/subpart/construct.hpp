#pragma once

#include "subpart/bigint.hpp"
#include "subpart/partition.hpp"

#include <cstdint>
#include <vector>

namespace subpart {

/// GF(q^m) as an m-dimensional vector space over GF(q): elements are
/// coefficient vectors (x^0 first) modulo the lexicographically first monic
/// irreducible polynomial of degree m over GF(q).
class ExtensionField {
public:
    ExtensionField(Field base, int degree);

    const Field& base() const noexcept { return base_; }
    int degree() const noexcept { return m_; }
    std::uint64_t order() const noexcept { return order_; }
    /// Monic modulus, coefficients x^0..x^m over the base field.
    const Vector& modulus() const noexcept { return modulus_; }

    /// Element with the given code (base-q digits, x^0 least significant).
    Vector element(std::uint64_t code) const;
    Vector mul(const Vector& a, const Vector& b) const;
    Vector add(const Vector& a, const Vector& b) const;

private:
    Field base_;
    int m_;
    std::uint64_t order_;
    Vector modulus_;
};

/// Desarguesian t-spread of V(n,q): the 1-subspaces of GF(q^t)^{n/t}.
/// Throws Error(NotDivisible) unless t divides n.
SubspacePartition spread(const Field& field, int n, int t);
SubspacePartition spread(int n, int t, int q);

/// Partition of V(n,q) into one (n-d)-subspace (member 0) and q^{n-d}
/// d-subspaces, 1 <= d <= n/2. Throws Error(BadRange) otherwise.
SubspacePartition beutelspacher(const Field& field, int n, int d);
SubspacePartition beutelspacher(int n, int d, int q);

/// Replaces member `member_index` of p by the members of q, which must be a
/// partition of V(dim member, q) written in coordinates of the member's basis.
/// Throws Error(NotAPartitionOfMember) if q is not such a partition.
SubspacePartition refine(const SubspacePartition& p, std::size_t member_index, const SubspacePartition& q);

/// A partition with largest dimension exactly t and size sigma(n, t, q).
SubspacePartition minimal_partition(const Field& field, int n, int t);
SubspacePartition minimal_partition(int n, int t, int q);

/// Type-level data for the V(34,q) partition [11^{q^23+q^12}, 7^1, 5^{q^7}]
/// whose 11-supertail is not of minimum size; never instantiated.
struct NonMinimalSupertailExample {
    int n = 34;
    int q = 0;
    PartitionType type;
    BigInt size;
    BigInt sigma;       // sigma(34, 11, q)
    BigInt excess;      // size - sigma
    bool packing = false;
    bool dimension = false;
};

NonMinimalSupertailExample non_minimal_supertail_example(int q);

}  // namespace subpart
