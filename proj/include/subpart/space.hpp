#pragma once

#include "subpart/bigint.hpp"
#include "subpart/gfq.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace subpart {

/// A vector of V(n,q): n element codes.
using Vector = std::vector<Element>;

/// Number of points of an i-subspace, (q^i - 1)/(q - 1); zero for i <= 0.
BigInt theta(int i, int q);
std::uint64_t theta_u64(int i, int q);

/// Dot product sum a_j b_j over the field.
Element dot(std::span<const Element> a, std::span<const Element> b, const Field& f);

/// Scales v so its first nonzero coordinate is one. The zero vector is returned unchanged.
Vector normalize(std::span<const Element> v, const Field& f);

/// Row-reduces an r x n row-major matrix in place to RREF, drops zero rows
/// and returns the rank.
int rref_in_place(std::vector<Element>& m, int rows, int n, const Field& f);

/// A subspace of V(n,q), stored as its unique reduced row-echelon basis.
/// Two subspaces are equal as sets iff their bases are identical.
class Subspace {
public:
    /// The zero subspace of V(n,q).
    Subspace(Field field, int n);

    /// Span of the rows of an r x n row-major matrix.
    static Subspace from_rows(Field field, int n, std::vector<Element> rows);
    static Subspace full(Field field, int n);

    const Field& field() const noexcept { return field_; }
    int ambient_dim() const noexcept { return n_; }
    int dim() const noexcept { return dim_; }

    const std::vector<Element>& rows() const noexcept { return rows_; }
    std::span<const Element> row(int i) const noexcept {
        return {rows_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n_),
                static_cast<std::size_t>(n_)};
    }
    std::vector<int> pivots() const;

    friend bool operator==(const Subspace& a, const Subspace& b) noexcept {
        return a.n_ == b.n_ && a.field_ == b.field_ && a.rows_ == b.rows_;
    }
    /// Total order: by dimension, then lexicographically by basis.
    friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) noexcept;

private:
    Subspace(Field field, int n, int dim, std::vector<Element> rows)
        : field_(std::move(field)), n_(n), dim_(dim), rows_(std::move(rows)) {}

    Field field_;
    int n_;
    int dim_;
    std::vector<Element> rows_;
};

/// Smallest subspace containing all vectors (each of length n).
Subspace span(std::span<const Vector> vectors, int n, const Field& field);

/// Orthogonal complement under the standard dot product (dimension n - dim U).
Subspace annihilator(const Subspace& u);
Subspace intersect(const Subspace& u, const Subspace& w);
Subspace sum_subspace(const Subspace& u, const Subspace& w);

bool contains(const Subspace& u, std::span<const Element> v);
bool contains_subspace(const Subspace& u, const Subspace& w);

/// One normalized representative per 1-subspace of U, sorted lexicographically.
std::vector<Vector> points(const Subspace& u);

/// Image of a vector given in coordinates of u's basis: sum c_i * row_i.
Vector embed(const Subspace& u, std::span<const Element> coords);

/// Dense numbering of the points of V(n,q) in lexicographic order of their
/// normalized representatives. Point 0 is (0,...,0,1).
class PointIndex {
public:
    static constexpr std::uint32_t kNone = 0xffffffffu;

    PointIndex(Field field, int n);

    const Field& field() const noexcept { return field_; }
    int ambient_dim() const noexcept { return n_; }
    std::size_t size() const noexcept { return points_.size(); }

    const Vector& point(std::size_t i) const noexcept { return points_[i]; }
    /// Index of the point spanned by the nonzero vector v, kNone for zero.
    std::uint32_t index_of(std::span<const Element> v) const;
    /// Indices of every point of u, ascending.
    std::vector<std::uint32_t> indices(const Subspace& u) const;

private:
    std::uint64_t code(std::span<const Element> v) const noexcept;

    Field field_;
    int n_;
    std::vector<Vector> points_;
    std::vector<std::uint32_t> code_to_index_;
};

}  // namespace subpart

template <>
struct std::hash<subpart::Subspace> {
    std::size_t operator()(const subpart::Subspace& s) const noexcept {
        std::size_t h = static_cast<std::size_t>(s.ambient_dim()) * 1000003u + static_cast<std::size_t>(s.field().q());
        for (auto x : s.rows()) h = h * 131u + x;
        return h;
    }
};
