#include "subpart/space.hpp"

#include "subpart/error.hpp"

#include <algorithm>
#include <string>

namespace subpart {

BigInt theta(int i, int q) {
    if (i <= 0) return 0;
    return (ipow(q, i) - 1) / (q - 1);
}

std::uint64_t theta_u64(int i, int q) {
    if (i <= 0) return 0;
    std::uint64_t t = 0;
    for (int k = 0; k < i; ++k) t = t * static_cast<std::uint64_t>(q) + 1;
    return t;
}

Element dot(std::span<const Element> a, std::span<const Element> b, const Field& f) {
    Element s = 0;
    for (std::size_t j = 0; j < a.size(); ++j) s = f.add(s, f.mul(a[j], b[j]));
    return s;
}

Vector normalize(std::span<const Element> v, const Field& f) {
    Vector out(v.begin(), v.end());
    auto it = std::find_if(out.begin(), out.end(), [](Element x) { return x != 0; });
    if (it == out.end() || *it == 1) return out;
    const Element s = f.inv(*it);
    for (; it != out.end(); ++it) *it = f.mul(*it, s);
    return out;
}

int rref_in_place(std::vector<Element>& m, int rows, int n, const Field& f) {
    const auto N = static_cast<std::size_t>(n);
    auto at = [&](int r, int c) -> Element& { return m[static_cast<std::size_t>(r) * N + static_cast<std::size_t>(c)]; };
    int rank = 0;
    for (int col = 0; col < n && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r) {
            if (at(r, col) != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != rank) {
            for (int c = 0; c < n; ++c) std::swap(at(piv, c), at(rank, c));
        }
        const Element s = f.inv(at(rank, col));
        for (int c = col; c < n; ++c) at(rank, c) = f.mul(at(rank, c), s);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || at(r, col) == 0) continue;
            const Element factor = f.neg(at(r, col));
            for (int c = col; c < n; ++c) at(r, c) = f.add(at(r, c), f.mul(factor, at(rank, c)));
        }
        ++rank;
    }
    m.resize(static_cast<std::size_t>(rank) * N);
    return rank;
}

Subspace::Subspace(Field field, int n) : field_(std::move(field)), n_(n), dim_(0) {
    if (n < 0) throw Error(ErrorCode::BadRange, "negative ambient dimension");
}

Subspace Subspace::from_rows(Field field, int n, std::vector<Element> rows) {
    if (n <= 0 || rows.size() % static_cast<std::size_t>(n) != 0) {
        if (rows.empty()) return Subspace(std::move(field), n);
        throw Error(ErrorCode::DimensionMismatch, "row data is not a multiple of n = " + std::to_string(n));
    }
    for (auto x : rows) {
        if (x >= field.q()) throw Error(ErrorCode::BadRange, "element code out of range for GF(" + std::to_string(field.q()) + ")");
    }
    const int r = static_cast<int>(rows.size() / static_cast<std::size_t>(n));
    const int rank = rref_in_place(rows, r, n, field);
    return Subspace(std::move(field), n, rank, std::move(rows));
}

Subspace Subspace::full(Field field, int n) {
    std::vector<Element> rows(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = 1;
    return Subspace(std::move(field), n, n, std::move(rows));
}

std::vector<int> Subspace::pivots() const {
    std::vector<int> piv;
    piv.reserve(static_cast<std::size_t>(dim_));
    for (int i = 0; i < dim_; ++i) {
        auto r = row(i);
        piv.push_back(static_cast<int>(std::find_if(r.begin(), r.end(), [](Element x) { return x != 0; }) - r.begin()));
    }
    return piv;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) noexcept {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.field_.q() <=> b.field_.q(); c != 0) return c;
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.rows_.begin(), a.rows_.end(), b.rows_.begin(), b.rows_.end());
}

namespace {

void require_same_ambient(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != w.ambient_dim() || !(u.field() == w.field())) {
        throw Error(ErrorCode::DimensionMismatch, "subspaces live in different ambient spaces");
    }
}

}  // namespace

Subspace span(std::span<const Vector> vectors, int n, const Field& field) {
    std::vector<Element> rows;
    rows.reserve(vectors.size() * static_cast<std::size_t>(n));
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != n) {
            throw Error(ErrorCode::DimensionMismatch,
                        "vector of length " + std::to_string(v.size()) + " in V(" + std::to_string(n) + ",q)");
        }
        rows.insert(rows.end(), v.begin(), v.end());
    }
    return Subspace::from_rows(field, n, std::move(rows));
}

Subspace annihilator(const Subspace& u) {
    const int n = u.ambient_dim();
    const auto& f = u.field();
    if (u.dim() == 0) return Subspace::full(f, n);
    const auto piv = u.pivots();
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : piv) is_pivot[static_cast<std::size_t>(c)] = true;
    // Kernel basis: one vector per free column.
    std::vector<Element> rows;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        Vector x(static_cast<std::size_t>(n), 0);
        x[static_cast<std::size_t>(free)] = 1;
        for (int i = 0; i < u.dim(); ++i) {
            x[static_cast<std::size_t>(piv[static_cast<std::size_t>(i)])] = f.neg(u.row(i)[static_cast<std::size_t>(free)]);
        }
        rows.insert(rows.end(), x.begin(), x.end());
    }
    return Subspace::from_rows(f, n, std::move(rows));
}

Subspace sum_subspace(const Subspace& u, const Subspace& w) {
    require_same_ambient(u, w);
    std::vector<Element> rows = u.rows();
    rows.insert(rows.end(), w.rows().begin(), w.rows().end());
    return Subspace::from_rows(u.field(), u.ambient_dim(), std::move(rows));
}

Subspace intersect(const Subspace& u, const Subspace& w) {
    require_same_ambient(u, w);
    return annihilator(sum_subspace(annihilator(u), annihilator(w)));
}

bool contains(const Subspace& u, std::span<const Element> v) {
    if (static_cast<int>(v.size()) != u.ambient_dim()) {
        throw Error(ErrorCode::DimensionMismatch, "vector length does not match the ambient dimension");
    }
    const auto& f = u.field();
    Vector r(v.begin(), v.end());
    const auto piv = u.pivots();
    for (int i = 0; i < u.dim(); ++i) {
        const Element c = r[static_cast<std::size_t>(piv[static_cast<std::size_t>(i)])];
        if (c == 0) continue;
        auto row = u.row(i);
        const Element factor = f.neg(c);
        for (std::size_t j = 0; j < r.size(); ++j) r[j] = f.add(r[j], f.mul(factor, row[j]));
    }
    return std::all_of(r.begin(), r.end(), [](Element x) { return x == 0; });
}

bool contains_subspace(const Subspace& u, const Subspace& w) {
    require_same_ambient(u, w);
    for (int i = 0; i < w.dim(); ++i) {
        if (!contains(u, w.row(i))) return false;
    }
    return true;
}

Vector embed(const Subspace& u, std::span<const Element> coords) {
    const auto& f = u.field();
    Vector v(static_cast<std::size_t>(u.ambient_dim()), 0);
    for (int i = 0; i < u.dim(); ++i) {
        const Element c = coords[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        auto row = u.row(i);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.add(v[j], f.mul(c, row[j]));
    }
    return v;
}

std::vector<Vector> points(const Subspace& u) {
    std::vector<Vector> out;
    const int d = u.dim();
    if (d == 0) return out;
    const int q = u.field().q();
    out.reserve(theta_u64(d, q));
    // Coefficient vectors whose first nonzero entry is one; with an RREF basis
    // the combination is already normalized.
    for (int lead = 0; lead < d; ++lead) {
        Vector coeff(static_cast<std::size_t>(d), 0);
        coeff[static_cast<std::size_t>(lead)] = 1;
        for (;;) {
            out.push_back(embed(u, coeff));
            int i = d - 1;
            while (i > lead && ++coeff[static_cast<std::size_t>(i)] == q) {
                coeff[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i == lead) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

PointIndex::PointIndex(Field field, int n) : field_(std::move(field)), n_(n) {
    const int q = field_.q();
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        total *= static_cast<std::uint64_t>(q);
        if (total > (std::uint64_t{1} << 24)) {
            throw Error(ErrorCode::BudgetExceeded, "V(" + std::to_string(n) + "," + std::to_string(q) + ") is too large to index");
        }
    }
    points_ = points(Subspace::full(field_, n));
    code_to_index_.assign(total, kNone);
    for (std::size_t i = 0; i < points_.size(); ++i) code_to_index_[code(points_[i])] = static_cast<std::uint32_t>(i);
}

std::uint64_t PointIndex::code(std::span<const Element> v) const noexcept {
    std::uint64_t c = 0;
    for (auto x : v) c = c * static_cast<std::uint64_t>(field_.q()) + x;
    return c;
}

std::uint32_t PointIndex::index_of(std::span<const Element> v) const {
    if (static_cast<int>(v.size()) != n_) throw Error(ErrorCode::DimensionMismatch, "vector length does not match the index");
    const auto nv = normalize(v, field_);
    return code_to_index_[code(nv)];
}

std::vector<std::uint32_t> PointIndex::indices(const Subspace& u) const {
    if (u.ambient_dim() != n_ || !(u.field() == field_)) {
        throw Error(ErrorCode::DimensionMismatch, "subspace is not in the indexed space");
    }
    std::vector<std::uint32_t> out;
    for (const auto& p : points(u)) out.push_back(code_to_index_[code(p)]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace subpart
