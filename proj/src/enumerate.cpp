#include "subpart/enumerate.hpp"

#include "subpart/error.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace subpart {

BigInt gaussian_binomial(int n, int d, int q) {
    if (d < 0 || n < 0 || d > n) {
        throw Error(ErrorCode::BadRange, "gaussian_binomial(" + std::to_string(n) + ", " + std::to_string(d) + ")");
    }
    BigInt num = 1;
    BigInt den = 1;
    for (int i = 0; i < d; ++i) {
        num *= ipow(q, n - i) - 1;
        den *= ipow(q, i + 1) - 1;
    }
    return num / den;
}

SubspaceStream::SubspaceStream(Field field, int n, int d) : field_(std::move(field)), n_(n), d_(d) {
    if (d < 0 || d > n) throw Error(ErrorCode::BadRange, "subspace dimension out of range");
    pivots_.resize(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) pivots_[static_cast<std::size_t>(i)] = i;
    start_pattern();
}

SubspaceStream SubspaceStream::for_pattern(Field field, int n, std::vector<int> pivots) {
    const int d = static_cast<int>(pivots.size());
    SubspaceStream s(std::move(field), n, d);
    if (!std::is_sorted(pivots.begin(), pivots.end()) ||
        std::adjacent_find(pivots.begin(), pivots.end()) != pivots.end() ||
        (!pivots.empty() && (pivots.front() < 0 || pivots.back() >= n))) {
        throw Error(ErrorCode::BadRange, "invalid pivot pattern");
    }
    s.pivots_ = std::move(pivots);
    s.single_pattern_ = true;
    s.start_pattern();
    return s;
}

std::vector<std::vector<int>> SubspaceStream::pivot_patterns(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> c(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) c[static_cast<std::size_t>(i)] = i;
    for (;;) {
        out.push_back(c);
        int i = d - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - d + i) --i;
        if (i < 0) break;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < d; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

void SubspaceStream::start_pattern() {
    free_.clear();
    std::vector<bool> is_pivot(static_cast<std::size_t>(n_), false);
    for (int c : pivots_) is_pivot[static_cast<std::size_t>(c)] = true;
    for (int r = 0; r < d_; ++r) {
        for (int c = pivots_[static_cast<std::size_t>(r)] + 1; c < n_; ++c) {
            if (!is_pivot[static_cast<std::size_t>(c)]) free_.emplace_back(r, c);
        }
    }
    odometer_.assign(free_.size(), 0);
}

bool SubspaceStream::advance_pattern() {
    if (single_pattern_) return false;
    int i = d_ - 1;
    while (i >= 0 && pivots_[static_cast<std::size_t>(i)] == n_ - d_ + i) --i;
    if (i < 0) return false;
    ++pivots_[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d_; ++j) pivots_[static_cast<std::size_t>(j)] = pivots_[static_cast<std::size_t>(j - 1)] + 1;
    start_pattern();
    return true;
}

std::optional<Subspace> SubspaceStream::next() {
    if (done_) return std::nullopt;
    const auto N = static_cast<std::size_t>(n_);
    std::vector<Element> rows(static_cast<std::size_t>(d_) * N, 0);
    for (int r = 0; r < d_; ++r) rows[static_cast<std::size_t>(r) * N + static_cast<std::size_t>(pivots_[static_cast<std::size_t>(r)])] = 1;
    for (std::size_t k = 0; k < free_.size(); ++k) {
        rows[static_cast<std::size_t>(free_[k].first) * N + static_cast<std::size_t>(free_[k].second)] = odometer_[k];
    }
    auto result = Subspace::from_rows(field_, n_, std::move(rows));
    if (d_ == 0) {
        done_ = true;
        return Subspace(field_, n_);
    }

    // Advance: last free entry fastest.
    std::size_t k = free_.size();
    while (k > 0) {
        --k;
        if (++odometer_[k] < field_.q()) return result;
        odometer_[k] = 0;
    }
    if (!advance_pattern()) done_ = true;
    return result;
}

std::vector<Subspace> all_subspaces(const Field& field, int n, int d, std::uint64_t budget) {
    const BigInt count = gaussian_binomial(n, d, field.q());
    if (count > budget) {
        throw Error(ErrorCode::BudgetExceeded, count.str() + " subspaces exceed the enumeration budget of " + std::to_string(budget));
    }
    std::vector<Subspace> out;
    out.reserve(static_cast<std::size_t>(count));
    SubspaceStream stream(field, n, d);
    while (auto s = stream.next()) out.push_back(std::move(*s));
    return out;
}

Subspace hyperplane_of(std::span<const Element> functional, const Field& field) {
    const int n = static_cast<int>(functional.size());
    auto a = Subspace::from_rows(field, n, std::vector<Element>(functional.begin(), functional.end()));
    if (a.dim() != 1) throw Error(ErrorCode::NotAHyperplane, "zero functional");
    return annihilator(a);
}

std::vector<Subspace> all_hyperplanes(const Field& field, int n) {
    if (n < 1) throw Error(ErrorCode::BadRange, "hyperplanes need n >= 1");
    std::vector<Subspace> out;
    for (const auto& a : points(Subspace::full(field, n))) out.push_back(hyperplane_of(a, field));
    return out;
}

std::vector<Subspace> hyperplanes_containing(const Subspace& u) {
    if (u.dim() >= u.ambient_dim()) return {};
    std::vector<Subspace> out;
    for (const auto& a : points(annihilator(u))) out.push_back(hyperplane_of(a, u.field()));
    return out;
}

namespace {

std::vector<Vector> normalized_set(std::span<const Vector> point_set, int n, const Field& field) {
    std::set<Vector> pts;
    for (const auto& v : point_set) {
        if (static_cast<int>(v.size()) != n) throw Error(ErrorCode::DimensionMismatch, "point of wrong length");
        auto nv = normalize(v, field);
        if (std::all_of(nv.begin(), nv.end(), [](Element x) { return x == 0; })) {
            throw Error(ErrorCode::BadRange, "the zero vector is not a point");
        }
        pts.insert(std::move(nv));
    }
    return {pts.begin(), pts.end()};
}

}  // namespace

std::optional<Subspace> recognize_subspace(std::span<const Vector> point_set, int n, const Field& field) {
    const auto pts = normalized_set(point_set, n, field);
    if (pts.empty()) return std::nullopt;
    auto s = span(pts, n, field);
    // Every given point lies in s; equal cardinality means the sets coincide.
    if (theta_u64(s.dim(), field.q()) != pts.size()) return std::nullopt;
    return s;
}

HyperplaneCriterion hyperplane_criterion(std::span<const Vector> point_set, int n, const Field& field) {
    const auto pts = normalized_set(point_set, n, field);
    HyperplaneCriterion c;
    c.point_count = pts.size();
    for (int d = 1; d <= n; ++d) {
        if (theta_u64(d, field.q()) == c.point_count) c.dimension = d;
    }
    for (const auto& a : points(Subspace::full(field, n))) {
        bool inside = std::all_of(pts.begin(), pts.end(), [&](const Vector& v) { return dot(a, v, field) == 0; });
        if (inside) ++c.containing_hyperplanes;
    }
    c.is_subspace = c.dimension.has_value() && c.containing_hyperplanes == theta_u64(n - *c.dimension, field.q());
    return c;
}

}  // namespace subpart
