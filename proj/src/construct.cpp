#include "subpart/construct.hpp"

#include "subpart/error.hpp"

#include <string>

namespace subpart {

namespace {

int degree(const Vector& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        if (a[static_cast<std::size_t>(i)] != 0) return i;
    }
    return -1;
}

// Remainder of a modulo the monic b, over the field f.
Vector poly_mod(Vector a, const Vector& b, const Field& f) {
    const int db = degree(b);
    for (int da = degree(a); da >= db; da = degree(a)) {
        const Element factor = a[static_cast<std::size_t>(da)];
        const int shift = da - db;
        for (int i = 0; i <= db; ++i) {
            auto& c = a[static_cast<std::size_t>(i + shift)];
            c = f.sub(c, f.mul(factor, b[static_cast<std::size_t>(i)]));
        }
    }
    a.resize(static_cast<std::size_t>(std::max(db, 1)), 0);
    return a;
}

bool next_monic(Vector& g, int deg, int q) {
    for (int i = 0; i < deg; ++i) {
        if (++g[static_cast<std::size_t>(i)] < q) return true;
        g[static_cast<std::size_t>(i)] = 0;
    }
    return false;
}

bool irreducible_over(const Vector& f, const Field& field) {
    const int n = degree(f);
    for (int k = 1; k <= n / 2; ++k) {
        Vector g(static_cast<std::size_t>(k + 1), 0);
        g[static_cast<std::size_t>(k)] = 1;
        do {
            if (degree(poly_mod(f, g, field)) < 0) return false;
        } while (next_monic(g, k, field.q()));
    }
    return true;
}

void require_field_of(const SubspacePartition& p, const Field& f) {
    if (!(p.field() == f)) throw Error(ErrorCode::DimensionMismatch, "field mismatch");
}

}  // namespace

ExtensionField::ExtensionField(Field base, int degree) : base_(std::move(base)), m_(degree), order_(1) {
    if (degree < 1) throw Error(ErrorCode::BadRange, "extension degree must be >= 1");
    for (int i = 0; i < degree; ++i) {
        order_ *= static_cast<std::uint64_t>(base_.q());
        if (order_ > (std::uint64_t{1} << 32)) throw Error(ErrorCode::Unsupported, "extension field too large");
    }
    modulus_.assign(static_cast<std::size_t>(degree + 1), 0);
    modulus_[static_cast<std::size_t>(degree)] = 1;
    if (degree == 1) return;  // x itself
    do {
        if (irreducible_over(modulus_, base_)) return;
    } while (next_monic(modulus_, degree, base_.q()));
    throw Error(ErrorCode::Unsupported, "no irreducible polynomial of degree " + std::to_string(degree));
}

Vector ExtensionField::element(std::uint64_t code) const {
    Vector v(static_cast<std::size_t>(m_), 0);
    for (int i = 0; i < m_; ++i) {
        v[static_cast<std::size_t>(i)] = static_cast<Element>(code % static_cast<std::uint64_t>(base_.q()));
        code /= static_cast<std::uint64_t>(base_.q());
    }
    return v;
}

Vector ExtensionField::add(const Vector& a, const Vector& b) const {
    Vector s(static_cast<std::size_t>(m_));
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = base_.add(a[i], b[i]);
    return s;
}

Vector ExtensionField::mul(const Vector& a, const Vector& b) const {
    Vector prod(static_cast<std::size_t>(2 * m_), 0);
    for (int i = 0; i < m_; ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < m_; ++j) {
            auto& c = prod[static_cast<std::size_t>(i + j)];
            c = base_.add(c, base_.mul(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]));
        }
    }
    auto r = poly_mod(std::move(prod), modulus_, base_);
    r.resize(static_cast<std::size_t>(m_), 0);
    return r;
}

SubspacePartition spread(const Field& field, int n, int t) {
    if (t < 1 || n < 1 || n % t != 0) {
        throw Error(ErrorCode::NotDivisible, std::to_string(t) + " does not divide " + std::to_string(n));
    }
    const int k = n / t;
    const ExtensionField big(field, t);
    std::vector<Vector> basis;
    for (int b = 0; b < t; ++b) {
        Vector e(static_cast<std::size_t>(t), 0);
        e[static_cast<std::size_t>(b)] = 1;
        basis.push_back(std::move(e));
    }

    std::vector<Subspace> members;
    // Points of PG(k-1, q^t): first nonzero big-field coordinate equal to one.
    for (int lead = 0; lead < k; ++lead) {
        const int tail = k - lead - 1;
        std::uint64_t combos = 1;
        for (int i = 0; i < tail; ++i) combos *= big.order();
        for (std::uint64_t c = 0; c < combos; ++c) {
            std::vector<Vector> coords(static_cast<std::size_t>(k), Vector(static_cast<std::size_t>(t), 0));
            coords[static_cast<std::size_t>(lead)][0] = 1;
            std::uint64_t rest = c;
            for (int i = k - 1; i > lead; --i) {
                coords[static_cast<std::size_t>(i)] = big.element(rest % big.order());
                rest /= big.order();
            }
            std::vector<Element> rows;
            for (const auto& beta : basis) {
                for (const auto& ci : coords) {
                    const auto prod = big.mul(ci, beta);
                    rows.insert(rows.end(), prod.begin(), prod.end());
                }
            }
            members.push_back(Subspace::from_rows(field, n, std::move(rows)));
        }
    }
    return SubspacePartition(field, n, std::move(members));
}

SubspacePartition spread(int n, int t, int q) { return spread(make_field(q), n, t); }

SubspacePartition beutelspacher(const Field& field, int n, int d) {
    if (d < 1 || 2 * d > n) {
        throw Error(ErrorCode::BadRange, "beutelspacher needs 1 <= d <= n/2 (n = " + std::to_string(n) +
                                             ", d = " + std::to_string(d) + ")");
    }
    const int m = n - d;
    const ExtensionField big(field, m);
    const auto N = static_cast<std::size_t>(n);

    std::vector<Subspace> members;
    {
        std::vector<Element> rows(static_cast<std::size_t>(m) * N, 0);
        for (int i = 0; i < m; ++i) rows[static_cast<std::size_t>(i) * N + static_cast<std::size_t>(i)] = 1;
        members.push_back(Subspace::from_rows(field, n, std::move(rows)));
    }
    // U_a = {(a * y, y) : y in GF(q)^d}, y embedded in GF(q^m) as its first d coordinates.
    for (std::uint64_t code = 0; code < big.order(); ++code) {
        const auto a = big.element(code);
        std::vector<Element> rows;
        for (int j = 0; j < d; ++j) {
            Vector y(static_cast<std::size_t>(m), 0);
            y[static_cast<std::size_t>(j)] = 1;
            const auto ay = big.mul(a, y);
            rows.insert(rows.end(), ay.begin(), ay.end());
            for (int i = 0; i < d; ++i) rows.push_back(i == j ? 1 : 0);
        }
        members.push_back(Subspace::from_rows(field, n, std::move(rows)));
    }
    return SubspacePartition(field, n, std::move(members));
}

SubspacePartition beutelspacher(int n, int d, int q) { return beutelspacher(make_field(q), n, d); }

SubspacePartition refine(const SubspacePartition& p, std::size_t member_index, const SubspacePartition& q) {
    if (member_index >= p.size()) throw Error(ErrorCode::BadRange, "member index out of range");
    require_field_of(q, p.field());
    const auto& target = p.members()[member_index];
    if (q.ambient_dim() != target.dim()) {
        throw Error(ErrorCode::NotAPartitionOfMember, "refining partition lives in dimension " +
                                                          std::to_string(q.ambient_dim()) + ", member has dimension " +
                                                          std::to_string(target.dim()));
    }
    if (!validate(q).valid) throw Error(ErrorCode::NotAPartitionOfMember, "refining collection is not a partition");

    std::vector<Subspace> members;
    members.reserve(p.size() + q.size() - 1);
    for (std::size_t i = 0; i < member_index; ++i) members.push_back(p.members()[i]);
    for (const auto& sub : q.members()) {
        std::vector<Element> rows;
        for (int r = 0; r < sub.dim(); ++r) {
            const auto v = embed(target, sub.row(r));
            rows.insert(rows.end(), v.begin(), v.end());
        }
        members.push_back(Subspace::from_rows(p.field(), p.ambient_dim(), std::move(rows)));
    }
    for (std::size_t i = member_index + 1; i < p.size(); ++i) members.push_back(p.members()[i]);
    return SubspacePartition(p.field(), p.ambient_dim(), std::move(members));
}

namespace {

// Partition of V(n,q), t < n, with largest dimension at most t and size
// q^{t+r} sum_{i<k-1} q^{it} + q^{ceil((t+r)/2)} + 1 (or its k = 1 analogue).
SubspacePartition peel(const Field& field, int n, int t) {
    if (n >= 2 * t) return refine(beutelspacher(field, n, t), 0, peel(field, n - t, t));
    if (n % 2 == 0) return spread(field, n, n / 2);
    return beutelspacher(field, n, n / 2);
}

}  // namespace

SubspacePartition minimal_partition(const Field& field, int n, int t) {
    const auto sp = sigma_params(n, t, field.q());
    if (sp.r == 0) return spread(field, n, t);
    if (n < 2 * t) return beutelspacher(field, n, n - t);
    return peel(field, n, t);
}

SubspacePartition minimal_partition(int n, int t, int q) { return minimal_partition(make_field(q), n, t); }

NonMinimalSupertailExample non_minimal_supertail_example(int q) {
    NonMinimalSupertailExample ex;
    ex.q = q;
    ex.type = PartitionType({{11, ipow(q, 23) + ipow(q, 12)}, {7, 1}, {5, ipow(q, 7)}});
    ex.size = ex.type.size();
    ex.sigma = sigma(ex.n, 11, q);
    ex.excess = ex.size - ex.sigma;
    ex.packing = check_packing(ex.type, ex.n, q);
    ex.dimension = check_dimension(ex.type, ex.n);
    return ex;
}

}  // namespace subpart
