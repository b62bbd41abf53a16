#include "subpart/partition.hpp"

#include "subpart/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace subpart {

PartitionType::PartitionType(std::vector<Entry> entries) {
    std::map<int, BigInt> merged;
    for (auto& e : entries) {
        if (e.dim < 0 || e.count < 0) throw Error(ErrorCode::BadRange, "negative dimension or multiplicity in a type");
        merged[e.dim] += e.count;
    }
    for (auto& [d, c] : merged) {
        if (c != 0) entries_.push_back({d, c});
    }
}

std::vector<int> PartitionType::dims() const {
    std::vector<int> out;
    for (const auto& e : entries_) out.push_back(e.dim);
    return out;
}

BigInt PartitionType::count(int dim) const {
    for (const auto& e : entries_) {
        if (e.dim == dim) return e.count;
    }
    return 0;
}

BigInt PartitionType::size() const {
    BigInt s = 0;
    for (const auto& e : entries_) s += e.count;
    return s;
}

std::string PartitionType::to_string() const {
    std::ostringstream os;
    os << '[';
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
        if (it != entries_.rbegin()) os << ',';
        os << it->dim << '^' << it->count;
    }
    os << ']';
    return os.str();
}

SubspacePartition::SubspacePartition(Field field, int n, std::vector<Subspace> members)
    : field_(std::move(field)), n_(n), members_(std::move(members)) {}

PartitionType SubspacePartition::type() const {
    std::vector<PartitionType::Entry> e;
    for (const auto& m : members_) e.push_back({m.dim(), 1});
    return PartitionType(std::move(e));
}

std::size_t SubspacePartition::count(int d) const {
    return static_cast<std::size_t>(
        std::count_if(members_.begin(), members_.end(), [d](const Subspace& m) { return m.dim() == d; }));
}

SubspacePartition singleton_partition(const Field& field, int n) {
    return SubspacePartition(field, n, {Subspace::full(field, n)});
}

std::string ValidationFailure::describe() const {
    std::ostringstream os;
    auto vec = [&] {
        std::ostringstream v;
        v << '(';
        for (std::size_t i = 0; i < point.size(); ++i) v << (i ? "," : "") << int(point[i]);
        v << ')';
        return v.str();
    };
    switch (kind) {
        case Kind::UncoveredPoint: os << "UncoveredPoint " << vec(); break;
        case Kind::DoublyCoveredPoint:
            os << "DoublyCoveredPoint " << vec() << " members " << member_a << " and " << member_b;
            break;
        case Kind::TrivialMember: os << "TrivialMember " << member_a; break;
        case Kind::ForeignMember: os << "ForeignMember " << member_a << " (wrong ambient space)"; break;
    }
    return os.str();
}

ValidationReport validate(const SubspacePartition& p) {
    ValidationReport report;
    report.size = p.size();
    report.type = p.type();
    const PointIndex index(p.field(), p.ambient_dim());
    constexpr std::size_t kFree = static_cast<std::size_t>(-1);
    std::vector<std::size_t> owner(index.size(), kFree);

    for (std::size_t m = 0; m < p.members().size(); ++m) {
        const auto& u = p.members()[m];
        if (u.ambient_dim() != p.ambient_dim() || !(u.field() == p.field())) {
            report.failures.push_back({ValidationFailure::Kind::ForeignMember, {}, m, 0});
            continue;
        }
        if (u.dim() == 0) {
            report.failures.push_back({ValidationFailure::Kind::TrivialMember, {}, m, 0});
            continue;
        }
        for (auto i : index.indices(u)) {
            if (owner[i] == kFree) {
                owner[i] = m;
            } else {
                report.failures.push_back({ValidationFailure::Kind::DoublyCoveredPoint, index.point(i), owner[i], m});
            }
        }
    }
    for (std::size_t i = 0; i < owner.size(); ++i) {
        if (owner[i] == kFree) report.failures.push_back({ValidationFailure::Kind::UncoveredPoint, index.point(i), 0, 0});
    }
    report.valid = report.failures.empty();
    return report;
}

bool check_packing(const PartitionType& type, int n, int q) {
    BigInt lhs = 0;
    for (const auto& e : type.entries()) lhs += e.count * (ipow(q, e.dim) - 1);
    return lhs == ipow(q, n) - 1;
}

bool check_dimension(const PartitionType& type, int n) {
    const auto& es = type.entries();
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (es[i].count >= 2 && n < 2 * es[i].dim) return false;
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            if (n < es[i].dim + es[j].dim) return false;
        }
    }
    return true;
}

SigmaParams sigma_params(int n, int t, int q) {
    if (t < 1 || t >= n) {
        throw Error(ErrorCode::BadRange, "sigma needs 1 <= t < n (n = " + std::to_string(n) + ", t = " + std::to_string(t) + ")");
    }
    return {n, t, q, n / t, n % t};
}

BigInt sigma(int n, int t, int q) {
    const auto sp = sigma_params(n, t, q);
    if (sp.r == 0) return (ipow(q, sp.k * t) - 1) / (ipow(q, t) - 1);
    if (n < 2 * t) return ipow(q, t) + 1;
    BigInt geometric = 0;
    for (int i = 0; i <= sp.k - 2; ++i) geometric += ipow(q, i * t);
    const int half_up = (t + sp.r + 1) / 2;
    return ipow(q, t + sp.r) * geometric + ipow(q, half_up) + 1;
}

Supertail supertail(const SubspacePartition& p, int d, CutMode mode) {
    const auto dims = p.type().dims();
    if (dims.empty() || d <= dims.front()) {
        throw Error(ErrorCode::BadCut, "cut " + std::to_string(d) + " is not above the smallest dimension");
    }
    const auto it = std::find(dims.begin(), dims.end(), d);
    if (mode == CutMode::Occurring && it == dims.end()) {
        throw Error(ErrorCode::BadCut, "cut " + std::to_string(d) + " is not an occurring dimension");
    }
    Supertail st;
    st.cut = d;
    st.s = it == dims.end() ? 0 : static_cast<int>(it - dims.begin()) + 1;
    std::vector<PartitionType::Entry> entries;
    for (std::size_t i = 0; i < p.members().size(); ++i) {
        const auto& m = p.members()[i];
        if (m.dim() < d) {
            st.members.push_back(m);
            st.member_indices.push_back(i);
            st.below = std::max(st.below, m.dim());
            entries.push_back({m.dim(), 1});
        }
    }
    st.type = PartitionType(std::move(entries));
    return st;
}

PartialSpreadBound drake_freeman_bound(int n, int d, int q) {
    if (d < 1 || d >= n) throw Error(ErrorCode::BadRange, "partial spread bound needs 1 <= d < n");
    const int k = n / d;
    const int r = n % d;
    if (r == 0) throw Error(ErrorCode::BadRange, "partial spread bound is not used when d divides n");
    BigInt geometric = 0;
    for (int i = 0; i <= k - 2; ++i) geometric += ipow(q, i * d);
    PartialSpreadBound b{n, d, q, k, r, ipow(q, r) * geometric, 0};
    b.twice_value = 2 * b.ell * ipow(q, d) + ipow(q, r) + ipow(q, r - 1) + 2;
    return b;
}

}  // namespace subpart
