#include "subpart/hstats.hpp"

#include "subpart/error.hpp"

#include <algorithm>
#include <thread>

namespace subpart {

namespace {

bool inside(const Subspace& m, const Vector& functional, const Field& f) {
    for (int r = 0; r < m.dim(); ++r) {
        if (dot(m.row(r), functional, f) != 0) return false;
    }
    return true;
}

Vector functional_of(const SubspacePartition& p, const Subspace& h) {
    if (h.ambient_dim() != p.ambient_dim() || !(h.field() == p.field()) || h.dim() != p.ambient_dim() - 1) {
        throw Error(ErrorCode::NotAHyperplane, "expected an (n-1)-subspace of the partition's ambient space");
    }
    const auto a = annihilator(h);
    return {a.row(0).begin(), a.row(0).end()};
}

// b_H restricted to one dimension, per hyperplane.
std::vector<std::uint64_t> counts_by_dim(const SubspacePartition& p, const IncidenceTable& t, int d) {
    std::vector<std::uint64_t> b(t.hyperplane_count(), 0);
    for (std::size_t h = 0; h < t.hyperplane_count(); ++h) {
        for (std::size_t m = 0; m < p.size(); ++m) {
            if (p.members()[m].dim() == d && t.contains(h, m)) ++b[h];
        }
    }
    return b;
}

}  // namespace

IncidenceTable IncidenceTable::full_scan(const SubspacePartition& p, unsigned threads) {
    IncidenceTable t(points(Subspace::full(p.field(), p.ambient_dim())), p.size());
    const std::size_t H = t.hyperplane_count();
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t h = begin; h < end; ++h) {
            for (std::size_t m = 0; m < p.size(); ++m) {
                t.cells_[h * t.members_ + m] = inside(p.members()[m], t.functionals_[h], p.field()) ? 1 : 0;
            }
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(H / 64 + 1)));
    if (threads == 1) {
        work(0, H);
        return t;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (H + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
        const std::size_t b = w * chunk;
        const std::size_t e = std::min(H, b + chunk);
        if (b < e) pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
    return t;
}

IncidenceTable IncidenceTable::dual_scan(const SubspacePartition& p) {
    const PointIndex index(p.field(), p.ambient_dim());
    std::vector<Vector> functionals(index.size());
    for (std::size_t i = 0; i < index.size(); ++i) functionals[i] = index.point(i);
    IncidenceTable t(std::move(functionals), p.size());
    for (std::size_t m = 0; m < p.size(); ++m) {
        for (auto h : index.indices(annihilator(p.members()[m]))) t.cells_[h * t.members_ + m] = 1;
    }
    return t;
}

HyperplaneProfile profile(const SubspacePartition& p, const Subspace& h) {
    const auto a = functional_of(p, h);
    HyperplaneProfile out{h, {}};
    for (const auto& m : p.members()) {
        if (inside(m, a, p.field())) ++out.b[m.dim()];
    }
    return out;
}

std::uint64_t ProfileHistogram::total() const {
    std::uint64_t s = 0;
    for (const auto& [b, mult] : entries) s += mult;
    return s;
}

ProfileHistogram histogram(const SubspacePartition& p) { return histogram(p, IncidenceTable::full_scan(p)); }

ProfileHistogram histogram(const SubspacePartition& p, const IncidenceTable& table) {
    ProfileHistogram hist;
    hist.dims = p.type().dims();
    for (std::size_t h = 0; h < table.hyperplane_count(); ++h) {
        std::vector<std::uint64_t> b(hist.dims.size(), 0);
        for (std::size_t m = 0; m < p.size(); ++m) {
            if (!table.contains(h, m)) continue;
            const auto pos = std::lower_bound(hist.dims.begin(), hist.dims.end(), p.members()[m].dim()) - hist.dims.begin();
            ++b[static_cast<std::size_t>(pos)];
        }
        ++hist.entries[b];
    }
    return hist;
}

bool HedenLehmannReport::passed() const {
    return incidence_paths_agree &&
           std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds(); });
}

HedenLehmannReport verify_heden_lehmann(const SubspacePartition& p) {
    const int n = p.ambient_dim();
    const int q = p.field().q();
    const auto table = IncidenceTable::full_scan(p);
    const auto hist = histogram(p, table);
    const auto type = p.type();

    HedenLehmannReport r;
    r.incidence_paths_agree = table == IncidenceTable::dual_scan(p);
    BigInt in_range_members = 0;
    for (const auto& e : type.entries()) {
        if (e.dim >= 1 && e.dim <= n - 2) {
            r.checked_dims.push_back(e.dim);
            in_range_members += e.count;
        } else {
            r.skipped_dims.push_back(e.dim);
        }
    }
    r.hypothesis_met = in_range_members >= 2;

    {
        BigInt s = 0;
        for (const auto& [b, mult] : hist.entries) s += mult;
        r.checks.push_back({"(i) sum s_b = Theta_n", s, theta(n, q)});
    }
    auto pos = [&](int d) {
        return static_cast<std::size_t>(std::lower_bound(hist.dims.begin(), hist.dims.end(), d) - hist.dims.begin());
    };
    for (int d : r.checked_dims) {
        const auto i = pos(d);
        const BigInt nd = type.count(d);
        BigInt first = 0;
        BigInt second = 0;
        for (const auto& [b, mult] : hist.entries) {
            first += BigInt(b[i]) * mult;
            second += choose2(BigInt(b[i])) * mult;
        }
        const auto tag = " d=" + std::to_string(d);
        r.checks.push_back({"(ii) sum b_d s_b = n_d Theta_{n-d}" + tag, first, nd * theta(n - d, q)});
        r.checks.push_back({"(iii) sum C(b_d,2) s_b = C(n_d,2) Theta_{n-2d}" + tag, second, choose2(nd) * theta(n - 2 * d, q)});
    }
    for (std::size_t a = 0; a < r.checked_dims.size(); ++a) {
        for (std::size_t c = a + 1; c < r.checked_dims.size(); ++c) {
            const int d = r.checked_dims[a];
            const int e = r.checked_dims[c];
            const auto i = pos(d);
            const auto j = pos(e);
            BigInt mixed = 0;
            for (const auto& [b, mult] : hist.entries) mixed += BigInt(b[i]) * b[j] * mult;
            r.checks.push_back({"(iv) sum b_d b_d' s_b = n_d n_d' Theta_{n-d-d'} d=" + std::to_string(d) +
                                    " d'=" + std::to_string(e),
                                mixed, type.count(d) * type.count(e) * theta(n - d - e, q)});
        }
    }
    return r;
}

SizeIdentityReport verify_size_identity(const SubspacePartition& p) {
    const auto table = IncidenceTable::full_scan(p);
    const int q = p.field().q();
    SizeIdentityReport r;
    r.hyperplanes_checked = table.hyperplane_count();
    for (std::size_t h = 0; h < table.hyperplane_count(); ++h) {
        BigInt rhs = 1;
        for (std::size_t m = 0; m < p.size(); ++m) {
            if (table.contains(h, m)) rhs += ipow(q, p.members()[m].dim());
        }
        if (rhs != p.size()) r.violations.push_back(h);
    }
    return r;
}

namespace {

void require_cut(const PartitionType& type, int cut) {
    const auto dims = type.dims();
    if (std::find(dims.begin(), dims.end(), cut) == dims.end()) {
        throw Error(ErrorCode::BadCut, "cut " + std::to_string(cut) + " is not an occurring dimension");
    }
}

// b_{H,d} per occurring dimension for hyperplane h.
std::map<int, BigInt> b_of(const SubspacePartition& p, const IncidenceTable& t, std::size_t h) {
    std::map<int, BigInt> b;
    for (std::size_t m = 0; m < p.size(); ++m) {
        if (t.contains(h, m)) b[p.members()[m].dim()] += 1;
    }
    return b;
}

BigInt c_from_profile(const SubspacePartition& p, const PartitionType& type, int cut, const std::map<int, BigInt>& b) {
    const int n = p.ambient_dim();
    const int q = p.field().q();
    auto bd = [&](int d) {
        auto it = b.find(d);
        return it == b.end() ? BigInt(0) : it->second;
    };
    BigInt c = ipow(q, n - cut);
    BigInt low = 0;
    for (const auto& e : type.entries()) {
        if (e.dim >= cut) {
            c -= (e.count - bd(e.dim)) * ipow(q, e.dim - cut);
        } else {
            low += (e.count - bd(e.dim)) * ipow(q, e.dim);
        }
    }
    if (c < 0) throw Error(ErrorCode::IdentityViolation, "c_H = " + c.str() + " is negative");
    if (low != c * ipow(q, cut)) {
        throw Error(ErrorCode::IdentityViolation,
                    "supertail deficit " + low.str() + " != c_H q^d = " + BigInt(c * ipow(q, cut)).str());
    }
    return c;
}

}  // namespace

BigInt c_of_hyperplane(const SubspacePartition& p, int cut, const Subspace& h) {
    const auto type = p.type();
    require_cut(type, cut);
    const auto pr = profile(p, h);
    std::map<int, BigInt> b;
    for (const auto& [d, v] : pr.b) b[d] = v;
    return c_from_profile(p, type, cut, b);
}

std::vector<BigInt> c_values(const SubspacePartition& p, int cut) {
    const auto type = p.type();
    require_cut(type, cut);
    const auto table = IncidenceTable::full_scan(p);
    std::vector<BigInt> out;
    out.reserve(table.hyperplane_count());
    for (std::size_t h = 0; h < table.hyperplane_count(); ++h) out.push_back(c_from_profile(p, type, cut, b_of(p, table, h)));
    return out;
}

BetaStats beta_stats(const SubspacePartition& p, int cut) {
    const int q = p.field().q();
    const bool any_below =
        std::any_of(p.members().begin(), p.members().end(), [cut](const Subspace& m) { return m.dim() < cut; });
    if (!any_below) throw Error(ErrorCode::EmptySupertail, "no member below dimension " + std::to_string(cut));
    const auto st = supertail(p, cut, CutMode::Permissive);
    const auto table = IncidenceTable::full_scan(p);

    BetaStats r;
    r.cut = cut;
    r.top = st.below;
    r.supertail_size = st.members.size();
    for (std::size_t h = 0; h < table.hyperplane_count(); ++h) {
        BigInt beta = 0;
        for (auto m : st.member_indices) {
            if (table.contains(h, m)) beta += ipow(q, p.members()[m].dim());
        }
        r.beta.push_back(beta);
    }
    r.beta0 = *std::min_element(r.beta.begin(), r.beta.end());
    if (BigInt(r.supertail_size) < r.beta0 + 1) {
        r.violations.push_back("|ST| = " + std::to_string(r.supertail_size) + " < beta_0 + 1 = " + BigInt(r.beta0 + 1).str());
    }
    const int t = r.top;
    r.minimum_case = BigInt(r.supertail_size) == ipow(q, t) + 1 && cut < 2 * t;
    if (r.minimum_case) {
        if (r.beta0 != ipow(q, t)) r.violations.push_back("beta_0 = " + r.beta0.str() + " != q^t = " + ipow(q, t).str());
        BigInt pts = 0;
        for (const auto& m : st.members) pts += theta(m.dim(), q);
        const BigInt numerator = (q - 1) * pts + 1;
        const BigInt qd = ipow(q, cut);
        if (numerator % qd != 0) {
            r.violations.push_back("sum n_i Theta_i = " + pts.str() + " is not (c_0 q^d - 1)/(q - 1) for an integer c_0");
        } else {
            r.c0 = numerator / qd;
        }
    }
    return r;
}

AlphaContext alpha_histogram(const SubspacePartition& p, int family_dim) {
    const int n = p.ambient_dim();
    const int q = p.field().q();
    const auto type = p.type();
    const auto table = IncidenceTable::full_scan(p);

    AlphaContext ctx;
    ctx.family_dim = family_dim;
    ctx.family_size = p.count(family_dim);
    const auto per_h = counts_by_dim(p, table, family_dim);
    for (auto i : per_h) ++ctx.alpha[i];
    for (const auto& [i, a] : ctx.alpha) {
        ctx.x += BigInt(i) * a;
        ctx.y += choose2(BigInt(i)) * a;
        ctx.z += a;
    }

    const auto dims = type.dims();
    const BigInt nf = ctx.family_size;

    // Appendix regime: the family is the largest dimension, everything else is the supertail.
    if (!dims.empty() && family_dim == dims.back() && dims.size() >= 2) {
        const int d = family_dim;
        const int t = dims[dims.size() - 2];
        const int k = n / d;
        const int r_d = n % d;
        const int r_t = d - t;
        const BigInt st_size = type.size() - nf;
        if (k >= 2 && r_d >= 1 && r_t >= 1 && r_t < t && st_size == ipow(q, t) + 1) {
            BigInt geometric = 0;
            for (int i = 0; i <= k - 2; ++i) geometric += ipow(q, i * d);
            const BigInt ell = ipow(q, r_d) * geometric;
            if (nf == ell * ipow(q, d)) {
                AppendixRegime ar;
                ar.d = d;
                ar.t = t;
                ar.k = k;
                ar.r_d = r_d;
                ar.r_t = r_t;
                ar.ell = ell;
                ar.delta = ell - ipow(q, r_d);
                ar.gamma = ipow(q, (k - 1) * d + r_d);
                ar.support_in_range = true;
                ar.gap_empty = true;
                for (const auto& [i, a] : ctx.alpha) {
                    if (BigInt(i) < ar.delta || BigInt(i) > ell) ar.support_in_range = false;
                    if (BigInt(i) > ar.delta && BigInt(i) < ell) ar.gap_empty = false;
                }
                const auto delta_u = static_cast<std::uint64_t>(ar.delta);
                ar.alpha_delta_matches = BigInt(ctx.alpha_at(delta_u)) == theta((k - 1) * d, q);
                ar.x_matches = ctx.x == nf * theta((k - 1) * d + r_d, q);
                ar.y_matches = ctx.y == choose2(nf) * theta((k - 2) * d + r_d, q);
                if (!ar.support_in_range) ctx.violations.push_back("alpha_i != 0 outside [delta, l]");
                if (!ar.gap_empty) ctx.violations.push_back("alpha_i != 0 strictly between delta and l");
                if (!ar.alpha_delta_matches) ctx.violations.push_back("alpha_delta != Theta_{(k-1)d}");
                if (!ar.x_matches) ctx.violations.push_back("x != n_d Theta_{(k-1)d+r_d}");
                if (!ar.y_matches) ctx.violations.push_back("y != C(n_d,2) Theta_{(k-2)d+r_d}");
                ctx.appendix = ar;
            }
        }
    }

    // Pair regime: supertail [t^1, a^{q^t}] with a = d_1, t = d_2, cut d_3.
    if (dims.size() >= 3 && family_dim == dims[0]) {
        const int a = dims[0];
        const int t = dims[1];
        if (type.count(t) == 1 && nf == ipow(q, t)) {
            PairRegime pr;
            pr.t = t;
            pr.a = a;
            const BigInt step = ipow(q, t - a);
            pr.divisibility = std::all_of(ctx.alpha.begin(), ctx.alpha.end(),
                                          [&](const auto& kv) { return BigInt(kv.first) % step == 0; });
            const auto top = counts_by_dim(p, table, t);
            pr.empty_forces_top = true;
            for (std::size_t h = 0; h < per_h.size(); ++h) {
                if (per_h[h] == 0 && top[h] != 1) pr.empty_forces_top = false;
            }
            const BigInt alpha0 = ctx.alpha_at(0);
            pr.alpha0_expected = theta(n - t, q) - theta(n - t - a, q);
            pr.alpha0_matches = alpha0 == pr.alpha0_expected;
            const BigInt qt = ipow(q, t);
            for (const auto& [i, al] : ctx.alpha) {
                if (i == 0) continue;
                pr.quadratic_lhs += (BigInt(i) - step) * (BigInt(i) - qt) * al;
            }
            pr.quadratic_rhs = theta(n + t - a, q) - theta(n + t - 2 * a, q) - ipow(q, 2 * t - a) * alpha0;
            pr.quadratic_matches = pr.quadratic_lhs == pr.quadratic_rhs;
            pr.quadratic_nonpositive = pr.quadratic_lhs <= 0;
            if (!pr.divisibility) ctx.violations.push_back("alpha_i != 0 with q^{t-a} not dividing i");
            if (!pr.empty_forces_top) ctx.violations.push_back("b_{H,a} = 0 without b_{H,t} = 1");
            if (!pr.alpha0_matches) ctx.violations.push_back("alpha_0 != Theta_{n-t} - Theta_{n-t-a}");
            if (!pr.quadratic_matches) ctx.violations.push_back("quadratic moment identity fails");
            if (!pr.quadratic_nonpositive) ctx.violations.push_back("quadratic moment is positive");
            ctx.pair = pr;
        }
    }
    return ctx;
}

MomentReport verify_moment_identities(const SubspacePartition& p, int family_dim) {
    const int n = p.ambient_dim();
    const int q = p.field().q();
    const auto ctx = alpha_histogram(p, family_dim);
    const BigInt nf = ctx.family_size;
    MomentReport r;
    r.family_dim = family_dim;
    r.family_size = ctx.family_size;
    r.x = {"x = n_f Theta_{n-f}", ctx.x, nf * theta(n - family_dim, q)};
    r.y = {"y = C(n_f,2) Theta_{n-2f}", ctx.y, choose2(nf) * theta(n - 2 * family_dim, q)};
    r.z = {"sum alpha_i = Theta_n", ctx.z, theta(n, q)};
    return r;
}

}  // namespace subpart
