#include "subpart/analyze.hpp"

#include "subpart/enumerate.hpp"
#include "subpart/error.hpp"

#include <algorithm>

namespace subpart {

std::string to_string(Classification c) {
    switch (c) {
        case Classification::SpreadCase: return "SpreadCase";
        case Classification::OnePlusQtCase: return "OnePlusQtCase";
        case Classification::CorollaryCase: return "CorollaryCase";
        case Classification::OtherSubspace: return "OtherSubspace";
        case Classification::NotASubspace: return "NotASubspace";
        case Classification::NotMinimum: return "NotMinimum";
    }
    return "?";
}

std::string to_string(CheckMode m) { return m == CheckMode::Assert ? "assert" : "explore"; }

BoundReport supertail_bound_check(const SubspacePartition& p, int cut) {
    const auto st = supertail(p, cut, CutMode::Occurring);
    BoundReport r;
    r.cut = cut;
    r.below = st.below;
    r.supertail_size = st.members.size();
    r.sigma_bound = sigma(cut, st.below, p.field().q());
    r.slack = BigInt(r.supertail_size) - r.sigma_bound;
    r.holds = r.slack >= 0;
    return r;
}

UnionStructure union_structure(const std::vector<Subspace>& members, int n, const Field& field, std::optional<int> cut) {
    const PointIndex index(field, n);
    std::vector<std::uint32_t> all;
    for (const auto& m : members) {
        const auto pts = index.indices(m);
        all.insert(all.end(), pts.begin(), pts.end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw Error(ErrorCode::NotDisjoint, "supertail members share a point");
    }

    UnionStructure u;
    u.union_points.reserve(all.size());
    for (auto i : all) u.union_points.push_back(index.point(i));
    u.subspace = recognize_subspace(u.union_points, n, field);
    if (!u.subspace) {
        u.classification = Classification::NotASubspace;
        return u;
    }

    const int q = field.q();
    const int w = u.subspace->dim();
    std::vector<PartitionType::Entry> entries;
    for (const auto& m : members) entries.push_back({m.dim(), 1});
    const PartitionType type(std::move(entries));
    const auto dims = type.dims();
    if (dims.size() == 1 && type.count(dims[0]) == ipow(q, dims[0]) + 1 && w == 2 * dims[0]) {
        u.classification = Classification::SpreadCase;
    } else if (dims.size() == 2 && type.count(dims[0]) == ipow(q, dims[1]) && type.count(dims[1]) == 1 &&
               w == dims[0] + dims[1]) {
        u.classification = Classification::OnePlusQtCase;
    } else if (cut && w == *cut) {
        u.classification = Classification::CorollaryCase;
    } else {
        u.classification = Classification::OtherSubspace;
    }
    return u;
}

SupertailReport theorem15_check(const SubspacePartition& p, int cut, CheckMode mode) {
    const auto st = supertail(p, cut, CutMode::Occurring);
    const int n = p.ambient_dim();
    const int q = p.field().q();
    const auto dims = p.type().dims();
    const int t = st.below;

    SupertailReport r;
    r.mode = mode;
    r.cut = cut;
    r.below = t;
    r.s = st.s;
    r.members = st.members;
    r.supertail_type = st.type;
    r.size = st.members.size();
    r.sigma_bound = sigma(cut, t, q);
    r.is_minimum = BigInt(r.size) == r.sigma_bound;
    r.gap = cut < 2 * t;
    r.cond_i = r.s - 1 <= 2;
    r.cond_ii = cut == 2 * t - 1;
    {
        std::vector<int> upper;
        for (int d : dims)
            if (d >= cut) upper.push_back(d);
        r.cond_iii = upper.size() == 1;
    }
    r.hypotheses_met = r.is_minimum && r.gap && (r.cond_i || r.cond_ii || r.cond_iii);
    r.structure = union_structure(st.members, n, p.field(), cut);
    r.classification = r.structure.classification;

    auto record = [&](bool ok, bool proved, const std::string& what) {
        if (ok) {
            r.checks.push_back(what);
        } else if (proved && mode == CheckMode::Assert) {
            r.failures.push_back(what);
        } else {
            r.findings.push_back((proved ? "violated (proved regime): " : "violated: ") + what);
        }
    };

    record(BigInt(r.size) >= r.sigma_bound, true,
           "|ST| = " + std::to_string(r.size) + " >= sigma_q(d_s,d_{s-1}) = " + r.sigma_bound.str());

    if (!r.is_minimum) {
        r.classification = Classification::NotMinimum;
        r.findings.push_back("supertail is not minimum (slack " + BigInt(BigInt(r.size) - r.sigma_bound).str() +
                             "); no structural claim applies");
        return r;
    }

    const int w = r.structure.subspace ? r.structure.subspace->dim() : -1;
    if (!r.gap) {
        record(w == cut, true, "minimum supertail with d_s >= 2 d_{s-1}: union is a d_s-subspace (dim " +
                                   std::to_string(w) + ")");
        return r;
    }

    record(cut <= t + dims.front(), true, "d_s <= d_{s-1} + d_1");
    record(n >= 2 * cut, true, "n >= 2 d_s");

    const auto beta = beta_stats(p, cut);
    r.beta0 = beta.beta0;
    r.c0 = beta.c0;
    record(beta.beta0 == ipow(q, t), true, "beta_0 = q^t = " + ipow(q, t).str() + " (found " + beta.beta0.str() + ")");
    record(beta.c0.has_value(), true, "sum n_i Theta_i = (c_0 q^d_s - 1)/(q - 1) for an integer c_0");
    for (const auto& v : beta.violations) record(false, true, v);

    const auto& tt = st.type;
    const auto st_dims = tt.dims();
    if (st_dims.size() == 2 && tt.count(st_dims[1]) == 1 && tt.count(st_dims[0]) == ipow(q, st_dims[1]) &&
        st_dims[0] == dims.front()) {
        r.alpha = alpha_histogram(p, st_dims[0]);
    } else if (cut == dims.back() && st_dims.size() == 1) {
        r.alpha = alpha_histogram(p, cut);
    }
    if (r.alpha) {
        const bool regime = r.alpha->pair.has_value() || r.alpha->appendix.has_value();
        for (const auto& v : r.alpha->violations) record(false, regime, "alpha histogram: " + v);
        if (regime && r.alpha->passed()) r.checks.push_back("alpha histogram identities");
    }

    if (r.hypotheses_met) {
        const bool a_or_b = r.structure.classification == Classification::SpreadCase ||
                            r.structure.classification == Classification::OnePlusQtCase;
        record(r.structure.subspace.has_value(), true, "union of ST is a subspace");
        record(a_or_b, true, "union numerology matches conclusion (a) or (b): " + to_string(r.structure.classification) +
                                 ", dim W = " + std::to_string(w));
    } else {
        r.findings.push_back(std::string("open regime (none of the conditions hold): union ") +
                             (r.structure.subspace ? "is a " + std::to_string(w) + "-subspace"
                                                   : "is NOT a subspace (conjecture counterexample candidate)"));
    }
    return r;
}

Lemma31Report lemma31_check(const SubspacePartition& p, int cut) {
    const auto st = supertail(p, cut, CutMode::Occurring);
    const int t = st.below;
    if (BigInt(st.members.size()) != sigma(cut, t, p.field().q()) || cut >= 2 * t) {
        throw Error(ErrorCode::HypothesisNotMet, "needs |ST| = sigma_q(d_s,d_{s-1}) and d_s < 2 d_{s-1}");
    }
    Lemma31Report r;
    r.cut = cut;
    r.below = t;
    r.smallest = p.type().dims().front();
    r.holds = cut <= t + r.smallest;
    return r;
}

Corollary16Report corollary16_check(const SubspacePartition& p, int cut) {
    const int q = p.field().q();
    const auto st = supertail(p, cut, CutMode::Occurring);
    const auto dims = p.type().dims();
    const int s = st.s;
    if (s == static_cast<int>(dims.size())) {
        throw Error(ErrorCode::HypothesisNotMet, "d_s is the largest dimension; there is no d_{s+1}");
    }
    const int t = st.below;
    if (BigInt(st.members.size()) != sigma(cut, t, q)) {
        throw Error(ErrorCode::HypothesisNotMet, "the d_s-supertail is not of minimum size");
    }
    Corollary16Report r;
    r.s = s;
    r.cut = cut;
    r.next_cut = dims[static_cast<std::size_t>(s)];
    r.branch_i_hypotheses = s >= 2 && s <= 3 && cut < 2 * t && r.next_cut < 2 * cut;
    r.branch_ii_hypotheses = cut >= 2 * t || (s == 3 && dims[2] == dims[1] + dims[0]);
    if (!r.branch_i_hypotheses && !r.branch_ii_hypotheses) {
        throw Error(ErrorCode::HypothesisNotMet, "neither branch of the nested bound applies");
    }
    r.extended_size = supertail(p, r.next_cut, CutMode::Occurring).members.size();
    const BigInt bound_i = sigma(r.next_cut, cut, q) + sigma(cut, t, q);
    const BigInt ext(r.extended_size);
    if (r.branch_ii_hypotheses) {
        r.branch = Corollary16Report::Branch::II;
        r.bound = bound_i - 1;
        if (r.branch_i_hypotheses) {
            r.branch_i_bound = bound_i;
            if (ext < bound_i) {
                r.findings.push_back("both branches apply; |ST^| = " + ext.str() + " is below the first-branch bound " +
                                     bound_i.str() + " but meets the second-branch bound " + r.bound.str());
            }
        }
    } else {
        r.branch = Corollary16Report::Branch::I;
        r.bound = bound_i;
    }
    r.holds = ext >= r.bound;
    return r;
}

}  // namespace subpart
