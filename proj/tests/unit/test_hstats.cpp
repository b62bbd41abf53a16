#include "subpart/construct.hpp"
#include "subpart/enumerate.hpp"
#include "subpart/error.hpp"
#include "subpart/hstats.hpp"

#include <doctest.h>

using namespace subpart;

namespace {
const SubspacePartition& v6() {
    static const auto p = refine(spread(6, 3, 2), 0, beutelspacher(3, 1, 2));
    return p;
}
const SubspacePartition& v7() {
    static const auto p = refine(beutelspacher(7, 3, 2), 0, spread(4, 2, 2));
    return p;
}
std::vector<SubspacePartition> corpus() {
    return {spread(4, 2, 2), beutelspacher(3, 1, 2), v6(), v7(), spread(4, 2, 3), beutelspacher(5, 2, 3),
            minimal_partition(8, 3, 2), singleton_partition(make_field(2), 3), minimal_partition(5, 2, 2)};
}
}  // namespace

TEST_CASE("profiles") {
    const auto s = spread(4, 2, 2);
    for (const auto& h : all_hyperplanes(s.field(), 4)) {
        const auto pr = profile(s, h);
        CHECK(pr.b == std::map<int, std::uint64_t>{{2, 1}});
    }
    const auto v = singleton_partition(make_field(2), 3);
    for (const auto& h : all_hyperplanes(v.field(), 3)) CHECK(profile(v, h).b.empty());

    const auto b = beutelspacher(3, 1, 2);
    const auto& plane = b.members()[0];
    REQUIRE(plane.dim() == 2);
    const auto pr = profile(b, plane);
    CHECK(pr.count(2) == 1);
    CHECK(pr.count(1) == 0);

    try {
        profile(b, b.members()[1]);
        FAIL("expected NotAHyperplane");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotAHyperplane);
    }
}

TEST_CASE("histograms") {
    const auto h = histogram(spread(4, 2, 2));
    CHECK(h.entries == std::map<std::vector<std::uint64_t>, std::uint64_t>{{{1}, 15}});
    const auto hb = histogram(beutelspacher(3, 1, 2));
    CHECK(hb.entries.size() == 2);
    CHECK(hb.total() == 7);
    CHECK(histogram(v7()).total() == 127);
}

TEST_CASE("full scan and dual scan agree, for any thread count") {
    for (const auto& p : corpus()) {
        const auto full = IncidenceTable::full_scan(p);
        CHECK(full == IncidenceTable::dual_scan(p));
        CHECK(full == IncidenceTable::full_scan(p, 3));
        CHECK(histogram(p, full).entries == histogram(p, IncidenceTable::full_scan(p, 4)).entries);
    }
}

TEST_CASE("Heden-Lehmann identities") {
    const auto s = verify_heden_lehmann(spread(4, 2, 2));
    CHECK(s.passed());
    CHECK(s.hypothesis_met);
    bool saw_ii = false, saw_iii = false;
    for (const auto& c : s.checks) {
        if (c.name.starts_with("(ii)")) {
            saw_ii = true;
            CHECK(c.lhs == 15);
        }
        if (c.name.starts_with("(iii)")) {
            saw_iii = true;
            CHECK(c.lhs == 0);
        }
    }
    CHECK(saw_ii);
    CHECK(saw_iii);

    const auto r6 = verify_heden_lehmann(v6());
    CHECK(r6.passed());
    CHECK(r6.checked_dims == std::vector<int>{1, 2, 3});
    CHECK(r6.checks.size() == 1 + 2 * 3 + 3);

    const auto r7 = verify_heden_lehmann(v7());
    CHECK(r7.passed());
    bool found = false;
    for (const auto& c : r7.checks) {
        if (c.name.find("(iv)") != std::string::npos) {
            found = true;
            CHECK(c.lhs == 240);
        }
    }
    CHECK(found);

    const auto r3 = verify_heden_lehmann(minimal_partition(4, 3, 2));
    CHECK(r3.skipped_dims == std::vector<int>{3});
    CHECK(r3.hypothesis_met);
    CHECK(r3.passed());
    const auto single = verify_heden_lehmann(singleton_partition(make_field(2), 3));
    CHECK_FALSE(single.hypothesis_met);
    CHECK(single.passed());

    for (const auto& p : corpus()) CHECK(verify_heden_lehmann(p).passed());
}

TEST_CASE("size identity") {
    for (const auto& p : corpus()) {
        const auto r = verify_size_identity(p);
        CHECK(r.passed());
        CHECK(r.hyperplanes_checked == theta_u64(p.ambient_dim(), p.field().q()));
    }
    auto members = spread(4, 2, 2).members();
    members.pop_back();
    CHECK_FALSE(verify_size_identity(SubspacePartition(make_field(2), 4, members)).passed());
}

TEST_CASE("c_H") {
    const auto b = beutelspacher(3, 1, 2);
    CHECK(c_of_hyperplane(b, 2, b.members()[0]) == 2);
    for (const auto& p : corpus()) {
        for (int d : p.type().dims()) {
            for (const auto& c : c_values(p, d)) CHECK(c >= 0);
        }
    }
    for (const auto& c : c_values(spread(4, 2, 2), 2)) CHECK(c == 0);
    for (const auto& c : c_values(v7(), 3)) CHECK(c >= 0);
    CHECK_THROWS_AS(c_values(b, 3), Error);

    auto members = spread(4, 2, 2).members();
    members.pop_back();
    members.push_back(Subspace::from_rows(make_field(2), 4, {1, 0, 0, 0}));
    const SubspacePartition broken(make_field(2), 4, members);
    try {
        c_values(broken, 2);
        FAIL("expected IdentityViolation");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IdentityViolation);
    }
}

TEST_CASE("beta statistics") {
    const auto b6 = beta_stats(v6(), 3);
    CHECK(b6.minimum_case);
    CHECK(b6.beta0 == 4);
    REQUIRE(b6.c0.has_value());
    CHECK(*b6.c0 == 1);
    CHECK(b6.passed());

    const auto b7 = beta_stats(v7(), 3);
    CHECK(b7.beta0 == 4);
    REQUIRE(b7.c0.has_value());
    CHECK(*b7.c0 == 2);
    CHECK(b7.passed());

    const auto loose = beta_stats(beutelspacher(3, 1, 2), 2);
    CHECK_FALSE(loose.minimum_case);
    CHECK(loose.passed());
    CHECK(BigInt(loose.supertail_size) >= loose.beta0 + 1);

    try {
        beta_stats(spread(4, 2, 2), 2);
        FAIL("expected EmptySupertail");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptySupertail);
    }
}

TEST_CASE("alpha histogram in the appendix regime") {
    const auto a = alpha_histogram(v7(), 3);
    CHECK(a.alpha_at(0) == 7);
    CHECK(a.alpha_at(1) == 0);
    CHECK(a.alpha_at(2) == 120);
    CHECK(a.x == 240);
    CHECK(a.y == 120);
    CHECK(a.z == 127);
    REQUIRE(a.appendix.has_value());
    CHECK(a.appendix->ell == 2);
    CHECK(a.appendix->delta == 0);
    CHECK(a.appendix->gamma == 16);
    CHECK(a.appendix->support_in_range);
    CHECK(a.appendix->gap_empty);
    CHECK(a.appendix->alpha_delta_matches);
    CHECK(a.appendix->x_matches);
    CHECK(a.appendix->y_matches);
    CHECK(a.passed());

    const auto s = alpha_histogram(spread(4, 2, 2), 2);
    CHECK(s.alpha == std::map<std::uint64_t, std::uint64_t>{{1, 15}});
    CHECK_FALSE(s.appendix.has_value());
}

TEST_CASE("alpha histogram in the pair regime") {
    const auto a = alpha_histogram(v6(), 1);
    REQUIRE(a.pair.has_value());
    CHECK(a.pair->t == 2);
    CHECK(a.pair->a == 1);
    CHECK(a.pair->divisibility);
    for (const auto& [i, v] : a.alpha) CHECK(i % 2 == 0);
    CHECK(a.pair->empty_forces_top);
    CHECK(a.pair->alpha0_expected == 8);
    CHECK(a.pair->alpha0_matches);
    CHECK(a.pair->quadratic_matches);
    CHECK(a.pair->quadratic_nonpositive);
    CHECK(a.passed());
}

TEST_CASE("moment identities") {
    const auto m6 = verify_moment_identities(v6(), 1);
    CHECK(m6.x.lhs == 124);
    CHECK(m6.passed());
    const auto m1 = verify_moment_identities(v6(), 2);
    CHECK(m1.y.lhs == 0);
    CHECK(m1.passed());
    const auto m7 = verify_moment_identities(v7(), 3);
    CHECK(m7.x.lhs == 240);
    CHECK(m7.passed());
    for (const auto& p : corpus()) {
        for (int d : p.type().dims()) CHECK(verify_moment_identities(p, d).passed());
    }
}
