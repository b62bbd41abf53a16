#include "subpart/construct.hpp"
#include "subpart/enumerate.hpp"
#include "subpart/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace subpart;

TEST_CASE("gaussian binomial") {
    CHECK(gaussian_binomial(5, 0, 2) == 1);
    CHECK(gaussian_binomial(3, 1, 2) == 7);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(4, 2, 3) == 130);
    CHECK(gaussian_binomial(6, 6, 3) == 1);
    CHECK_THROWS_AS(gaussian_binomial(3, 4, 2), Error);
    CHECK_THROWS_AS(gaussian_binomial(3, -1, 2), Error);
}

TEST_CASE("stream counts match the q-binomial for n <= 6") {
    for (int q : {2, 3}) {
        const auto f = make_field(q);
        for (int n = 0; n <= 6; ++n) {
            for (int d = 0; d <= n; ++d) {
                if (q == 3 && n == 6 && (d == 3)) continue;  // 33880 subspaces; covered by n = 5
                CAPTURE(q);
                CAPTURE(n);
                CAPTURE(d);
                std::uint64_t count = 0;
                std::optional<Subspace> prev;
                bool ordered = true;
                SubspaceStream s(f, n, d);
                while (auto u = s.next()) {
                    ++count;
                    if (u->dim() != d) ordered = false;
                    prev = std::move(u);
                }
                CHECK(ordered);
                CHECK(BigInt(count) == gaussian_binomial(n, d, q));
            }
        }
    }
}

TEST_CASE("all_subspaces examples") {
    const auto f = make_field(2);
    CHECK(all_subspaces(f, 2, 1).size() == 3);
    const auto l = all_subspaces(f, 4, 2);
    CHECK(l.size() == 35);
    CHECK(std::set<Subspace>(l.begin(), l.end()).size() == 35);
    const auto full = all_subspaces(f, 3, 3);
    REQUIRE(full.size() == 1);
    CHECK(full[0] == Subspace::full(f, 3));
    CHECK_THROWS_AS(all_subspaces(f, 4, 2, 10), Error);
}

TEST_CASE("pivot patterns split the stream") {
    const auto f = make_field(3);
    std::uint64_t total = 0;
    for (const auto& p : SubspaceStream::pivot_patterns(4, 2)) {
        auto s = SubspaceStream::for_pattern(f, 4, p);
        while (auto u = s.next()) {
            CHECK(u->pivots() == p);
            ++total;
        }
    }
    CHECK(total == 130);
}

TEST_CASE("hyperplanes") {
    const auto f = make_field(2);
    CHECK(all_hyperplanes(f, 2).size() == 3);
    CHECK(all_hyperplanes(f, 4).size() == 15);
    CHECK(all_hyperplanes(f, 7).size() == 127);
    for (const auto& h : all_hyperplanes(make_field(3), 3)) CHECK(h.dim() == 2);
    CHECK_THROWS_AS(hyperplane_of(std::vector<Element>{0, 0, 0}, f), Error);
}

TEST_CASE("hyperplanes containing a subspace") {
    const auto f = make_field(2);
    CHECK(hyperplanes_containing(Subspace(f, 4)).size() == 15);
    const auto u = all_subspaces(f, 4, 2)[7];
    const auto hs = hyperplanes_containing(u);
    CHECK(hs.size() == 3);
    for (const auto& h : hs) CHECK(contains_subspace(h, u));
    CHECK(hyperplanes_containing(all_subspaces(f, 7, 4, 1'000'000)[100]).size() == 7);
}

TEST_CASE("hyperplane containment over full enumeration") {
    for (int q : {2, 3}) {
        const auto f = make_field(q);
        for (int n = 1; n <= 4; ++n) {
            const auto hyper = all_hyperplanes(f, n);
            for (int d = 0; d < n; ++d) {
                for (const auto& u : all_subspaces(f, n, d)) {
                    const auto c = std::count_if(hyper.begin(), hyper.end(), [&](const Subspace& h) { return contains_subspace(h, u); });
                    CHECK(static_cast<std::uint64_t>(c) == theta_u64(n - d, q));
                    CHECK(hyperplanes_containing(u).size() == theta_u64(n - d, q));
                }
            }
        }
    }
}

TEST_CASE("recognize_subspace") {
    const auto f = make_field(2);
    const auto u = all_subspaces(f, 4, 2)[3];
    const auto pts = points(u);
    CHECK(recognize_subspace(pts, 4, f) == u);
    const std::vector<Vector> two = {pts[0], pts[1]};
    CHECK_FALSE(recognize_subspace(two, 4, f).has_value());

    const auto p = refine(spread(6, 3, 2), 0, beutelspacher(3, 1, 2));
    std::vector<Vector> union_pts;
    for (const auto& m : p.members()) {
        if (m.dim() < 3) {
            for (auto& v : points(m)) union_pts.push_back(v);
        }
    }
    REQUIRE(union_pts.size() == 7);
    const auto w = recognize_subspace(union_pts, 6, f);
    REQUIRE(w.has_value());
    CHECK(w->dim() == 3);
}

TEST_CASE("subspace recognition round trip and criterion, both directions") {
    for (int q : {2, 3}) {
        const auto f = make_field(q);
        for (int n = 1; n <= 4; ++n) {
            for (int d = 1; d <= n; ++d) {
                for (const auto& u : all_subspaces(f, n, d)) {
                    const auto pts = points(u);
                    CHECK(recognize_subspace(pts, n, f) == u);
                    const auto c = hyperplane_criterion(pts, n, f);
                    CHECK(c.is_subspace);
                    CHECK(c.dimension == d);
                    CHECK(c.containing_hyperplanes == theta_u64(n - d, q));
                }
            }
        }
    }
    std::mt19937 rng(7u);
    for (int q : {2, 3}) {
        const auto f = make_field(q);
        const int n = 4;
        const PointIndex idx(f, n);
        for (int d = 2; d <= 3; ++d) {
            const auto size = static_cast<std::size_t>(theta_u64(d, q));
            int non_subspaces = 0;
            for (int trial = 0; trial < 300; ++trial) {
                std::vector<std::size_t> order(idx.size());
                for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
                std::shuffle(order.begin(), order.end(), rng);
                std::vector<Vector> set;
                for (std::size_t i = 0; i < size; ++i) set.push_back(idx.point(order[i]));
                const auto c = hyperplane_criterion(set, n, f);
                const bool sub = recognize_subspace(set, n, f).has_value();
                CHECK(c.is_subspace == sub);
                if (!sub) {
                    ++non_subspaces;
                    CHECK(c.containing_hyperplanes < theta_u64(n - d, q));
                }
            }
            CHECK(non_subspaces > 0);
        }
    }
}
