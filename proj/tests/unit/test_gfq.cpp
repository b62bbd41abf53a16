#include "subpart/error.hpp"
#include "subpart/gfq.hpp"

#include <doctest.h>

using namespace subpart;

namespace {
const int kSupported[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

bool raises(int q, ErrorCode code) {
    try {
        make_field(q);
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}
}  // namespace

TEST_CASE("prime fields and fixed moduli") {
    const auto f2 = make_field(2);
    CHECK(f2.p() == 2);
    CHECK(f2.e() == 1);
    CHECK(f2.modulus() == std::vector<int>{0, 1});
    CHECK(f2.add(1, 1) == 0);

    const auto f3 = make_field(3);
    CHECK(f3.inv(2) == 2);

    const auto f4 = make_field(4);
    CHECK(f4.modulus() == std::vector<int>{1, 1, 1});
    // g = x has code 2; g*g = x + 1 has code 3.
    CHECK(f4.mul(2, 2) == 3);
    CHECK(make_field(8).modulus() == std::vector<int>{1, 1, 0, 1});
    CHECK(make_field(9).modulus() == std::vector<int>{2, 1, 1});
    CHECK(make_field(16).modulus() == std::vector<int>{1, 1, 0, 0, 1});
}

TEST_CASE("x^2+x+1 has no root in GF(2)") {
    for (int x = 0; x < 2; ++x) CHECK((x * x + x + 1) % 2 != 0);
    CHECK(poly::is_irreducible({1, 1, 1}, 2));
    CHECK_FALSE(poly::is_irreducible({1, 0, 1}, 2));
}

TEST_CASE("errors") {
    CHECK(raises(6, ErrorCode::NotPrimePower));
    CHECK(raises(12, ErrorCode::NotPrimePower));
    CHECK(raises(1, ErrorCode::NotPrimePower));
    CHECK(raises(0, ErrorCode::NotPrimePower));
    CHECK(raises(32, ErrorCode::Unsupported));
    CHECK(raises(17, ErrorCode::Unsupported));
    try {
        make_field(5).inv(0);
        FAIL("inv(0) must throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DivisionByZero);
    }
}

TEST_CASE("field axioms, exhaustively") {
    for (int q : kSupported) {
        CAPTURE(q);
        const auto f = make_field(q);
        CHECK(f.q() == q);
        CHECK(poly::is_irreducible(f.modulus(), f.p()));
        bool ok = true;
        for (int a = 0; a < q; ++a) {
            const auto ea = static_cast<Element>(a);
            ok = ok && f.add(ea, 0) == ea && f.mul(ea, 1) == ea && f.add(ea, f.neg(ea)) == 0;
            if (a != 0) ok = ok && f.mul(ea, f.inv(ea)) == 1 && f.pow(ea, static_cast<std::uint64_t>(q - 1)) == 1;
            for (int b = 0; b < q; ++b) {
                const auto eb = static_cast<Element>(b);
                ok = ok && f.add(ea, eb) == f.add(eb, ea) && f.mul(ea, eb) == f.mul(eb, ea);
                ok = ok && f.pow(f.add(ea, eb), static_cast<std::uint64_t>(f.p())) ==
                               f.add(f.pow(ea, static_cast<std::uint64_t>(f.p())), f.pow(eb, static_cast<std::uint64_t>(f.p())));
                ok = ok && f.sub(f.add(ea, eb), eb) == ea;
                if (b != 0) ok = ok && f.mul(f.div(ea, eb), eb) == ea;
                for (int c = 0; c < q; ++c) {
                    const auto ec = static_cast<Element>(c);
                    ok = ok && f.add(f.add(ea, eb), ec) == f.add(ea, f.add(eb, ec));
                    ok = ok && f.mul(f.mul(ea, eb), ec) == f.mul(ea, f.mul(eb, ec));
                    ok = ok && f.mul(ea, f.add(eb, ec)) == f.add(f.mul(ea, eb), f.mul(ea, ec));
                }
            }
        }
        CHECK(ok);
    }
}

TEST_CASE("handles share tables") {
    const auto a = make_field(9);
    const auto b = make_field(9);
    CHECK(a == b);
    CHECK_FALSE(a == make_field(3));
}
