#include "subpart/gfq.hpp"

#include "subpart/error.hpp"

#include <array>
#include <map>
#include <mutex>
#include <string>

namespace subpart {

namespace poly {

namespace {
int degree(const std::vector<int>& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        if (a[static_cast<std::size_t>(i)] != 0) return i;
    }
    return -1;
}

int inv_mod_p(int a, int p) {
    for (int x = 1; x < p; ++x) {
        if ((a * x) % p == 1) return x;
    }
    return 0;
}
}  // namespace

std::vector<int> mod(std::vector<int> a, const std::vector<int>& b, int p) {
    const int db = degree(b);
    const int lead_inv = inv_mod_p(b[static_cast<std::size_t>(db)], p);
    for (int da = degree(a); da >= db; da = degree(a)) {
        const int factor = (a[static_cast<std::size_t>(da)] * lead_inv) % p;
        const int shift = da - db;
        for (int i = 0; i <= db; ++i) {
            auto& c = a[static_cast<std::size_t>(i + shift)];
            c = ((c - factor * b[static_cast<std::size_t>(i)]) % p + p) % p;
        }
    }
    a.resize(static_cast<std::size_t>(db > 0 ? db : 1));
    return a;
}

bool is_irreducible(const std::vector<int>& f, int p) {
    const int n = degree(f);
    if (n < 1) return false;
    if (n == 1) return true;
    for (int k = 1; k <= n / 2; ++k) {
        // Every monic polynomial of degree k, lower coefficients as a base-p odometer.
        std::vector<int> g(static_cast<std::size_t>(k + 1), 0);
        g[static_cast<std::size_t>(k)] = 1;
        for (;;) {
            auto r = mod(f, g, p);
            if (degree(r) < 0) return false;
            int i = 0;
            while (i < k && ++g[static_cast<std::size_t>(i)] == p) {
                g[static_cast<std::size_t>(i)] = 0;
                ++i;
            }
            if (i == k) break;
        }
    }
    return true;
}

}  // namespace poly

namespace {

// Fixed moduli, coefficients from x^0 upward.
const std::map<int, std::vector<int>>& fixed_moduli() {
    static const std::map<int, std::vector<int>> m = {
        {4, {1, 1, 1}},        // x^2 + x + 1
        {8, {1, 1, 0, 1}},     // x^3 + x + 1
        {9, {2, 1, 1}},        // x^2 + x + 2
        {16, {1, 1, 0, 0, 1}}, // x^4 + x + 1
    };
    return m;
}

std::vector<int> find_modulus(int p, int e) {
    if (e == 1) return {0, 1};
    int q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    if (auto it = fixed_moduli().find(q); it != fixed_moduli().end()) {
        return it->second;
    }
    // Lexicographically first monic irreducible (lower coefficients as base-p odometer).
    std::vector<int> f(static_cast<std::size_t>(e + 1), 0);
    f[static_cast<std::size_t>(e)] = 1;
    for (;;) {
        if (poly::is_irreducible(f, p)) return f;
        int i = 0;
        while (i < e && ++f[static_cast<std::size_t>(i)] == p) {
            f[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == e) break;
    }
    throw Error(ErrorCode::Unsupported, "no irreducible polynomial found");
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<int> digits(int code, int p, int e) {
    std::vector<int> d(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i) {
        d[static_cast<std::size_t>(i)] = code % p;
        code /= p;
    }
    return d;
}

int encode(const std::vector<int>& d, int p) {
    int code = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) code = code * p + d[static_cast<std::size_t>(i)];
    return code;
}

}  // namespace

std::shared_ptr<const Field::Tables> Field::build(int p, int e, std::vector<int> modulus) {
    auto t = std::make_shared<Tables>();
    int q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    t->p = p;
    t->e = e;
    t->q = q;
    t->modulus = std::move(modulus);
    const auto qq = static_cast<std::size_t>(q);
    t->add.resize(qq * qq);
    t->mul.resize(qq * qq);
    t->neg.resize(qq);
    t->inv.assign(qq, 0);

    for (int a = 0; a < q; ++a) {
        const auto da = digits(a, p, e);
        std::vector<int> n(da.size());
        for (std::size_t i = 0; i < da.size(); ++i) n[i] = (p - da[i]) % p;
        t->neg[static_cast<std::size_t>(a)] = static_cast<Element>(encode(n, p));
        for (int b = 0; b < q; ++b) {
            const auto db = digits(b, p, e);
            std::vector<int> s(da.size());
            for (std::size_t i = 0; i < da.size(); ++i) s[i] = (da[i] + db[i]) % p;
            std::vector<int> prod(static_cast<std::size_t>(2 * e), 0);
            for (int i = 0; i < e; ++i) {
                for (int j = 0; j < e; ++j) {
                    auto& c = prod[static_cast<std::size_t>(i + j)];
                    c = (c + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p;
                }
            }
            auto r = e == 1 ? std::vector<int>{prod[0]} : poly::mod(prod, t->modulus, p);
            r.resize(static_cast<std::size_t>(e), 0);
            const auto at = static_cast<std::size_t>(a) * qq + static_cast<std::size_t>(b);
            t->add[at] = static_cast<Element>(encode(s, p));
            t->mul[at] = static_cast<Element>(encode(r, p));
        }
    }
    for (int a = 1; a < q; ++a) {
        for (int b = 1; b < q; ++b) {
            if (t->mul[static_cast<std::size_t>(a) * qq + static_cast<std::size_t>(b)] == 1) {
                t->inv[static_cast<std::size_t>(a)] = static_cast<Element>(b);
                break;
            }
        }
    }
    return t;
}

Element Field::inv(Element a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in GF(" + std::to_string(q()) + ")");
    return tables_->inv[a];
}

Element Field::pow(Element a, std::uint64_t k) const noexcept {
    Element result = 1;
    Element base = a;
    while (k != 0) {
        if (k & 1u) result = mul(result, base);
        base = mul(base, base);
        k >>= 1u;
    }
    return result;
}

Field make_field(int q) {
    if (q < 2) throw Error(ErrorCode::NotPrimePower, "q = " + std::to_string(q));
    int p = 0;
    for (int d = 2; d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    int e = 0;
    int rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1 || !is_prime(p)) {
        throw Error(ErrorCode::NotPrimePower, "q = " + std::to_string(q) + " has two distinct prime factors");
    }
    if (q > kMaxFieldOrder) {
        throw Error(ErrorCode::Unsupported,
                    "q = " + std::to_string(q) + " exceeds the configured maximum " + std::to_string(kMaxFieldOrder));
    }

    static std::mutex mutex;
    static std::array<std::shared_ptr<const Field::Tables>, 257> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[static_cast<std::size_t>(q)];
    if (!slot) {
        auto modulus = find_modulus(p, e);
        if (!poly::is_irreducible(modulus, p)) {
            throw Error(ErrorCode::Unsupported, "modulus for q = " + std::to_string(q) + " is reducible");
        }
        slot = Field::build(p, e, std::move(modulus));
    }
    return Field(slot);
}

}  // namespace subpart
