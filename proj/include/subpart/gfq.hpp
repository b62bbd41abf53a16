#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#ifndef SUBPART_MAX_FIELD_ORDER
#define SUBPART_MAX_FIELD_ORDER 16
#endif

namespace subpart {

/// Field element code in [0, q): base-p digits of the polynomial-basis
/// coordinates, least significant digit = constant term. 0 and 1 are the
/// additive and multiplicative identities.
using Element = std::uint8_t;

inline constexpr int kMaxFieldOrder = SUBPART_MAX_FIELD_ORDER;
static_assert(kMaxFieldOrder >= 2 && kMaxFieldOrder <= 256, "element codes are 8-bit");

/// GF(q) for a prime power q <= kMaxFieldOrder, backed by full lookup tables.
///
/// A Field is a cheap handle: copies share the same immutable tables, so it
/// can be stored by value in every Subspace and passed across threads.
class Field {
public:
    int p() const noexcept { return tables_->p; }
    int e() const noexcept { return tables_->e; }
    int q() const noexcept { return tables_->q; }

    /// Monic irreducible modulus over GF(p), coefficients from x^0 to x^e.
    const std::vector<int>& modulus() const noexcept { return tables_->modulus; }

    Element add(Element a, Element b) const noexcept { return tables_->add[idx(a, b)]; }
    Element sub(Element a, Element b) const noexcept { return add(a, tables_->neg[b]); }
    Element neg(Element a) const noexcept { return tables_->neg[a]; }
    Element mul(Element a, Element b) const noexcept { return tables_->mul[idx(a, b)]; }
    /// Throws Error(DivisionByZero) for a == 0.
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    Element pow(Element a, std::uint64_t k) const noexcept;

    friend bool operator==(const Field& a, const Field& b) noexcept { return a.q() == b.q(); }

private:
    struct Tables {
        int p = 0;
        int e = 0;
        int q = 0;
        std::vector<int> modulus;
        std::vector<Element> add;
        std::vector<Element> mul;
        std::vector<Element> neg;
        std::vector<Element> inv;
    };

    explicit Field(std::shared_ptr<const Tables> t) : tables_(std::move(t)) {}
    std::size_t idx(Element a, Element b) const noexcept {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(tables_->q) + b;
    }

    static std::shared_ptr<const Tables> build(int p, int e, std::vector<int> modulus);

    std::shared_ptr<const Tables> tables_;

    friend Field make_field(int q);
};

/// Builds (or returns the cached) GF(q).
/// Throws Error(NotPrimePower) or Error(Unsupported).
Field make_field(int q);

/// Polynomial arithmetic helpers over GF(p), p prime; coefficient vectors
/// run from x^0 upward.
namespace poly {
/// Remainder of a modulo a monic b.
std::vector<int> mod(std::vector<int> a, const std::vector<int>& b, int p);
/// True iff the monic polynomial f of degree >= 1 has no monic factor of
/// degree 1..deg(f)/2 over GF(p).
bool is_irreducible(const std::vector<int>& f, int p);
}  // namespace poly

}  // namespace subpart
