#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "cn/errors.hpp"

namespace cn {

// A field element is its canonical index in [0, q): polynomial coefficients
// over GF(p) read as a base-p integer, constant coefficient least significant.
// Index 0 is the additive identity, index 1 the multiplicative identity.
using Fe = int;

// GF(q) for odd prime powers q = p^k, plus quadratic extensions GF(q^2)
// represented as pairs a + b*t with t^2 a fixed non-square of the base field
// (pair (a,b) has index a + q*b, so the base field embeds index-preservingly).
//
// All operations are precomputed into tables when q <= kTableLimit; larger
// fields fall back to on-the-fly polynomial arithmetic. Immutable after
// construction; safe to share across threads.
class Field {
public:
    static constexpr int kTableLimit = 1024;

    // Built-in modulus: the lexicographically smallest monic irreducible of
    // degree k over GF(p) (coefficients compared as the canonical index).
    explicit Field(long long q);
    // Explicit modulus: k+1 coefficients over GF(p), constant first, monic.
    // Ignored (after a length check) when k == 1.
    Field(long long q, const std::vector<int>& modulus);

    int q() const { return q_; }
    int p() const { return p_; }
    int k() const { return k_; }
    // Empty for prime fields. For a quadratic extension built by
    // extend_to_quadratic, the pair modulus t^2 - s expressed over the base
    // field as {neg(s), 0, 1}.
    const std::vector<int>& modulus() const { return mod_; }
    bool tabled() const { return !mul_.empty(); }

    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    Fe mul(Fe a, Fe b) const;
    Fe inv(Fe a) const;  // throws std::domain_error on 0
    Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
    Fe pow(Fe a, long long e) const;  // e < 0 allowed for a != 0
    Fe scalar(long long n) const;     // n * 1, i.e. n mod p in the prime subfield

    bool is_square(Fe a) const;  // 0 counts as a square
    // The root with the smaller canonical index, when one exists.
    std::optional<Fe> sqrt(Fe a) const;
    // The non-square with the smallest canonical index.
    Fe canonical_nonsquare() const;
    // Cube test by x^((q-1)/3) = 1. Pre: 3 | q-1 and a != 0.
    bool is_cube(Fe a) const;

    // GF(q^2) with the pair representation described above. The embedding of
    // a base element is the identity on indices; see embed().
    Field extend_to_quadratic() const;
    bool is_quadratic_extension() const { return base_ != nullptr; }
    const Field& base() const;
    Fe embed(Fe base_elem) const;  // pre: is_quadratic_extension()

    // Raw tables for hot loops. Pre: tabled(). Entry layout: t[a*q + b].
    const int16_t* mul_table() const { return mul_.data(); }
    const int16_t* add_table() const { return add_.data(); }
    const int16_t* neg_table() const { return neg_.data(); }

private:
    Field() = default;
    void init_common();
    Fe mul_raw(Fe a, Fe b) const;
    Fe add_raw(Fe a, Fe b) const;
    Fe neg_raw(Fe a) const;
    Fe pow_raw(Fe a, long long e) const;

    int q_ = 0, p_ = 0, k_ = 0;
    std::vector<int> mod_;  // see modulus()
    std::shared_ptr<const Field> base_;  // non-null for pair-represented extensions
    Fe ext_s_ = -1;                      // t^2 = ext_s_ in the base field

    std::vector<int16_t> mul_, add_, neg_, inv_, sqrt_;  // sqrt_: -1 = no root
    std::vector<uint8_t> sq_;
    Fe nonsquare_ = -1;
};

}  // namespace cn
