#include "cn/gf.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cn {
namespace {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// q = p^k with p the smallest (hence only) prime divisor.
void factor_prime_power(long long q, int& p, int& k) {
    if (q < 3) throw field_error("field order must be at least 3");
    long long sp = 0;
    for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0) { sp = d; break; }
    if (sp == 0) sp = q;  // q prime
    int kk = 0;
    long long r = q;
    while (r % sp == 0) { r /= sp; ++kk; }
    if (r != 1) throw field_error("field order is not a prime power");
    if (sp % 2 == 0) throw field_error("field order must be odd");
    if (!is_prime(sp)) throw field_error("field order is not a prime power");
    p = static_cast<int>(sp);
    k = kk;
}

// Dense polynomials over GF(p), constant coefficient first.
using Poly = std::vector<int>;

int pdeg(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

// Remainder of f by monic m.
Poly pmod(Poly f, const Poly& m, int p) {
    const int dm = pdeg(m);
    for (int i = pdeg(f); i >= dm; i = pdeg(f)) {
        const int c = f[i];
        if (c == 0) continue;
        for (int j = 0; j <= dm; ++j)
            f[i - dm + j] = ((f[i - dm + j] - c * m[j]) % p + p) % p;
    }
    return f;
}

bool poly_divides(const Poly& d, const Poly& f, int p) {
    return pdeg(pmod(f, d, p)) < 0;
}

// A reducible monic polynomial of degree k has a monic factor of degree
// <= k/2; trial division over all monic polynomials of those degrees is a
// complete test at desk scale.
bool is_irreducible(const Poly& f, int p) {
    const int k = pdeg(f);
    if (k <= 0) return false;
    for (int d = 1; 2 * d <= k; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            Poly g(d + 1, 0);
            long long t = idx;
            for (int i = 0; i < d; ++i) { g[i] = static_cast<int>(t % p); t /= p; }
            g[d] = 1;
            if (poly_divides(g, f, p)) return false;
        }
    }
    return true;
}

// Candidates ordered by the canonical index of their non-leading coefficients.
Poly smallest_irreducible(int p, int k) {
    long long count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
        Poly f(k + 1, 0);
        long long t = idx;
        for (int i = 0; i < k; ++i) { f[i] = static_cast<int>(t % p); t /= p; }
        f[k] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw internal_error("no irreducible polynomial found");  // unreachable
}

}  // namespace

Field::Field(long long q) {
    factor_prime_power(q, p_, k_);
    q_ = static_cast<int>(q);
    if (k_ >= 2) mod_ = smallest_irreducible(p_, k_);
    init_common();
}

Field::Field(long long q, const std::vector<int>& modulus) {
    factor_prime_power(q, p_, k_);
    q_ = static_cast<int>(q);
    if (modulus.size() != static_cast<size_t>(k_) + 1)
        throw field_error("modulus must have degree k = " + std::to_string(k_));
    for (int c : modulus)
        if (c < 0 || c >= p_) throw field_error("modulus coefficients must lie in [0, p)");
    if (modulus.back() != 1) throw field_error("modulus must be monic");
    if (k_ >= 2) {
        if (!is_irreducible(modulus, p_)) throw field_error("modulus is reducible over GF(p)");
        mod_ = modulus;
    }
    init_common();
}

Fe Field::add_raw(Fe a, Fe b) const {
    if (base_) {
        const int bq = base_->q();
        const Fe a0 = a % bq, a1 = a / bq, b0 = b % bq, b1 = b / bq;
        return base_->add(a0, b0) + bq * base_->add(a1, b1);
    }
    if (k_ == 1) return (a + b) % p_;
    Fe r = 0, m = 1;
    for (int i = 0; i < k_; ++i) {
        r += ((a % p_ + b % p_) % p_) * m;
        a /= p_; b /= p_; m *= p_;
    }
    return r;
}

Fe Field::neg_raw(Fe a) const {
    if (base_) {
        const int bq = base_->q();
        return base_->neg(a % bq) + bq * base_->neg(a / bq);
    }
    if (k_ == 1) return (p_ - a) % p_;
    Fe r = 0, m = 1;
    for (int i = 0; i < k_; ++i) {
        r += ((p_ - a % p_) % p_) * m;
        a /= p_; m *= p_;
    }
    return r;
}

Fe Field::mul_raw(Fe a, Fe b) const {
    if (base_) {
        // (a0 + a1 t)(b0 + b1 t) with t^2 = s in the base field.
        const Field& F = *base_;
        const int bq = F.q();
        const Fe a0 = a % bq, a1 = a / bq, b0 = b % bq, b1 = b / bq;
        const Fe lo = F.add(F.mul(a0, b0), F.mul(F.mul(a1, b1), ext_s_));
        const Fe hi = F.add(F.mul(a0, b1), F.mul(a1, b0));
        return lo + bq * hi;
    }
    if (k_ == 1) return static_cast<Fe>((static_cast<long long>(a) * b) % p_);
    int da[16], db[16];
    for (int i = 0; i < k_; ++i) { da[i] = a % p_; a /= p_; db[i] = b % p_; b /= p_; }
    int prod[31] = {0};
    for (int i = 0; i < k_; ++i) {
        if (da[i] == 0) continue;
        for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    for (int i = 2 * k_ - 2; i >= k_; --i) {
        const int c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (int j = 0; j < k_; ++j)
            prod[i - k_ + j] = ((prod[i - k_ + j] - c * mod_[j]) % p_ + p_) % p_;
    }
    Fe r = 0;
    for (int i = k_ - 1; i >= 0; --i) r = r * p_ + prod[i];
    return r;
}

Fe Field::pow_raw(Fe a, long long e) const {
    Fe r = 1, base = a;
    while (e > 0) {
        if (e & 1) r = mul_raw(r, base);
        base = mul_raw(base, base);
        e >>= 1;
    }
    return r;
}

void Field::init_common() {
    if (q_ > kTableLimit) return;
    const size_t n = static_cast<size_t>(q_);
    neg_.resize(n);
    for (Fe a = 0; a < q_; ++a) neg_[a] = static_cast<int16_t>(neg_raw(a));
    add_.resize(n * n);
    mul_.resize(n * n);
    for (Fe a = 0; a < q_; ++a)
        for (Fe b = 0; b <= a; ++b) {
            const int16_t s = static_cast<int16_t>(add_raw(a, b));
            const int16_t m = static_cast<int16_t>(mul_raw(a, b));
            add_[n * a + b] = add_[n * b + a] = s;
            mul_[n * a + b] = mul_[n * b + a] = m;
        }
    inv_.assign(n, 0);
    for (Fe a = 1; a < q_; ++a) inv_[a] = static_cast<int16_t>(pow(a, q_ - 2));
    sqrt_.assign(n, -1);
    for (Fe y = 0; y < q_; ++y) {
        const Fe s = mul_[n * y + y];
        if (sqrt_[s] < 0) sqrt_[s] = static_cast<int16_t>(y);  // ascending scan: smaller root wins
    }
    sq_.resize(n);
    for (Fe a = 0; a < q_; ++a) sq_[a] = sqrt_[a] >= 0 ? 1 : 0;
    for (Fe a = 0; a < q_; ++a)
        if (!sq_[a]) { nonsquare_ = a; break; }
}

Fe Field::add(Fe a, Fe b) const {
    assert(a >= 0 && a < q_ && b >= 0 && b < q_);
    return tabled() ? add_[static_cast<size_t>(a) * q_ + b] : add_raw(a, b);
}

Fe Field::neg(Fe a) const {
    assert(a >= 0 && a < q_);
    return tabled() ? neg_[a] : neg_raw(a);
}

Fe Field::sub(Fe a, Fe b) const { return add(a, neg(b)); }

Fe Field::mul(Fe a, Fe b) const {
    assert(a >= 0 && a < q_ && b >= 0 && b < q_);
    return tabled() ? mul_[static_cast<size_t>(a) * q_ + b] : mul_raw(a, b);
}

Fe Field::inv(Fe a) const {
    if (a == 0) throw std::domain_error("inversion of zero");
    return tabled() ? inv_[a] : pow_raw(a, static_cast<long long>(q_) - 2);
}

Fe Field::pow(Fe a, long long e) const {
    if (e < 0) { a = inv(a); e = -e; }
    Fe r = 1, base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Fe Field::scalar(long long n) const {
    return static_cast<Fe>(((n % p_) + p_) % p_);
}

bool Field::is_square(Fe a) const {
    assert(a >= 0 && a < q_);
    if (tabled()) return sq_[a] != 0;
    if (a == 0) return true;
    return pow(a, (static_cast<long long>(q_) - 1) / 2) == 1;
}

std::optional<Fe> Field::sqrt(Fe a) const {
    if (tabled()) {
        const int16_t r = sqrt_[a];
        if (r < 0) return std::nullopt;
        return static_cast<Fe>(r);
    }
    if (a == 0) return 0;
    if (!is_square(a)) return std::nullopt;
    // Tonelli-Shanks in GF(q): q-1 = 2^e * m with m odd.
    long long m = q_ - 1;
    int e = 0;
    while (m % 2 == 0) { m /= 2; ++e; }
    Fe c = pow(canonical_nonsquare(), m);
    Fe t = pow(a, m);
    Fe r = pow(a, (m + 1) / 2);
    while (t != 1) {
        int i = 0;
        Fe t2 = t;
        while (t2 != 1) { t2 = mul(t2, t2); ++i; }
        Fe b = c;
        for (int j = 0; j < e - i - 1; ++j) b = mul(b, b);
        r = mul(r, b);
        c = mul(b, b);
        t = mul(t, c);
        e = i;
    }
    return std::min(r, neg(r));
}

Fe Field::canonical_nonsquare() const {
    if (nonsquare_ >= 0) return nonsquare_;
    for (Fe a = 2; a < q_; ++a)
        if (!is_square(a)) return a;
    throw internal_error("no non-square found");  // unreachable for odd q
}

bool Field::is_cube(Fe a) const {
    if ((q_ - 1) % 3 != 0) throw std::domain_error("cube test requires 3 | q-1");
    if (a == 0) throw std::domain_error("cube test of zero");
    return pow(a, (static_cast<long long>(q_) - 1) / 3) == 1;
}

Field Field::extend_to_quadratic() const {
    const long long qq = static_cast<long long>(q_) * q_;
    if (qq > (1LL << 30)) throw field_error("quadratic extension too large");
    Field ext;
    ext.q_ = static_cast<int>(qq);
    ext.p_ = p_;
    ext.k_ = 2 * k_;
    ext.base_ = std::make_shared<Field>(*this);
    ext.ext_s_ = canonical_nonsquare();
    ext.mod_ = {neg(ext.ext_s_), 0, 1};
    ext.init_common();
    return ext;
}

const Field& Field::base() const {
    if (!base_) throw std::domain_error("not a quadratic extension");
    return *base_;
}

Fe Field::embed(Fe base_elem) const {
    if (!base_) throw std::domain_error("not a quadratic extension");
    assert(base_elem >= 0 && base_elem < base_->q());
    return base_elem;  // pair (a, 0) has index a
}

}  // namespace cn
