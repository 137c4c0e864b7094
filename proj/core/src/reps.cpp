#include "cn/reps.hpp"

#include <optional>
#include <stdexcept>

namespace cn {

StarParams find_star_params(const Field& F, StarCond cond) {
    for (long long u = 0; u < F.q(); ++u) {
        for (long long v = 1; v < F.q(); ++v) {
            const Fe nv = F.neg(static_cast<Fe>(v));
            if (cond == StarCond::NegSquare && !F.is_square(nv)) continue;
            if (cond == StarCond::NegNonsquare && F.is_square(nv)) continue;
            bool ok = true;
            for (long long l = 0; ok && l < F.q(); ++l) {
                const Fe l2 = F.mul(static_cast<Fe>(l), static_cast<Fe>(l));
                const Fe val = F.sub(F.add(F.mul(static_cast<Fe>(v), l2),
                                           F.mul(F.mul(static_cast<Fe>(u), static_cast<Fe>(v)),
                                                 static_cast<Fe>(l))),
                                     1);
                ok = val != 0;
            }
            if (ok) return {static_cast<Fe>(u), static_cast<Fe>(v)};
        }
    }
    throw internal_error("condition (*) has no solution, which cannot happen for odd q");
}

DoubleStarParams find_doublestar_params(const Field& F) {
    for (long long u = 0; u < F.q(); ++u) {
        for (long long v = 0; v < F.q(); ++v) {
            for (long long w = 0; w < F.q(); ++w) {
                bool ok = true;
                for (long long l = 0; ok && l < F.q(); ++l) {
                    const Fe le = static_cast<Fe>(l);
                    const Fe l2 = F.mul(le, le);
                    const Fe l3 = F.mul(l2, le);
                    Fe val = F.add(l3, F.mul(static_cast<Fe>(w), l2));
                    val = F.sub(val, F.mul(static_cast<Fe>(u), le));
                    val = F.add(val, static_cast<Fe>(v));
                    ok = val != 0;
                }
                if (ok) return {static_cast<Fe>(u), static_cast<Fe>(v), static_cast<Fe>(w)};
            }
        }
    }
    throw internal_error("condition (**) has no solution, which cannot happen for q >= 3");
}

Fe find_dagger_c(const Field& F) {
    if (F.q() % 3 == 0)
        throw std::domain_error("condition (+) requires q != 0 mod 3");
    const bool in_base = F.q() % 3 == 1;  // then -3 is a square, so c must be one too
    std::optional<Field> ext;
    if (!in_base) ext.emplace(F.extend_to_quadratic());
    const Field& E = in_base ? F : *ext;
    const Fe m3 = F.neg(F.scalar(3));
    for (long long c = 2; c < F.q(); ++c) {
        const Fe ce = static_cast<Fe>(c);
        if (!F.is_square(F.mul(m3, ce))) continue;
        // Indices embed identically into the quadratic extension.
        const auto s = E.sqrt(ce);
        if (!s) throw internal_error("sqrt(c) missing although -3c is a square");
        const Fe ratio = E.div(E.add(*s, 1), E.sub(*s, 1));
        if (!E.is_cube(ratio)) return ce;
    }
    throw internal_error("condition (+) has no solution, which cannot happen for q != 0 mod 3");
}

namespace {

Vec6 e(int i) {
    Vec6 v{};
    v[i] = 1;
    return v;
}

Subspace span2(const Field& F, Vec6 a, Vec6 b) { return span_of(F, {a, b}); }
Subspace span3(const Field& F, Vec6 a, Vec6 b, Vec6 c) { return span_of(F, {a, b, c}); }

}  // namespace

Subspace line_rep(const Field& F, LineOrbit o) {
    const Fe eps = F.canonical_nonsquare();
    const Fe m1 = F.neg(1);
    switch (o) {
        case LineOrbit::o5: return span2(F, e(0), e(3));
        case LineOrbit::o6: return span2(F, e(0), e(1));
        case LineOrbit::o8_1: return span2(F, e(0), {0, 0, 0, 1, 0, m1});
        case LineOrbit::o8_2: return span2(F, e(0), {0, 0, 0, 1, 0, F.neg(eps)});
        case LineOrbit::o9: return span2(F, e(0), {0, 0, 1, 1, 0, 0});
        case LineOrbit::o10: {
            const auto [u, v] = find_star_params(F, StarCond::None);
            return span2(F, {v, 0, 0, 1, 0, 0}, {0, 1, 0, u, 0, 0});
        }
        case LineOrbit::o12: return span2(F, e(1), e(4));
        case LineOrbit::o13_1: return span2(F, e(1), {0, 0, 0, 1, 0, m1});
        case LineOrbit::o13_2: return span2(F, e(1), {0, 0, 0, 1, 0, F.neg(eps)});
        case LineOrbit::o14_1: return span2(F, {1, 0, 0, m1, 0, 0}, {0, 0, 0, m1, 0, 1});
        case LineOrbit::o14_2:
            return span2(F, {1, 0, 0, F.neg(eps), 0, 0}, {0, 0, 0, F.neg(eps), 0, 1});
        case LineOrbit::o15_1: {
            const auto [u, v] = find_star_params(F, StarCond::NegSquare);
            return span2(F, {0, 1, 0, u, 0, 1}, {v, 0, 0, 1, 0, 0});
        }
        case LineOrbit::o15_2: {
            const auto [u, v] = find_star_params(F, StarCond::NegNonsquare);
            return span2(F, {0, 1, 0, u, 0, 1}, {v, 0, 0, 1, 0, 0});
        }
        case LineOrbit::o16: return span2(F, {0, 0, 1, 1, 0, 0}, e(4));
        case LineOrbit::o17: {
            const auto [u, v, w] = find_doublestar_params(F);
            return span2(F, {F.inv(v), 0, 0, F.neg(w), 1, 0}, {0, 1, 0, u, 0, 1});
        }
    }
    throw std::domain_error("unknown line orbit");
}

Subspace plane_rep(const Field& F, PlaneOrbit s) {
    if (!plane_label_valid(s, static_cast<int>(F.q())))
        throw std::domain_error(to_string(s) + " does not occur for q = " +
                                std::to_string(F.q()));
    const Fe eps = F.canonical_nonsquare();
    const Fe m1 = F.neg(1);
    switch (s) {
        case PlaneOrbit::S1: return span3(F, e(0), e(3), e(1));
        case PlaneOrbit::S2: return span3(F, e(0), e(3), e(5));
        case PlaneOrbit::S3: return span3(F, e(0), e(3), e(2));
        case PlaneOrbit::S4: return span3(F, e(0), e(3), {0, 0, 1, 0, 1, 0});
        case PlaneOrbit::S5: return span3(F, e(0), e(3), {0, 0, 1, 0, 1, 1});
        case PlaneOrbit::S6: return span3(F, {1, 0, 0, eps, 0, 0}, e(1), e(5));
        case PlaneOrbit::S7: return span3(F, e(0), e(1), e(2));
        case PlaneOrbit::S8: return span3(F, e(0), e(1), e(4));
        case PlaneOrbit::S9: return span3(F, e(0), e(1), {0, 0, 0, 1, 0, m1});
        case PlaneOrbit::S10: return span3(F, e(0), e(1), {0, 0, 0, 1, 0, F.neg(eps)});
        case PlaneOrbit::S11: return span3(F, {0, 0, 0, 1, 1, 1}, e(1), {0, 0, 1, 0, 0, 1});
        case PlaneOrbit::S12: return span3(F, e(0), {0, 1, 0, 0, 1, 0}, {0, 0, 0, 1, 0, 1});
        case PlaneOrbit::S13: return span3(F, e(0), {0, 1, 0, 0, 1, 0}, {0, 0, 0, 1, 0, eps});
        case PlaneOrbit::S14: {
            const Fe c = find_dagger_c(F);
            return span3(F, e(0), {0, 1, 0, 0, 1, 0}, {0, 0, 0, c, m1, 1});
        }
        case PlaneOrbit::S14p:
            return span3(F, e(0), {0, 0, 0, 1, 0, m1}, {1, 1, 1, 1, 1, 0});
        case PlaneOrbit::S15: return span3(F, e(0), e(1), {0, 0, 1, 1, 0, 0});
    }
    throw std::domain_error("unknown plane orbit");
}

}  // namespace cn
