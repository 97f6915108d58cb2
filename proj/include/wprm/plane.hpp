#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "wprm/error.hpp"
#include "wprm/gf.hpp"

namespace wprm {

/// A representative triple of a point of P(1,a,b)(F_q).  Canonical points
/// have x0 = 1 (affine) or x0 = 0 and the lexicographically smallest
/// (x1,x2) encoding in their orbit.
struct proj_point {
    fe x0 = 0, x1 = 0, x2 = 0;

    bool operator==(const proj_point&) const = default;

    std::string to_string() const {
        return std::to_string(x0) + ":" + std::to_string(x1) + ":" + std::to_string(x2);
    }
};

/// The weighted projective plane P(1,a,b) over F_q, with gcd(a,b) = 1 and
/// a <= b.  Owns the field model and the weights; everything downstream
/// (monomial degrees, point orbits, code parameters) is derived from it.
class plane {
public:
    plane(field f, int a, int b) : field_(std::move(f)), a_(a), b_(b) {
        if (a < 1 || b < 1 || a > b) fail(errc::bad_argument, "plane: require 1 <= a <= b");
        if (std::gcd(a, b) != 1) fail(errc::bad_argument, "plane: weights must be coprime");
    }

    const field& gf() const { return field_; }
    int a() const { return a_; }
    int b() const { return b_; }
    int q() const { return field_.q(); }

    /// |P(1,a,b)(F_q)| = q^2 + q + 1.
    int n() const { return q() * q() + q() + 1; }

private:
    field field_;
    int a_, b_;
};

/// True iff Q = (l*x0, l^a*x1, l^b*x2) for some unit l, decided by scanning
/// the q-1 units.
inline bool orbit_equivalent(const proj_point& P, const proj_point& Q, const plane& pl) {
    if ((P.x0 == 0 && P.x1 == 0 && P.x2 == 0) || (Q.x0 == 0 && Q.x1 == 0 && Q.x2 == 0))
        fail(errc::zero_triple, "orbit_equivalent: zero triple");
    const field& F = pl.gf();
    for (fe l = 1; l < pl.q(); ++l) {
        if (F.mul(l, P.x0) == Q.x0 && F.mul(F.pow(l, pl.a()), P.x1) == Q.x1 &&
            F.mul(F.pow(l, pl.b()), P.x2) == Q.x2)
            return true;
    }
    return false;
}

/// All n = q^2+q+1 canonical points in deterministic order: the q^2 affine
/// points [1:y1:y2] in (y1,y2) encoding order, then [0:1:0], [0:0:1], then
/// the q-1 orbit representatives [0:y1:y2] with y1,y2 != 0, each the
/// smallest member of its orbit under (y1,y2) -> (l^a*y1, l^b*y2).
inline std::vector<proj_point> enumerate_points(const plane& pl) {
    const field& F = pl.gf();
    const int q = pl.q();
    std::vector<proj_point> pts;
    pts.reserve(pl.n());
    for (fe y1 = 0; y1 < q; ++y1)
        for (fe y2 = 0; y2 < q; ++y2) pts.push_back({1, y1, y2});
    pts.push_back({0, 1, 0});
    pts.push_back({0, 0, 1});

    std::vector<std::vector<bool>> seen(q, std::vector<bool>(q, false));
    for (fe y1 = 1; y1 < q; ++y1)
        for (fe y2 = 1; y2 < q; ++y2) {
            if (seen[y1][y2]) continue;
            pts.push_back({0, y1, y2});
            for (fe l = 1; l < q; ++l)
                seen[F.mul(F.pow(l, pl.a()), y1)][F.mul(F.pow(l, pl.b()), y2)] = true;
        }
    return pts;
}

} // namespace wprm
