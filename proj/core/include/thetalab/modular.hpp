#pragma once

// Integer matrix machinery for congruence subgroups of SL2(Z):
// Gamma_0(N) membership and index, coset representatives enumerated through
// the projective line P^1(Z/N), cusp data for level 4, and the fundamental
// domain reduction used to tile quotients.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "thetalab/common.hpp"

namespace thetalab {

// A point x + iy of the upper half-plane.  The |x| guard keeps translation
// reductions within exact double-integer range.
struct HalfPlanePoint {
    double x;
    double y;
    HalfPlanePoint(double x_, double y_) : x(x_), y(y_) {
        if (!(y > 0.0)) throw std::invalid_argument("HalfPlanePoint: y must be positive");
        if (!(std::abs(x) < 1e15)) throw std::invalid_argument("HalfPlanePoint: |x| too large");
    }
    ComplexValue to_complex() const { return {x, y}; }
};

// Element of SL2(Z): determinant is validated to be exactly 1.
struct UniModMatrix {
    std::int64_t a, b, c, d;
    UniModMatrix(std::int64_t a_, std::int64_t b_, std::int64_t c_, std::int64_t d_);
    static UniModMatrix identity() { return {1, 0, 0, 1}; }
    UniModMatrix inverse() const { return {d, -b, -c, a}; }
    friend UniModMatrix operator*(const UniModMatrix& l, const UniModMatrix& r) {
        return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
                l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
    }
    bool operator==(const UniModMatrix&) const = default;
};

// Real-coefficient fractional linear map (az+b)/(cz+d) for the non-integral
// maps z -> -1/(4 p^2 z) and z -> p^2 z; determinant must be nonzero (and
// positive to preserve the upper half-plane).
struct MoebiusMap {
    double a, b, c, d;
    MoebiusMap(double a_, double b_, double c_, double d_);
    static MoebiusMap fricke(double level) { return {0.0, -1.0, level, 0.0}; }
    static MoebiusMap scaling(double m) { return {m, 0.0, 0.0, 1.0}; }
};

// Coset representatives of Gamma_0(N) \ SL2(Z), one per point of P^1(Z/N);
// reps[i] has bottom row congruent to labels[i] mod N.
struct CosetTable {
    std::int64_t level = 1;
    std::vector<UniModMatrix> reps;
    std::vector<std::pair<std::int64_t, std::int64_t>> labels;  // (c : d) mod N
};

// A cusp of Gamma_0(4) together with its width and the coset tiles that
// accumulate at it (indices into the level-4 CosetTable).
struct CuspInfo {
    bool at_infinity = false;
    std::int64_t num = 0;  // representative num/den when finite
    std::int64_t den = 1;
    std::int64_t width = 1;
    std::vector<std::size_t> tile_indices;
};

HalfPlanePoint moebius_apply(const UniModMatrix& m, const HalfPlanePoint& z);
HalfPlanePoint moebius_apply(const MoebiusMap& m, const HalfPlanePoint& z);

bool in_gamma0(const UniModMatrix& m, std::int64_t N);

// [SL2(Z) : Gamma_0(N)] = N * prod_{q | N prime} (1 + 1/q).
std::int64_t index_gamma0(std::int64_t N);

// Trial-division primality for the small odd p parameters (3, 5, 7, ...).
bool is_odd_prime(std::int64_t p);

// Enumerates P^1(Z/N) (canonical representatives with c | N) and lifts each
// label to an SL2(Z) matrix by extended gcd.
CosetTable coset_reps(std::int64_t N);

// The three cusps of Gamma_0(4): infinity (width 1), 0 (width 4), 1/2
// (width 1), with tile assignments into coset_reps(4).
std::vector<CuspInfo> cusp_data_gamma0_4();

// Reduces z into the level-1 fundamental domain |Re| <= 1/2, |z| >= 1 and
// returns the group element gamma with gamma * z = reduced.  Boundary ties
// resolve to Re in (-1/2, 1/2] and Re >= 0 on the unit circle.
std::pair<HalfPlanePoint, UniModMatrix> standard_domain_reduce(const HalfPlanePoint& z);

}  // namespace thetalab
