#include "thetalab/modular.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace thetalab {

namespace {

// Extended gcd with the sign normalized so the returned g is nonnegative:
// g = x*a + y*b.
struct Egcd {
    std::int64_t g, x, y;
};

Egcd extended_gcd(std::int64_t a, std::int64_t b) {
    std::int64_t old_r = a, r = b;
    std::int64_t old_x = 1, x = 0;
    std::int64_t old_y = 0, y = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t t;
        t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * x; old_x = x; x = t;
        t = old_y - q * y; old_y = y; y = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    return {old_r, old_x, old_y};
}

std::vector<std::int64_t> divisors_of(std::int64_t n) {
    std::vector<std::int64_t> divs;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d != n / d) divs.push_back(n / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace

UniModMatrix::UniModMatrix(std::int64_t a_, std::int64_t b_, std::int64_t c_, std::int64_t d_)
    : a(a_), b(b_), c(c_), d(d_) {
    __int128 det = __int128(a) * d - __int128(b) * c;
    if (det != 1) throw std::invalid_argument("UniModMatrix: determinant must be 1");
}

MoebiusMap::MoebiusMap(double a_, double b_, double c_, double d_)
    : a(a_), b(b_), c(c_), d(d_) {
    if (a * d - b * c == 0.0)
        throw std::invalid_argument("MoebiusMap: determinant must be nonzero");
}

HalfPlanePoint moebius_apply(const UniModMatrix& m, const HalfPlanePoint& z) {
    // (az+b)(conj(cz+d)) / |cz+d|^2 with det 1: y' = y / |cz+d|^2
    double cxd = double(m.c) * z.x + double(m.d);
    double cy = double(m.c) * z.y;
    double denom = cxd * cxd + cy * cy;
    double axb = double(m.a) * z.x + double(m.b);
    double xp = (axb * cxd + double(m.a) * z.y * cy) / denom;
    return {xp, z.y / denom};
}

HalfPlanePoint moebius_apply(const MoebiusMap& m, const HalfPlanePoint& z) {
    double det = m.a * m.d - m.b * m.c;
    double cxd = m.c * z.x + m.d;
    double cy = m.c * z.y;
    double denom = cxd * cxd + cy * cy;
    double axb = m.a * z.x + m.b;
    double xp = (axb * cxd + m.a * z.y * cy) / denom;
    double yp = det * z.y / denom;
    return {xp, yp};  // HalfPlanePoint ctor rejects det < 0 inputs via y' <= 0
}

bool in_gamma0(const UniModMatrix& m, std::int64_t N) {
    if (N < 1) throw std::invalid_argument("in_gamma0: N must be >= 1");
    return m.c % N == 0;
}

std::int64_t index_gamma0(std::int64_t N) {
    if (N < 1) throw std::invalid_argument("index_gamma0: N must be >= 1");
    if (N > (std::int64_t(1) << 31)) throw std::overflow_error("index_gamma0: N too large");
    std::int64_t index = N;
    std::int64_t rem = N;
    for (std::int64_t q = 2; q * q <= rem; ++q) {
        if (rem % q == 0) {
            index = index / q * (q + 1);
            while (rem % q == 0) rem /= q;
        }
    }
    if (rem > 1) index = index / rem * (rem + 1);
    return index;
}

bool is_odd_prime(std::int64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::int64_t q = 3; q * q <= p; q += 2)
        if (p % q == 0) return false;
    return true;
}

CosetTable coset_reps(std::int64_t N) {
    if (N < 1 || N > 10000) throw std::invalid_argument("coset_reps: need 1 <= N <= 10^4");
    CosetTable table;
    table.level = N;
    if (N == 1) {
        table.reps.push_back(UniModMatrix::identity());
        table.labels.emplace_back(0, 1);
        return table;
    }

    std::vector<std::int64_t> units;
    for (std::int64_t u = 1; u < N; ++u)
        if (std::gcd(u, N) == 1) units.push_back(u);

    // Canonical P^1(Z/N) representatives: c runs over divisors of N (the
    // divisor N itself is the class c = 0, listed first so the identity coset
    // leads the table); for fixed c the d-line is quotiented by the units
    // congruent to 1 mod N/c, keeping the minimal orbit element.
    std::vector<std::int64_t> divs = divisors_of(N);
    std::vector<std::int64_t> order;
    order.push_back(N);
    for (std::int64_t c : divs)
        if (c != N) order.push_back(c);

    for (std::int64_t cdiv : order) {
        std::vector<std::int64_t> stab;
        std::int64_t m = N / cdiv;  // u acts trivially on c iff u = 1 mod m
        for (std::int64_t u : units)
            if (u % m == 1 % m) stab.push_back(u);
        std::int64_t c = cdiv % N;
        for (std::int64_t d = 0; d < N; ++d) {
            if (std::gcd(std::gcd(c, d), N) != 1) continue;
            bool minimal = true;
            for (std::int64_t u : stab) {
                if (u * d % N < d) { minimal = false; break; }
            }
            if (!minimal) continue;
            // lift: (c, d) are coprime integers (any common factor would
            // divide N), so complete the bottom row by extended gcd
            Egcd e = extended_gcd(c, d);
            table.reps.push_back(UniModMatrix{e.y, -e.x, c, d});
            table.labels.emplace_back(c, d);
        }
    }
    return table;
}

std::vector<CuspInfo> cusp_data_gamma0_4() {
    CosetTable t4 = coset_reps(4);
    auto find_label = [&](std::int64_t c, std::int64_t d) {
        for (std::size_t i = 0; i < t4.labels.size(); ++i)
            if (t4.labels[i] == std::make_pair(c, d)) return i;
        throw std::logic_error("cusp_data_gamma0_4: level-4 label missing");
    };
    CuspInfo inf;
    inf.at_infinity = true;
    inf.width = 1;
    inf.tile_indices = {find_label(0, 1)};
    CuspInfo zero;
    zero.num = 0;
    zero.den = 1;
    zero.width = 4;
    zero.tile_indices = {find_label(1, 0), find_label(1, 1), find_label(1, 2), find_label(1, 3)};
    CuspInfo half;
    half.num = 1;
    half.den = 2;
    half.width = 1;
    half.tile_indices = {find_label(2, 1)};
    return {inf, zero, half};
}

std::pair<HalfPlanePoint, UniModMatrix> standard_domain_reduce(const HalfPlanePoint& z) {
    double x = z.x, y = z.y;
    UniModMatrix g = UniModMatrix::identity();
    const int kMaxIter = 1000000;
    int iter = 0;
    for (; iter < kMaxIter; ++iter) {
        double m = std::nearbyint(x);
        if (m != 0.0) {
            x -= m;
            g = UniModMatrix{1, -std::int64_t(m), 0, 1} * g;
        }
        double norm2 = x * x + y * y;
        if (norm2 >= 1.0 - 1e-12) break;
        // inversion z -> -1/z
        g = UniModMatrix{0, -1, 1, 0} * g;
        double nx = -x / norm2;
        y = y / norm2;
        x = nx;
    }
    if (iter >= kMaxIter) throw budget_error("standard_domain_reduce: iteration budget exceeded");

    // deterministic boundary ties: Re in (-1/2, 1/2]; on the arc prefer Re >= 0
    if (x <= -0.5 + 1e-13) {
        x += 1.0;
        g = UniModMatrix{1, 1, 0, 1} * g;
    }
    if (std::abs(x * x + y * y - 1.0) <= 1e-12 && x < -1e-13) {
        double norm2 = x * x + y * y;
        g = UniModMatrix{0, -1, 1, 0} * g;
        double nx = -x / norm2;
        y = y / norm2;
        x = nx;
    }
    return {HalfPlanePoint{x, y}, g};
}

}  // namespace thetalab
