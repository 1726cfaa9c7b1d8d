#include "thetalab/theta.hpp"

#include <cmath>
#include <numbers>

#include "thetalab/integrate.hpp"

namespace thetalab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr ComplexValue kI{0.0, 1.0};

// e^(2 pi i n^2 z) with the x part pre-reduced mod 1 (theta has period 1,
// and n^2 x would otherwise lose the fractional part to rounding for large x)
ComplexValue q_power(double x_red, double y, double n2) {
    double phase = 2.0 * kPi * std::fmod(n2 * x_red, 1.0);
    double mag = std::exp(-2.0 * kPi * n2 * y);
    return {mag * std::cos(phase), mag * std::sin(phase)};
}

}  // namespace

ThetaTriple theta_triple_series(ComplexValue w, double tol) {
    // nome q = e^(i pi w); reduced arguments keep |q| <= e^(-pi sqrt(3)/2)
    const ComplexValue q = std::exp(kI * kPi * w);
    const double qa = std::abs(q);
    ThetaTriple out;
    // t3 = 1 + 2 sum q^(n^2),  t4 with alternating signs
    KbnAccumulator re3, im3, re4, im4;
    re3.add(1.0);
    re4.add(1.0);
    ComplexValue qn = 1.0;        // q^(n^2)
    ComplexValue qstep = q;       // q^(2n-1) updates the square
    double bound = 1.0;
    for (int n = 1; n <= 64; ++n) {
        qn *= qstep;              // q^(n^2)
        qstep *= q * q;
        ComplexValue term = 2.0 * qn;
        re3.add(term.real());
        im3.add(term.imag());
        if (n & 1) term = -term;
        re4.add(term.real());
        im4.add(term.imag());
        bound *= qa;              // decays at least geometrically
        if (2.0 * std::abs(qn) < 0.05 * tol && bound < 0.05 * tol) break;
    }
    out.t3 = {re3.value(), im3.value()};
    out.t4 = {re4.value(), im4.value()};
    // t2 = 2 q^(1/4) sum_{n>=0} q^(n(n+1))
    KbnAccumulator re2, im2;
    re2.add(1.0);
    ComplexValue qt = 1.0;        // q^(n(n+1))
    ComplexValue qs = q * q;      // q^(2n) increments the triangular exponent
    for (int n = 1; n <= 64; ++n) {
        qt *= qs;
        qs *= q * q;
        re2.add(qt.real());
        im2.add(qt.imag());
        if (2.0 * std::abs(qt) < 0.05 * tol) break;
    }
    out.t2 = 2.0 * std::exp(kI * kPi * w / 4.0) * ComplexValue{re2.value(), im2.value()};
    return out;
}

ComplexValue theta_direct(const HalfPlanePoint& z, double tol) {
    if (z.y < 0.05) throw std::domain_error("theta_direct: y < 0.05, use theta_full");
    if (tol < 1e-15) throw std::invalid_argument("theta_direct: tol below 1e-15");
    const double y = z.y;
    const double x_red = z.x - std::nearbyint(z.x);
    // least N with geometric tail bound below tol
    int N = 1;
    for (; N < 1000; ++N) {
        double head = 2.0 * std::exp(-2.0 * kPi * double(N) * double(N) * y);
        double denom = 1.0 - std::exp(-2.0 * kPi * (2.0 * N + 1.0) * y);
        if (head / denom <= tol) break;
    }
    KbnAccumulator re, im;
    re.add(1.0);
    for (int n = 1; n <= N - 1; ++n) {
        ComplexValue t = 2.0 * q_power(x_red, y, double(n) * double(n));
        re.add(t.real());
        im.add(t.imag());
    }
    return {re.value(), im.value()};
}

ComplexValue theta_full(const HalfPlanePoint& z, double tol, ReductionTrace& trace) {
    if (tol < 1e-15) throw std::invalid_argument("theta_full: tol below 1e-15");
    // theta(z) is the t3 nullwert at w = 2z; reduce w while rewriting the
    // tracked slot of the triple through the classical shift/inversion laws:
    //   t2(w+1) = e^(i pi/4) t2(w),  t3(w+1) = t4(w),   t4(w+1) = t3(w)
    //   t2(-1/w) = sqrt(w/i) t4(w),  t3(-1/w) = sqrt(w/i) t3(w),
    //   t4(-1/w) = sqrt(w/i) t2(w)
    double wx = 2.0 * z.x, wy = 2.0 * z.y;
    ComplexValue factor = 1.0;
    std::array<int, 3> perm = {2, 3, 4};  // images of (t2, t3, t4)
    UniModMatrix mat = UniModMatrix::identity();
    int inversions = 0;

    auto flip34 = [](int s) { return s == 3 ? 4 : (s == 4 ? 3 : s); };
    auto swap24 = [](int s) { return s == 2 ? 4 : (s == 4 ? 2 : s); };

    const int kMaxIter = 1000000;
    int iter = 0;
    for (; iter < kMaxIter; ++iter) {
        double m = std::nearbyint(wx);
        if (m != 0.0) {
            wx -= m;
            mat = UniModMatrix{1, -std::int64_t(m), 0, 1} * mat;
            std::int64_t mi = std::int64_t(m);
            for (int& s : perm) {
                if (s == 2) continue;
                if (mi & 1) s = flip34(s);
            }
            // the t2 slot only picks up a phase; the accumulated factor
            // tracks the t3 image since that is the value we return
            if (perm[1] == 2) factor *= std::exp(kI * kPi * m / 4.0);
        }
        double norm2 = wx * wx + wy * wy;
        if (norm2 >= 1.0 - 1e-12) break;
        // w -> -1/w
        mat = UniModMatrix{0, -1, 1, 0} * mat;
        double nwx = -wx / norm2;
        wy = wy / norm2;
        wx = nwx;
        ComplexValue wnext{wx, wy};
        factor *= std::sqrt(wnext / kI);
        for (int& s : perm) s = swap24(s);
        ++inversions;
    }
    if (iter >= kMaxIter) throw budget_error("theta_full: reduction budget exceeded");

    const double fmag = std::abs(factor);
    ThetaTriple triple = theta_triple_series({wx, wy}, tol / std::max(1.0, fmag));
    trace.matrix = mat;
    trace.accumulated_factor = factor;
    trace.permutation_tag = perm;
    trace.inversions = inversions;
    const int slot = perm[1];  // image of the original t3
    const ComplexValue value = slot == 2 ? triple.t2 : (slot == 3 ? triple.t3 : triple.t4);
    return factor * value;
}

ComplexValue theta_full(const HalfPlanePoint& z, double tol) {
    ReductionTrace trace;
    return theta_full(z, tol, trace);
}

double f_invariant(const HalfPlanePoint& z) {
    return std::sqrt(z.y) * std::norm(theta_full(z, 1e-13));
}

namespace {

double x_average_impl(double y, double tol, bool half_period) {
    if (!(y > 0.0)) throw std::invalid_argument("x_average: y must be positive");
    const double theta_tol = std::min(1e-13, 0.05 * tol);
    auto f = [y, theta_tol](double x) {
        return std::norm(theta_full(HalfPlanePoint{x, y}, theta_tol));
    };
    if (half_period) {
        IntegrationResult r = integrate_adaptive(f, 0.0, 0.5, 0.5 * tol);
        return 2.0 * r.value;
    }
    IntegrationResult r = integrate_adaptive(f, 0.0, 1.0, tol);
    return r.value;
}

}  // namespace

double x_average(double y, double tol) { return x_average_impl(y, tol, true); }

double x_average_full_period(double y, double tol) { return x_average_impl(y, tol, false); }

FourierFit fit_fourier_constant_detail(const std::vector<double>& y_grid) {
    if (y_grid.size() < 5)
        throw std::invalid_argument("fit_fourier_constant: need at least 5 grid points");
    for (double y : y_grid)
        if (y < 0.05 - 1e-12 || y > 0.5 + 1e-12)
            throw std::invalid_argument("fit_fourier_constant: grid point outside [0.05, 0.5]");
    // model column m(y) = sum_{n>=1} e^(-4 pi n^2 y)
    auto model = [](double y) {
        KbnAccumulator acc;
        for (int n = 1; n <= 16; ++n) {
            double t = std::exp(-4.0 * kPi * double(n) * double(n) * y);
            acc.add(t);
            if (t < 1e-22) break;
        }
        return acc.value();
    };
    KbnAccumulator num, den;
    std::vector<double> w(y_grid.size()), m(y_grid.size());
    for (std::size_t i = 0; i < y_grid.size(); ++i) {
        w[i] = x_average(y_grid[i], 1e-11) - 1.0;
        m[i] = model(y_grid[i]);
        num.add(w[i] * m[i]);
        den.add(m[i] * m[i]);
    }
    if (den.value() < 1e-30)
        throw std::runtime_error("fit_fourier_constant: model column numerically zero");
    FourierFit fit;
    fit.c = num.value() / den.value();
    KbnAccumulator res2;
    for (std::size_t i = 0; i < y_grid.size(); ++i) {
        double r = w[i] - fit.c * m[i];
        res2.add(r * r);
    }
    fit.residual = std::sqrt(res2.value());
    return fit;
}

double fit_fourier_constant(const std::vector<double>& y_grid) {
    return fit_fourier_constant_detail(y_grid).c;
}

}  // namespace thetalab
