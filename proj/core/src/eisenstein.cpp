#include "thetalab/eisenstein.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>

#include "thetalab/integrate.hpp"
#include "thetalab/numerics.hpp"
#include "thetalab/theta.hpp"

namespace thetalab {

namespace {

constexpr double kPi = std::numbers::pi;

// Smallest eigenvalue of the quadratic form (c,d) -> (cx+d)^2 + (cy)^2, in
// the cancellation-free form 2 y^2 / (tr + sqrt(tr^2 - 4 y^2)).
double form_min_eigenvalue(double x, double y) {
    double tr = x * x + y * y + 1.0;
    return 2.0 * y * y / (tr + std::sqrt(tr * tr - 4.0 * y * y));
}

double lattice_tail_bound(double x, double y, double sigma, double cutoff) {
    double lam = form_min_eigenvalue(x, y);
    return 2.0 * std::pow(y, sigma) * std::pow(lam, -sigma) *
           std::pow(cutoff, 2.0 - 2.0 * sigma) / (sigma - 1.0);
}

// One row c = const of the folded sum: sum over d = 1..C coprime to c of
// ((cx+d)^2 + (cy)^2)^(-s) + ((cx-d)^2 + (cy)^2)^(-s).
double real_row_sum(std::int64_t c, double x, double y, double s, std::int64_t C) {
    const double cx = double(c) * x;
    const double cyy = double(c) * y * double(c) * y;
    KbnAccumulator acc;
    if (x == 0.0) {
        for (std::int64_t d = 1; d <= C; ++d) {
            if (std::gcd(c, d) != 1) continue;
            acc.add(2.0 * std::pow(double(d) * double(d) + cyy, -s));
        }
    } else {
        for (std::int64_t d = 1; d <= C; ++d) {
            if (std::gcd(c, d) != 1) continue;
            double up = cx + double(d), um = cx - double(d);
            acc.add(std::pow(up * up + cyy, -s) + std::pow(um * um + cyy, -s));
        }
    }
    return acc.value();
}

ComplexValue complex_row_sum(std::int64_t c, double x, double y, ComplexValue s, std::int64_t C) {
    const double cx = double(c) * x;
    const double cyy = double(c) * y * double(c) * y;
    KbnAccumulator re, im;
    auto add_pow = [&](double base) {
        ComplexValue t = std::exp(-s * std::log(base));
        re.add(t.real());
        im.add(t.imag());
    };
    for (std::int64_t d = 1; d <= C; ++d) {
        if (std::gcd(c, d) != 1) continue;
        double up = cx + double(d), um = cx - double(d);
        add_pow(up * up + cyy);
        add_pow(um * um + cyy);
    }
    return {re.value(), im.value()};
}

}  // namespace

EisensteinValue eisenstein_truncated(const HalfPlanePoint& z, const EisensteinParams& params) {
    if (params.level < 1) throw std::invalid_argument("eisenstein_truncated: level must be >= 1");
    if (params.truncation < 10)
        throw std::invalid_argument("eisenstein_truncated: truncation must be >= 10");
    const double sigma = params.s.real();
    if (!(sigma > 1.0 + 1e-9))
        throw std::domain_error("eisenstein_truncated: lattice sum needs Re s > 1");

    const std::int64_t N = params.level, C = params.truncation;
    const double x = z.x, y = z.y;
    const std::int64_t rows = C / N;

    EisensteinValue out;
    out.tail_bound = lattice_tail_bound(x, y, sigma, double(C));

    if (params.s.imag() == 0.0) {
        const double s = sigma;
        std::vector<double> row_vals = parallel_map(int(rows), [&](int i) {
            return real_row_sum(std::int64_t(i + 1) * N, x, y, s, C);
        });
        KbnAccumulator acc;
        acc.add(1.0);  // the (0:+-1) class
        if (N == 1) acc.add(std::pow(x * x + y * y, -s));  // the (+-1:0) class
        for (double v : row_vals) acc.add(v);
        out.value = std::pow(y, s) * acc.value();
        return out;
    }

    KbnAccumulator re, im;
    re.add(1.0);
    if (N == 1) {
        ComplexValue t = std::exp(-params.s * std::log(x * x + y * y));
        re.add(t.real());
        im.add(t.imag());
    }
    for (std::int64_t i = 1; i <= rows; ++i) {
        ComplexValue v = complex_row_sum(i * N, x, y, params.s, C);
        re.add(v.real());
        im.add(v.imag());
    }
    out.value = std::exp(params.s * std::log(y)) * ComplexValue{re.value(), im.value()};
    return out;
}

double eisenstein_residue_formula(std::int64_t N) {
    return 3.0 / (kPi * double(index_gamma0(N)));
}

ResidueEstimate eisenstein_residue_numeric(const HalfPlanePoint& z, std::int64_t N,
                                           std::int64_t base_cutoff) {
    if (!(z.y >= 1.0 - 1e-12))
        throw std::invalid_argument("eisenstein_residue_numeric: needs Im z >= 1");
    if (base_cutoff < 500)
        throw std::invalid_argument("eisenstein_residue_numeric: base_cutoff below 500");

    // Nodes approach 1 geometrically; the quadratic Lagrange weights
    // extrapolate f(s) = (s-1)(E_inf(s) - y^s) y^(s-1) to s = 1.  The y^s
    // subtraction removes the only non-lattice term before extrapolating.
    const std::array<double, 3> nodes = {1.5, 1.25, 1.125};
    const std::array<double, 3> weights = {1.0 / 3.0, -2.0, 8.0 / 3.0};
    const double y = z.y;

    std::array<double, 3> f{}, cutoff_err{};
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double s = nodes[i];
        auto eval = [&](std::int64_t C) {
            EisensteinParams p;
            p.level = N;
            p.s = s;
            p.truncation = C;
            return eisenstein_truncated(z, p).value.real();
        };
        // the lattice sum approaches its limit like C^(2-2s); eliminate that
        // term from two cutoffs, and measure the residual from a second pair
        const double r = std::pow(2.0, 2.0 - 2.0 * s);
        double e_half = eval(base_cutoff / 2), e1 = eval(base_cutoff), e2 = eval(2 * base_cutoff);
        double einf_lo = (e1 - r * e_half) / (1.0 - r);
        double einf = (e2 - r * e1) / (1.0 - r);
        cutoff_err[i] = std::abs(einf - einf_lo);
        f[i] = (s - 1.0) * (einf - std::pow(y, s)) * std::pow(y, s - 1.0);
    }

    ResidueEstimate est;
    est.method = "richardson";
    est.value = weights[0] * f[0] + weights[1] * f[1] + weights[2] * f[2];
    const double linear = 2.0 * f[2] - f[1];  // one order lower, same tail nodes
    double bound = std::abs(est.value - linear);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        bound += std::abs(weights[i]) * (nodes[i] - 1.0) * std::pow(y, nodes[i] - 1.0) *
                 cutoff_err[i];
    est.error_bound = bound + 1e-15;
    return est;
}

ComplexValue ip_closed(const ClosedFormParams& params) {
    if (!is_odd_prime(params.p)) throw std::invalid_argument("ip_closed: p must be an odd prime");
    if (!(params.c > 0.0)) throw std::invalid_argument("ip_closed: c must be positive");
    const ComplexValue s = params.s;
    ComplexValue euler = 1.0 - std::exp((1.0 - 2.0 * s) * std::log(double(params.p)));
    return ip_closed_full(s, params.c) * euler;
}

ComplexValue ip_closed_full(ComplexValue s, double c) {
    if (!(c > 0.0)) throw std::invalid_argument("ip_closed_full: c must be positive");
    ComplexValue prefactor = std::exp((0.5 - s) * std::log(4.0 * kPi));
    return c * prefactor * gamma(s - 0.5) * zeta(2.0 * s - 1.0);
}

double ip_direct(const ClosedFormParams& params, const QuadratureSpec& quad) {
    validate(quad);
    if (params.s.imag() != 0.0) throw std::invalid_argument("ip_direct: s must be real");
    const double s = params.s.real();
    if (!(s >= 1.5 && s <= 4.0))
        throw std::invalid_argument("ip_direct: validated window is real s in [1.5, 4]");
    if (!is_odd_prime(params.p)) throw std::invalid_argument("ip_direct: p must be an odd prime");
    const double p2 = double(params.p) * double(params.p);

    auto D = [&](double y) { return x_average(y, 1e-9) - x_average(p2 * y, 1e-9); };

    // Below y_lo the integrand is kappa * y^(s-2) up to terms that are
    // exponentially small in 1/y; kappa is measured, not assumed, and the
    // two measurements must agree or the asymptote was not reached.
    const double y_lo = params.p == 3 ? 5e-3 : 2e-3;
    const double y_hi = 2.5;  // beyond: D < 1e-13, below every tolerance here
    const double k1 = D(y_lo) * std::sqrt(y_lo);
    const double k2 = D(y_lo / 2.0) * std::sqrt(y_lo / 2.0);
    if (std::abs(k1 - k2) > 0.05 * std::abs(k2))
        throw budget_error("ip_direct: small-y asymptote not reached at y_lo");
    const double head = k2 * std::pow(y_lo, s - 1.0) / (s - 1.0);

    // main stretch in t = sqrt(y): y^(s-3/2) dy = 2 t^(2s-2) dt
    auto integrand = [&](double t) { return 2.0 * std::pow(t, 2.0 * s - 2.0) * D(t * t); };
    IntegrationResult main = integrate_adaptive(integrand, std::sqrt(y_lo), std::sqrt(y_hi),
                                                0.5 * quad.tol_ip, 15 * quad.max_subdivisions);
    return head + main.value;
}

ResidueEstimate residue_at_1(const std::function<ComplexValue(ComplexValue)>& f, double radius,
                             int n_points) {
    if (!(radius >= 0.1 && radius <= 0.4))
        throw std::invalid_argument("residue_at_1: radius must lie in [0.1, 0.4]");
    if (n_points < 16) throw std::invalid_argument("residue_at_1: n_points must be >= 16");
    const int n = n_points % 2 == 0 ? n_points : n_points + 1;

    KbnAccumulator re, im, re_half, im_half;
    for (int k = 0; k < n; ++k) {
        double th = 2.0 * kPi * double(k) / double(n);
        ComplexValue offset = radius * ComplexValue{std::cos(th), std::sin(th)};
        ComplexValue val = f(1.0 + offset) * offset;
        if (!is_finite(val)) throw std::domain_error("residue_at_1: non-finite sample");
        re.add(val.real());
        im.add(val.imag());
        if (k % 2 == 0) {
            re_half.add(val.real());
            im_half.add(val.imag());
        }
    }
    ComplexValue full{re.value() / n, im.value() / n};
    ComplexValue half{2.0 * re_half.value() / n, 2.0 * im_half.value() / n};

    ResidueEstimate est;
    est.method = "circle";
    est.value = full.real();
    est.error_bound = std::abs(full - half) + std::abs(full.imag()) + 1e-16 * (1.0 + std::abs(est.value));
    return est;
}

double norm_from_residue(int p, double c) {
    if (!is_odd_prime(p)) throw std::invalid_argument("norm_from_residue: p must be an odd prime");
    if (!(c > 0.0)) throw std::invalid_argument("norm_from_residue: c must be positive");
    auto f = [p, c](ComplexValue s) {
        ClosedFormParams params;
        params.s = s;
        params.p = p;
        params.c = c;
        return ip_closed(params);
    };
    ResidueEstimate res = residue_at_1(f);
    return 2.0 * kPi * res.value / (1.0 - 1.0 / double(p));
}

}  // namespace thetalab
