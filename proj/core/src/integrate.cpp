#include "thetalab/integrate.hpp"

#include <array>
#include <cmath>

#include "thetalab/numerics.hpp"

namespace thetalab {

namespace {

// 15-point Kronrod abscissae/weights with the embedded 7-point Gauss rule
// (QUADPACK dqk15 constants).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double value;
    double error;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double result_gauss = fc * kWg[3];
    double result_kronrod = fc * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        result_kronrod += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) result_gauss += kWg[j / 2] * (f1 + f2);
    }
    double value = result_kronrod * half;
    double err = std::abs((result_kronrod - result_gauss) * half);
    return {value, err};
}

struct Workspace {
    const std::function<double(double)>& f;
    double tol_per_width;  // requested tolerance divided by total interval width
    long evals_left;
    KbnAccumulator sum;
    double err_total = 0.0;

    void refine(double a, double b, const Panel& p, int depth) {
        const double width = b - a;
        if (p.error <= tol_per_width * width || width < 1e-14 * (std::abs(a) + 1.0)) {
            sum.add(p.value);
            err_total += p.error;
            return;
        }
        if ((evals_left -= 30) < 0 || depth > 60)
            throw budget_error("integrate_adaptive: subdivision budget exhausted");
        const double mid = 0.5 * (a + b);
        Panel left = gk15(f, a, mid);
        Panel right = gk15(f, mid, b);
        refine(a, mid, left, depth + 1);
        refine(mid, b, right, depth + 1);
    }
};

}  // namespace

IntegrationResult integrate_adaptive(const std::function<double(double)>& f,
                                     double a, double b, double abs_tol,
                                     long max_evaluations) {
    if (!(abs_tol > 0.0)) throw std::invalid_argument("integrate_adaptive: tolerance must be positive");
    if (a == b) return {0.0, 0.0, 0};
    Workspace ws{f, abs_tol / std::abs(b - a), max_evaluations, {}, 0.0};
    Panel whole = gk15(f, a, b);
    ws.evals_left -= 15;
    ws.refine(a, b, whole, 0);
    return {ws.sum.value(), ws.err_total, max_evaluations - ws.evals_left};
}

}  // namespace thetalab
