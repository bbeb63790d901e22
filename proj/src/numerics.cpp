#include "switchsim/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

#include <Eigen/Dense>

#include "switchsim/errors.hpp"

namespace switchsim {

namespace {

// Kronrod-15 abscissae (positive half) and weights; the embedded Gauss-7 rule
// uses every second abscissa.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;
    double err;
};
struct PanelWorse {
    bool operator()(const Panel& p, const Panel& q) const { return p.err < q.err; }
};

Panel eval_panel(const std::function<double(double)>& f, double a, double b) {
    double c = 0.5 * (a + b);
    double h = 0.5 * (b - a);
    double fc = f(c);
    double gauss = fc * kWg[3];
    double kron = fc * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        double x = h * kXgk[j];
        double f1 = f(c - x);
        double f2 = f(c + x);
        kron += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.value = kron * h;
    p.err = std::abs((kron - gauss) * h);
    return p;
}

}  // namespace

QuadResult integrate_finite(const std::function<double(double)>& f, double a, double b,
                            double rel_tol, double abs_tol, long max_evals) {
    QuadResult res;
    if (!(b > a)) {
        res.converged = true;
        return res;
    }
    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> heap;
    Panel first = eval_panel(f, a, b);
    res.evaluations = 15;
    double total = first.value;
    double toterr = first.err;
    heap.push(first);
    const double min_width = (b - a) * 1e-15;
    while (res.evaluations + 30 <= max_evals) {
        double tol = std::max(abs_tol, rel_tol * std::abs(total));
        if (toterr <= tol) break;
        Panel worst = heap.top();
        if (worst.b - worst.a <= min_width) break;  // resolution exhausted
        heap.pop();
        double mid = 0.5 * (worst.a + worst.b);
        Panel left = eval_panel(f, worst.a, mid);
        Panel right = eval_panel(f, mid, worst.b);
        res.evaluations += 30;
        total += left.value + right.value - worst.value;
        toterr += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
    }
    res.value = total;
    res.abs_error_estimate = toterr;
    res.converged = toterr <= std::max(abs_tol, rel_tol * std::abs(total)) &&
                    std::isfinite(total);
    return res;
}

QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   double rel_tol, double abs_tol, long max_evals) {
    auto g = [&f](double t) {
        double omt = 1.0 - t;
        double v = t / omt;
        double fv = f(v);
        if (fv == 0.0) return 0.0;  // skip the Jacobian blowup when f vanished
        return fv / (omt * omt);
    };
    return integrate_finite(g, 0.0, 1.0, rel_tol, abs_tol, max_evals);
}

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double rel_tol, int max_iter) {
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0)) {
        std::ostringstream os;
        os << "no bracket: f(" << a << ") = " << fa << ", f(" << b << ") = " << fb;
        throw NumericError(os.str());
    }
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int it = 0; it < max_iter; ++it) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) +
                      0.5 * rel_tol * (std::abs(b) + 1e-300);
        double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            // inverse quadratic interpolation, secant fallback
            double s = fb / fa, p, qq;
            if (a == c) {
                p = 2.0 * xm * s;
                qq = 1.0 - s;
            } else {
                double q2 = fa / fc, r = fb / fc;
                p = s * (2.0 * xm * q2 * (q2 - r) - (b - a) * (r - 1.0));
                qq = (q2 - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) qq = -qq;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * qq - std::abs(tol1 * qq), std::abs(e * qq))) {
                e = d;
                d = p / qq;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
    }
    throw NumericError("no convergence in find_root");
}

double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  double x_tol) {
    const double gr = 0.6180339887498948482;
    double a = lo, b = hi;
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > x_tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

Quadrature1D gauss_jacobi_beta(int n, double beta_param, double gamma_param) {
    if (n < 1 || !(beta_param > 0.0) || !(gamma_param > 0.0))
        throw ConfigError("gauss_jacobi_beta: need n >= 1 and positive shape parameters");
    // Jacobi weight (1-x)^ja (1+x)^jb on [-1,1]; mapping t = (1+x)/2 turns it
    // into the Beta(beta_param, gamma_param) density kernel.
    const double ja = gamma_param - 1.0;
    const double jb = beta_param - 1.0;
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
    auto diag = [&](int k) -> double {
        if (k == 0) return (jb - ja) / (ja + jb + 2.0);
        double s = 2.0 * k + ja + jb;
        return (jb * jb - ja * ja) / (s * (s + 2.0));
    };
    auto offdiag2 = [&](int k) -> double {
        // b_k for k >= 1; at k = 1 the (k+ja+jb) factor cancels against
        // (2k+ja+jb-1) = (1+ja+jb), which can be exactly zero.
        if (k == 1)
            return 4.0 * (1.0 + ja) * (1.0 + jb) /
                   ((2.0 + ja + jb) * (2.0 + ja + jb) * (3.0 + ja + jb));
        double s = 2.0 * k + ja + jb;
        return 4.0 * k * (k + ja) * (k + jb) * (k + ja + jb) /
               (s * s * (s + 1.0) * (s - 1.0));
    };
    for (int k = 0; k < n; ++k) {
        T(k, k) = diag(k);
        if (k >= 1) {
            double off = std::sqrt(offdiag2(k));
            T(k, k - 1) = off;
            T(k - 1, k) = off;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(T);
    if (solver.info() != Eigen::Success)
        throw NumericError("gauss_jacobi_beta: eigensolve failed");
    Quadrature1D rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    double wsum = 0.0;
    for (int k = 0; k < n; ++k) {
        rule.nodes[k] = 0.5 * (1.0 + solver.eigenvalues()(k));
        double w0 = solver.eigenvectors()(0, k);
        rule.weights[k] = w0 * w0;
        wsum += rule.weights[k];
    }
    for (double& w : rule.weights) w /= wsum;  // exact self-normalization
    return rule;
}

double upper_incomplete_gamma(double a, double x) {
    if (!(a > 0.0) || x < 0.0)
        throw ConfigError("upper_incomplete_gamma: need a > 0, x >= 0");
    if (x == 0.0) return std::tgamma(a);
    const int itmax = 300;
    const double eps = 1e-15;
    if (x < a + 1.0) {
        // series for the lower function, complement at the end
        double ap = a;
        double sum = 1.0 / a;
        double del = sum;
        for (int i = 0; i < itmax; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * eps) {
                double lower = sum * std::exp(-x + a * std::log(x));
                return std::tgamma(a) - lower;
            }
        }
        throw NumericError("upper_incomplete_gamma: series failed to converge");
    }
    // Lentz continued fraction for the upper function
    const double fpmin = std::numeric_limits<double>::min() / eps;
    double b = x + 1.0 - a;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= itmax; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < fpmin) d = fpmin;
        c = b + an / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < eps)
            return std::exp(-x + a * std::log(x)) * h;
    }
    throw NumericError("upper_incomplete_gamma: continued fraction failed to converge");
}

}  // namespace switchsim
