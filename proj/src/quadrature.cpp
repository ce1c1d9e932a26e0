#include "ramsey/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace ramsey {

namespace {

struct SimpsonWorker {
    const std::function<double(double)>& f;
    long long evals = 0;
    bool hit_depth = false;

    double eval(double x) {
        ++evals;
        return f(x);
    }

    // whole = Simpson estimate on [a, b] with midpoint m
    double recurse(double a, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) {
        double m = 0.5 * (a + b);
        double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
        double flm = eval(lm), frm = eval(rm);
        double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        double delta = left + right - whole;
        if (std::abs(delta) <= 15.0 * tol || depth <= 0) {
            if (depth <= 0 && std::abs(delta) > 15.0 * tol) hit_depth = true;
            return left + right + delta / 15.0;
        }
        return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
               recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
    }
};

// Gauss-Kronrod 7-15 nodes and weights (positive half).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277,
                           0.381830050505119, 0.417959183673469};

struct Segment {
    double a, b, value, err;
    bool operator<(const Segment& o) const { return err < o.err; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b,
             long long* evals) {
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double fk = 0, fg = 0;
    for (int i = 0; i < 8; ++i) {
        double x = half * kXgk[i];
        double lo = f(mid - x);
        double hi = (i == 7) ? lo : f(mid + x);
        *evals += (i == 7) ? 1 : 2;
        double sum = (i == 7) ? lo : lo + hi;
        fk += kWgk[i] * sum;
        if (i % 2 == 1) fg += kWg[i / 2] * sum;
    }
    double value = fk * half;
    double err = std::abs((fk - fg) * half);
    return {a, b, value, err};
}

}  // namespace

QuadResult adaptive_simpson(const std::function<double(double)>& f, double a,
                            double b, double tol, int max_depth) {
    SimpsonWorker w{f};
    double m = 0.5 * (a + b);
    double fa = w.eval(a), fm = w.eval(m), fb = w.eval(b);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    double value = w.recurse(a, b, fa, fm, fb, whole, tol, max_depth);
    return {value, tol, w.evals, !w.hit_depth};
}

QuadResult adaptive_gauss_kronrod(const std::function<double(double)>& f,
                                  double a, double b, double tol,
                                  int max_segments) {
    long long evals = 0;
    std::priority_queue<Segment> queue;
    queue.push(gk15(f, a, b, &evals));
    double total_err = queue.top().err;
    double total_val = queue.top().value;
    int segments = 1;
    while (total_err > tol && segments < max_segments) {
        Segment worst = queue.top();
        queue.pop();
        double mid = 0.5 * (worst.a + worst.b);
        Segment left = gk15(f, worst.a, mid, &evals);
        Segment right = gk15(f, mid, worst.b, &evals);
        total_val += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        queue.push(left);
        queue.push(right);
        ++segments;
    }
    return {total_val, total_err, evals, total_err <= tol};
}

}  // namespace ramsey
