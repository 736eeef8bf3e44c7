#include "manakov/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "manakov/errors.hpp"

namespace manakov {

namespace {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK constants).
const double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
const double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Piece {
    double a, b;
    Complex value;
    double err;
};

Piece gk15(const std::function<Complex(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const Complex fc = f(c);
    Complex resg = kWg[3] * fc;
    Complex resk = kWgk[7] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const Complex f1 = f(c - dx);
        const Complex f2 = f(c + dx);
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    Piece p;
    p.a = a;
    p.b = b;
    p.value = h * resk;
    p.err = std::abs(h) * std::abs(resk - resg);
    return p;
}

struct WorseFirst {
    bool operator()(const Piece& x, const Piece& y) const {
        if (x.err != y.err) return x.err < y.err;
        return x.a > y.a;  // deterministic tie break
    }
};

QuadResult run_adaptive(const std::function<Complex(double)>& f, double a, double b,
                        double tol, long max_evaluations) {
    std::priority_queue<Piece, std::vector<Piece>, WorseFirst> heap;
    long evals = 15;
    heap.push(gk15(f, a, b));

    double err_sum = heap.top().err;
    Complex val_sum = heap.top().value;

    while (err_sum > tol && heap.size() < 100000) {
        if (evals + 30 > max_evaluations) {
            throw AccuracyError("quad_adaptive: evaluation budget exhausted",
                                val_sum.real(), val_sum.imag(), err_sum);
        }
        Piece worst = heap.top();
        heap.pop();
        val_sum -= worst.value;
        err_sum -= worst.err;
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval at roundoff width; keep its estimate and stop splitting it
            worst.err = 0.0;
            heap.push(worst);
            continue;
        }
        Piece left = gk15(f, worst.a, mid);
        Piece right = gk15(f, mid, worst.b);
        evals += 30;
        val_sum += left.value + right.value;
        err_sum += left.err + right.err;
        heap.push(left);
        heap.push(right);
    }
    if (err_sum > tol)
        throw AccuracyError("quad_adaptive: interval limit reached", val_sum.real(),
                            val_sum.imag(), err_sum);

    QuadResult r;
    r.value = val_sum;
    r.error_estimate = err_sum;
    r.evaluations = evals;
    return r;
}

}  // namespace

QuadResult quad_adaptive(const std::function<Complex(double)>& f, double a, double b,
                         double tol, long max_evaluations) {
    if (!std::isfinite(b) || !(tol > 0))
        throw InvalidInputError("quad_adaptive: bad endpoint or tolerance");
    if (std::isinf(a)) {
        if (a > 0) throw InvalidInputError("quad_adaptive: lower endpoint +inf");
        // xi = b - u/(1-u), u in (0,1); dxi = -du/(1-u)^2, orientation preserved
        auto g = [&f, b](double u) -> Complex {
            const double om = 1.0 - u;
            const double xi = b - u / om;
            return f(xi) / (om * om);
        };
        return run_adaptive(g, 0.0, 1.0, tol, max_evaluations);
    }
    if (!std::isfinite(a)) throw InvalidInputError("quad_adaptive: bad endpoint");
    if (a == b) return {Complex(0.0), 0.0, 0};
    return run_adaptive(f, a, b, tol, max_evaluations);
}

}  // namespace manakov
