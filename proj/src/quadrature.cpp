#include "mockform/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

namespace mockform {

namespace {

constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b;
    std::complex<double> value;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment rule(const std::function<std::complex<double>(double)>& f, double a, double b)
{
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    std::complex<double> fc = f(c);
    std::complex<double> kron = fc * kWgk[7];
    std::complex<double> gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        std::complex<double> f1 = f(c - h * kXgk[j]), f2 = f(c + h * kXgk[j]);
        kron += kWgk[j] * (f1 + f2);
        if (j % 2 == 1)
            gauss += kWg[j / 2] * (f1 + f2);
    }
    return {a, b, kron * h, std::abs((kron - gauss) * h)};
}

} // namespace

QuadratureResult integrate_gk15(const std::function<std::complex<double>(double)>& f, double a, double b,
                                double abs_tol, double rel_tol, int max_intervals)
{
    std::priority_queue<Segment> heap;
    Segment first = rule(f, a, b);
    std::complex<double> total = first.value;
    double err = first.error;
    heap.push(first);
    int n = 1;
    while (err > std::max(abs_tol, rel_tol * std::abs(total)) && n < max_intervals) {
        Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // interval cannot be split further in binary64
            heap.push(worst);
            break;
        }
        Segment left = rule(f, worst.a, mid), right = rule(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++n;
    }
    // re-sum to shed the drift of the running updates
    total = 0;
    err = 0;
    while (!heap.empty()) {
        total += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    return {total, err, n, err <= std::max(abs_tol, rel_tol * std::abs(total))};
}

} // namespace mockform
