#include "eulergas/numeric/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace eulergas::numeric {

namespace {

constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kKronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss-7 weights at kNodes[1], [3], [5], [7]
constexpr std::array<double, 4> kGauss = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
  double a, b, value, error;
  bool operator<(const Interval& o) const { return error < o.error; }
};

Interval gk15(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(mid);
  double kronrod = kKronrod[7] * fc;
  double gauss = kGauss[3] * fc;
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const double pair = f(mid - dx) + f(mid + dx);
    kronrod += kKronrod[i] * pair;
    if (i % 2 == 1) gauss += kGauss[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::fabs(kronrod - gauss)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options) {
  std::priority_queue<Interval> heap;
  heap.push(gk15(f, a, b));
  QuadratureResult out;
  out.evaluations = 15;
  double total = heap.top().value;
  double error = heap.top().error;

  while (heap.size() < options.max_intervals) {
    if (error <= std::max(options.abs_tol, options.rel_tol * std::fabs(total))) {
      out.converged = true;
      break;
    }
    const Interval worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // interval exhausted
    heap.pop();
    const Interval left = gk15(f, worst.a, mid);
    const Interval right = gk15(f, mid, worst.b);
    out.evaluations += 30;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // re-sum to shed drift from the running updates
  double value = 0.0, err = 0.0;
  std::vector<Interval> all;
  all.reserve(heap.size());
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  for (auto it = all.rbegin(); it != all.rend(); ++it) {
    value += it->value;
    err += it->error;
  }
  out.value = value;
  out.error = err;
  if (!out.converged) out.converged = err <= std::max(options.abs_tol, options.rel_tol * std::fabs(value));
  return out;
}

QuadratureResult integrate_half_line(const std::function<double(double)>& f,
                                     const QuadratureOptions& options) {
  const QuadratureResult head = integrate(f, 0.0, 1.0, options);
  const QuadratureResult tail = integrate(
      [&f](double u) {
        const double x = 1.0 / u;
        const double fx = f(x);
        return fx == 0.0 ? 0.0 : fx * x * x;
      },
      0.0, 1.0, options);
  return {head.value + tail.value, head.error + tail.error,
          head.evaluations + tail.evaluations, head.converged && tail.converged};
}

}  // namespace eulergas::numeric
