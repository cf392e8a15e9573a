#include "atgeo/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace atgeo {
namespace {

// Kronrod nodes on [0, 1) of the symmetric 15-point rule; odd indices are the
// 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Node {
  double x;
  double wk;
  double wg;
};

std::array<Node, 15> nodes() {
  std::array<Node, 15> out{};
  int idx = 0;
  for (int i = 0; i < 7; ++i) {
    const double wg = (i % 2 == 1) ? kWg[i / 2] : 0.0;
    out[idx++] = {-kXgk[i], kWgk[i], wg};
    out[idx++] = {kXgk[i], kWgk[i], wg};
  }
  out[idx] = {0.0, kWgk[7], kWg[3]};
  return out;
}

struct Box {
  double r0, r1, t0, t1;
  std::complex<double> value;
  double error;
  bool operator<(const Box& o) const { return error < o.error; }
};

}  // namespace

QuadratureResult integrate_polar(const std::function<std::complex<double>(double, double)>& f,
                                 double r0, double r1, double t0, double t1, double abs_tol,
                                 long max_subcells) {
  static const auto rule = nodes();
  auto evaluate = [&](double a0, double a1, double b0, double b1) {
    const double hr = 0.5 * (a1 - a0), cr = 0.5 * (a1 + a0);
    const double ht = 0.5 * (b1 - b0), ct = 0.5 * (b1 + b0);
    std::complex<double> k{0.0, 0.0}, g{0.0, 0.0};
    for (const auto& u : rule) {
      const double r = cr + hr * u.x;
      for (const auto& v : rule) {
        const std::complex<double> val = f(r, ct + ht * v.x) * r;
        k += u.wk * v.wk * val;
        if (u.wg != 0.0 && v.wg != 0.0) g += u.wg * v.wg * val;
      }
    }
    const double jac = hr * ht;
    return Box{a0, a1, b0, b1, k * jac, std::abs(k - g) * jac};
  };

  std::priority_queue<Box> heap;
  heap.push(evaluate(r0, r1, t0, t1));
  std::complex<double> total = heap.top().value;
  double err = heap.top().error;
  long count = 1;
  while (err > abs_tol && count < max_subcells) {
    const Box b = heap.top();
    heap.pop();
    total -= b.value;
    err -= b.error;
    const double rm = 0.5 * (b.r0 + b.r1);
    const double tm = 0.5 * (b.t0 + b.t1);
    for (const Box& c : {evaluate(b.r0, rm, b.t0, tm), evaluate(rm, b.r1, b.t0, tm),
                         evaluate(b.r0, rm, tm, b.t1), evaluate(rm, b.r1, tm, b.t1)}) {
      total += c.value;
      err += c.error;
      heap.push(c);
    }
    count += 3;
  }
  // Recompute the sums to shed accumulated cancellation in the running totals.
  total = {0.0, 0.0};
  err = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  return {total, err, count, err <= abs_tol};
}

}  // namespace atgeo
