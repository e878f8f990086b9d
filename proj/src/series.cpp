#include "symstab/series.hpp"

#include <algorithm>

namespace symstab {

namespace {
int common_order(const PowerSeries& a, const PowerSeries& b) {
  return std::min(a.order(), b.order());
}
}  // namespace

PowerSeries series_add(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(common_order(a, b));
  for (int n = 0; n <= r.order(); ++n) r.c[n] = a.c[n] + b.c[n];
  return r;
}

PowerSeries series_sub(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(common_order(a, b));
  for (int n = 0; n <= r.order(); ++n) r.c[n] = a.c[n] - b.c[n];
  return r;
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(common_order(a, b));
  for (int n = 0; n <= r.order(); ++n)
    for (int k = 0; k <= n; ++k) r.c[n] += a.c[k] * b.c[n - k];
  return r;
}

PowerSeries series_div(const PowerSeries& a, const PowerSeries& b) {
  if (b.c[0] == 0) throw input_error("series division by a series with zero constant term");
  PowerSeries r(common_order(a, b));
  for (int n = 0; n <= r.order(); ++n) {
    Rat s = a.c[n];
    for (int k = 1; k <= n; ++k) s -= b.c[k] * r.c[n - k];
    r.c[n] = s / b.c[0];
  }
  return r;
}

PowerSeries series_exp(const PowerSeries& a) {
  if (a.c[0] != 0) throw input_error("series exp requires zero constant term");
  PowerSeries r(a.order());
  r.c[0] = 1;
  // r' = a' r  =>  n r_n = sum_{k=1..n} k a_k r_{n-k}
  for (int n = 1; n <= r.order(); ++n) {
    Rat s = 0;
    for (int k = 1; k <= n; ++k) s += Rat(k) * a.c[k] * r.c[n - k];
    r.c[n] = s / n;
  }
  return r;
}

PowerSeries series_log(const PowerSeries& a) {
  if (a.c[0] != 1) throw input_error("series log requires constant term 1");
  PowerSeries r(a.order());
  // r' = a'/a  =>  n a_0 r_n = n a_n - sum_{k=1..n-1} k r_k a_{n-k}
  for (int n = 1; n <= r.order(); ++n) {
    Rat s = Rat(n) * a.c[n];
    for (int k = 1; k < n; ++k) s -= Rat(k) * r.c[k] * a.c[n - k];
    r.c[n] = s / n;
  }
  return r;
}

PowerSeries geometric_power(int e, int order) {
  PowerSeries one(order), denom(order);
  one.c[0] = 1;
  denom.c[0] = 1;
  if (order >= 1) denom.c[1] = -1;
  PowerSeries r(order);
  r.c[0] = 1;
  for (int i = 0; i < e; ++i) r = series_div(r, denom);
  for (int i = 0; i < -e; ++i) r = series_mul(r, denom);
  return r;
}

}  // namespace symstab
