#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "symstab/simplicial.hpp"  // input_error
#include "symstab/snf.hpp"         // Int

namespace symstab {

using Rat = boost::multiprecision::cpp_rational;

// Truncated power series with exact rational coefficients c_0..c_order.
struct PowerSeries {
  std::vector<Rat> c;  // size order + 1

  explicit PowerSeries(int order = 0) : c(order + 1) {}
  int order() const { return static_cast<int>(c.size()) - 1; }

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;
};

PowerSeries series_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries series_sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);
// requires b.c[0] != 0
PowerSeries series_div(const PowerSeries& a, const PowerSeries& b);
// requires a.c[0] == 0
PowerSeries series_exp(const PowerSeries& a);
// requires a.c[0] == 1
PowerSeries series_log(const PowerSeries& a);

// (1 - t)^{-e} through the given order, e any integer.
PowerSeries geometric_power(int e, int order);

}  // namespace symstab
