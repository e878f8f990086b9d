#include "symstab/zeta.hpp"

#include <algorithm>
#include <sstream>

namespace symstab {

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r = a;
  if (b.size() > r.size()) r.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  poly_trim(r);
  return r;
}

Int poly_eval(const Poly& p, const Int& x) {
  Int v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

std::string poly_to_string(const Poly& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ",";
    os << p[i];
  }
  if (p.empty()) os << "0";
  return os.str();
}

namespace {

using RatPoly = std::vector<Rat>;

RatPoly to_rat(const Poly& p) {
  RatPoly r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[i];
  return r;
}

void rat_trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// remainder of a mod b (b nonzero)
RatPoly rat_mod(RatPoly a, const RatPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rat f = a.back() / b.back();
    const std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    rat_trim(a);
    if (!a.empty() && a.size() > b.size() + 64)
      throw std::logic_error("polynomial division did not reduce");
  }
  return a;
}

Int content(const Poly& p) {
  Int g = 0;
  for (const Int& v : p) g = gcd(g, v);
  return g;
}

// integer primitive polynomial proportional to the rational p, positive lead
Poly to_primitive(const RatPoly& p) {
  if (p.empty()) return {};
  Int l = 1;
  for (const Rat& v : p) l = lcm(l, denominator(v));
  Poly q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    q[i] = numerator(p[i]) * (l / denominator(p[i]));
  const Int g = content(q);
  for (Int& v : q) v /= g;
  if (q.back() < 0)
    for (Int& v : q) v = -v;
  return q;
}

Int binom_int(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace

Poly poly_divexact(const Poly& a, const Poly& b) {
  if (b.empty()) throw input_error("polynomial division by zero");
  if (a.empty()) return {};
  RatPoly ra = to_rat(a), rb = to_rat(b);
  RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  RatPoly rem = ra;
  while (rem.size() >= rb.size() && !rem.empty()) {
    const Rat f = rem.back() / rb.back();
    const std::size_t off = rem.size() - rb.size();
    q[off] = f;
    for (std::size_t i = 0; i < rb.size(); ++i) rem[off + i] -= f * rb[i];
    rat_trim(rem);
  }
  if (!rem.empty()) throw input_error("polynomial division is not exact");
  Poly out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (denominator(q[i]) != 1)
      throw input_error("polynomial division is not exact over the integers");
    out[i] = numerator(q[i]);
  }
  poly_trim(out);
  return out;
}

Poly poly_gcd(Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  const Int gc = gcd(content(a), content(b));
  RatPoly r0 = to_rat(a), r1 = to_rat(b);
  while (!r1.empty()) {
    RatPoly r2 = rat_mod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  Poly g = to_primitive(r0);
  for (Int& v : g) v *= gc;
  return g;
}

RationalZeta make_zeta(Int q, Poly num, Poly den) {
  poly_trim(num);
  poly_trim(den);
  if (den.empty() || den[0] == 0)
    throw input_error("zeta denominator must have nonzero constant term");
  if (num.empty()) return {std::move(q), {}, {1}};
  Poly g = poly_gcd(num, den);
  num = poly_divexact(num, g);
  den = poly_divexact(den, g);
  if (den[0] < 0) {
    for (Int& v : num) v = -v;
    for (Int& v : den) v = -v;
  }
  return {std::move(q), std::move(num), std::move(den)};
}

std::vector<Int> sym_counts_from_counts(const PointCounts& P, int N) {
  if (static_cast<int>(P.counts.size()) < N)
    throw input_error("need at least N point counts to produce c_0..c_N");
  std::vector<Int> c(N + 1);
  c[0] = 1;
  for (int n = 1; n <= N; ++n) {
    Int s = 0;
    for (int m = 1; m <= n; ++m) s += P.counts[m - 1] * c[n - m];
    if (s % n != 0)
      throw input_error("inconsistent point counts: c_" + std::to_string(n) +
                        " is not an integer");
    c[n] = s / n;
    if (c[n] < 0)
      throw input_error("inconsistent point counts: c_" + std::to_string(n) +
                        " is negative");
  }
  return c;
}

PointCounts counts_from_sym_counts(const std::vector<Int>& c, Int q) {
  if (c.empty() || c[0] != 1)
    throw input_error("symmetric-power counts must start with c_0 = 1");
  PointCounts P;
  P.q = std::move(q);
  const int N = static_cast<int>(c.size()) - 1;
  for (int n = 1; n <= N; ++n) {
    Int s = Int(n) * c[n];
    for (int m = 1; m < n; ++m) s -= P.counts[m - 1] * c[n - m];
    if (s < 0)
      throw input_error("inverted counts give negative N_" + std::to_string(n));
    P.counts.push_back(std::move(s));
  }
  return P;
}

PowerSeries expand_zeta(const RationalZeta& Z, int N) {
  PowerSeries num(N), den(N);
  for (int i = 0; i <= N && i < static_cast<int>(Z.num.size()); ++i)
    num.c[i] = Z.num[i];
  for (int i = 0; i <= N && i < static_cast<int>(Z.den.size()); ++i)
    den.c[i] = Z.den[i];
  return series_div(num, den);
}

PointCounts lefschetz_counts(const EigenvalueData& E, Int q, int M) {
  // power sums per degree via Newton's identities
  std::vector<std::vector<Int>> psums;  // per degree, p_1..p_M
  for (const auto& polys : E.degrees) {
    std::vector<Int> p(M + 1, 0);
    for (const Poly& f : polys) {
      if (f.empty() || f.back() != 1)
        throw input_error("eigenvalue polynomials must be monic with integer "
                          "coefficients");
      const int D = poly_degree(f);
      std::vector<Int> e(M + 1, 0);  // elementary symmetric, e_k
      for (int k = 1; k <= std::min(D, M); ++k)
        e[k] = (k % 2 ? -f[D - k] : f[D - k]);
      std::vector<Int> ps(M + 1, 0);
      for (int m = 1; m <= M; ++m) {
        Int s = 0;
        for (int i = 1; i < m; ++i)
          s += (i % 2 ? Int(e[i] * ps[m - i]) : Int(-e[i] * ps[m - i]));
        if (m <= D) s += (m % 2 ? Int(m) * e[m] : -Int(m) * e[m]);
        ps[m] = std::move(s);
      }
      for (int m = 1; m <= M; ++m) p[m] += ps[m];
    }
    psums.push_back(std::move(p));
  }
  PointCounts P;
  P.q = std::move(q);
  for (int m = 1; m <= M; ++m) {
    Int N = 0;
    for (std::size_t i = 0; i < psums.size(); ++i)
      N += (i % 2 ? -psums[i][m] : psums[i][m]);
    if (N < 0)
      throw input_error("eigenvalue data yields negative N_" +
                        std::to_string(m));
    P.counts.push_back(std::move(N));
  }
  return P;
}

RationalZeta finite_difference_series(const RationalZeta& Z) {
  RationalZeta W = make_zeta(Z.q, poly_mul(Z.num, {1, -1}), Z.den);
  const int K = 16;
  PowerSeries cz = expand_zeta(Z, K);
  PowerSeries cw = expand_zeta(W, K);
  if (cw.c[0] != cz.c[0])
    throw std::logic_error("finite difference identity failed at order 0");
  for (int n = 1; n <= K; ++n)
    if (cw.c[n] != cz.c[n] - cz.c[n - 1])
      throw std::logic_error("finite difference identity failed at order " +
                             std::to_string(n));
  return W;
}

ConnectednessReport connectedness_check(const RationalZeta& Z) {
  ConnectednessReport R;
  Poly den = Z.den;
  const Poly one_minus_t{1, -1};
  while (!den.empty() && poly_eval(den, 1) == 0) {
    den = poly_divexact(den, one_minus_t);
    ++R.multiplicity;
  }
  R.connected = R.multiplicity == 1;
  return R;
}

bool roots_strictly_inside(std::vector<Rat> p, const Rat& r) {
  // scale z -> r z, then run the Schur-Cohn recursion exactly
  Rat f = 1;
  for (std::size_t k = 0; k < p.size(); ++k) {
    p[k] *= f;
    f *= r;
  }
  rat_trim(p);
  if (p.empty()) throw input_error("zero polynomial has no root bound");
  while (p.size() >= 2) {
    if (abs(p.front()) >= abs(p.back())) return false;
    // q(z) = (a_n p(z) - a_0 rev(p)(z)) / z has the same stability
    const Rat a0 = p.front(), an = p.back();
    RatPoly q(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k)
      q[k - 1] = an * p[k] - a0 * p[p.size() - 1 - k];
    rat_trim(q);
    if (q.empty()) return false;  // self-inversive: roots on the circle
    p = std::move(q);
  }
  return true;
}

namespace {

std::vector<Int> divisors_of(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> d;
  for (Int i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      d.push_back(i);
      if (i * i != n) d.push_back(n / i);
    }
  }
  return d;
}

Rat rat_eval(const RatPoly& p, const Rat& x) {
  Rat v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

// divide by (x - root); remainder must vanish
RatPoly deflate(const RatPoly& p, const Rat& root) {
  RatPoly q(p.size() - 1);
  Rat carry = 0;
  for (std::size_t k = p.size(); k-- > 1;) {
    carry = p[k] + carry * root;
    q[k - 1] = carry;
  }
  return q;
}

}  // namespace

PoleBoundReport second_pole_bound(const RationalZeta& Z, int N) {
  if (connectedness_check(Z).multiplicity != 1)
    throw input_error("second_pole_bound requires (1-t)-multiplicity 1");
  const Poly wden = poly_divexact(Z.den, Poly{1, -1});
  const Poly& wnum = Z.num;
  const int d = poly_degree(wden);

  PoleBoundReport R;
  if (d <= 0) {
    R.beta_lo = R.beta_hi = 0;
    R.beta_exact = true;
  } else {
    // inverse roots of wden are roots of the reversed polynomial
    Poly rev(wden.rbegin(), wden.rend());
    RatPoly residual = to_rat(rev);
    // strip rational roots exactly
    Rat best_rational = 0;
    bool progressed = true;
    while (residual.size() >= 2 && progressed) {
      progressed = false;
      Poly ip = to_primitive(residual);
      for (const Int& p0 : divisors_of(ip.front())) {
        for (const Int& q0 : divisors_of(ip.back())) {
          for (int s : {1, -1}) {
            const Rat cand = Rat(s * p0, q0);
            if (rat_eval(residual, cand) == 0) {
              residual = deflate(residual, cand);
              if (abs(cand) > best_rational) best_rational = abs(cand);
              progressed = true;
            }
            if (residual.size() < 2) break;
          }
          if (residual.size() < 2) break;
        }
        if (residual.size() < 2) break;
      }
    }
    if (residual.size() < 2) {
      R.beta_lo = R.beta_hi = best_rational;
      R.beta_exact = true;
    } else if (best_rational > 0 &&
               roots_strictly_inside(residual, best_rational)) {
      R.beta_lo = R.beta_hi = best_rational;
      R.beta_exact = true;
    } else {
      // certified bisection on the residual factor
      Rat hi = 1;
      for (const Rat& a : residual) {
        Rat m = 1 + abs(a / residual.back());
        if (m > hi) hi = m;
      }
      hi += 1;
      Rat lo = 0;
      for (int it = 0; it < 80; ++it) {
        const Rat mid = (lo + hi) / 2;
        if (roots_strictly_inside(residual, mid)) hi = mid;
        else lo = mid;
      }
      R.beta_lo = std::max(best_rational, lo);
      R.beta_hi = std::max(best_rational, hi);
      R.beta_exact = false;
    }
  }
  const Rat beta = R.beta_hi;

  // W = num/wden = Q + P/wden with deg P < d; bound the coefficients of both
  // parts by C * beta^n for n <= N using |h_n| <= binom(n+d-1, d-1) beta^n
  RatPoly q_part, p_part = to_rat(wnum);
  const RatPoly rden = to_rat(wden);
  while (p_part.size() >= rden.size() && !p_part.empty()) {
    const Rat f = p_part.back() / rden.back();
    const std::size_t off = p_part.size() - rden.size();
    if (q_part.size() <= off) q_part.resize(off + 1);
    q_part[off] = f;
    for (std::size_t i = 0; i < rden.size(); ++i) p_part[off + i] -= f * rden[i];
    rat_trim(p_part);
  }
  if (beta == 0) {
    R.C = 0;
  } else {
    Rat beta_negN = 1;  // max(1, beta^-N)
    if (beta < 1) {
      for (int i = 0; i < N; ++i) beta_negN /= beta;
    }
    Rat qsum = 0;
    for (const Rat& v : q_part) qsum += abs(v);
    Rat psum = 0;
    Rat bpow = 1;
    for (std::size_t k = 0; k < p_part.size(); ++k) {
      psum += abs(p_part[k]) * (beta < 1 ? Rat(1) / bpow : Rat(1));
      bpow *= beta;
    }
    // the derivation bounds |delta_n| by (this expression) * beta^n; fold one
    // factor of beta into C so that rows read |delta_n| <= C * beta^{n-1}
    R.C = (qsum * beta_negN +
           psum / abs(Rat(wden[0])) * Rat(binom_int(N + d - 1, d - 1))) *
          beta;
  }

  PowerSeries cz = expand_zeta(Z, N);
  R.pass = true;
  Rat bound = R.C;  // C * beta^n at n = 0 ... scaled below per row
  for (int n = 0; n <= N; ++n) {
    PoleBoundRow row;
    row.n = n;
    row.c = cz.c[n];
    row.delta = n == 0 ? Rat(0) : cz.c[n] - cz.c[n - 1];
    if (n == 0) {
      row.bound = 0;
    } else {
      row.bound = bound;  // C * beta^{n-1}
      bound *= beta;
      if (abs(row.delta) > row.bound) R.pass = false;
    }
    R.rows.push_back(std::move(row));
  }
  return R;
}

}  // namespace symstab
