#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Truncated Taylor ("jet") arithmetic in the conjugate pair
// (z - z0, conj(z - z0)), carrying all Wirtinger partials of a function of
// (z, zbar) up to the truncation order, plus the univariate series machinery
// needed on top of it: Taylor shift, composition, reversion, and analytic
// building blocks (exp, log, sqrt, arcsin) expanded at arbitrary centers.
//
// Jet values are immutable; every operation returns a fresh jet.

namespace rigidcr {

using cplx = std::complex<double>;

inline constexpr int kDefaultOrder = 6;
inline constexpr double kRecipThreshold = 1e-12;

namespace detail {

inline double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Univariate truncated series  p(t) = sum_k c[k] t^k
// ---------------------------------------------------------------------------

struct UnivariateJet {
  std::vector<cplx> c;

  UnivariateJet() : c(1, cplx(0.0)) {}
  explicit UnivariateJet(int order) : c(static_cast<size_t>(order) + 1, cplx(0.0)) {
    if (order < 0) throw std::invalid_argument("negative series order");
  }
  UnivariateJet(std::initializer_list<cplx> coeffs) : c(coeffs) {
    if (c.empty()) c.assign(1, cplx(0.0));
  }

  int order() const { return static_cast<int>(c.size()) - 1; }

  cplx eval(cplx t) const {
    cplx r = 0.0;
    for (int k = order(); k >= 0; --k) r = r * t + c[static_cast<size_t>(k)];
    return r;
  }

  UnivariateJet truncated(int new_order) const {
    UnivariateJet r(new_order);
    const int m = std::min(new_order, order());
    for (int k = 0; k <= m; ++k) r.c[static_cast<size_t>(k)] = c[static_cast<size_t>(k)];
    return r;
  }

  // Coefficients of p(t0 + s) as a series in s. Exact for the stored
  // polynomial (repeated synthetic division).
  UnivariateJet shifted(cplx t0) const {
    UnivariateJet r = *this;
    const int n = r.order();
    for (int i = 0; i <= n; ++i)
      for (int j = n - 1; j >= i; --j)
        r.c[static_cast<size_t>(j)] += t0 * r.c[static_cast<size_t>(j) + 1];
    return r;
  }

  UnivariateJet derivative() const {
    if (order() == 0) return UnivariateJet(0);
    UnivariateJet r(order() - 1);
    for (int k = 1; k <= order(); ++k)
      r.c[static_cast<size_t>(k) - 1] = static_cast<double>(k) * c[static_cast<size_t>(k)];
    return r;
  }

  UnivariateJet integrated(cplx value_at_zero) const {
    UnivariateJet r(order() + 1);
    r.c[0] = value_at_zero;
    for (int k = 0; k <= order(); ++k)
      r.c[static_cast<size_t>(k) + 1] = c[static_cast<size_t>(k)] / static_cast<double>(k + 1);
    return r;
  }

  bool is_real(double tol = 0.0) const {
    for (const cplx& v : c)
      if (std::abs(v.imag()) > tol) return false;
    return true;
  }

  double max_abs() const {
    double m = 0.0;
    for (const cplx& v : c) m = std::max(m, std::abs(v));
    return m;
  }
};

inline UnivariateJet uj_constant(cplx value, int order) {
  UnivariateJet r(order);
  r.c[0] = value;
  return r;
}

inline UnivariateJet uj_identity(int order) {
  UnivariateJet r(order);
  if (order >= 1) r.c[1] = 1.0;
  return r;
}

inline UnivariateJet uj_add(const UnivariateJet& a, const UnivariateJet& b) {
  const int n = std::min(a.order(), b.order());
  UnivariateJet r(n);
  for (int k = 0; k <= n; ++k)
    r.c[static_cast<size_t>(k)] = a.c[static_cast<size_t>(k)] + b.c[static_cast<size_t>(k)];
  return r;
}

inline UnivariateJet uj_scale(const UnivariateJet& a, cplx s) {
  UnivariateJet r = a;
  for (cplx& v : r.c) v *= s;
  return r;
}

inline UnivariateJet uj_mul(const UnivariateJet& a, const UnivariateJet& b) {
  const int n = std::min(a.order(), b.order());
  UnivariateJet r(n);
  for (int i = 0; i <= std::min(n, a.order()); ++i) {
    if (a.c[static_cast<size_t>(i)] == cplx(0.0)) continue;
    for (int j = 0; j <= n - i && j <= b.order(); ++j)
      r.c[static_cast<size_t>(i + j)] += a.c[static_cast<size_t>(i)] * b.c[static_cast<size_t>(j)];
  }
  return r;
}

// outer(inner(t)) truncated to inner's order; inner must have zero constant term.
inline UnivariateJet uj_compose(const UnivariateJet& outer, const UnivariateJet& inner) {
  if (std::abs(inner.c[0]) > 0.0)
    throw std::invalid_argument("composition requires zero inner constant term");
  const int n = inner.order();
  const int kmax = std::min(outer.order(), n);
  UnivariateJet r = uj_constant(outer.c[static_cast<size_t>(kmax)], n);
  for (int k = kmax - 1; k >= 0; --k) {
    r = uj_mul(r, inner);
    r.c[0] += outer.c[static_cast<size_t>(k)];
  }
  return r;
}

// q^alpha for series with nonzero constant term (standard AD recurrence).
inline UnivariateJet uj_pow(const UnivariateJet& q, double alpha) {
  if (std::abs(q.c[0]) < kRecipThreshold)
    throw std::domain_error("power of series with (near-)zero constant term");
  const int n = q.order();
  UnivariateJet p(n);
  p.c[0] = std::pow(q.c[0], cplx(alpha));
  for (int i = 1; i <= n; ++i) {
    cplx acc = 0.0;
    for (int j = 1; j <= i; ++j)
      acc += (alpha * static_cast<double>(j) - static_cast<double>(i - j)) *
             q.c[static_cast<size_t>(j)] * p.c[static_cast<size_t>(i - j)];
    p.c[static_cast<size_t>(i)] = acc / (static_cast<double>(i) * q.c[0]);
  }
  return p;
}

// Compositional inverse of g with g(0) = 0, g'(0) != 0, to the same order.
inline UnivariateJet univariate_reversion(const UnivariateJet& g) {
  if (std::abs(g.c[0]) > 1e-14) throw std::invalid_argument("reversion requires zero constant term");
  if (g.order() < 1 || std::abs(g.c[1]) < 1e-10)
    throw std::invalid_argument("reversion requires nonvanishing linear term");
  UnivariateJet g0 = g;
  g0.c[0] = 0.0;
  const int n = g0.order();
  UnivariateJet h(n);
  h.c[1] = 1.0 / g0.c[1];
  for (int k = 2; k <= n; ++k) {
    const UnivariateJet e = uj_compose(g0.truncated(k), h.truncated(k));
    h.c[static_cast<size_t>(k)] = -e.c[static_cast<size_t>(k)] / g0.c[1];
  }
  return h;
}

// --- expansions of analytic functions at a given center ---

inline UnivariateJet exp_series_at(cplx w0, int order) {
  UnivariateJet r(order);
  const cplx e = std::exp(w0);
  double fact = 1.0;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) fact *= k;
    r.c[static_cast<size_t>(k)] = e / fact;
  }
  return r;
}

inline UnivariateJet log_series_at(cplx w0, int order) {
  if (std::abs(w0) < kRecipThreshold)
    throw std::domain_error("log series not expandable at (near-)zero center");
  UnivariateJet r(order);
  r.c[0] = std::log(w0);
  cplx p = 1.0;  // w0^{-k}, built incrementally
  double sign = 1.0;
  for (int k = 1; k <= order; ++k) {
    p /= w0;
    r.c[static_cast<size_t>(k)] = sign * p / static_cast<double>(k);
    sign = -sign;
  }
  return r;
}

inline UnivariateJet pow_series_at(cplx w0, double alpha, int order) {
  if (std::abs(w0) < kRecipThreshold)
    throw std::domain_error("power series not expandable at (near-)zero center");
  UnivariateJet q(order);
  q.c[0] = w0;
  if (order >= 1) q.c[1] = 1.0;
  return uj_pow(q, alpha);
}

// arcsin expanded at a real center t0 in (-1, 1), via termwise integration of
// (1 - t^2)^{-1/2}.
inline UnivariateJet asin_series_at(double t0, int order) {
  if (!(std::abs(t0) < 1.0 - 1e-12))
    throw std::domain_error("arcsin series requires center inside (-1, 1)");
  if (order == 0) return uj_constant(std::asin(t0), 0);
  UnivariateJet q(order - 1);
  q.c[0] = 1.0 - t0 * t0;
  if (order - 1 >= 1) q.c[1] = -2.0 * t0;
  if (order - 1 >= 2) q.c[2] = -1.0;
  return uj_pow(q, -0.5).integrated(std::asin(t0));
}

// ---------------------------------------------------------------------------
// Bivariate Wirtinger jet: coefficients c_{ab} of (z-z0)^a conj(z-z0)^b,
// total on the triangle a + b <= order.
// ---------------------------------------------------------------------------

struct WirtingerJet {
  cplx center{0.0};
  int order{0};
  bool real_flagged{false};
  std::vector<cplx> c;

  WirtingerJet() : c(1, cplx(0.0)) {}
  WirtingerJet(cplx center_, int order_, bool real_flagged_ = false)
      : center(center_), order(order_), real_flagged(real_flagged_),
        c(tri_size(order_), cplx(0.0)) {
    if (order_ < 0) throw std::invalid_argument("negative jet order");
  }

  static size_t tri_size(int n) {
    return static_cast<size_t>((n + 1) * (n + 2) / 2);
  }
  static size_t index(int a, int b) {
    const int d = a + b;
    return static_cast<size_t>(d * (d + 1) / 2 + b);
  }

  cplx coeff(int a, int b) const {
    if (a < 0 || b < 0 || a + b > order) return 0.0;
    return c[index(a, b)];
  }
  void set(int a, int b, cplx v) {
    if (a < 0 || b < 0 || a + b > order) throw std::out_of_range("jet index outside triangle");
    c[index(a, b)] = v;
  }

  // Wirtinger partial d^{a+b} F / dz^a dzbar^b at the center.
  cplx wirtinger(int a, int b) const {
    return coeff(a, b) * detail::factorial(a) * detail::factorial(b);
  }

  cplx value() const { return c[0]; }

  cplx eval(cplx dz) const {
    cplx acc = 0.0;
    const cplx dzb = std::conj(dz);
    for (int a = 0; a <= order; ++a) {
      cplx za = (a == 0) ? cplx(1.0) : cplx(0.0);
      if (a > 0) {
        za = 1.0;
        for (int k = 0; k < a; ++k) za *= dz;
      }
      for (int b = 0; a + b <= order; ++b) {
        cplx zb = 1.0;
        for (int k = 0; k < b; ++k) zb *= dzb;
        acc += coeff(a, b) * za * zb;
      }
    }
    return acc;
  }

  double max_abs() const {
    double m = 0.0;
    for (const cplx& v : c) m = std::max(m, std::abs(v));
    return m;
  }

  // Max violation of the reality condition c_{ab} = conj(c_{ba}).
  double reality_defect() const {
    double m = 0.0;
    for (int a = 0; a <= order; ++a)
      for (int b = 0; a + b <= order; ++b)
        m = std::max(m, std::abs(coeff(a, b) - std::conj(coeff(b, a))));
    return m;
  }
};

inline void require_compatible(const WirtingerJet& a, const WirtingerJet& b) {
  if (a.center != b.center) throw std::invalid_argument("center mismatch");
}

inline WirtingerJet wj_constant(cplx center, int order, cplx value, bool real = false) {
  WirtingerJet r(center, order, real);
  r.c[0] = value;
  return r;
}

// Jet of the coordinate function z itself.
inline WirtingerJet wj_var_z(cplx center, int order) {
  WirtingerJet r(center, order);
  r.c[0] = center;
  if (order >= 1) r.set(1, 0, 1.0);
  return r;
}

inline WirtingerJet wj_var_zbar(cplx center, int order) {
  WirtingerJet r(center, order);
  r.c[0] = std::conj(center);
  if (order >= 1) r.set(0, 1, 1.0);
  return r;
}

// Jet of |z|^2 = z zbar, real by construction.
inline WirtingerJet wj_abs2(cplx center, int order) {
  WirtingerJet r(center, order, true);
  r.c[0] = std::norm(center);
  if (order >= 1) {
    r.set(1, 0, std::conj(center));
    r.set(0, 1, center);
  }
  if (order >= 2) r.set(1, 1, 1.0);
  return r;
}

inline WirtingerJet jet_truncate(const WirtingerJet& a, int new_order) {
  if (new_order >= a.order) return a;
  WirtingerJet r(a.center, new_order, a.real_flagged);
  for (int p = 0; p <= new_order; ++p)
    for (int q = 0; p + q <= new_order; ++q)
      r.set(p, q, a.coeff(p, q));
  return r;
}

inline WirtingerJet jet_add(const WirtingerJet& a, const WirtingerJet& b) {
  require_compatible(a, b);
  const int n = std::min(a.order, b.order);
  WirtingerJet r(a.center, n, a.real_flagged && b.real_flagged);
  for (int p = 0; p <= n; ++p)
    for (int q = 0; p + q <= n; ++q)
      r.set(p, q, a.coeff(p, q) + b.coeff(p, q));
  return r;
}

inline WirtingerJet jet_sub(const WirtingerJet& a, const WirtingerJet& b) {
  require_compatible(a, b);
  const int n = std::min(a.order, b.order);
  WirtingerJet r(a.center, n, a.real_flagged && b.real_flagged);
  for (int p = 0; p <= n; ++p)
    for (int q = 0; p + q <= n; ++q)
      r.set(p, q, a.coeff(p, q) - b.coeff(p, q));
  return r;
}

inline WirtingerJet jet_scale(const WirtingerJet& a, cplx s) {
  WirtingerJet r = a;
  r.real_flagged = a.real_flagged && s.imag() == 0.0;
  for (cplx& v : r.c) v *= s;
  return r;
}

inline WirtingerJet jet_shift_value(const WirtingerJet& a, cplx delta, bool delta_real = false) {
  WirtingerJet r = a;
  r.c[0] += delta;
  r.real_flagged = a.real_flagged && (delta_real || delta.imag() == 0.0);
  return r;
}

// Truncated Cauchy product.
inline WirtingerJet jet_mul(const WirtingerJet& a, const WirtingerJet& b) {
  require_compatible(a, b);
  const int n = std::min(a.order, b.order);
  WirtingerJet r(a.center, n, a.real_flagged && b.real_flagged);
  for (int pa = 0; pa <= std::min(n, a.order); ++pa)
    for (int qa = 0; pa + qa <= std::min(n, a.order); ++qa) {
      const cplx va = a.coeff(pa, qa);
      if (va == cplx(0.0)) continue;
      for (int pb = 0; pa + qa + pb <= n; ++pb)
        for (int qb = 0; pa + qa + pb + qb <= n; ++qb) {
          const cplx vb = b.coeff(pb, qb);
          if (vb == cplx(0.0)) continue;
          r.c[WirtingerJet::index(pa + pb, qa + qb)] += va * vb;
        }
    }
  return r;
}

inline WirtingerJet operator+(const WirtingerJet& a, const WirtingerJet& b) { return jet_add(a, b); }
inline WirtingerJet operator-(const WirtingerJet& a, const WirtingerJet& b) { return jet_sub(a, b); }
inline WirtingerJet operator*(const WirtingerJet& a, const WirtingerJet& b) { return jet_mul(a, b); }
inline WirtingerJet operator*(cplx s, const WirtingerJet& a) { return jet_scale(a, s); }
inline WirtingerJet operator*(double s, const WirtingerJet& a) { return jet_scale(a, s); }

// Multiplicative inverse: jet r with a * r = 1 + O(order+1).
inline WirtingerJet jet_recip(const WirtingerJet& a, double threshold = kRecipThreshold) {
  if (std::abs(a.c[0]) < threshold)
    throw std::domain_error("division by (near-)zero jet");
  const int n = a.order;
  WirtingerJet r(a.center, n, a.real_flagged);
  const cplx inv0 = 1.0 / a.c[0];
  r.c[0] = inv0;
  for (int d = 1; d <= n; ++d)
    for (int p = d; p >= 0; --p) {
      const int q = d - p;
      cplx acc = 0.0;
      for (int pa = 0; pa <= p; ++pa)
        for (int qa = 0; qa <= q; ++qa) {
          if (pa == 0 && qa == 0) continue;
          acc += a.coeff(pa, qa) * r.coeff(p - pa, q - qa);
        }
      r.set(p, q, -inv0 * acc);
    }
  return r;
}

inline WirtingerJet jet_conj(const WirtingerJet& a) {
  WirtingerJet r(a.center, a.order, a.real_flagged);
  for (int p = 0; p <= a.order; ++p)
    for (int q = 0; p + q <= a.order; ++q)
      r.set(p, q, std::conj(a.coeff(q, p)));
  return r;
}

inline WirtingerJet d_z(const WirtingerJet& a) {
  if (a.order < 1) throw std::invalid_argument("derivative of order-0 jet");
  WirtingerJet r(a.center, a.order - 1, false);
  for (int p = 0; p <= r.order; ++p)
    for (int q = 0; p + q <= r.order; ++q)
      r.set(p, q, static_cast<double>(p + 1) * a.coeff(p + 1, q));
  return r;
}

inline WirtingerJet d_zbar(const WirtingerJet& a) {
  if (a.order < 1) throw std::invalid_argument("derivative of order-0 jet");
  WirtingerJet r(a.center, a.order - 1, false);
  for (int p = 0; p <= r.order; ++p)
    for (int q = 0; p + q <= r.order; ++q)
      r.set(p, q, static_cast<double>(q + 1) * a.coeff(p, q + 1));
  return r;
}

namespace detail {

// Horner composition of a series (already expanded at a's constant term) with
// the nilpotent part of a.
inline WirtingerJet compose_centered(const UnivariateJet& series, const WirtingerJet& a) {
  const int n = a.order;
  WirtingerJet nil = a;
  nil.c[0] = 0.0;
  nil.real_flagged = false;
  const int kmax = std::min(series.order(), n);
  WirtingerJet r = wj_constant(a.center, n, series.c[static_cast<size_t>(kmax)]);
  for (int k = kmax - 1; k >= 0; --k) {
    r = jet_mul(r, nil);
    r.c[0] += series.c[static_cast<size_t>(k)];
  }
  r.real_flagged = a.real_flagged && series.is_real(0.0);
  return r;
}

}  // namespace detail

// Compose a univariate series (coefficients about t = 0) with a jet. The
// series is re-expanded at the jet's constant term first, so inner jets with
// nonzero constant term are handled; the shift is exact for the stored
// polynomial, so callers should carry enough series terms for their target
// accuracy.
inline WirtingerJet jet_compose_analytic(const UnivariateJet& series, const WirtingerJet& a) {
  cplx t0 = a.c[0];
  if (a.real_flagged) t0 = cplx(t0.real(), 0.0);
  return detail::compose_centered(series.shifted(t0), a);
}

inline WirtingerJet jet_exp(const WirtingerJet& a) {
  cplx t0 = a.c[0];
  if (a.real_flagged) t0 = cplx(t0.real(), 0.0);
  return detail::compose_centered(exp_series_at(t0, a.order), a);
}

inline WirtingerJet jet_log(const WirtingerJet& a) {
  cplx t0 = a.c[0];
  if (a.real_flagged) t0 = cplx(t0.real(), 0.0);
  return detail::compose_centered(log_series_at(t0, a.order), a);
}

inline WirtingerJet jet_pow(const WirtingerJet& a, double alpha) {
  cplx t0 = a.c[0];
  if (a.real_flagged) t0 = cplx(t0.real(), 0.0);
  return detail::compose_centered(uj_pow(
      [&] { UnivariateJet q(a.order); q.c[0] = t0; if (a.order >= 1) q.c[1] = 1.0; return q; }(), alpha), a);
}

inline WirtingerJet jet_asin(const WirtingerJet& a) {
  if (!a.real_flagged || std::abs(a.c[0].imag()) > 1e-9)
    throw std::domain_error("arcsin of a jet requires a real-valued argument");
  return detail::compose_centered(asin_series_at(a.c[0].real(), a.order), a);
}

// Plain termwise z-antiderivative; raises the order by one, leaves the
// (0, b) column zero.
inline WirtingerJet antiderivative_z(const WirtingerJet& f) {
  WirtingerJet r(f.center, f.order + 1, false);
  for (int p = 0; p <= f.order; ++p)
    for (int q = 0; p + q <= f.order; ++q)
      r.set(p + 1, q, f.coeff(p, q) / static_cast<double>(p + 1));
  return r;
}

inline WirtingerJet antiderivative_zbar(const WirtingerJet& f) {
  WirtingerJet r(f.center, f.order + 1, false);
  for (int p = 0; p <= f.order; ++p)
    for (int q = 0; p + q <= f.order; ++q)
      r.set(p, q + 1, f.coeff(p, q) / static_cast<double>(q + 1));
  return r;
}

namespace detail {

// Project onto the real-valued subspace: c_{ab} <- (c_{ab} + conj(c_{ba}))/2.
inline void symmetrize_real(WirtingerJet& j) {
  for (int a = 0; a <= j.order; ++a)
    for (int b = a; a + b <= j.order; ++b) {
      if (a == b) {
        j.set(a, a, cplx(j.coeff(a, a).real(), 0.0));
        continue;
      }
      const cplx m = 0.5 * (j.coeff(a, b) + std::conj(j.coeff(b, a)));
      j.set(a, b, m);
      j.set(b, a, std::conj(m));
    }
  j.real_flagged = true;
}

}  // namespace detail

// Real-valued antiderivative: F with d_z(F) = f and F(center) = value, the
// antiholomorphic column completed by conjugation. Fails when no real F
// exists for this f.
inline WirtingerJet antiderivative_z_realify(const WirtingerJet& f, double value_at_center,
                                             double tol = 1e-10) {
  WirtingerJet F = antiderivative_z(f);
  for (int b = 1; b <= F.order; ++b) F.set(0, b, std::conj(F.coeff(b, 0)));
  F.c[0] = value_at_center;
  detail::symmetrize_real(F);
  const WirtingerJet back = d_z(F);
  double defect = 0.0;
  for (int p = 0; p <= back.order; ++p)
    for (int q = 0; p + q <= back.order; ++q)
      defect = std::max(defect, std::abs(back.coeff(p, q) - f.coeff(p, q)));
  if (defect > tol * (1.0 + f.max_abs()))
    throw std::invalid_argument("f is not the z-gradient of a real function");
  return F;
}

// ---------------------------------------------------------------------------
// Implicit graph jets: solve Psi(z, zbar, u(z, zbar)) = 0 for u near a point.
// ---------------------------------------------------------------------------

// Psi and dPsi/du as jets at a center, with the u-dependence composed against
// the current graph jet; scalar forms drive the initial Newton solve.
struct ImplicitFunction {
  std::function<WirtingerJet(cplx, const WirtingerJet&)> psi;
  std::function<WirtingerJet(cplx, const WirtingerJet&)> psi_du;
  std::function<double(cplx, double)> psi_scalar;
  std::function<double(cplx, double)> psi_du_scalar;
};

struct ImplicitSolveOptions {
  double scalar_tol = 1e-10;
  int max_scalar_iters = 50;
  double min_du = 1e-8;
  int max_jet_iters = 40;
  std::optional<WirtingerJet> initial;
};

// Scalar Newton for the graph height at a single point.
inline double implicit_scalar_solve(const ImplicitFunction& fn, cplx z0, double u0,
                                    const ImplicitSolveOptions& opts = {}) {
  double u = u0;
  for (int it = 0; it < opts.max_scalar_iters; ++it) {
    const double v = fn.psi_scalar(z0, u);
    if (std::abs(v) < opts.scalar_tol) return u;
    const double dv = fn.psi_du_scalar(z0, u);
    if (std::abs(dv) < opts.min_du) throw std::runtime_error("implicit function degenerate");
    u -= v / dv;
    if (!std::isfinite(u)) throw std::runtime_error("no graph point");
  }
  if (std::abs(fn.psi_scalar(z0, u)) < opts.scalar_tol) return u;
  throw std::runtime_error("no graph point");
}

// Newton iteration on jets; each step doubles the attained truncation order.
inline WirtingerJet implicit_jet_solve(const ImplicitFunction& fn, cplx z0, double u0, int order,
                                       const ImplicitSolveOptions& opts = {}) {
  const double u_center = implicit_scalar_solve(fn, z0, u0, opts);
  if (std::abs(fn.psi_du_scalar(z0, u_center)) < opts.min_du)
    throw std::runtime_error("implicit function degenerate");
  WirtingerJet u = opts.initial ? *opts.initial
                                : wj_constant(z0, order, u_center, true);
  if (u.center != cplx(z0)) throw std::invalid_argument("center mismatch");
  for (int it = 0; it < opts.max_jet_iters; ++it) {
    const WirtingerJet res = fn.psi(z0, u);
    const WirtingerJet du = fn.psi_du(z0, u);
    const WirtingerJet step = jet_mul(res, jet_recip(du, opts.min_du));
    u = jet_sub(u, step);
    if (step.max_abs() < 1e-15) break;
  }
  if (u.reality_defect() > 1e-8)
    throw std::runtime_error("implicit solve produced a non-real graph jet");
  detail::symmetrize_real(u);
  return u;
}

}  // namespace rigidcr
