// Analytic re-implementations of CUTEst unconstrained problems. Each entry
// documents its objective and the CUTEst default starting point. Indices in
// the formulas are 1-based, as in the SIF sources.

#include "cglike/problems.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace cglike {
namespace {

using Eigen::seqN;

Vector constant(Index n, Scalar v) { return Vector::Constant(n, v); }

// 1, 2, ..., n
Vector ramp(Index n) { return Vector::LinSpaced(n, 1.0, static_cast<Scalar>(n)); }

// ---------------------------------------------------------------------------
// SROSENBR: sum_{i=1}^{n/2} 100 (x_{2i} - x_{2i-1}^2)^2 + (1 - x_{2i-1})^2
// start: x_{2i-1} = -1.2, x_{2i} = 1
Scalar srosenbr_f(const Vector& x) {
  const Index m = x.size() / 2;
  auto odd = x(seqN(0, m, 2)).array();
  auto even = x(seqN(1, m, 2)).array();
  return (100.0 * (even - odd.square()).square() + (1.0 - odd).square()).sum();
}

Vector srosenbr_g(const Vector& x) {
  const Index m = x.size() / 2;
  Vector g(x.size());
  auto odd = x(seqN(0, m, 2)).array();
  auto even = x(seqN(1, m, 2)).array();
  const Eigen::ArrayXd r = even - odd.square();
  g(seqN(0, m, 2)) = (-400.0 * r * odd - 2.0 * (1.0 - odd)).matrix();
  g(seqN(1, m, 2)) = (200.0 * r).matrix();
  return g;
}

Vector srosenbr_start(Index n) {
  Vector x(n);
  x(seqN(0, n / 2, 2)).setConstant(-1.2);
  x(seqN(1, n / 2, 2)).setConstant(1.0);
  return x;
}

// ---------------------------------------------------------------------------
// WOODS, per block (x1, x2, x3, x4) of consecutive variables:
//   100 (x2 - x1^2)^2 + (1 - x1)^2 + 90 (x4 - x3^2)^2 + (1 - x3)^2
//   + 10.1 ((x2 - 1)^2 + (x4 - 1)^2) + 19.8 (x2 - 1)(x4 - 1)
// start: (-3, -1, -3, -1) repeated
Scalar woods_f(const Vector& x) {
  const Index m = x.size() / 4;
  auto x1 = x(seqN(0, m, 4)).array();
  auto x2 = x(seqN(1, m, 4)).array();
  auto x3 = x(seqN(2, m, 4)).array();
  auto x4 = x(seqN(3, m, 4)).array();
  return (100.0 * (x2 - x1.square()).square() + (1.0 - x1).square() +
          90.0 * (x4 - x3.square()).square() + (1.0 - x3).square() +
          10.1 * ((x2 - 1.0).square() + (x4 - 1.0).square()) + 19.8 * (x2 - 1.0) * (x4 - 1.0))
      .sum();
}

Vector woods_g(const Vector& x) {
  const Index m = x.size() / 4;
  Vector g(x.size());
  auto x1 = x(seqN(0, m, 4)).array();
  auto x2 = x(seqN(1, m, 4)).array();
  auto x3 = x(seqN(2, m, 4)).array();
  auto x4 = x(seqN(3, m, 4)).array();
  const Eigen::ArrayXd r1 = x2 - x1.square();
  const Eigen::ArrayXd r3 = x4 - x3.square();
  g(seqN(0, m, 4)) = (-400.0 * x1 * r1 - 2.0 * (1.0 - x1)).matrix();
  g(seqN(1, m, 4)) = (200.0 * r1 + 20.2 * (x2 - 1.0) + 19.8 * (x4 - 1.0)).matrix();
  g(seqN(2, m, 4)) = (-360.0 * x3 * r3 - 2.0 * (1.0 - x3)).matrix();
  g(seqN(3, m, 4)) = (180.0 * r3 + 20.2 * (x4 - 1.0) + 19.8 * (x2 - 1.0)).matrix();
  return g;
}

Vector woods_start(Index n) {
  Vector x(n);
  for (Index i = 0; i < n; ++i) x[i] = (i % 2 == 0) ? -3.0 : -1.0;
  return x;
}

// ---------------------------------------------------------------------------
// POWELLSG, per block of four:
//   (x1 + 10 x2)^2 + 5 (x3 - x4)^2 + (x2 - 2 x3)^4 + 10 (x1 - x4)^4
// start: (3, -1, 0, 1) repeated
Scalar powellsg_f(const Vector& x) {
  const Index m = x.size() / 4;
  auto x1 = x(seqN(0, m, 4)).array();
  auto x2 = x(seqN(1, m, 4)).array();
  auto x3 = x(seqN(2, m, 4)).array();
  auto x4 = x(seqN(3, m, 4)).array();
  return ((x1 + 10.0 * x2).square() + 5.0 * (x3 - x4).square() + (x2 - 2.0 * x3).square().square() +
          10.0 * (x1 - x4).square().square())
      .sum();
}

Vector powellsg_g(const Vector& x) {
  const Index m = x.size() / 4;
  Vector g(x.size());
  auto x1 = x(seqN(0, m, 4)).array();
  auto x2 = x(seqN(1, m, 4)).array();
  auto x3 = x(seqN(2, m, 4)).array();
  auto x4 = x(seqN(3, m, 4)).array();
  const Eigen::ArrayXd t1 = x1 + 10.0 * x2;
  const Eigen::ArrayXd t2 = x3 - x4;
  const Eigen::ArrayXd t3c = (x2 - 2.0 * x3).cube();
  const Eigen::ArrayXd t4c = (x1 - x4).cube();
  g(seqN(0, m, 4)) = (2.0 * t1 + 40.0 * t4c).matrix();
  g(seqN(1, m, 4)) = (20.0 * t1 + 4.0 * t3c).matrix();
  g(seqN(2, m, 4)) = (10.0 * t2 - 8.0 * t3c).matrix();
  g(seqN(3, m, 4)) = (-10.0 * t2 - 40.0 * t4c).matrix();
  return g;
}

Vector powellsg_start(Index n) {
  static constexpr Scalar block[4] = {3.0, -1.0, 0.0, 1.0};
  Vector x(n);
  for (Index i = 0; i < n; ++i) x[i] = block[i % 4];
  return x;
}

// ---------------------------------------------------------------------------
// TRIDIA (alpha = 2, beta = 1, gamma = 1, delta = 1):
//   (x1 - 1)^2 + sum_{i=2}^n i (2 x_i - x_{i-1})^2
// start: all ones; minimizer x_i = 2^{1-i}
Scalar tridia_f(const Vector& x) {
  const Index n = x.size();
  const Vector w = ramp(n);
  const auto r = 2.0 * x.tail(n - 1).array() - x.head(n - 1).array();
  return (x[0] - 1.0) * (x[0] - 1.0) + (w.tail(n - 1).array() * r.square()).sum();
}

Vector tridia_g(const Vector& x) {
  const Index n = x.size();
  const Vector w = ramp(n);
  const Eigen::ArrayXd wr =
      w.tail(n - 1).array() * (2.0 * x.tail(n - 1).array() - x.head(n - 1).array());
  Vector g = Vector::Zero(n);
  g[0] = 2.0 * (x[0] - 1.0);
  g.tail(n - 1).array() += 4.0 * wr;
  g.head(n - 1).array() -= 2.0 * wr;
  return g;
}

Vector tridia_min(Index n) {
  Vector x(n);
  x[0] = 1.0;
  for (Index i = 1; i < n; ++i) x[i] = 0.5 * x[i - 1];
  return x;
}

// ---------------------------------------------------------------------------
// DQDRTIC: sum_{i=1}^{n-2} x_i^2 + 100 x_{i+1}^2 + 100 x_{i+2}^2
// start: all 3
Vector dqdrtic_weights(Index n) {
  Vector w = Vector::Zero(n);
  w.head(n - 2).array() += 1.0;
  w.segment(1, n - 2).array() += 100.0;
  w.tail(n - 2).array() += 100.0;
  return w;
}

Scalar dqdrtic_f(const Vector& x) {
  return (dqdrtic_weights(x.size()).array() * x.array().square()).sum();
}

Vector dqdrtic_g(const Vector& x) {
  return 2.0 * dqdrtic_weights(x.size()).cwiseProduct(x);
}

// ---------------------------------------------------------------------------
// DIXON3DQ: (x1 - 1)^2 + sum_{j=2}^{n-1} (x_j - x_{j+1})^2 + (x_n - 1)^2
// start: all -1
Scalar dixon3dq_f(const Vector& x) {
  const Index n = x.size();
  const Scalar inner = (x.segment(1, n - 2) - x.tail(n - 2)).squaredNorm();
  return (x[0] - 1.0) * (x[0] - 1.0) + inner + (x[n - 1] - 1.0) * (x[n - 1] - 1.0);
}

Vector dixon3dq_g(const Vector& x) {
  const Index n = x.size();
  const Vector t = 2.0 * (x.segment(1, n - 2) - x.tail(n - 2));
  Vector g = Vector::Zero(n);
  g[0] = 2.0 * (x[0] - 1.0);
  g.segment(1, n - 2) += t;
  g.tail(n - 2) -= t;
  g[n - 1] += 2.0 * (x[n - 1] - 1.0);
  return g;
}

// ---------------------------------------------------------------------------
// ARWHEAD: sum_{i=1}^{n-1} (-4 x_i + 3) + (x_i^2 + x_n^2)^2
// start: all ones; minimizer (1, ..., 1, 0)
Scalar arwhead_f(const Vector& x) {
  const Index n = x.size();
  const auto xi = x.head(n - 1).array();
  const Scalar xn2 = x[n - 1] * x[n - 1];
  return ((-4.0 * xi + 3.0) + (xi.square() + xn2).square()).sum();
}

Vector arwhead_g(const Vector& x) {
  const Index n = x.size();
  const auto xi = x.head(n - 1).array();
  const Eigen::ArrayXd q = xi.square() + x[n - 1] * x[n - 1];
  Vector g(n);
  g.head(n - 1) = (-4.0 + 4.0 * xi * q).matrix();
  g[n - 1] = 4.0 * x[n - 1] * q.sum();
  return g;
}

Vector arwhead_min(Index n) {
  Vector x = Vector::Ones(n);
  x[n - 1] = 0.0;
  return x;
}

// ---------------------------------------------------------------------------
// LIARWHD: sum_{i=1}^n 4 (x_i^2 - x_1)^2 + (x_i - 1)^2
// start: all 4
Scalar liarwhd_f(const Vector& x) {
  const auto a = x.array();
  return (4.0 * (a.square() - x[0]).square() + (a - 1.0).square()).sum();
}

Vector liarwhd_g(const Vector& x) {
  const auto a = x.array();
  const Eigen::ArrayXd r = a.square() - x[0];
  Vector g = (16.0 * a * r + 2.0 * (a - 1.0)).matrix();
  g[0] -= 8.0 * r.sum();
  return g;
}

// ---------------------------------------------------------------------------
// NONDIA: (x1 - 1)^2 + sum_{i=2}^n 100 (x1 - x_{i-1}^2)^2
// start: all -1
Scalar nondia_f(const Vector& x) {
  const Index n = x.size();
  const auto r = x[0] - x.head(n - 1).array().square();
  return (x[0] - 1.0) * (x[0] - 1.0) + 100.0 * r.square().sum();
}

Vector nondia_g(const Vector& x) {
  const Index n = x.size();
  const Eigen::ArrayXd r = x[0] - x.head(n - 1).array().square();
  Vector g = Vector::Zero(n);
  g.head(n - 1) = (-400.0 * x.head(n - 1).array() * r).matrix();
  g[0] += 2.0 * (x[0] - 1.0) + 200.0 * r.sum();
  return g;
}

// ---------------------------------------------------------------------------
// ENGVAL1: sum_{i=1}^{n-1} (x_i^2 + x_{i+1}^2)^2 + (-4 x_i + 3)
// start: all 2
Scalar engval1_f(const Vector& x) {
  const Index n = x.size();
  const auto a = x.head(n - 1).array();
  const auto b = x.tail(n - 1).array();
  return ((a.square() + b.square()).square() - 4.0 * a + 3.0).sum();
}

Vector engval1_g(const Vector& x) {
  const Index n = x.size();
  const auto a = x.head(n - 1).array();
  const auto b = x.tail(n - 1).array();
  const Eigen::ArrayXd q = a.square() + b.square();
  Vector g = Vector::Zero(n);
  g.head(n - 1).array() += 4.0 * a * q - 4.0;
  g.tail(n - 1).array() += 4.0 * b * q;
  return g;
}

// ---------------------------------------------------------------------------
// FREUROTH: sum_{i=1}^{n-1} r1_i^2 + r2_i^2 with
//   r1 = -13 + x_i + ((5 - x_{i+1}) x_{i+1} - 2) x_{i+1}
//   r2 = -29 + x_i + ((x_{i+1} + 1) x_{i+1} - 14) x_{i+1}
// start: x1 = 0.5, x2 = -2, others 0
Scalar freuroth_f(const Vector& x) {
  const Index n = x.size();
  const auto a = x.head(n - 1).array();
  const auto b = x.tail(n - 1).array();
  const auto r1 = -13.0 + a + ((5.0 - b) * b - 2.0) * b;
  const auto r2 = -29.0 + a + ((b + 1.0) * b - 14.0) * b;
  return (r1.square() + r2.square()).sum();
}

Vector freuroth_g(const Vector& x) {
  const Index n = x.size();
  const auto a = x.head(n - 1).array();
  const auto b = x.tail(n - 1).array();
  const Eigen::ArrayXd r1 = -13.0 + a + ((5.0 - b) * b - 2.0) * b;
  const Eigen::ArrayXd r2 = -29.0 + a + ((b + 1.0) * b - 14.0) * b;
  Vector g = Vector::Zero(n);
  g.head(n - 1).array() += 2.0 * (r1 + r2);
  g.tail(n - 1).array() +=
      2.0 * r1 * (10.0 * b - 3.0 * b.square() - 2.0) + 2.0 * r2 * (3.0 * b.square() + 2.0 * b - 14.0);
  return g;
}

Vector freuroth_start(Index n) {
  Vector x = Vector::Zero(n);
  x[0] = 0.5;
  x[1] = -2.0;
  return x;
}

// ---------------------------------------------------------------------------
// EXTROSNB (nonseparable extended Rosenbrock):
//   x1^2 + sum_{i=2}^n 100 (x_i - x_{i-1}^2)^2
// start: all -1; minimizer at the origin
Scalar extrosnb_f(const Vector& x) {
  const Index n = x.size();
  const auto r = x.tail(n - 1).array() - x.head(n - 1).array().square();
  return x[0] * x[0] + 100.0 * r.square().sum();
}

Vector extrosnb_g(const Vector& x) {
  const Index n = x.size();
  const Eigen::ArrayXd r = x.tail(n - 1).array() - x.head(n - 1).array().square();
  Vector g = Vector::Zero(n);
  g[0] = 2.0 * x[0];
  g.tail(n - 1).array() += 200.0 * r;
  g.head(n - 1).array() -= 400.0 * x.head(n - 1).array() * r;
  return g;
}

// ---------------------------------------------------------------------------
// COSINE: sum_{i=1}^{n-1} cos(-0.5 x_{i+1} + x_i^2)
// start: all ones
Scalar cosine_f(const Vector& x) {
  const Index n = x.size();
  return (x.head(n - 1).array().square() - 0.5 * x.tail(n - 1).array()).cos().sum();
}

Vector cosine_g(const Vector& x) {
  const Index n = x.size();
  const Eigen::ArrayXd s =
      -(x.head(n - 1).array().square() - 0.5 * x.tail(n - 1).array()).sin();
  Vector g = Vector::Zero(n);
  g.head(n - 1).array() += 2.0 * x.head(n - 1).array() * s;
  g.tail(n - 1).array() -= 0.5 * s;
  return g;
}

// ---------------------------------------------------------------------------
// EDENSCH: 16 + sum_{i=1}^{n-1} (x_i - 2)^4 + (x_i x_{i+1} - 2 x_{i+1})^2 + (x_{i+1} + 1)^2
// start: all 0
Scalar edensch_f(const Vector& x) {
  const Index n = x.size();
  const auto a = x.head(n - 1).array() - 2.0;
  const auto b = x.tail(n - 1).array();
  return 16.0 + (a.square().square() + (a * b).square() + (b + 1.0).square()).sum();
}

Vector edensch_g(const Vector& x) {
  const Index n = x.size();
  const Eigen::ArrayXd a = x.head(n - 1).array() - 2.0;
  const auto b = x.tail(n - 1).array();
  const Eigen::ArrayXd ab = a * b;
  Vector g = Vector::Zero(n);
  g.head(n - 1).array() += 4.0 * a.cube() + 2.0 * ab * b;
  g.tail(n - 1).array() += 2.0 * ab * a + 2.0 * (b + 1.0);
  return g;
}

// ---------------------------------------------------------------------------
// QUARTC and DQRTIC: sum_{i=1}^n (x_i - i)^4
// start: all 2; minimizer x_i = i
Scalar quartic_f(const Vector& x) {
  return (x - ramp(x.size())).array().square().square().sum();
}

Vector quartic_g(const Vector& x) {
  return (4.0 * (x - ramp(x.size())).array().cube()).matrix();
}

// ---------------------------------------------------------------------------
// PENALTY1: a sum_{i=1}^n (x_i - 1)^2 + (sum_{i=1}^n x_i^2 - 1/4)^2, a = 1e-5
// start: x_i = i
constexpr Scalar kPenalty1A = 1e-5;

Scalar penalty1_f(const Vector& x) {
  const Scalar s = x.squaredNorm() - 0.25;
  return kPenalty1A * (x.array() - 1.0).square().sum() + s * s;
}

Vector penalty1_g(const Vector& x) {
  const Scalar s = x.squaredNorm() - 0.25;
  return (2.0 * kPenalty1A * (x.array() - 1.0) + 4.0 * s * x.array()).matrix();
}

// ---------------------------------------------------------------------------
// VARDIM: sum (x_i - 1)^2 + s^2 + s^4 with s = sum_{i=1}^n i (x_i - 1)
// start: x_i = 1 - i/n
Scalar vardim_f(const Vector& x) {
  const Vector r = x.array() - 1.0;
  const Scalar s = ramp(x.size()).dot(r);
  const Scalar s2 = s * s;
  return r.squaredNorm() + s2 + s2 * s2;
}

Vector vardim_g(const Vector& x) {
  const Vector w = ramp(x.size());
  const Vector r = x.array() - 1.0;
  const Scalar s = w.dot(r);
  return 2.0 * r + (2.0 * s + 4.0 * s * s * s) * w;
}

Vector vardim_start(Index n) {
  return (1.0 - ramp(n).array() / static_cast<Scalar>(n)).matrix();
}

// ---------------------------------------------------------------------------
// BDQRTIC: sum_{i=1}^{n-4} (-4 x_i + 3)^2
//   + (x_i^2 + 2 x_{i+1}^2 + 3 x_{i+2}^2 + 4 x_{i+3}^2 + 5 x_n^2)^2
// start: all ones
Eigen::ArrayXd bdqrtic_q(const Vector& x) {
  const Index n = x.size();
  const Index m = n - 4;
  const auto sq = x.array().square();
  return sq.head(m) + 2.0 * sq.segment(1, m) + 3.0 * sq.segment(2, m) + 4.0 * sq.segment(3, m) +
         5.0 * sq[n - 1];
}

Scalar bdqrtic_f(const Vector& x) {
  const Index m = x.size() - 4;
  return ((-4.0 * x.head(m).array() + 3.0).square() + bdqrtic_q(x).square()).sum();
}

Vector bdqrtic_g(const Vector& x) {
  const Index n = x.size();
  const Index m = n - 4;
  const Eigen::ArrayXd q = bdqrtic_q(x);
  const auto a = x.array();
  Vector g = Vector::Zero(n);
  g.head(m).array() += -8.0 * (-4.0 * a.head(m) + 3.0) + 4.0 * a.head(m) * q;
  g.segment(1, m).array() += 8.0 * a.segment(1, m) * q;
  g.segment(2, m).array() += 12.0 * a.segment(2, m) * q;
  g.segment(3, m).array() += 16.0 * a.segment(3, m) * q;
  g[n - 1] += 20.0 * x[n - 1] * q.sum();
  return g;
}

// ---------------------------------------------------------------------------
// TOINTGSS: sum_{i=1}^{n-2} (10/(n+2) + x_{i+2}^2)
//   * (2 - exp(-(x_i - x_{i+1})^2 / (0.1 + x_{i+2}^2)))
// start: all 3; minimizer at the origin
Scalar tointgss_f(const Vector& x) {
  const Index n = x.size();
  const Index m = n - 2;
  const Scalar c = 10.0 / static_cast<Scalar>(n + 2);
  const auto u = x.head(m).array() - x.segment(1, m).array();
  const auto z2 = x.tail(m).array().square();
  return ((c + z2) * (2.0 - (-u.square() / (0.1 + z2)).exp())).sum();
}

Vector tointgss_g(const Vector& x) {
  const Index n = x.size();
  const Index m = n - 2;
  const Scalar c = 10.0 / static_cast<Scalar>(n + 2);
  const Eigen::ArrayXd u = x.head(m).array() - x.segment(1, m).array();
  const auto z = x.tail(m).array();
  const Eigen::ArrayXd w = 0.1 + z.square();
  const Eigen::ArrayXd a = c + z.square();
  const Eigen::ArrayXd e = (-u.square() / w).exp();
  const Eigen::ArrayXd du = a * e * 2.0 * u / w;
  Vector g = Vector::Zero(n);
  g.head(m).array() += du;
  g.segment(1, m).array() -= du;
  g.tail(m).array() += 2.0 * z * (2.0 - e) - a * e * 2.0 * z * u.square() / w.square();
  return g;
}

// ---------------------------------------------------------------------------
// POWER: (sum_{i=1}^n i x_i^2)^2
// start: all ones
Scalar power_f(const Vector& x) {
  const Scalar s = ramp(x.size()).dot(x.cwiseAbs2());
  return s * s;
}

Vector power_g(const Vector& x) {
  const Vector w = ramp(x.size());
  const Scalar s = w.dot(x.cwiseAbs2());
  return 4.0 * s * w.cwiseProduct(x);
}

// ---------------------------------------------------------------------------

struct Family {
  Scalar (*value)(const Vector&);
  Vector (*gradient)(const Vector&);
  Vector (*start)(Index);
  std::optional<Vector> (*minimizer)(Index);
  Index min_dim;
  Index multiple_of;
  /// Table dimensions kept at desk scale (n <= 1000).
  std::vector<Index> dims;
  /// Dimension used in the desk suite.
  Index desk_dim;
};

template <int V>
Vector filled(Index n) {
  return constant(n, static_cast<Scalar>(V));
}

std::optional<Vector> no_minimizer(Index) { return std::nullopt; }
template <int V>
std::optional<Vector> min_filled(Index n) {
  return filled<V>(n);
}
std::optional<Vector> min_ramp(Index n) { return ramp(n); }
std::optional<Vector> min_tridia(Index n) { return tridia_min(n); }
std::optional<Vector> min_arwhead(Index n) { return arwhead_min(n); }

Vector start_ramp(Index n) { return ramp(n); }
Vector start_minus_one(Index n) { return constant(n, -1.0); }

const std::map<std::string, Family>& families() {
  static const std::map<std::string, Family> table = {
      {"ARWHEAD", {arwhead_f, arwhead_g, filled<1>, min_arwhead, 2, 1, {100, 500, 1000}, 100}},
      {"BDQRTIC", {bdqrtic_f, bdqrtic_g, filled<1>, no_minimizer, 5, 1, {100, 500, 1000}, 100}},
      {"COSINE", {cosine_f, cosine_g, filled<1>, no_minimizer, 2, 1, {100, 1000}, 100}},
      {"DIXON3DQ", {dixon3dq_f, dixon3dq_g, start_minus_one, min_filled<1>, 3, 1, {100}, 100}},
      {"DQDRTIC", {dqdrtic_f, dqdrtic_g, filled<3>, min_filled<0>, 3, 1, {50, 100, 500, 1000}, 50}},
      {"DQRTIC", {quartic_f, quartic_g, filled<2>, min_ramp, 1, 1, {50, 100, 500, 1000}, 0}},
      // Listed only at n = 2000; kept at desk scale.
      {"EDENSCH", {edensch_f, edensch_g, filled<0>, no_minimizer, 2, 1, {1000}, 1000}},
      {"ENGVAL1", {engval1_f, engval1_g, filled<2>, no_minimizer, 2, 1, {50, 100, 1000}, 50}},
      {"EXTROSNB", {extrosnb_f, extrosnb_g, start_minus_one, min_filled<0>, 2, 1, {100, 1000}, 100}},
      {"FREUROTH", {freuroth_f, freuroth_g, freuroth_start, no_minimizer, 2, 1, {50, 100, 500, 1000}, 50}},
      {"LIARWHD", {liarwhd_f, liarwhd_g, filled<4>, min_filled<1>, 1, 1, {100, 500, 1000}, 100}},
      {"NONDIA", {nondia_f, nondia_g, start_minus_one, min_filled<1>, 2, 1, {50, 90, 100, 500, 1000}, 50}},
      {"PENALTY1", {penalty1_f, penalty1_g, start_ramp, no_minimizer, 1, 1, {50, 100, 500, 1000}, 50}},
      {"POWELLSG", {powellsg_f, powellsg_g, powellsg_start, min_filled<0>, 4, 4, {60, 80, 100, 500, 1000}, 60}},
      {"POWER", {power_f, power_g, filled<1>, min_filled<0>, 1, 1, {50, 75, 100, 500, 1000}, 50}},
      {"QUARTC", {quartic_f, quartic_g, filled<2>, min_ramp, 1, 1, {100, 500, 1000}, 100}},
      {"SROSENBR", {srosenbr_f, srosenbr_g, srosenbr_start, min_filled<1>, 2, 2, {50, 100, 500, 1000}, 50}},
      {"TOINTGSS", {tointgss_f, tointgss_g, filled<3>, min_filled<0>, 3, 1, {50, 100, 500, 1000}, 50}},
      {"TRIDIA", {tridia_f, tridia_g, filled<1>, min_tridia, 2, 1, {50, 100, 500, 1000}, 50}},
      {"VARDIM", {vardim_f, vardim_g, vardim_start, min_filled<1>, 1, 1, {50, 100, 200}, 50}},
      {"WOODS", {woods_f, woods_g, woods_start, min_filled<1>, 4, 4, {100, 1000}, 100}},
  };
  return table;
}

const Family& family(const std::string& name) {
  const auto& table = families();
  const auto it = table.find(name);
  if (it == table.end()) throw Error(ErrorKind::NotInCatalog, "unknown problem '" + name + "'");
  return it->second;
}

}  // namespace

ProblemInstance make_problem(const std::string& name, Index dim) {
  const Family& fam = family(name);
  if (dim < fam.min_dim || dim % fam.multiple_of != 0) {
    throw Error(ErrorKind::InvalidDimension,
                name + " does not admit n = " + std::to_string(dim));
  }
  ProblemInstance p;
  p.name = name;
  p.dim = dim;
  p.start = fam.start(dim);
  p.value = fam.value;
  p.gradient = fam.gradient;
  p.minimizer = fam.minimizer(dim);
  return p;
}

std::vector<std::string> problem_names() {
  std::vector<std::string> names;
  for (const auto& [name, fam] : families()) names.push_back(name);
  return names;
}

const std::vector<ProblemInstance>& catalog() {
  static const std::vector<ProblemInstance> instances = [] {
    std::vector<ProblemInstance> out;
    for (const auto& [name, fam] : families()) {
      for (Index n : fam.dims) out.push_back(make_problem(name, n));
    }
    std::sort(out.begin(), out.end(), [](const ProblemInstance& a, const ProblemInstance& b) {
      return a.name != b.name ? a.name < b.name : a.dim < b.dim;
    });
    return out;
  }();
  return instances;
}

std::vector<ProblemInstance> desk_suite() {
  std::vector<ProblemInstance> out;
  for (const auto& [name, fam] : families()) {
    if (fam.desk_dim > 0) out.push_back(make_problem(name, fam.desk_dim));
  }
  return out;
}

const ProblemInstance& find_in_catalog(const std::string& name, Index dim) {
  for (const auto& p : catalog()) {
    if (p.name == name && p.dim == dim) return p;
  }
  throw Error(ErrorKind::NotInCatalog, name + " with n = " + std::to_string(dim));
}

}  // namespace cglike
