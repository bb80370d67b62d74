#pragma once

#include "cglike/types.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

namespace cglike {

enum class MethodId { NEW, FR, MFR, HZ };

constexpr std::string_view to_string(MethodId m) noexcept {
  switch (m) {
    case MethodId::NEW: return "NEW";
    case MethodId::FR: return "FR";
    case MethodId::MFR: return "MFR";
    case MethodId::HZ: return "HZ";
  }
  return "?";
}

inline MethodId parse_method(std::string_view token) {
  if (token == "NEW") return MethodId::NEW;
  if (token == "FR") return MethodId::FR;
  if (token == "MFR") return MethodId::MFR;
  if (token == "HZ") return MethodId::HZ;
  throw Error(ErrorKind::InvalidConfig, "unknown method '" + std::string(token) + "'");
}

inline constexpr MethodId kAllMethods[] = {MethodId::NEW, MethodId::FR, MethodId::MFR, MethodId::HZ};

/// beta = tau ||g|| / ||d_prev||
template <typename G, typename D>
typename G::Scalar beta_new(const Eigen::MatrixBase<G>& g, const Eigen::MatrixBase<D>& d_prev,
                            typename G::Scalar tau) {
  const auto dnorm = d_prev.norm();
  if (!(dnorm > 0)) throw Error(ErrorKind::ZeroPreviousDirection, "beta_new");
  return tau * g.norm() / dnorm;
}

/// Fletcher-Reeves: ||g||^2 / ||g_prev||^2
template <typename G, typename P>
typename G::Scalar beta_fr(const Eigen::MatrixBase<G>& g, const Eigen::MatrixBase<P>& g_prev) {
  const auto den = g_prev.squaredNorm();
  if (!(den > 0)) throw Error(ErrorKind::ZeroPreviousGradient, "beta_fr");
  return g.squaredNorm() / den;
}

/// Scaling of -g in the modified FR direction: d_prev'y_prev / ||g_prev||^2
template <typename D, typename Y, typename P>
typename D::Scalar theta_mfr(const Eigen::MatrixBase<D>& d_prev, const Eigen::MatrixBase<Y>& y_prev,
                             const Eigen::MatrixBase<P>& g_prev) {
  const auto den = g_prev.squaredNorm();
  if (!(den > 0)) throw Error(ErrorKind::ZeroPreviousGradient, "theta_mfr");
  return d_prev.dot(y_prev) / den;
}

/// Hager-Zhang parameter with the CG_DESCENT lower truncation
///   beta = (y - 2 d ||y||^2 / d'y)' g / d'y
///   max(beta, -1 / (||d|| min(eta, ||g_prev||))),  g_prev = g - y.
template <typename G, typename D, typename Y>
typename G::Scalar beta_hz(const Eigen::MatrixBase<G>& g, const Eigen::MatrixBase<D>& d_prev,
                           const Eigen::MatrixBase<Y>& y_prev, typename G::Scalar eta) {
  using S = typename G::Scalar;
  const S dy = d_prev.dot(y_prev);
  if (!(std::abs(dy) >= S(1e-30))) throw Error(ErrorKind::DegenerateCurvature, "beta_hz");
  const S beta = (y_prev.dot(g) - S(2) * y_prev.squaredNorm() / dy * d_prev.dot(g)) / dy;
  const S gprev_norm = (g - y_prev).norm();
  const S floor = S(-1) / (d_prev.norm() * std::min(eta, gprev_norm));
  return std::max(beta, floor);
}

/// Data the direction update needs at iteration k. History fields are all
/// empty at k = 0 and all present afterwards.
struct DirectionState {
  Vector g_curr;
  std::optional<Vector> g_prev;
  std::optional<Vector> d_prev;
  std::optional<Vector> y_prev;

  bool first() const noexcept { return !d_prev.has_value(); }
};

struct Direction {
  Vector d;
  Scalar beta = 0;
  bool restarted = false;
};

struct DirectionParams {
  Scalar tau = 0.002;
  Scalar hz_eta = 0.01;
};

/// Search direction for `method`. FR and HZ fall back to -g when the formula
/// does not produce a descent direction; this is reported via `restarted`.
Direction direction(MethodId method, const DirectionState& state, const DirectionParams& params);

}  // namespace cglike
