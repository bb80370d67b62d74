#include "cglike/directions.hpp"

namespace cglike {

Direction direction(MethodId method, const DirectionState& state, const DirectionParams& params) {
  const Vector& g = state.g_curr;
  Direction out;
  if (state.first()) {
    out.d = -g;
    return out;
  }
  if (!state.g_prev || !state.y_prev) {
    throw Error(ErrorKind::InvalidConfig, "direction: incomplete history");
  }
  const Vector& d_prev = *state.d_prev;
  const Vector& g_prev = *state.g_prev;
  const Vector& y_prev = *state.y_prev;
  if (d_prev.size() != g.size() || g_prev.size() != g.size() || y_prev.size() != g.size()) {
    throw Error(ErrorKind::DimensionMismatch, "direction");
  }

  switch (method) {
    case MethodId::NEW:
      out.beta = beta_new(g, d_prev, params.tau);
      out.d = -g + out.beta * d_prev;
      break;
    case MethodId::FR:
      out.beta = beta_fr(g, g_prev);
      out.d = -g + out.beta * d_prev;
      break;
    case MethodId::HZ:
      out.beta = beta_hz(g, d_prev, y_prev, params.hz_eta);
      out.d = -g + out.beta * d_prev;
      break;
    case MethodId::MFR: {
      out.beta = beta_fr(g, g_prev);
      const Scalar theta = theta_mfr(d_prev, y_prev, g_prev);
      out.d = -theta * g + out.beta * d_prev;
      break;
    }
  }

  if ((method == MethodId::FR || method == MethodId::HZ) && !(out.d.dot(g) < 0)) {
    out.d = -g;
    out.beta = 0;
    out.restarted = true;
  }
  return out;
}

}  // namespace cglike
