#include <cmath>
#include <stdexcept>
#include <string>

#include "hyperlay/hmds.hpp"

namespace hyperlay {

Schedule Schedule::make(ScheduleKind kind, double d_max, double d_min, int t_max, double epsilon) {
  if (!(d_max > 0.0) || !(d_min > 0.0) || d_min > d_max) throw std::invalid_argument("schedule needs 0 < d_min <= d_max");
  if (t_max < 0) throw std::invalid_argument("schedule needs t_max >= 0");
  if (!(epsilon > 0.0)) throw std::invalid_argument("schedule needs epsilon > 0");

  Schedule s;
  s.kind = kind;
  s.t_max = t_max;
  s.eta_max = d_max * d_max;
  s.eta_min = epsilon * d_min * d_min;
  s.a = d_min * d_min;
  const double steps = t_max > 0 ? static_cast<double>(t_max) : 1.0;
  switch (kind) {
    case ScheduleKind::exponential:
      s.b = t_max > 0 ? std::log(s.eta_max / s.eta_min) / steps : 0.0;
      break;
    case ScheduleKind::inverse_t:
      s.b = t_max > 0 ? (s.a / s.eta_min - 1.0) / steps : 0.0;
      break;
    case ScheduleKind::inverse_sqrt_t: {
      const double ratio = s.a / s.eta_min;
      s.b = t_max > 0 ? (ratio * ratio - 1.0) / steps : 0.0;
      break;
    }
  }
  return s;
}

double schedule_eta(const Schedule& s, int t) {
  if (t < 0 || t > s.t_max) throw std::out_of_range("schedule step outside [0, t_max]");
  const double tt = static_cast<double>(t);
  switch (s.kind) {
    case ScheduleKind::exponential: return s.eta_max * std::exp(-s.b * tt);
    case ScheduleKind::inverse_t: return s.a / (1.0 + s.b * tt);
    case ScheduleKind::inverse_sqrt_t: return s.a / std::sqrt(1.0 + s.b * tt);
  }
  return s.eta_min;
}

std::string_view to_string(ScheduleKind k) {
  switch (k) {
    case ScheduleKind::exponential: return "exponential";
    case ScheduleKind::inverse_t: return "inverse-t";
    case ScheduleKind::inverse_sqrt_t: return "inverse-sqrt-t";
  }
  return "unknown";
}

std::string_view to_string(ShuffleMode m) {
  switch (m) {
    case ShuffleMode::replacement: return "replacement";
    case ShuffleMode::index_shuffle: return "index-shuffle";
    case ShuffleMode::reshuffle: return "reshuffle";
  }
  return "unknown";
}

std::string_view to_string(InitMode m) { return m == InitMode::smart ? "smart" : "random"; }

ScheduleKind schedule_from_string(std::string_view s) {
  if (s == "exponential") return ScheduleKind::exponential;
  if (s == "inverse-t") return ScheduleKind::inverse_t;
  if (s == "inverse-sqrt-t") return ScheduleKind::inverse_sqrt_t;
  throw std::invalid_argument("unknown schedule '" + std::string(s) + "'");
}

ShuffleMode shuffle_from_string(std::string_view s) {
  if (s == "replacement") return ShuffleMode::replacement;
  if (s == "index-shuffle") return ShuffleMode::index_shuffle;
  if (s == "reshuffle") return ShuffleMode::reshuffle;
  throw std::invalid_argument("unknown shuffle mode '" + std::string(s) + "'");
}

InitMode init_from_string(std::string_view s) {
  if (s == "random") return InitMode::random;
  if (s == "smart") return InitMode::smart;
  throw std::invalid_argument("unknown init mode '" + std::string(s) + "'");
}

}  // namespace hyperlay
