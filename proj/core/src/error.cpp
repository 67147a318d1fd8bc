#include "gegenbauer/error.hpp"

namespace gegenbauer {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::invalid_interval: return "invalid interval";
    case ErrorKind::tolerance_not_met: return "tolerance not met";
    case ErrorKind::non_finite: return "non-finite value";
    case ErrorKind::divergent: return "divergent";
    case ErrorKind::ill_conditioned: return "ill-conditioned";
    case ErrorKind::calibration_failed: return "calibration failed";
    case ErrorKind::missing_fixture: return "missing fixture";
  }
  return "error";
}

}  // namespace gegenbauer
