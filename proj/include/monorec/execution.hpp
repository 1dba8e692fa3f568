#pragma once

namespace monorec {

/// Selects the OpenMP kernel or the serial reference loop. Both produce
/// identical results; the serial path is kept for testing and benchmarking.
enum class Execution { serial, parallel };

}  // namespace monorec
