#pragma once

namespace pgr {

// Selects between the OpenMP kernel and the serial reference loop it was
// derived from. Both produce identical results.
enum class Exec { serial, parallel };

}  // namespace pgr
