#pragma once

namespace gravspin {

// Execution policy for the data-parallel kernels. `serial` is the reference
// implementation; `parallel` uses OpenMP with a fixed work decomposition so
// results do not depend on the thread count.
enum class Exec { serial, parallel };

} // namespace gravspin
