#pragma once

namespace hall {

// Execution policy for the search kernels: Serial is the reference
// implementation, Parallel fans independent work items out across OpenMP
// threads.  Both must produce identical results.
enum class ExecPolicy { Serial, Parallel };

}  // namespace hall
