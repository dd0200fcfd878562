#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace bgph {

// Raised when an input exceeds a configured enumeration cap. The CLI maps
// this to its own exit code, distinct from parse errors.
struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a verified internal invariant fails (e.g. (d')^2 != 0).
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct run_config {
    unsigned field_p = 2;     // coefficient field characteristic, small prime
    std::size_t vertex_cap = 20;  // subset enumeration is 2^m; hard limit 24
    double tolerance = 1e-9;  // absolute tolerance for all real comparisons
    unsigned threads = 0;     // 0 = one worker per hardware thread

    void validate() const;
    unsigned effective_threads() const;
};

// Runs fn(0..n-1) on up to `threads` workers with a static partition.
// Work items must write to disjoint, pre-sized slots so results do not
// depend on scheduling.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

inline constexpr double kDefaultTolerance = 1e-9;

}  // namespace bgph
