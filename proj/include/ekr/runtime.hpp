#pragma once

#include <cstdlib>
#include <string>
#include <thread>

namespace ekr {

/// Worker count for parallel scans: EKR_THREADS if set (>= 1), otherwise the
/// hardware concurrency.
inline unsigned thread_count() {
    if (const char* env = std::getenv("EKR_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

}  // namespace ekr
