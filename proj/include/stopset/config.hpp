#pragma once

#include <atomic>

namespace stopset {

// When verify mode is on, functions with two independent evaluation routes
// (explicit formula vs. defining recursion, theorem bounds vs. guarded sums)
// run both and throw std::logic_error on disagreement.  Off by default; the
// CLI exposes it as --verify-mode.
inline std::atomic<bool> g_verify_mode{false};

inline void set_verify_mode(bool on) { g_verify_mode.store(on, std::memory_order_relaxed); }
inline bool verify_mode() { return g_verify_mode.load(std::memory_order_relaxed); }

}  // namespace stopset
