#include "ghw/debug.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace ghw {

namespace {

std::atomic<int>& debug_state() {
    // -1: not yet read from the environment
    static std::atomic<int> state{-1};
    return state;
}

}  // namespace

bool debug_checks_enabled() {
    int s = debug_state().load(std::memory_order_relaxed);
    if (s < 0) {
        const char* env = std::getenv("GHW_DEBUG_ASSERT");
        s = (env != nullptr && std::strcmp(env, "1") == 0) ? 1 : 0;
        debug_state().store(s, std::memory_order_relaxed);
    }
    return s == 1;
}

void set_debug_checks(bool enabled) { debug_state().store(enabled ? 1 : 0); }

}  // namespace ghw
