#include "ammroot/counters.hpp"

namespace ammroot {

namespace {
thread_local Counters* g_active_sink = nullptr;
}

CounterScope::CounterScope(Counters& sink) noexcept : prev_(g_active_sink) {
  g_active_sink = &sink;
}

CounterScope::~CounterScope() { g_active_sink = prev_; }

Counters* CounterScope::active() noexcept { return g_active_sink; }

}  // namespace ammroot
