#include "tdeform/trace.hpp"

namespace tdeform {

namespace {
thread_local std::vector<std::string>* g_sink = nullptr;
thread_local std::size_t g_limit = 0;
}  // namespace

TraceScope::TraceScope(std::vector<std::string>& sink, std::size_t limit) : prev_sink_(g_sink), prev_limit_(g_limit) {
    g_sink = &sink;
    g_limit = limit;
}

TraceScope::~TraceScope() {
    g_sink = prev_sink_;
    g_limit = prev_limit_;
}

bool tracing() { return g_sink != nullptr; }

void trace(std::string line) {
    if (!g_sink) return;
    if (g_sink->size() < g_limit) g_sink->push_back(std::move(line));
    else if (g_sink->size() == g_limit) g_sink->push_back("... (trace truncated)");
}

}  // namespace tdeform
