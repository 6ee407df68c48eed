#pragma once

#include <string>
#include <vector>

namespace tdeform {

/// Collects reduction events emitted on this thread while alive.
class TraceScope {
public:
    explicit TraceScope(std::vector<std::string>& sink, std::size_t limit = 2000);
    ~TraceScope();
    TraceScope(const TraceScope&) = delete;
    TraceScope& operator=(const TraceScope&) = delete;

private:
    std::vector<std::string>* prev_sink_;
    std::size_t prev_limit_;
};

bool tracing();
void trace(std::string line);

}  // namespace tdeform
