#pragma once

#include <string>
#include <vector>

namespace epi {

// Collector for non-fatal per-record notices (dropped days, clamped values).
// Callers that do not care pass nullptr.
struct Diagnostics {
    std::vector<std::string> messages;

    void add(std::string msg) { messages.push_back(std::move(msg)); }
    bool empty() const { return messages.empty(); }
};

inline void diag(Diagnostics* d, std::string msg)
{
    if (d != nullptr)
        d->add(std::move(msg));
}

} // namespace epi
