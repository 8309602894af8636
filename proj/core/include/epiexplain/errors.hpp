#pragma once

#include <stdexcept>
#include <string>

namespace epi {

// Process exit codes reported by the CLI. Library code throws the typed
// errors below; the CLI maps them to these codes.
enum class ExitCode : int {
    ok = 0,
    ingestion = 2,
    estimation = 3,
    training = 4,
    explanation = 5,
    io = 6,
};

struct IngestError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated data invariant (decreasing cumulative counts, region mismatch...).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TrainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExplainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace epi
