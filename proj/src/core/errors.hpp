#pragma once

#include <stdexcept>
#include <string>

namespace skt {

// Coarse classes matching the CLI exit codes and the C API status values.
enum class ErrorClass {
    config = 2,     // malformed configuration / bad arguments
    module = 3,     // a module precondition or runtime failure
    invariant = 4,  // a measured invariant violated its bound
};

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, std::string msg) : std::runtime_error(std::move(msg)), cls_(cls) {}
    ErrorClass error_class() const { return cls_; }

private:
    ErrorClass cls_;
};

struct ConfigError : Error {
    explicit ConfigError(std::string msg) : Error(ErrorClass::config, std::move(msg)) {}
};

struct DegenerateMatrixError : Error {
    explicit DegenerateMatrixError(std::string msg) : Error(ErrorClass::module, std::move(msg)) {}
};

struct InvalidPairingError : Error {
    explicit InvalidPairingError(std::string msg) : Error(ErrorClass::module, std::move(msg)) {}
};

struct OverlapError : Error {
    OverlapError(int i, int j, std::string msg)
        : Error(ErrorClass::module, std::move(msg)), disk_i(i), disk_j(j) {}
    int disk_i, disk_j;
};

struct DepthLimitError : Error {
    explicit DepthLimitError(std::string msg) : Error(ErrorClass::module, std::move(msg)) {}
};

struct ContractionFailureError : Error {
    explicit ContractionFailureError(std::string msg) : Error(ErrorClass::invariant, std::move(msg)) {}
};

struct LevelLimitError : Error {
    explicit LevelLimitError(std::string msg) : Error(ErrorClass::module, std::move(msg)) {}
};

struct MonotonicityError : Error {
    explicit MonotonicityError(std::string msg) : Error(ErrorClass::module, std::move(msg)) {}
};

struct SeamError : Error {
    explicit SeamError(std::string msg) : Error(ErrorClass::module, std::move(msg)) {}
};

struct SolverDivergenceError : Error {
    SolverDivergenceError(std::string msg, double residual)
        : Error(ErrorClass::module, std::move(msg)), residual(residual) {}
    double residual;
};

struct EmptyTargetError : Error {
    EmptyTargetError(std::string msg, long long curve)
        : Error(ErrorClass::module, std::move(msg)), curve(curve) {}
    long long curve;
};

}  // namespace skt
