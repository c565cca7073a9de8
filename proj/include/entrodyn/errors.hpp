#ifndef ENTRODYN_ERRORS_HPP
#define ENTRODYN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace entrodyn {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroMass : Error {
    explicit ZeroMass(const std::string& what = "density has no mass") : Error(what) {}
};

struct GridTooNarrow : Error {
    explicit GridTooNarrow(const std::string& what) : Error(what) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

struct ResolutionTooFine : Error {
    explicit ResolutionTooFine(const std::string& what) : Error(what) {}
};

struct SupportMismatch : Error {
    explicit SupportMismatch(const std::string& what) : Error(what) {}
};

struct Instability : Error {
    explicit Instability(const std::string& what) : Error(what) {}
};

struct MissingPotential : Error {
    explicit MissingPotential(const std::string& what = "model has no potential") : Error(what) {}
};

struct NotNormalizable : Error {
    explicit NotNormalizable(const std::string& what) : Error(what) {}
};

struct AliasingDetected : Error {
    explicit AliasingDetected(const std::string& what) : Error(what) {}
};

}  // namespace entrodyn

#endif
