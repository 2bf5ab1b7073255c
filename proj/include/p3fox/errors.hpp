#pragma once

#include <stdexcept>
#include <string>

namespace p3fox {

// Domain errors reject inputs outside an operation's contract; numerical
// errors report a breakdown (pole, stall, overflow) on admissible input.
enum class ErrorKind { domain, numerical, usage };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

#define P3FOX_ERROR(Name, Kind)                                          \
    class Name : public Error {                                          \
    public:                                                              \
        explicit Name(const std::string& what)                           \
            : Error(ErrorKind::Kind, #Name ": " + what) {}               \
    };

P3FOX_ERROR(DomainError, domain)
P3FOX_ERROR(IntegerOrderError, domain)
P3FOX_ERROR(ShapeError, domain)
P3FOX_ERROR(RangeError, domain)
P3FOX_ERROR(BoundaryAlphaError, domain)
P3FOX_ERROR(DegenerateCoefficientError, domain)
P3FOX_ERROR(ZeroLeadError, domain)
P3FOX_ERROR(PoleError, numerical)
P3FOX_ERROR(ConvergenceError, numerical)
P3FOX_ERROR(OverflowError, numerical)
P3FOX_ERROR(SingularError, numerical)
P3FOX_ERROR(DegenerateError, numerical)
P3FOX_ERROR(ResonanceError, numerical)
P3FOX_ERROR(StepError, numerical)
P3FOX_ERROR(ZeroError, numerical)
P3FOX_ERROR(StallError, numerical)
P3FOX_ERROR(SeedError, numerical)
P3FOX_ERROR(UsageError, usage)

#undef P3FOX_ERROR

}  // namespace p3fox
