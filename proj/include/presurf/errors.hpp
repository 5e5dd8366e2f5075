#pragma once

#include <stdexcept>
#include <string>

namespace presurf {

/// Base class for every contract violation the library raises. The what()
/// string always begins with the contract name, e.g.
/// "SupercriticalityViolation: c = 0.5 does not exceed max U = 1".
class Error : public std::runtime_error {
public:
    /// input: caller handed us data that violates a precondition (CLI exit 2).
    /// numerical: the computation itself failed, e.g. no bracket or no
    /// convergence (CLI exit 3).
    enum class Category { input, numerical };

    Error(Category category, std::string name, const std::string& detail)
        : std::runtime_error(name + ": " + detail),
          category_(category),
          name_(std::move(name)) {}

    Category category() const { return category_; }
    const std::string& name() const { return name_; }

private:
    Category category_;
    std::string name_;
};

#define PRESURF_DEFINE_ERROR(Name, Cat)                               \
    class Name : public Error {                                       \
    public:                                                           \
        explicit Name(const std::string& detail)                      \
            : Error(Error::Category::Cat, #Name, detail) {}           \
    }

PRESURF_DEFINE_ERROR(GridTooSmall, input);
PRESURF_DEFINE_ERROR(OutOfDomain, input);
PRESURF_DEFINE_ERROR(DecayViolation, input);
PRESURF_DEFINE_ERROR(SupercriticalityViolation, input);
PRESURF_DEFINE_ERROR(NonRealOutput, input);
PRESURF_DEFINE_ERROR(BranchViolation, input);
PRESURF_DEFINE_ERROR(NonUniformGrid, input);
PRESURF_DEFINE_ERROR(BadHeader, input);
PRESURF_DEFINE_ERROR(InvalidInput, input);

PRESURF_DEFINE_ERROR(NonFiniteCoefficient, numerical);
PRESURF_DEFINE_ERROR(NoSignChange, numerical);
PRESURF_DEFINE_ERROR(DegenerateBVP, numerical);
PRESURF_DEFINE_ERROR(NoConvergence, numerical);

#undef PRESURF_DEFINE_ERROR

}  // namespace presurf
