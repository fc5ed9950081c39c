#pragma once

#include <stdexcept>
#include <string>

namespace seedopt {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define SEEDOPT_DEFINE_ERROR(NAME)                 \
    class NAME : public Error {                    \
    public:                                        \
        using Error::Error;                        \
    }

SEEDOPT_DEFINE_ERROR(DimensionMismatch);
SEEDOPT_DEFINE_ERROR(AsymmetricKernel);
SEEDOPT_DEFINE_ERROR(BadProportions);
SEEDOPT_DEFINE_ERROR(PhaseViolation);
SEEDOPT_DEFINE_ERROR(InvalidParameter);
SEEDOPT_DEFINE_ERROR(NoConvergence);
SEEDOPT_DEFINE_ERROR(DegenerateSolution);
SEEDOPT_DEFINE_ERROR(SingularSystem);
SEEDOPT_DEFINE_ERROR(MarginalCostTooLow);
SEEDOPT_DEFINE_ERROR(UnboundedSeeding);
SEEDOPT_DEFINE_ERROR(BudgetTooLarge);
SEEDOPT_DEFINE_ERROR(InsufficientNodes);
SEEDOPT_DEFINE_ERROR(ParseError);

#undef SEEDOPT_DEFINE_ERROR

} // namespace seedopt
