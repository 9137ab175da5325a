#pragma once

#include <stdexcept>
#include <string>

namespace s2cobar {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define S2COBAR_ERROR(Name)                 \
    class Name : public Error {             \
    public:                                 \
        using Error::Error;                 \
    }

S2COBAR_ERROR(RingError);
S2COBAR_ERROR(WindowExceeded);
S2COBAR_ERROR(WindowTooNarrow);
S2COBAR_ERROR(InvalidValue);
S2COBAR_ERROR(SlotOutOfRange);
S2COBAR_ERROR(ArityMismatch);
S2COBAR_ERROR(NotComplexityTwo);
S2COBAR_ERROR(NotACycle);
S2COBAR_ERROR(NotATwistingMorphism);
S2COBAR_ERROR(NotPrimitivelyGenerated);
S2COBAR_ERROR(NonConfluentStraightening);
S2COBAR_ERROR(SchemaError);
S2COBAR_ERROR(AxiomViolation);
S2COBAR_ERROR(NoWitness);

#undef S2COBAR_ERROR

}  // namespace s2cobar
