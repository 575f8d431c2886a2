#pragma once

#include <stdexcept>
#include <string>

namespace bsdecomp {

// Base class for every error the engine raises. `kind()` is the stable
// machine-readable name; the CLI prints it verbatim on stderr.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    virtual const char* kind() const noexcept = 0;
};

#define BSDECOMP_DEFINE_ERROR(Name)                                     \
    class Name final : public Error {                                   \
    public:                                                             \
        explicit Name(const std::string& what) : Error(what) {}         \
        const char* kind() const noexcept override { return #Name; }    \
    }

BSDECOMP_DEFINE_ERROR(ColumnOutOfRange);
BSDECOMP_DEFINE_ERROR(DuplicateEntry);
BSDECOMP_DEFINE_ERROR(ColumnCountMismatch);
BSDECOMP_DEFINE_ERROR(EmptyColumn);
BSDECOMP_DEFINE_ERROR(NotStrictlyIncreasing);
BSDECOMP_DEFINE_ERROR(LengthMismatch);
BSDECOMP_DEFINE_ERROR(FirstEntryNonzero);
BSDECOMP_DEFINE_ERROR(EmptyTuple);
BSDECOMP_DEFINE_ERROR(NonPositiveDegree);
BSDECOMP_DEFINE_ERROR(NegativeEntry);
BSDECOMP_DEFINE_ERROR(MassEliminationUnsupported);
BSDECOMP_DEFINE_ERROR(ANextTooSmall);
BSDECOMP_DEFINE_ERROR(CodimensionTooSmall);
BSDECOMP_DEFINE_ERROR(DegenerateSequence);
BSDECOMP_DEFINE_ERROR(InternalInconsistency);
BSDECOMP_DEFINE_ERROR(BadRational);

#undef BSDECOMP_DEFINE_ERROR

}  // namespace bsdecomp
