#ifndef CONESEMI_ERRORS_HPP
#define CONESEMI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace conesemi {

enum class Errc {
    EmptyGenerators,
    ZeroGenerator,
    DimensionMismatch,
    UnsupportedDimension,
    NotInCone,
    EmptySet,
    InvalidOrder,
    GapNotInCone,
    ZeroGap,
    NotClosed,
    NoGaps,
    NotSpecialGap,
    NotMinimalGenerator,
    NotInSemigroup,
    PreconditionViolated,
    InternalInconsistency,
    EmptyBSet,
    ParityMismatch,
    KZero,
    NotARoot,
    NoPrimaryExists,
    OddCaseUnsupportedCone,
    CapExceeded,
    BoundUncertain,
    UnknownFormat,
    ParseError,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace conesemi

#endif
