#include "conesemi/errors.hpp"

namespace conesemi {

const char* errc_name(Errc e) {
    switch (e) {
        case Errc::EmptyGenerators: return "EmptyGenerators";
        case Errc::ZeroGenerator: return "ZeroGenerator";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::UnsupportedDimension: return "UnsupportedDimension";
        case Errc::NotInCone: return "NotInCone";
        case Errc::EmptySet: return "EmptySet";
        case Errc::InvalidOrder: return "InvalidOrder";
        case Errc::GapNotInCone: return "GapNotInCone";
        case Errc::ZeroGap: return "ZeroGap";
        case Errc::NotClosed: return "NotClosed";
        case Errc::NoGaps: return "NoGaps";
        case Errc::NotSpecialGap: return "NotSpecialGap";
        case Errc::NotMinimalGenerator: return "NotMinimalGenerator";
        case Errc::NotInSemigroup: return "NotInSemigroup";
        case Errc::PreconditionViolated: return "PreconditionViolated";
        case Errc::InternalInconsistency: return "InternalInconsistency";
        case Errc::EmptyBSet: return "EmptyBSet";
        case Errc::ParityMismatch: return "ParityMismatch";
        case Errc::KZero: return "KZero";
        case Errc::NotARoot: return "NotARoot";
        case Errc::NoPrimaryExists: return "NoPrimaryExists";
        case Errc::OddCaseUnsupportedCone: return "OddCaseUnsupportedCone";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::BoundUncertain: return "BoundUncertain";
        case Errc::UnknownFormat: return "UnknownFormat";
        case Errc::ParseError: return "ParseError";
    }
    return "UnknownError";
}

}  // namespace conesemi
