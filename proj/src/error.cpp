#include "roller/error.hpp"

namespace roller {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::MalformedInput: return "MalformedInput";
    case Errc::AxiomViolation: return "AxiomViolation";
    case Errc::TrivialElement: return "TrivialElement";
    case Errc::NotAFilterBase: return "NotAFilterBase";
    case Errc::BackendMismatch: return "BackendMismatch";
    case Errc::NotMinimal: return "NotMinimal";
    case Errc::NotTransverse: return "NotTransverse";
    case Errc::NotMaximalTransverse: return "NotMaximalTransverse";
    case Errc::DegenerateWall: return "DegenerateWall";
    case Errc::NotIsomorphic: return "NotIsomorphic";
    case Errc::NotMember: return "NotMember";
    case Errc::ChainCountMismatch: return "ChainCountMismatch";
    case Errc::NotPrincipal: return "NotPrincipal";
    case Errc::EmptySequence: return "EmptySequence";
    case Errc::NotGeodesic: return "NotGeodesic";
    case Errc::ZeroDirection: return "ZeroDirection";
    case Errc::LineInsideWall: return "LineInsideWall";
    case Errc::NonUniformModel: return "NonUniformModel";
    case Errc::WindowTooSmall: return "WindowTooSmall";
    case Errc::Overflow: return "Overflow";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::Unsupported: return "Unsupported";
    }
    return "Unknown";
}

Error::Error(Errc c, std::string witness)
    : std::runtime_error(std::string(errc_name(c)) + ": " + witness), code_(c), witness_(std::move(witness)) {}

}  // namespace roller
