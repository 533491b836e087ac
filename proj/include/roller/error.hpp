#pragma once

#include <stdexcept>
#include <string>

namespace roller {

enum class Errc {
    MalformedInput,
    AxiomViolation,
    TrivialElement,
    NotAFilterBase,
    BackendMismatch,
    NotMinimal,
    NotTransverse,
    NotMaximalTransverse,
    DegenerateWall,
    NotIsomorphic,
    NotMember,
    ChainCountMismatch,
    NotPrincipal,
    EmptySequence,
    NotGeodesic,
    ZeroDirection,
    LineInsideWall,
    NonUniformModel,
    WindowTooSmall,
    Overflow,
    DivisionByZero,
    Unsupported,
};

const char* errc_name(Errc c);

// code + witness; what() is "Code: witness"
class Error : public std::runtime_error {
public:
    Error(Errc c, std::string witness);
    Errc code() const { return code_; }
    const std::string& witness() const { return witness_; }

private:
    Errc code_;
    std::string witness_;
};

}  // namespace roller
