#ifndef GRAPHENT_ERROR_H
#define GRAPHENT_ERROR_H

#include <stdexcept>
#include <string>

namespace graphent {

enum class ErrorCode {
    kSyntax,
    kVertexOutOfRange,
    kSelfLoop,
    kOverflow,
    kNotNormalized,
    kNotUnitary,
    kLengthMismatch,
    kPurityOutOfRange,
    kMOutOfRange,
    kEmptyMRange,
    kEngineMismatch,
    kEngineDisagreement,
};

const char *error_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {
    }

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

inline const char *error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::kSyntax:
            return "SyntaxError";
        case ErrorCode::kVertexOutOfRange:
            return "VertexOutOfRange";
        case ErrorCode::kSelfLoop:
            return "SelfLoop";
        case ErrorCode::kOverflow:
            return "Overflow";
        case ErrorCode::kNotNormalized:
            return "NotNormalized";
        case ErrorCode::kNotUnitary:
            return "NotUnitary";
        case ErrorCode::kLengthMismatch:
            return "LengthMismatch";
        case ErrorCode::kPurityOutOfRange:
            return "PurityOutOfRange";
        case ErrorCode::kMOutOfRange:
            return "MOutOfRange";
        case ErrorCode::kEmptyMRange:
            return "EmptyMRange";
        case ErrorCode::kEngineMismatch:
            return "EngineMismatch";
        case ErrorCode::kEngineDisagreement:
            return "EngineDisagreement";
    }
    return "UnknownError";
}

}  // namespace graphent

#endif
