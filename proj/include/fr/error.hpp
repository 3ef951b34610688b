#ifndef FR_ERROR_HPP
#define FR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fr {

enum class ErrorCode {
    MalformedEncoding,
    NotCubic,
    LoopPresent,
    Disconnected,
    EmptySet,
    ConflictingConstraints,
    NotAPerfectMatching,
    NoPerfectMatching,
    LemmaViolation,
    EnumerationCapExceeded,
    NotACut,
    NotASubset,
    EvenCycle,
    OddCycle,
    NotGoodOddCycle,
    PreconditionFailed,
    BudgetExceeded,
    WitnessSearchFailed,
    NotDisjoint,
    WrongOddness,
    WrongShape,
    InvalidEmbedding,
    CaseTableMiss,
    Timeout,
    Exhausted,
};

const char* to_string(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace fr

#endif
