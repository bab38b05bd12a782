#ifndef HOPDOM_ERROR_H_
#define HOPDOM_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopdom {

enum class ErrorCode {
  kSelfLoop,
  kDuplicateEdge,
  kVertexOutOfRange,
  kBadParams,
  kOracleLimitExceeded,
  kNodeLimitExceeded,
  kDimensionMismatch,
  kHypothesisViolated,
  kParseError,
  kIoError,
  kInternal,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (notably the CLI) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hopdom

#endif  // HOPDOM_ERROR_H_
