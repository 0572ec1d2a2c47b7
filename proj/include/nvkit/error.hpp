#ifndef NVKIT_ERROR_HPP
#define NVKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nvkit {

enum class ErrorCode {
  // grammar
  UnterminatedTag,
  MalformedStyle,
  UnknownStyle,
  EmptyTag,
  UnknownUnit,
  // lexicon
  MalformedLexicon,
  // audio
  EmptyWindow,
  NotWav,
  UnsupportedEncoding,
  Io,
  // corpus
  MalformedManifest,
  MalformedLabelFile,
  // metrics
  MalformedRatings,
  EmptyGroup,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nvkit

#endif  // NVKIT_ERROR_HPP
