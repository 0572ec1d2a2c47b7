#include "nvkit/error.hpp"

namespace nvkit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnterminatedTag: return "UnterminatedTag";
    case ErrorCode::MalformedStyle: return "MalformedStyle";
    case ErrorCode::UnknownStyle: return "UnknownStyle";
    case ErrorCode::EmptyTag: return "EmptyTag";
    case ErrorCode::UnknownUnit: return "UnknownUnit";
    case ErrorCode::MalformedLexicon: return "MalformedLexicon";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::NotWav: return "NotWav";
    case ErrorCode::UnsupportedEncoding: return "UnsupportedEncoding";
    case ErrorCode::Io: return "Io";
    case ErrorCode::MalformedManifest: return "MalformedManifest";
    case ErrorCode::MalformedLabelFile: return "MalformedLabelFile";
    case ErrorCode::MalformedRatings: return "MalformedRatings";
    case ErrorCode::EmptyGroup: return "EmptyGroup";
  }
  return "Error";
}

}  // namespace nvkit
