#pragma once

#include <stdexcept>
#include <string>

namespace higine {

// Error taxonomy mirrors the CLI exit codes: config -> 2, data -> 3,
// numeric -> 4.
enum class ErrorKind { Config, Data, Numeric };

struct Error : std::runtime_error {
  ErrorKind kind;
  Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void throw_config(const std::string& msg) {
  throw Error(ErrorKind::Config, msg);
}
[[noreturn]] inline void throw_data(const std::string& msg) {
  throw Error(ErrorKind::Data, msg);
}
[[noreturn]] inline void throw_numeric(const std::string& msg) {
  throw Error(ErrorKind::Numeric, msg);
}

}  // namespace higine
