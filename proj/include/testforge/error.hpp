#pragma once

#include <string>
#include <utility>
#include <variant>

namespace testforge {

enum class Errc {
  // parsing / validation
  schema_error,
  invariant_error,
  selector_parse_error,
  empty_document,
  invalid_base_url,
  unknown_element,
  precondition,
  // persistence
  storage_error,
  empty_store,
  // generation provider
  provider_timeout,
  malformed_provider_output,
  attempts_exhausted,
  // queue
  not_owner,
  terminal_job,
  // browser-facing
  session_dead,
  invalid_model,
  ambiguous_selector,
  element_not_found,
  readonly_element,
  not_a_page,
  bad_credentials,
  // webdriver wire
  protocol_error,
  http_timeout,
  webdriver_error,
  // security
  unmappable_description,
  rate_limited,
  // agent
  undecomposable_goal,
  io_error,
};

const char* errc_name(Errc c);

struct Error {
  Errc code;
  std::string message;
};

inline Error make_error(Errc code, std::string message) {
  return Error{code, std::move(message)};
}

/// Minimal expected-like result carrier. gcc 11 has no std::expected.
template <typename T>
class Result {
 public:
  Result(T value) : v_(std::move(value)) {}
  Result(Error err) : v_(std::move(err)) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  T& value() { return std::get<T>(v_); }
  const T& value() const { return std::get<T>(v_); }
  T take() { return std::move(std::get<T>(v_)); }

  const Error& error() const { return std::get<Error>(v_); }

 private:
  std::variant<T, Error> v_;
};

template <>
class Result<void> {
 public:
  Result() = default;
  Result(Error err) : err_(std::move(err)), failed_(true) {}

  bool ok() const { return !failed_; }
  explicit operator bool() const { return ok(); }
  const Error& error() const { return err_; }

 private:
  Error err_{};
  bool failed_ = false;
};

}  // namespace testforge
