#pragma once

#include <cassert>
#include <optional>
#include <utility>

namespace coa {

// Minimal expected-style result. C++20 has no std::expected yet; this is the
// small subset the codebase needs (no monadic chaining).
template <typename T, typename E>
class Result {
 public:
  Result(T value) : value_(std::move(value)) {}
  Result(E error) : error_(std::move(error)) {}

  bool ok() const { return value_.has_value(); }
  explicit operator bool() const { return ok(); }

  T& value() {
    assert(value_);
    return *value_;
  }
  const T& value() const {
    assert(value_);
    return *value_;
  }
  E& error() {
    assert(error_);
    return *error_;
  }
  const E& error() const {
    assert(error_);
    return *error_;
  }

  T value_or(T fallback) const { return value_ ? *value_ : std::move(fallback); }

 private:
  std::optional<T> value_;
  std::optional<E> error_;
};

}  // namespace coa
