#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace balg {

// A failed check: a stable machine-readable code, the witness indices that
// triggered it (lexicographically first), and a readable rendering.
struct Diagnostic {
  std::string code;
  std::vector<int> witness;
  std::string detail;

  std::string message() const;
};

// Minimal success-or-error carrier.
template <typename T, typename E = Diagnostic>
class [[nodiscard]] Result {
 public:
  Result(T value) : v_(std::move(value)) {}
  Result(E error) : v_(std::move(error)) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  T& value() & { return std::get<T>(v_); }
  const T& value() const& { return std::get<T>(v_); }
  T&& value() && { return std::get<T>(std::move(v_)); }
  E& error() & { return std::get<E>(v_); }
  const E& error() const& { return std::get<E>(v_); }

 private:
  std::variant<T, E> v_;
};

}  // namespace balg
