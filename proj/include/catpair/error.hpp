#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace catpair {

enum class ErrorKind {
  input,       // malformed or inconsistent arguments
  syntax,      // text does not follow the family grammar
  validation,  // well-formed text whose value breaks a family invariant
  empty_input,
  invariant,   // an internal law failed: signals an invalid pair or a broken encoder
  domain,      // value outside the construction's domain (e.g. 321-encoder on a 321-containing permutation)
  capacity,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(what), kind_(kind), position_(position) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> position_;
};

inline Error syntax_error(std::size_t position, const std::string& what) {
  return Error(ErrorKind::syntax, what + " at position " + std::to_string(position), position);
}

}  // namespace catpair
