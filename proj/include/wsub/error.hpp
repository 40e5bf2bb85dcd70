#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wsub {

enum class ErrorKind {
  syntax,
  not_a_tree,
  nonpositive_weight,
  asymmetric_adjacency,
  weight_overflow,
  instance_too_large,
  invalid_argument,
  degenerate_tree,
  weight_exceeds_target,
  embedding_inconsistent,
  not_hamiltonian,
  precondition_violated,
  unexpected_structure,
  odd_total,
  k_too_large,
  internal,
};

std::string_view to_string(ErrorKind kind);

/// All library failures are reported through this exception type; `kind()`
/// lets callers (and the CLI) distinguish the error class without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Internal invariant check; failing it is a bug, not a user error.
#define WSUB_CHECK(cond, msg)                                              \
  do {                                                                     \
    if (!(cond)) throw ::wsub::Error(::wsub::ErrorKind::internal, (msg));  \
  } while (0)

}  // namespace wsub
