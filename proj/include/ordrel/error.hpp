#pragma once

#include <stdexcept>
#include <string>

namespace ordrel {

// Every failed precondition or validation surfaces as one of these codes.
// The witness string is a human-readable fragment pointing at the offending
// element(s), e.g. "cycle: a <= b <= a" or "$.elements[2]".
enum class errc {
  duplicate_element,
  unknown_element,
  antisymmetry_violation,
  not_monotone,
  composition_mismatch,
  not_adjoint,
  not_weakening_closed,
  not_a_lattice,
  not_distributive,
  empty_lattice,
  not_a_homomorphism,
  not_an_embedding,
  not_a_dl_relation,
  not_complemented,
  not_a_preorder,
  not_lax_commuting,
  type_mismatch,
  formulation_disagreement,
  iso_failure,
  size_guard,
  schema_error,
  unsupported_document,
  internal,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
  error(errc code, std::string message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

} // namespace ordrel
