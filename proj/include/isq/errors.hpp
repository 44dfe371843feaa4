#ifndef ISQ_ERRORS_HPP_
#define ISQ_ERRORS_HPP_

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace isq {

// Malformed or out-of-range input: bad element ids, non-closed element sets,
// tables that fail the inverse-semigroup laws, alphabet mismatches.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive operation refused to run because the structure exceeds the
// configured element cap.
struct SizeLimitError : std::runtime_error {
  explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

// esn_to was applied to an ordered groupoid whose identities do not form a
// meet-semilattice.
struct NotInductiveError : std::runtime_error {
  NotInductiveError() : std::runtime_error("not inductive") {}
};

// An operation requiring a normal inverse subsemigroup was given a subset
// that is not one.
struct NotNormalError : InputError {
  explicit NotNormalError(const std::string& what) : InputError(what) {}
};

// A property that is guaranteed by a theorem failed to hold; indicates a bug
// in this library, never bad user input.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Soft cap on |S| for exhaustive algorithms, overridable via the
// ISQ_MAX_ELEMENTS environment variable or per-call parameters.
inline std::size_t default_size_cap() {
  if (const char* env = std::getenv("ISQ_MAX_ELEMENTS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && v > 0) {
      return static_cast<std::size_t>(v);
    }
  }
  return 5000;
}

}  // namespace isq

#endif  // ISQ_ERRORS_HPP_
