#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quiverseq {

enum class Errc {
  invalid_graph,
  invalid_cartan,
  not_indecomposable,
  not_acyclic,
  not_filter,
  not_admissible,
  empty_sequence,
  invalid_multiplicity,
  base_mismatch,
  not_principal,
  not_complete,
  too_short,
  dimension_mismatch,
  not_sink,
  not_source,
  not_reduced,
  undecided,
  no_projective_match,
  not_annihilating,
  inconsistent,
  invalid_argument,
  parse_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Raised by check_admissible; index is 1-based into the letter list.
class NotAdmissibleError : public Error {
 public:
  NotAdmissibleError(std::size_t index, const std::string& what)
      : Error(Errc::not_admissible, what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// Raised when a level set {v : m(v) >= level} breaks the filter or hull condition.
class InvalidMultiplicityError : public Error {
 public:
  InvalidMultiplicityError(int level, const std::string& what)
      : Error(Errc::invalid_multiplicity, what), level_(level) {}
  int level() const noexcept { return level_; }

 private:
  int level_;
};

}  // namespace quiverseq
