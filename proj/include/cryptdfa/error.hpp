#pragma once

#include <stdexcept>
#include <string>

namespace cryptdfa {

enum class Errc {
  malformed_sequence,
  too_many_letters,
  not_canonical,
  wrong_alphabet,
  base_too_small,
  budget_exceeded,
  resource_limit,
  not_accepted,
  index_out_of_range,
  format_error,
  version_unsupported,
  too_large,
  parse_error,
  io_failure,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace cryptdfa
