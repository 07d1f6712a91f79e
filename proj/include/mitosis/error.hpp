#pragma once

#include <stdexcept>
#include <string>

namespace mitosis {

// Bad argument: out-of-range index, malformed object, violated precondition.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input is well formed but exceeds the desk-scale budgets.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text or JSON that cannot be parsed into the requested object.
class format_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw domain_error(what);
}

}  // namespace detail
}  // namespace mitosis
