#pragma once

#include <stdexcept>
#include <string>

namespace newt {

// Thrown when a search cannot finish within its configured budget
// (candidate cap or field extension limit). Callers must not treat
// this as a negative answer.
class inconclusive_error : public std::runtime_error {
 public:
  explicit inconclusive_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace newt
