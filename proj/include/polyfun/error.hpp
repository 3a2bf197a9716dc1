#pragma once

// Typed runtime errors. The code string is stable and machine-checkable; the
// CLI maps codes to exit statuses (MalformedInput -> 2, BudgetExceeded -> 3).

#include <stdexcept>
#include <string>

namespace polyfun {

class error : public std::runtime_error {
 public:
  error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

}  // namespace polyfun
