#pragma once

#include <stdexcept>
#include <string>

namespace suturant {

// Every library failure carries a short kind tag ("SyntaxError", "IllegalMove", ...)
// so callers can branch without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

}  // namespace suturant
