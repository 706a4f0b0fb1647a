#pragma once

#include <stdexcept>

namespace orbipres {

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace orbipres
