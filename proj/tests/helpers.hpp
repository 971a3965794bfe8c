#pragma once

#include <string>

#include "tors/error.hpp"
#include "tors/path_algebra.hpp"
#include "tors/resources.hpp"

namespace tors::test {

inline PathAlgebra builtin(const std::string& name) {
  return build_algebra(parse_algebra_text(require_resource("algebras/" + name + ".alg")));
}

inline ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace tors::test
