#pragma once

#include <stdexcept>
#include <utility>

#include "cxs/element_set.hpp"
#include "cxs/errors.hpp"

namespace testutil {

// Runs fn, which must throw cxs::Error; returns the error's kind.
template <typename Fn>
cxs::ErrorKind error_kind_of(Fn&& fn) {
  try {
    std::forward<Fn>(fn)();
  } catch (const cxs::Error& e) {
    return e.kind();
  }
  throw std::runtime_error("expected a cxs::Error, none was thrown");
}

inline cxs::ElementSet es(int n, std::initializer_list<int> elems) {
  return cxs::ElementSet::of(n, elems);
}

}  // namespace testutil
