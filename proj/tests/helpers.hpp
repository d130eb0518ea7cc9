#pragma once

#include <optional>
#include <vector>

#include "cdlat/error.hpp"
#include "cdlat/group.hpp"

template <class F>
std::optional<cdlat::ErrorCode> error_code(F&& f) {
  try {
    f();
  } catch (const cdlat::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline cdlat::ElementSet set_of(const cdlat::Group& g, std::initializer_list<cdlat::Element> xs) {
  return cdlat::ElementSet::of(g.order(), std::vector<cdlat::Element>(xs));
}

inline cdlat::Element element(const cdlat::Group& g, const char* label) { return g.find(label).value(); }
