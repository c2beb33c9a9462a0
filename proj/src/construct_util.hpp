#pragma once

#include <map>
#include <string>

#include "xgroup/constructors.hpp"
#include "xgroup/errors.hpp"

namespace xgroup::detail {

inline void check(ConstructionRecord& rec, bool ok, const std::string& what) {
  if (!ok)
    fail(ErrorKind::InternalInvariantViolation, rec.family + ": postcondition failed: " + what);
  rec.checks.push_back(what);
}

inline void require(bool ok, const std::string& condition) {
  if (!ok) fail(ErrorKind::ConstraintViolation, "constraint violated: " + condition);
}

inline std::map<unsigned, std::size_t> order_census(const Group& G) {
  std::map<unsigned, std::size_t> c;
  for (auto o : G.element_orders()) ++c[o];
  return c;
}

/// C_m x| C_n, generators a then y, with y^-1 a y = a^r and y^n = a^s.
Group realize_metacyclic(std::uint64_t m, std::uint64_t n, std::uint64_t r, std::uint64_t s);

}  // namespace xgroup::detail
