#include "sublists/solver.hpp"

namespace sublists {

std::string_view to_string(Algorithm algo) noexcept {
  return algo == Algorithm::TopDown ? "td" : "bu";
}

}  // namespace sublists
