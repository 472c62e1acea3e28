#include "sharplp/measure.hpp"

namespace sharplp {

const char* to_string(Region r) noexcept {
  switch (r) {
    case Region::Forward: return "Forward";
    case Region::Reverse: return "Reverse";
    case Region::BoundaryP1: return "BoundaryP1";
    case Region::BoundaryP2: return "BoundaryP2";
    case Region::UndefinedP0: return "UndefinedP0";
  }
  return "UndefinedP0";
}

}  // namespace sharplp
