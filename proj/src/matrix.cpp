#include "tubular/matrix.hpp"

namespace tubular {

Mat2 solve_map(const Vec2& x1, const Vec2& x2, const Vec2& y1, const Vec2& y2) {
  Rat D = cross(x1, x2);
  if (D == 0) fail(Errc::InvalidParameters, "solve_map needs independent source vectors");
  // M = [y1 y2] * [x1 x2]^-1 with vectors as columns.
  return Mat2{(y1.x * x2.y - y2.x * x1.y) / D, (y2.x * x1.x - y1.x * x2.x) / D,
              (y1.y * x2.y - y2.y * x1.y) / D, (y2.y * x1.x - y1.y * x2.x) / D};
}

}  // namespace tubular
