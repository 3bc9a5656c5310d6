#pragma once

#include <functional>

namespace kitaev {

struct Minimum2d {
  double x = 0.0;
  double y = 0.0;
  double value = 0.0;
};

// Nelder-Mead descent in the plane (GSL nmsimplex2) from (x0, y0).
Minimum2d nelder_mead_2d(const std::function<double(double, double)>& f, double x0, double y0,
                         double step, double size_tol = 1e-11, int max_iter = 4000);

}  // namespace kitaev
