#include "kitaev/minimize.hpp"

#include <memory>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>
#include <gsl/gsl_vector.h>

namespace kitaev {

namespace {

double trampoline(const gsl_vector* v, void* params) {
  const auto& f = *static_cast<const std::function<double(double, double)>*>(params);
  return f(gsl_vector_get(v, 0), gsl_vector_get(v, 1));
}

struct VectorDeleter {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};
struct MinimizerDeleter {
  void operator()(gsl_multimin_fminimizer* m) const { gsl_multimin_fminimizer_free(m); }
};

}  // namespace

Minimum2d nelder_mead_2d(const std::function<double(double, double)>& f, double x0, double y0,
                         double step, double size_tol, int max_iter) {
  std::unique_ptr<gsl_vector, VectorDeleter> start(gsl_vector_alloc(2));
  std::unique_ptr<gsl_vector, VectorDeleter> steps(gsl_vector_alloc(2));
  gsl_vector_set(start.get(), 0, x0);
  gsl_vector_set(start.get(), 1, y0);
  gsl_vector_set_all(steps.get(), step);

  gsl_multimin_function fn;
  fn.n = 2;
  fn.f = &trampoline;
  fn.params = const_cast<void*>(static_cast<const void*>(&f));

  std::unique_ptr<gsl_multimin_fminimizer, MinimizerDeleter> m(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 2));
  gsl_multimin_fminimizer_set(m.get(), &fn, start.get(), steps.get());

  for (int it = 0; it < max_iter; ++it) {
    if (gsl_multimin_fminimizer_iterate(m.get()) != GSL_SUCCESS) break;
    if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(m.get()), size_tol) == GSL_SUCCESS) break;
  }
  const gsl_vector* best = gsl_multimin_fminimizer_x(m.get());
  return {gsl_vector_get(best, 0), gsl_vector_get(best, 1), gsl_multimin_fminimizer_minimum(m.get())};
}

}  // namespace kitaev
