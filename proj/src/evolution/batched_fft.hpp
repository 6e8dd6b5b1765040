#pragma once

#include <fftw3.h>

#include "weylmech/numeric/fields.hpp"

namespace weylmech::evolution::detail {

// Unscaled length-n transforms of every column of an n×n column-major matrix.
class BatchedFft {
 public:
  explicit BatchedFft(int n) : n_(n) {
    numeric::ComplexMatrix a(n, n), b(n, n);
    auto* pa = reinterpret_cast<fftw_complex*>(a.data());
    auto* pb = reinterpret_cast<fftw_complex*>(b.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    forward_ = fftw_plan_many_dft(1, &n, n, pa, nullptr, 1, n, pb, nullptr, 1, n, FFTW_FORWARD, flags);
    backward_ = fftw_plan_many_dft(1, &n, n, pa, nullptr, 1, n, pb, nullptr, 1, n, FFTW_BACKWARD, flags);
  }
  ~BatchedFft() {
    fftw_destroy_plan(forward_);
    fftw_destroy_plan(backward_);
  }
  BatchedFft(const BatchedFft&) = delete;
  BatchedFft& operator=(const BatchedFft&) = delete;

  void forward(const numeric::ComplexMatrix& in, numeric::ComplexMatrix& out) const { run(forward_, in, out); }
  void backward(const numeric::ComplexMatrix& in, numeric::ComplexMatrix& out) const { run(backward_, in, out); }
  [[nodiscard]] int size() const { return n_; }

 private:
  void run(fftw_plan p, const numeric::ComplexMatrix& in, numeric::ComplexMatrix& out) const {
    out.resize(n_, n_);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(const_cast<numeric::Complex*>(in.data())),
                     reinterpret_cast<fftw_complex*>(out.data()));
  }

  int n_;
  fftw_plan forward_ = nullptr, backward_ = nullptr;
};

}  // namespace weylmech::evolution::detail
