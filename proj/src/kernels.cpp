#include "ambrep/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ambrep::kernels {

BoolMatrix bool_product_serial(const BoolMatrix& a, const BoolMatrix& b) {
  BoolMatrix out(a.rows(), b.cols());
  for (Index x = 0; x < a.rows(); ++x)
    for (Index y = 0; y < a.cols(); ++y)
      if (a.test(x, y)) out.row(x) |= b.row(y);
  return out;
}

BoolMatrix bool_product_parallel(const BoolMatrix& a, const BoolMatrix& b) {
  BoolMatrix out(a.rows(), b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t x = 0; x < rows; ++x) {
    const ElementSet& ax = a.row(x);
    ElementSet& ox = out.row(x);
    for (auto y = ax.find_first(); y != ElementSet::npos; y = ax.find_next(y)) ox |= b.row(y);
  }
  return out;
}

std::vector<Index> quantale_product_serial(const std::vector<Index>& a,
                                           const std::vector<Index>& b, std::size_t rows,
                                           std::size_t mid, std::size_t cols, OpTable join,
                                           OpTable mul, Index zero) {
  std::vector<Index> out(rows * cols, zero);
  for (Index x = 0; x < rows; ++x)
    for (Index z = 0; z < cols; ++z) {
      Index acc = zero;
      for (Index y = 0; y < mid; ++y) acc = join(acc, mul(a[x * mid + y], b[y * cols + z]));
      out[x * cols + z] = acc;
    }
  return out;
}

std::vector<Index> quantale_product_parallel(const std::vector<Index>& a,
                                             const std::vector<Index>& b, std::size_t rows,
                                             std::size_t mid, std::size_t cols, OpTable join,
                                             OpTable mul, Index zero) {
  std::vector<Index> out(rows * cols, zero);
  const auto n = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t x = 0; x < n; ++x) {
    Index* ox = out.data() + x * cols;
    for (Index y = 0; y < mid; ++y) {
      const Index axy = a[x * mid + y];
      if (axy == zero) continue;  // 0 ∗ γ = 0
      const Index* by = b.data() + y * cols;
      for (Index z = 0; z < cols; ++z) ox[z] = join(ox[z], mul(axy, by[z]));
    }
  }
  return out;
}

BoolMatrix pinv_transpose_serial(const BoolMatrix& r, Index source_zero, Index target_zero) {
  BoolMatrix out(r.cols(), r.rows());
  for (Index t = 0; t < r.cols(); ++t)
    for (Index s = 0; s < r.rows(); ++s)
      out.set(t, s, s == source_zero || (t != target_zero && r.test(s, t)));
  return out;
}

BoolMatrix pinv_transpose_parallel(const BoolMatrix& r, Index source_zero, Index target_zero) {
  BoolMatrix out(r.cols(), r.rows());
  const auto cols = static_cast<std::ptrdiff_t>(r.cols());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t t = 0; t < cols; ++t) {
    ElementSet& row = out.row(t);
    if (static_cast<Index>(t) != target_zero)
      for (Index s = 0; s < r.rows(); ++s)
        if (r.test(s, t)) row.set(s);
    row.set(source_zero);
  }
  return out;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace ambrep::kernels
