#pragma once

#include <vector>

#include "ambrep/order.hpp"

/// Data-parallel inner loops. Each kernel has a serial reference that the
/// test suite and the benchmark compare against the OpenMP version.
namespace ambrep::kernels {

/// Boolean matrix product: row x of the result is the union of b.row(y)
/// over y ∈ a.row(x).
BoolMatrix bool_product_serial(const BoolMatrix& a, const BoolMatrix& b);
BoolMatrix bool_product_parallel(const BoolMatrix& a, const BoolMatrix& b);

/// Table of a binary operation on a finite carrier of size n.
struct OpTable {
  std::size_t n = 0;
  const std::vector<Index>* table = nullptr;
  Index operator()(Index a, Index b) const { return (*table)[a * n + b]; }
};

/// (∨, ∗) matrix product over a finite quantale: h(x,z) = ⋁_y a(x,y) ∗ b(y,z).
/// `a` is rows×mid, `b` is mid×cols, both row-major grade tables.
std::vector<Index> quantale_product_serial(const std::vector<Index>& a,
                                           const std::vector<Index>& b, std::size_t rows,
                                           std::size_t mid, std::size_t cols, OpTable join,
                                           OpTable mul, Index zero);
std::vector<Index> quantale_product_parallel(const std::vector<Index>& a,
                                             const std::vector<Index>& b, std::size_t rows,
                                             std::size_t mid, std::size_t cols, OpTable join,
                                             OpTable mul, Index zero);

/// Canonical pseudo-inverse table: out(t, s) = [s = z1] ∨ ([t ≠ z2] ∧ r(s, t)).
BoolMatrix pinv_transpose_serial(const BoolMatrix& r, Index source_zero, Index target_zero);
BoolMatrix pinv_transpose_parallel(const BoolMatrix& r, Index source_zero, Index target_zero);

/// Number of OpenMP threads in use (1 when built without OpenMP).
int max_threads();

}  // namespace ambrep::kernels
