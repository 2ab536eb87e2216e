// Serial reference vs OpenMP kernels on large random instances.
// Usage: ambrep_bench [grid] [repeats]

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "ambrep/catalog.hpp"
#include "ambrep/generate.hpp"
#include "ambrep/kernels.hpp"

using namespace ambrep;

namespace {

template <class F>
double best_ms(int repeats, F&& f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void row(const std::string& name, double serial, double parallel, bool same) {
  std::cout << std::left << std::setw(28) << name << std::right << std::fixed
            << std::setprecision(2) << std::setw(12) << serial << std::setw(12) << parallel
            << std::setw(10) << serial / parallel << "x" << (same ? "" : "  MISMATCH") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t grid = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 36;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;

  const SemilatticePtr seg = catalog::segments(grid);
  CaseRng rng(7, 0);
  const CrispRep r = generate_crisp_rep(rng, seg, seg, 0.02);
  const CrispRep q = generate_crisp_rep(rng, seg, seg, 0.02);

  std::cout << "threads " << kernels::max_threads() << ", Seg" << grid << " (" << seg->size()
            << " elements)\n";
  std::cout << std::left << std::setw(28) << "kernel" << std::right << std::setw(12) << "serial ms"
            << std::setw(12) << "omp ms" << std::setw(11) << "speedup" << "\n";

  BoolMatrix a, b;
  const double bs = best_ms(repeats, [&] { a = kernels::bool_product_serial(r.table(), q.table()); });
  const double bp = best_ms(repeats, [&] { b = kernels::bool_product_parallel(r.table(), q.table()); });
  row("boolean product", bs, bp, a == b);

  const double ps = best_ms(repeats, [&] {
    a = kernels::pinv_transpose_serial(r.table(), seg->zero(), seg->zero());
  });
  const double pp = best_ms(repeats, [&] {
    b = kernels::pinv_transpose_parallel(r.table(), seg->zero(), seg->zero());
  });
  row("pseudo-inverse transpose", ps, pp, a == b);

  const Quantale rel = catalog::rel2();
  const LatticePtr l = rel.lattice();
  const SemilatticePtr small = catalog::segments(grid / 2);
  const FuzzyRep fr = generate_fuzzy_rep(rng, small, small, l, 0.02);
  const FuzzyRep fq = generate_fuzzy_rep(rng, small, small, l, 0.02);
  std::vector<Index> joins(l->size() * l->size());
  for (Index x = 0; x < l->size(); ++x)
    for (Index y = 0; y < l->size(); ++y) joins[x * l->size() + y] = l->join(x, y);
  const kernels::OpTable join{l->size(), &joins};
  const kernels::OpTable mul{l->size(), &rel.mul_table()};
  const std::size_t n = small->size();
  std::vector<Index> ga, gb;
  const double qs = best_ms(repeats, [&] {
    ga = kernels::quantale_product_serial(fr.grades(), fq.grades(), n, n, n, join, mul, l->zero());
  });
  const double qp = best_ms(repeats, [&] {
    gb = kernels::quantale_product_parallel(fr.grades(), fq.grades(), n, n, n, join, mul, l->zero());
  });
  row("rel2 quantale product", qs, qp, ga == gb);
  return 0;
}
