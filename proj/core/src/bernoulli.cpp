// Exact Bernoulli numbers through tangent numbers:
//   B_{2n} = (-1)^{n-1} 2n T_n / (2^{2n} (2^{2n} - 1)).
// The tangent numbers come from the in-place O(n^2) recurrence of Brent and
// Harvey, which only needs integer additions and small multiplications.

#include <algorithm>
#include <mutex>
#include <vector>

#include "zetainv/mpcore.hpp"

namespace zetainv {

namespace {

std::mutex g_mutex;
std::vector<mpq_class> g_even;  // g_even[n] = B_{2n}

void extend_to(size_t n_max) {
  if (g_even.size() > n_max) return;
  const size_t n = std::max<size_t>({n_max, 2 * g_even.size(), 1});
  std::vector<mpz_class> t(n + 1);
  t[1] = 1;
  for (size_t k = 2; k <= n; ++k) t[k] = t[k - 1] * static_cast<unsigned long>(k - 1);
  for (size_t k = 2; k <= n; ++k) {
    for (size_t j = k; j <= n; ++j) {
      t[j] = t[j - 1] * static_cast<unsigned long>(j - k) + t[j] * static_cast<unsigned long>(j - k + 2);
    }
  }
  std::vector<mpq_class> out(n + 1);
  out[0] = 1;
  for (size_t k = 1; k <= n; ++k) {
    mpz_class p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, 2 * k);
    mpq_class b(t[k] * static_cast<unsigned long>(2 * k), p2 * (p2 - 1));
    b.canonicalize();
    if (k % 2 == 0) b = -b;
    out[k] = b;
  }
  g_even.swap(out);
}

}  // namespace

mpq_class bernoulli(int k) {
  if (k < 0) throw DomainError("Bernoulli index must be non-negative");
  if (k == 1) return mpq_class(-1, 2);
  if (k % 2 == 1) return mpq_class(0);
  std::lock_guard<std::mutex> lock(g_mutex);
  extend_to(static_cast<size_t>(k / 2));
  return g_even[static_cast<size_t>(k / 2)];
}

}  // namespace zetainv
