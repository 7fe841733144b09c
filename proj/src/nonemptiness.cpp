#include "lls/nonemptiness.hpp"

#include <stdexcept>

namespace lls {

bool is_nonempty_general(const BNProblem& p) { return rho_hat(p) >= 0; }

bool is_nonempty_genus0(const VanishingSequence& a, const VanishingSequence& b) {
  if (!a.same_context(b)) {
    throw std::invalid_argument("is_nonempty_genus0: context mismatch");
  }
  const int r = a.rank();
  const int d = a.degree();
  for (int j = 0; j <= r; ++j) {
    if (a[j] + b[r - j] > d) return false;
  }
  return true;
}

bool is_nonempty_genus1(const VanishingSequence& a, const VanishingSequence& b) {
  if (!a.same_context(b)) {
    throw std::invalid_argument("is_nonempty_genus1: context mismatch");
  }
  const int r = a.rank();
  const int d = a.degree();
  int equalities = 0;
  for (int j = 0; j <= r; ++j) {
    const int sum = a[j] + b[r - j];
    if (sum > d) return false;
    if (sum == d) ++equalities;
  }
  return equalities <= 1;
}

bool is_nonempty_component(int genus, const VanishingSequence& a,
                           const VanishingSequence& b) {
  switch (genus) {
    case 0:
      return is_nonempty_genus0(a, b);
    case 1:
      return is_nonempty_genus1(a, b);
    default:
      throw std::invalid_argument("is_nonempty_component: component genus must be 0 or 1, got " +
                                  std::to_string(genus));
  }
}

}  // namespace lls
