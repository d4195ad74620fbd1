#ifndef HALG_MONOMIAL_HPP
#define HALG_MONOMIAL_HPP

#include <cstdint>
#include <vector>

namespace halg {

// Exponent vector with cached weighted degree. Monomials are created through
// a PolyRing so the cached degree always matches the ring's weights.
struct Monomial {
  std::vector<int32_t> exps;
  int64_t wdeg = 0;

  bool is_one() const {
    for (int32_t e : exps)
      if (e) return false;
    return true;
  }
  bool operator==(const Monomial& o) const { return exps == o.exps; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
};

}  // namespace halg

#endif
