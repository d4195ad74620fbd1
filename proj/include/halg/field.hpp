#ifndef HALG_FIELD_HPP
#define HALG_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace halg {

class error : public std::runtime_error {
 public:
  error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

inline bool is_prime(uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint32_t d = 3; static_cast<uint64_t>(d) * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// Arithmetic in F_p for an odd prime p. Elements are residues in [0, p).
class PrimeField {
 public:
  static constexpr uint32_t kDefaultChar = 32003;

  explicit PrimeField(uint32_t p) : p_(p) {
    if (!is_prime(p)) throw error("characteristic-not-prime", "p = " + std::to_string(p));
  }

  uint32_t characteristic() const { return p_; }

  uint32_t reduce(int64_t a) const {
    int64_t r = a % static_cast<int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
  }
  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
  }
  uint32_t pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint32_t inv(uint32_t a) const {
    if (a == 0) throw error("division-by-zero", "inverse of 0 in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
  }
  uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  uint32_t p_;
};

}  // namespace halg

#endif
