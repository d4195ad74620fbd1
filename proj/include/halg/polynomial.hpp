#ifndef HALG_POLYNOMIAL_HPP
#define HALG_POLYNOMIAL_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "halg/field.hpp"
#include "halg/monomial.hpp"

namespace halg {

// Ambient weighted polynomial ring F_p[x_1..x_n], weights positive.
// Monomials are compared in the weighted graded reverse lexicographic order:
// higher weighted degree wins; on ties the last nonzero entry of a-b decides,
// negative meaning a > b.
class PolyRing {
 public:
  PolyRing(PrimeField field, std::vector<std::string> var_names, std::vector<int> weights);

  const PrimeField& field() const { return field_; }
  int nvars() const { return static_cast<int>(weights_.size()); }
  const std::vector<std::string>& var_names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  int weight(int i) const { return weights_[i]; }

  int64_t weighted_degree(const std::vector<int32_t>& exps) const;
  Monomial make_monomial(std::vector<int32_t> exps) const;
  Monomial one_monomial() const;
  Monomial var_monomial(int i) const;

  // -1, 0, +1 for a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool divides(const Monomial& a, const Monomial& b) const;  // a | b
  Monomial mul(const Monomial& a, const Monomial& b) const;
  Monomial quotient(const Monomial& b, const Monomial& a) const;  // b / a, requires a | b
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  bool coprime(const Monomial& a, const Monomial& b) const;

  bool operator==(const PolyRing& o) const {
    return field_ == o.field_ && names_ == o.names_ && weights_ == o.weights_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

struct Term {
  Monomial mono;
  uint32_t coef = 0;
};

// Sparse distributed polynomial: terms strictly descending in the ring order,
// no zero coefficients stored.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Term> terms) : terms_(std::move(terms)) {}

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  size_t size() const { return terms_.size(); }

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Internal: callers must keep the sorted/no-zero invariant.
  std::vector<Term>& mutable_terms() { return terms_; }

 private:
  std::vector<Term> terms_;
};

Polynomial poly_zero();
Polynomial poly_constant(const PolyRing& ring, uint32_t c);
Polynomial poly_term(const PolyRing& ring, Monomial m, uint32_t c);
Polynomial poly_var(const PolyRing& ring, int i);

// Normalizes an unsorted term list (merges duplicates, drops zeros).
Polynomial poly_from_terms(const PolyRing& ring, std::vector<Term> terms);

Polynomial add(const PolyRing& ring, const Polynomial& f, const Polynomial& g);
Polynomial sub(const PolyRing& ring, const Polynomial& f, const Polynomial& g);
Polynomial neg(const PolyRing& ring, const Polynomial& f);
Polynomial scale(const PolyRing& ring, const Polynomial& f, uint32_t c);
Polynomial mul_term(const PolyRing& ring, const Polynomial& f, const Monomial& m, uint32_t c);
Polynomial mul(const PolyRing& ring, const Polynomial& f, const Polynomial& g);
Polynomial monic(const PolyRing& ring, const Polynomial& f);

// Weighted degree of the leading term; nullopt for the zero polynomial.
std::optional<int64_t> degree(const Polynomial& f);
bool is_homogeneous(const Polynomial& f);
// Homogeneous of the given degree (zero is homogeneous of every degree).
bool is_homogeneous_of(const Polynomial& f, int64_t d);

int compare(const PolyRing& ring, const Polynomial& f, const Polynomial& g);

// Canonical ASCII form, e.g. "y^2-x*z"; coefficients above p/2 print negated.
std::string to_string(const PolyRing& ring, const Polynomial& f);
std::string to_string(const PolyRing& ring, const Monomial& m);

}  // namespace halg

#endif
