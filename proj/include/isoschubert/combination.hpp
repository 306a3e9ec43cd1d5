#pragma once

#include <map>
#include <string>
#include <utility>

#include "isoschubert/dyadic.hpp"
#include "isoschubert/partition.hpp"

namespace isoschubert {

/// Finitely supported map Key -> Coeff. Zero coefficients are never stored,
/// so two combinations are equal iff their term maps are equal.
template <class Key, class Coeff>
class LinearCombination {
 public:
  using key_type = Key;
  using coeff_type = Coeff;
  using map_type = std::map<Key, Coeff>;

  LinearCombination() = default;
  LinearCombination(const Key& key, Coeff coeff) { add(key, std::move(coeff)); }

  void add(const Key& key, const Coeff& coeff) {
    if (is_zero(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [key, coeff] : o.terms_) add(key, coeff);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& [key, coeff] : o.terms_) add(key, Coeff(-coeff));
    return *this;
  }
  /// Adds scale * o.
  void add_scaled(const LinearCombination& o, const Coeff& scale) {
    if (is_zero(scale)) return;
    for (const auto& [key, coeff] : o.terms_) add(key, Coeff(coeff * scale));
  }

  LinearCombination scaled(const Coeff& scale) const {
    LinearCombination r;
    r.add_scaled(*this, scale);
    return r;
  }

  Coeff coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Coeff{} : it->second;
  }

  const map_type& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    return a.terms_ == b.terms_;
  }

 private:
  map_type terms_;
};

/// Element of H* or of a stable ring in the Schubert basis.
using ClassicalCombination = LinearCombination<Partition, Integer>;

struct QuantumKey {
  Partition partition;
  int q = 0;
  friend bool operator==(const QuantumKey&, const QuantumKey&) = default;
  friend auto operator<=>(const QuantumKey& a, const QuantumKey& b) {
    if (auto c = a.q <=> b.q; c != 0) return c;
    return a.partition <=> b.partition;
  }
};

/// Element of QH* in the Schubert basis, dyadic coefficients.
using QuantumCombination = LinearCombination<QuantumKey, Dyadic>;

inline QuantumCombination to_quantum(const ClassicalCombination& c) {
  QuantumCombination r;
  for (const auto& [lam, coeff] : c) r.add({lam, 0}, Dyadic(coeff));
  return r;
}

/// The q^0 part as an integral classical combination; throws InternalError
/// on a non-integral coefficient.
ClassicalCombination classical_part(const QuantumCombination& c);

/// True when every coefficient is an integer.
bool is_integral(const QuantumCombination& c);

/// Multiplies every key by q^e.
QuantumCombination shift_q(const QuantumCombination& c, int e);

/// Human-readable forms, e.g. "2*s[2] + q*s[]". `symbol` names the class
/// family ("s" for IG, "t" for OG).
std::string format(const ClassicalCombination& c, const std::string& symbol);
std::string format(const QuantumCombination& c, const std::string& symbol);

inline std::string class_symbol(Family f) { return f == Family::IG ? "s" : "t"; }

}  // namespace isoschubert
