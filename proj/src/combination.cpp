#include "isoschubert/combination.hpp"

#include <algorithm>

namespace isoschubert {

ClassicalCombination classical_part(const QuantumCombination& c) {
  ClassicalCombination out;
  for (const auto& [key, coeff] : c)
    if (key.q == 0) out.add(key.partition, coeff.to_integer());
  return out;
}

bool is_integral(const QuantumCombination& c) {
  return std::all_of(c.begin(), c.end(),
                     [](const auto& t) { return t.second.is_integer(); });
}

QuantumCombination shift_q(const QuantumCombination& c, int e) {
  if (e == 0) return c;
  QuantumCombination out;
  for (const auto& [key, coeff] : c) out.add({key.partition, key.q + e}, coeff);
  return out;
}

namespace {

std::string class_name(const std::string& symbol, const Partition& lambda) {
  std::string s = symbol + "[";
  for (int i = 0; i < lambda.length(); ++i) {
    if (i) s += ",";
    s += std::to_string(lambda[i]);
  }
  return s + "]";
}

void append_term(std::string& out, bool first, bool negative, const std::string& body) {
  if (!first) out += negative ? " - " : " + ";
  else if (negative) out += "-";
  out += body;
}

}  // namespace

std::string format(const ClassicalCombination& c, const std::string& symbol) {
  if (c.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [lambda, coeff] : c) {
    const Integer mag = abs(coeff);
    std::string body = mag == 1 ? "" : mag.get_str() + "*";
    append_term(out, first, coeff < 0, body + class_name(symbol, lambda));
    first = false;
  }
  return out;
}

std::string format(const QuantumCombination& c, const std::string& symbol) {
  if (c.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, coeff] : c) {
    const bool negative = coeff.num() < 0;
    const Dyadic mag = negative ? -coeff : coeff;
    std::string body = mag == Dyadic(1) ? "" : mag.to_string() + "*";
    if (key.q == 1) body += "q*";
    if (key.q > 1) body += "q^" + std::to_string(key.q) + "*";
    append_term(out, first, negative, body + class_name(symbol, key.partition));
    first = false;
  }
  return out;
}

}  // namespace isoschubert
