#pragma once

// Explicit conjugate factorizations: target = prod_i g_i base^{e_i} g_i^-1,
// multiplied left to right under the right-to-left composition convention.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tsuboi/errors.hpp"
#include "tsuboi/permutation.hpp"

namespace tsuboi {

struct WitnessFactor {
  Permutation conjugator;
  int exponent = 1; ///< +1 or -1

  friend bool operator==(const WitnessFactor&, const WitnessFactor&) = default;
};

struct FactorizationWitness {
  Permutation base;
  std::vector<WitnessFactor> factors;
  Permutation target;

  std::size_t size() const { return factors.size(); }

  /// The explicit factors g_i base^{e_i} g_i^-1.
  std::vector<Permutation> elements() const
  {
    std::vector<Permutation> out;
    out.reserve(factors.size());
    const Permutation base_inv = inverse(base);
    for (const auto& f : factors)
      out.push_back(conjugate(f.exponent < 0 ? base_inv : base, f.conjugator));
    return out;
  }

  Permutation product() const
  {
    auto elems = elements();
    return tsuboi::product(elems);
  }

  bool verifies() const
  {
    for (const auto& f : factors)
      if (f.exponent != 1 && f.exponent != -1)
        return false;
    return product() == target;
  }

  friend bool operator==(const FactorizationWitness&, const FactorizationWitness&) = default;
};

/// Witness from explicit factors, each of which must be conjugate to base or
/// to base^-1.  Throws VerificationError when a factor has the wrong type or
/// the product is not the target.
inline FactorizationWitness make_witness(const Permutation& base, const std::vector<Permutation>& factors,
                                         const Permutation& target)
{
  FactorizationWitness w{base, {}, target};
  const Permutation base_inv = inverse(base);
  for (const auto& f : factors) {
    if (auto h = find_conjugator(base, f))
      w.factors.push_back({*h, 1});
    else if (auto hi = find_conjugator(base_inv, f))
      w.factors.push_back({*hi, -1});
    else
      throw VerificationError("factor " + format_cycles(f) + " is not conjugate to " + format_cycles(base));
  }
  if (product(factors) != target)
    throw VerificationError("factors do not multiply to " + format_cycles(target));
  return w;
}

/// h w h^-1: conjugates every factor and the target; the base is unchanged.
inline FactorizationWitness relabel(const FactorizationWitness& w, const Permutation& h)
{
  FactorizationWitness out{w.base, {}, conjugate(w.target, h)};
  out.factors.reserve(w.factors.size());
  for (const auto& f : w.factors)
    out.factors.push_back({compose(h, f.conjugator), f.exponent});
  return out;
}

/// Moves a witness onto another base and target of the same types: with
/// hb base hb^-1 = new_base and ht target ht^-1 = new_target, each conjugator
/// g becomes ht g hb^-1.
inline FactorizationWitness rebase(const FactorizationWitness& w, const Permutation& new_base, const Permutation& new_target)
{
  auto hb = find_conjugator(w.base, new_base);
  auto ht = find_conjugator(w.target, new_target);
  if (!hb || !ht)
    throw std::invalid_argument("rebase needs the same cycle types");
  const Permutation hb_inv = inverse(*hb);
  FactorizationWitness out{new_base, {}, new_target};
  for (const auto& f : w.factors)
    out.factors.push_back({compose(*ht, compose(f.conjugator, hb_inv)), f.exponent});
  return out;
}

/// Substitutes a factorization of the middle element into each factor of the
/// outer one.  outer expresses T via conjugates of M; inner expresses M via
/// conjugates of B; the result expresses T via conjugates of B.
inline FactorizationWitness chain(const FactorizationWitness& outer, const FactorizationWitness& inner)
{
  if (inner.target != outer.base)
    throw std::invalid_argument("witness chain mismatch: inner target is not the outer base");
  FactorizationWitness out{inner.base, {}, outer.target};
  for (const auto& of : outer.factors) {
    // g M^e g^-1 with M = prod_j (h_j B^{e_j} h_j^-1).  For e = -1 the product
    // reverses and every exponent flips.
    if (of.exponent > 0) {
      for (const auto& inf : inner.factors)
        out.factors.push_back({compose(of.conjugator, inf.conjugator), inf.exponent});
    } else {
      for (auto it = inner.factors.rbegin(); it != inner.factors.rend(); ++it)
        out.factors.push_back({compose(of.conjugator, it->conjugator), -it->exponent});
    }
  }
  return out;
}

/// Factors of two witnesses over the same base, multiplied in sequence.
inline FactorizationWitness concatenate(const FactorizationWitness& left, const FactorizationWitness& right)
{
  if (left.base != right.base)
    throw std::invalid_argument("cannot concatenate witnesses over different bases");
  FactorizationWitness out{left.base, left.factors, compose(left.target, right.target)};
  out.factors.insert(out.factors.end(), right.factors.begin(), right.factors.end());
  return out;
}

inline nlohmann::json witness_to_json(const FactorizationWitness& w)
{
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : w.factors)
    factors.push_back({{"conjugator", format_cycles(f.conjugator)}, {"exponent", f.exponent}});
  return {{"base", format_cycles(w.base)}, {"factors", factors}, {"target", format_cycles(w.target)}, {"verified", w.verifies()}};
}

inline FactorizationWitness witness_from_json(const nlohmann::json& j)
{
  FactorizationWitness w;
  w.base = parse_cycles(j.at("base").get<std::string>());
  w.target = parse_cycles(j.at("target").get<std::string>());
  for (const auto& f : j.at("factors")) {
    int e = f.at("exponent").get<int>();
    if (e != 1 && e != -1)
      throw ParseError("witness exponent must be +1 or -1");
    w.factors.push_back({parse_cycles(f.at("conjugator").get<std::string>()), e});
  }
  return w;
}

} // namespace tsuboi
