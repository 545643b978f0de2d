#pragma once

// Reference computations that share no code with the library: plain maps over
// explicit outcome lists, doubles for entropies, GMP rationals for exact tests.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "entroscope/distribution.hpp"
#include "entroscope/profile.hpp"

namespace oracle {

struct Table {
  std::vector<std::uint64_t> alphabets;
  std::map<std::vector<std::uint32_t>, std::uint64_t> weight;  // zero weights never stored
  std::uint64_t total = 0;
};

inline std::vector<std::uint32_t> restrict(const std::vector<std::uint32_t>& o, std::uint32_t mask) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < o.size(); ++i)
    if (mask >> i & 1u) out.push_back(o[i]);
  return out;
}

inline std::map<std::vector<std::uint32_t>, std::uint64_t> marginal(const Table& t, std::uint32_t mask) {
  std::map<std::vector<std::uint32_t>, std::uint64_t> m;
  for (const auto& [o, w] : t.weight) m[restrict(o, mask)] += w;
  return m;
}

inline double entropy(const Table& t, std::uint32_t mask) {
  if (mask == 0) return 0;
  double h = 0;
  for (const auto& [o, w] : marginal(t, mask)) {
    const double p = static_cast<double>(w) / static_cast<double>(t.total);
    h -= p * std::log2(p);
  }
  return h;
}

inline double mutual_information(const Table& t, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  return entropy(t, a | c) + entropy(t, b | c) - entropy(t, a | b | c) - entropy(t, c);
}

// p(abc) p(c) == p(ac) p(bc) over the full product of the observed marginals.
inline bool independent(const Table& t, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  const auto pabc = marginal(t, a | b | c), pac = marginal(t, a | c), pbc = marginal(t, b | c), pc = marginal(t, c);
  auto get = [](const auto& m, const std::vector<std::uint32_t>& k) -> mpz_class {
    auto it = m.find(k);
    return it == m.end() ? mpz_class(0) : mpz_class(static_cast<unsigned long>(it->second));
  };
  for (const auto& [o, w] : t.weight) {
    (void)w;
    for (const auto& [o2, w2] : t.weight) {
      (void)w2;
      // Mix: a-part from o, b-part from o2, c-part shared with o.
      std::vector<std::uint32_t> mixed = o;
      bool same_c = true;
      for (std::size_t i = 0; i < o.size(); ++i) {
        if (c >> i & 1u) same_c = same_c && o[i] == o2[i];
        if (b >> i & 1u) mixed[i] = o2[i];
      }
      if (!same_c) continue;
      if (get(pabc, restrict(mixed, a | b | c)) * get(pc, restrict(mixed, c)) !=
          get(pac, restrict(mixed, a | c)) * get(pbc, restrict(mixed, b | c)))
        return false;
    }
  }
  return true;
}

// Random table over alphabets in [1, max_alphabet]; roughly `zero_rate` of the
// product space carries no mass.
inline Table random_table(std::mt19937_64& rng, int n, std::uint64_t max_alphabet, double zero_rate = 0.3,
                          std::uint64_t max_weight = 9) {
  Table t;
  std::uniform_int_distribution<std::uint64_t> alpha(1, max_alphabet), weight(1, max_weight);
  std::bernoulli_distribution zero(zero_rate);
  for (int i = 0; i < n; ++i) t.alphabets.push_back(alpha(rng));
  std::vector<std::uint32_t> o(static_cast<std::size_t>(n), 0);
  while (true) {
    if (!zero(rng)) {
      const auto w = weight(rng);
      t.weight[o] = w;
      t.total += w;
    }
    int i = 0;
    while (i < n && ++o[static_cast<std::size_t>(i)] == t.alphabets[static_cast<std::size_t>(i)]) o[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
  }
  if (t.weight.empty()) {
    t.weight[std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0)] = 1;
    t.total = 1;
  }
  return t;
}

inline entroscope::JointDistribution to_distribution(const Table& t) {
  std::vector<entroscope::Variable> vars;
  const char* names[] = {"a", "b", "c", "d", "e", "f"};
  for (std::size_t i = 0; i < t.alphabets.size(); ++i) vars.push_back({names[i], t.alphabets[i]});
  std::vector<entroscope::OutcomeProbability> entries;
  for (const auto& [o, w] : t.weight)
    entries.push_back({o, entroscope::Rational(static_cast<long>(w), static_cast<long>(t.total))});
  return entroscope::make_distribution(vars, entries);
}

// Expressions over a..e for parser tests.
inline const std::vector<std::string> kNames{"a", "b", "c", "d", "e"};

inline std::string names_text(std::uint32_t mask) {
  std::string out;
  for (int i = 0; i < 5; ++i)
    if (mask >> i & 1u) out += (out.empty() ? "" : ",") + kNames[static_cast<std::size_t>(i)];
  return out;
}

// Random expression text plus its value on `p`, computed straight from the atoms.
inline std::pair<std::string, double> random_expression(std::mt19937_64& rng, const entroscope::EntropyProfile& p) {
  std::string text;
  double value = 0;
  const int terms = 1 + static_cast<int>(rng() % 5);
  for (int t = 0; t < terms; ++t) {
    const long num = 1 + static_cast<long>(rng() % 7), den = 1 + static_cast<long>(rng() % 3);
    const bool negative = rng() % 2;
    const double coef = (negative ? -1.0 : 1.0) * static_cast<double>(num) / static_cast<double>(den);
    if (t == 0)
      text += negative ? "-" : "";
    else
      text += negative ? " - " : " + ";
    if (num != 1 || den != 1) text += std::to_string(num) + (den != 1 ? "/" + std::to_string(den) : "") + "*";
    // Assign each variable to one of: unused, first, second, given.
    std::uint32_t first = 0, second = 0, given = 0;
    for (int i = 0; i < 5; ++i) {
      switch (rng() % 4) {
        case 1: first |= 1u << i; break;
        case 2: second |= 1u << i; break;
        case 3: given |= 1u << i; break;
        default: break;
      }
    }
    if (!first) first = 1u << (rng() % 5), second &= ~first, given &= ~first;
    const bool mutual = second != 0 && rng() % 2;
    if (mutual) {
      text += "I(" + names_text(first) + ";" + names_text(second);
      value += coef * (p[first | given] + p[second | given] - p[first | second | given] - p[given]);
    } else {
      text += "H(" + names_text(first);
      value += coef * (p[first | given] - p[given]);
    }
    if (given) text += "|" + names_text(given);
    text += ")";
  }
  return {text, value};
}

}  // namespace oracle
