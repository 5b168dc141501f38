#include "ukd/rational_gf.hpp"

#include <algorithm>
#include <string>

namespace ukd {

namespace {

using RationalPoly = std::vector<mpq_class>;

void trim(RationalPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a / b over Q; b must be nonzero.
RationalPoly remainder(RationalPoly a, const RationalPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const mpq_class factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

RationalPoly quotient(RationalPoly a, const RationalPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  RationalPoly q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    const mpq_class factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return q;
}

RationalPoly gcd(RationalPoly a, RationalPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RationalPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

RationalPoly to_rational(const Polynomial& p) {
  RationalPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.emplace_back(c);
  return out;
}

Polynomial to_integral(const RationalPoly& p) {
  Polynomial out;
  out.reserve(p.size());
  for (const auto& c : p) {
    if (c.get_den() != 1) {
      throw FitFailure("reduced generating function has non-integral coefficient " + c.get_str());
    }
    out.push_back(c.get_num());
  }
  return trimmed(std::move(out));
}

}  // namespace

Polynomial trimmed(Polynomial p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return trimmed(std::move(out));
}

std::string to_string(const Polynomial& p) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    BigInt magnitude = abs(p[i]);
    if (out.empty()) {
      if (p[i] < 0) out += "-";
    } else {
      out += p[i] < 0 ? " - " : " + ";
    }
    if (magnitude != 1 || i == 0) out += magnitude.get_str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::vector<BigInt> RationalGF::expand(std::size_t terms) const {
  std::vector<BigInt> c(terms);
  for (std::size_t n = 0; n < terms; ++n) {
    BigInt value = n < numerator.size() ? numerator[n] : BigInt(0);
    for (std::size_t i = 1; i < denominator.size() && i <= n; ++i) {
      value -= denominator[i] * c[n - i];
    }
    c[n] = value;  // denominator(0) == 1
  }
  return c;
}

RationalGF reduce(const Polynomial& numerator, const Polynomial& denominator) {
  RationalPoly num = to_rational(trimmed(numerator));
  RationalPoly den = to_rational(trimmed(denominator));
  if (den.empty() || den.front() == 0) {
    throw InvalidInput("denominator must have a nonzero constant term");
  }
  const RationalPoly g = gcd(num, den);
  if (!g.empty() && g.size() > 1) {
    num = quotient(num, g);
    den = quotient(den, g);
  }
  const mpq_class lead = den.front();
  for (auto& c : num) c /= lead;
  for (auto& c : den) c /= lead;
  return {to_integral(num), to_integral(den)};
}

RationalGF fit_rational_gf(std::span<const BigInt> terms, int degree_bound) {
  if (degree_bound < 0) throw InvalidInput("degree bound must be non-negative");
  const std::size_t needed = 2 * static_cast<std::size_t>(degree_bound);
  if (terms.size() < needed) {
    throw InvalidInput("fitting with degree bound " + std::to_string(degree_bound) + " needs " +
                       std::to_string(needed) + " terms, got " + std::to_string(terms.size()));
  }
  // Berlekamp-Massey over Q.
  RationalPoly connection{1};
  RationalPoly previous{1};
  std::size_t order = 0;
  std::size_t gap = 1;
  mpq_class previous_discrepancy = 1;
  for (std::size_t n = 0; n < terms.size(); ++n) {
    mpq_class d = terms[n];
    for (std::size_t i = 1; i <= order && i < connection.size(); ++i) {
      d += connection[i] * terms[n - i];
    }
    if (d == 0) {
      ++gap;
      continue;
    }
    const mpq_class scale = d / previous_discrepancy;
    RationalPoly updated = connection;
    if (updated.size() < previous.size() + gap) updated.resize(previous.size() + gap, 0);
    for (std::size_t i = 0; i < previous.size(); ++i) updated[i + gap] -= scale * previous[i];
    if (2 * order <= n) {
      previous = connection;
      order = n + 1 - order;
      previous_discrepancy = d;
      gap = 1;
    } else {
      ++gap;
    }
    connection = std::move(updated);
  }
  trim(connection);
  if (order > static_cast<std::size_t>(degree_bound)) {
    throw FitFailure("shortest linear recurrence has order " + std::to_string(order) +
                     ", above the degree bound " + std::to_string(degree_bound));
  }
  // numerator = terms * connection mod x^order
  RationalPoly numerator(order, 0);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j <= i && j < connection.size(); ++j) {
      numerator[i] += connection[j] * terms[i - j];
    }
  }
  trim(numerator);
  Polynomial num_int;
  Polynomial den_int;
  // Clear denominators before handing over to the integral reduction.
  BigInt common = 1;
  for (const auto& c : numerator) common = lcm(common, BigInt(c.get_den()));
  for (const auto& c : connection) common = lcm(common, BigInt(c.get_den()));
  for (const auto& c : numerator) num_int.push_back(BigInt(c * common));
  for (const auto& c : connection) den_int.push_back(BigInt(c * common));
  RationalGF gf = reduce(num_int, den_int);
  const auto reproduced = gf.expand(terms.size());
  for (std::size_t n = 0; n < terms.size(); ++n) {
    if (reproduced[n] != terms[n]) {
      throw FitFailure("fitted generating function disagrees with term " + std::to_string(n));
    }
  }
  return gf;
}

RationalGF gf_reference_k3() {
  const Polynomial numerator{1, -2, 2, 1, 0, -1, 1};
  const Polynomial one_minus_x{1, -1};
  const Polynomial denominator =
      multiply(Polynomial{1, -1, 0, -1}, multiply(one_minus_x, one_minus_x));
  return reduce(numerator, denominator);
}

}  // namespace ukd
