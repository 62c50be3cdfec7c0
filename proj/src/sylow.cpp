#include "focal/sylow.hpp"

#include <algorithm>
#include <string>

namespace focal {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<long> primes_dividing(long n) {
  std::vector<long> out;
  for (long p = 2; p <= n / p; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

OrderFactorization factor_order(long n, long p) {
  if (n < 1) throw Error("order must be >= 1");
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  OrderFactorization f;
  f.p = p;
  f.n = n;
  f.m = n;
  while (f.m % p == 0) {
    f.m /= p;
    f.p_power *= p;
    ++f.a;
  }
  return f;
}

BezoutPair bezout(long pa, long m) {
  if (pa < 1 || m < 1) throw NotCoprime("bezout arguments must be positive");
  // Extended Euclid on (pa, m), tracking coefficients for pa and m.
  long r0 = pa, r1 = m;
  long s0 = 1, s1 = 0;  // coefficients of pa
  long t0 = 0, t1 = 1;  // coefficients of m
  while (r1 != 0) {
    const long q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (r0 != 1)
    throw NotCoprime("gcd(" + std::to_string(pa) + ", " + std::to_string(m) +
                     ") = " + std::to_string(r0) + ", expected 1");
  return BezoutPair{s0, t0};
}

namespace {

bool is_p_power(long order, long p) {
  while (order % p == 0) order /= p;
  return order == 1;
}

}  // namespace

ElemSet p_elements(const FiniteGroup& G, long p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  ElemSet out;
  for (Elem g = 0; g < G.order(); ++g)
    if (is_p_power(G.element_order(g), p)) out.push_back(g);
  return out;
}

Subgroup sylow_subgroup(const FiniteGroup& G, long p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  const OrderFactorization f = factor_order(G.order(), p);
  if (f.a == 0) return trivial_subgroup(G);

  const ElemSet candidates = p_elements(G, p);
  Subgroup H = [&] {
    for (Elem x : candidates)
      if (x != G.identity()) return subgroup_generated(G, {x});
    throw Error("no nontrivial p-element despite p | |G|");  // unreachable
  }();

  while (H.order() < f.p_power) {
    // H is a p-group of order < p^a, so it is proper in the p-part of its
    // normalizer: a p-element of N_G(H) outside H always exists.
    Elem pick = -1;
    for (Elem x : candidates) {
      if (H.contains(x)) continue;
      bool normalizes = true;
      for (Elem h : H.generators())
        if (!H.contains(G.conj(h, x))) {
          normalizes = false;
          break;
        }
      if (normalizes) {
        pick = x;
        break;
      }
    }
    if (pick < 0) throw Error("normalizer climb stuck");  // unreachable
    std::vector<Elem> gens = H.generators();
    gens.push_back(pick);
    H = subgroup_generated(G, ElemSet(gens.begin(), gens.end()));
  }
  return H;
}

}  // namespace focal
