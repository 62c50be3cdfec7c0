#pragma once

#include "focal/errors.hpp"
#include "focal/group.hpp"

namespace focal {

// n = p^a * m with p not dividing m and a maximal.
struct OrderFactorization {
  long p = 0;
  int a = 0;
  long p_power = 1;  // p^a
  long m = 1;
  long n = 1;
};

// lambda * pa + mu * m = 1 for coprime pa, m.
struct BezoutPair {
  long lambda = 0;
  long mu = 0;
};

bool is_prime(long p);

// Ascending list of the distinct prime divisors of n.
std::vector<long> primes_dividing(long n);

OrderFactorization factor_order(long n, long p);  // throws NotPrime

BezoutPair bezout(long pa, long m);  // throws NotCoprime

// All elements whose order is a power of p (the identity included).
ElemSet p_elements(const FiniteGroup& G, long p);

// A Sylow p-subgroup, deterministic across runs: starting from the least
// nontrivial p-element, repeatedly adjoin the least p-element of the
// normalizer that lies outside the current subgroup.  Each step stays inside
// a p-group and strictly grows it, so the loop stops at order exactly p^a.
// (The adjoined element's image in N_G(H)/H automatically has p-power order,
// so no quotient needs to be formed.)  Returns the trivial subgroup when
// p does not divide |G|.
Subgroup sylow_subgroup(const FiniteGroup& G, long p);  // throws NotPrime

}  // namespace focal
