#include "ssg/cross_check.hpp"

#include <set>

#include "ssg/errors.hpp"
#include "ssg/linalg.hpp"

namespace ssg {

CrossCheckReport cross_check(const NucleusAutomaton& a, const SimplicityVerdict& v,
                             const std::vector<std::uint64_t>& extra_primes) {
  std::set<std::uint64_t> primes(kSmokePrimes.begin(), kSmokePrimes.end());
  for (std::uint64_t p : extra_primes) {
    if (!is_prime(p)) throw NotPrime(p);
    primes.insert(p);
  }
  primes.insert(v.nonsimple.primes.begin(), v.nonsimple.primes.end());
  for (const auto& an : v.analyses) primes.insert(an.bad_primes.begin(), an.bad_primes.end());

  CrossCheckReport r;
  const GammaGraph gamma = build_gamma(a);
  phi_morphism(a, gamma, build_delta(a));
  r.oracle = gamma_verdict(a, gamma, {primes.begin(), primes.end()});

  r.characteristics.push_back(0);
  r.characteristics.insert(r.characteristics.end(), primes.begin(), primes.end());
  for (std::uint64_t c : r.characteristics) {
    const bool engine = v.simple_over(c);
    const bool oracle = c == 0 ? r.oracle.simple_char0 : r.oracle.simple_mod_p.at(c);
    if (engine != oracle) r.disagreements.push_back({c, engine, oracle});
  }
  return r;
}

}  // namespace ssg
