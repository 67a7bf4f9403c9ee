#include "hamarch/cubic.hpp"

#include "hamarch/arch.hpp"
#include "hamarch/errors.hpp"

namespace hamarch {

BigInt cubic_enumerate(const EnsembleSpec& spec, int n, const UdOptions& opts) {
  if (spec.id.colored) throw Error("cubic_enumerate needs an uncolored spec");
  return ud_enumerate(spec, n, opts);
}

BigInt cubic_closed_form(EnsembleId id, int n) {
  auto exact_div = [](BigInt v, int d) {
    if (v % d != 0) throw Error("cubic closed form: inexact division");
    return v / d;
  };
  // Formula validity: z/y/x evaluate from N=0, the defect families need the
  // Cat_{N-1} factor (the v and u prefactors vanish at N=1).
  int min_valid = (id.tag == EnsembleTag::Z || id.tag == EnsembleTag::Y ||
                   id.tag == EnsembleTag::X)
                      ? 0
                      : 1;
  if (n < min_valid) throw Error("cubic closed form: N below validity");
  switch (id.tag) {
    case EnsembleTag::Z: return catalan(n) * catalan(n + 1);
    case EnsembleTag::Y: return (BigInt(1) << (2 * n)) * catalan(n + 2);
    case EnsembleTag::X: return (BigInt(1) << (2 * n)) * catalan(n);
    case EnsembleTag::W: return (2 * n - 1) * catalan(n - 1) * catalan(n);
    case EnsembleTag::V: return exact_div((n - 1) * catalan(n) * catalan(n + 1), 2);
    case EnsembleTag::U:
      return exact_div(BigInt(2 * n - 1) * (2 * n - 2) * catalan(n - 1) * catalan(n), 4);
  }
  throw Error("bad tag");
}

BigInt cubic_binomial_sum(int n) {
  if (n < 0) throw Error("cubic binomial sum: negative N");
  BigInt total = 0;
  for (int k = 0; k <= n; ++k)
    total += binomial(2 * n, 2 * k) * catalan(k) * catalan(n - k);
  return total;
}

}  // namespace hamarch
