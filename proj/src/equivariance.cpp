#include "nomsets/equivariance.hpp"

#include "nomsets/rng.hpp"
#include "nomsets/sampling.hpp"

namespace nomsets {

namespace {

bool subset(const AtomSet& small, const AtomSet& big) {
  for (Atom a : small) {
    if (!big.contains(a)) return false;
  }
  return true;
}

}  // namespace

CheckReport is_equivariant(const ValueMap& f, const SetDesc& X,
                           const SetDesc& Y, std::size_t samples,
                           std::uint64_t seed, ActionMonoid monoid) {
  CheckReport report;
  Rng rng(seed);
  bool sb = monoid == ActionMonoid::Sb;
  if (sb && (!X.has_sb_action() || !Y.has_sb_action()))
    throw std::invalid_argument(
        "substitution-equivariance needs the substitution action on both "
        "sets");
  for (std::size_t i = 0; i < samples; ++i) {
    ++report.samples_run;
    Value x = sample_value(X, rng);
    Value fx = f(x);
    if (!subset(support(fx), support(x))) {
      report.passed = false;
      report.counterexample = "supp(f(x)) not within supp(x) at x = " +
                              to_text(x) + ", f(x) = " + to_text(fx);
      return report;
    }
    AtomSet pool = support(x);
    pool.unite(support(fx));
    Subst m;
    if (sb && rng.coin()) {
      m = sample_subst(rng);
    } else {
      m = sample_perm_over(pool, rng).as_subst();
    }
    Value lhs = act(m, fx, Y);
    Value rhs = f(act(m, x, X));
    if (!(lhs == rhs)) {
      report.passed = false;
      report.counterexample = "m = " + to_string(m) + ", x = " + to_text(x) +
                              ": m.f(x) = " + to_text(lhs) +
                              " but f(m.x) = " + to_text(rhs);
      return report;
    }
  }
  return report;
}

}  // namespace nomsets
