#include "ncdb/localize.hpp"

namespace ncdb {

LocalisationPlan LocalisationPlan::all(const Algebra& alg) {
  LocalisationPlan p;
  for (int g = 0; g < alg.generators(); ++g) p.invert.push_back(g);
  return p;
}

LocalisationPlan LocalisationPlan::from_names(const Algebra& alg, const std::vector<std::string>& names) {
  LocalisationPlan p;
  for (const auto& n : names) {
    auto g = alg.find(n);
    if (!g) throw LocalisationError("unknown generator '" + n + "'");
    p.invert.push_back(*g);
  }
  return p;
}

Localised localize(const BracketSpec& spec, const WeightVector& w, const LocalisationPlan& plan,
                   bool require_poisson) {
  const Algebra& alg = spec.algebra();
  if (!alg.is_free()) throw LocalisationError("the bracket is already localised");
  if (static_cast<int>(w.size()) != alg.generators()) throw LocalisationError("weight length must match generators");
  Algebra target;
  try {
    target = alg.with_inverted(plan.invert);
  } catch (const std::exception& e) {
    throw LocalisationError(e.what());
  }
  auto base = check_weight(spec, w);
  if (!base.passed)
    throw LocalisationError("weight " + render_weight(w) + " fails on the free algebra: " +
                            (base.witnesses.empty() ? std::string() : base.witnesses[0].residual));
  if (require_poisson && !check_poisson_property(spec, w).passed)
    throw LocalisationError("the Poisson property fails on the free algebra");
  return {spec.localized(plan.invert), extended_weight(target, w), std::move(base)};
}

}  // namespace ncdb
