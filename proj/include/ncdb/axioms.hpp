#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncdb/bracket.hpp"

namespace ncdb {

struct Witness {
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  std::string expected;
  std::string actual;
  std::string residual;  // actual - expected, never "0"
};

struct VerificationReport {
  std::string axiom;
  bool passed = true;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<Witness> witnesses;
  std::vector<VerificationReport> components;
  std::string note;

  void add_failure(Witness w, bool keep_all);
  // Folds a sub-report in; this report fails if the component does.
  void add_component(VerificationReport r);
  nlohmann::ordered_json to_json() const;
};

struct CheckOptions {
  int max_degree = -1;        // -1 selects the check's default
  bool all_witnesses = false;  // otherwise stop at the first counterexample
};

inline constexpr int kDefaultPairDegree = 4;
inline constexpr int kDefaultTripleDegree = 3;

// Rows and columns indexed by generator.
struct MixedType {
  std::vector<std::vector<Rational>> lambda;
  std::vector<std::vector<Rational>> mu;
  friend bool operator==(const MixedType&, const MixedType&) = default;
};

template <class T>
struct Inferred {
  std::optional<T> value;
  std::string reason;  // why inference failed
  explicit operator bool() const { return value.has_value(); }
};

// <<x,y>> + <<y,x>>° on letters.
Tensor2 skew_defect(const BracketSpec& spec, Letter x, Letter y);

VerificationReport check_cyclic_skew(const BracketSpec& spec, const CheckOptions& opt = {});
VerificationReport check_double_poisson(const BracketSpec& spec, const CheckOptions& opt = {});

VerificationReport check_mixed_type(const BracketSpec& spec, const MixedType& type, const CheckOptions& opt = {});
Inferred<MixedType> infer_mixed_type(const BracketSpec& spec);
// lambda_ij - lambda_kl = mu_il - mu_kj for all i,j,k,l, plus the symmetry conditions on the type.
VerificationReport check_wskm(const MixedType& type);

// The weight may have one entry per generator, or be an extended weight with one
// more entry per inverted generator (which is then checked as given).
VerificationReport check_weight(const BracketSpec& spec, const WeightVector& w, const CheckOptions& opt = {});
// For a localised algebra the result is the extended weight.
Inferred<WeightVector> infer_weight(const BracketSpec& spec);

// Right-hand side of the Poisson property at letters (x, y) against c:
// -(l_x+l_y)/2 y (x)_1 <<x,c>> + (l_x-l_y)/2 1 (x)_1 (y * <<x,c>>)
Tensor3 poisson_rhs(const BracketSpec& spec, const std::vector<Rational>& letter_weight, Letter x, Letter y,
                    const Element& c);
VerificationReport check_poisson_property(const BracketSpec& spec, const WeightVector& w, const CheckOptions& opt = {});

VerificationReport check_h0_skew(const BracketSpec& spec, const CheckOptions& opt = {});
VerificationReport check_jacobi(const BracketSpec& spec, const CheckOptions& opt = {});

VerificationReport check_lambda_double_lie(const BracketSpec& spec, const Rational& lambda, const CheckOptions& opt = {});

std::string render_weight(const WeightVector& w);

}  // namespace ncdb
