#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncdb/classify.hpp"
#include "ncdb/localize.hpp"
#include "ncdb/repspace.hpp"
#include "ncdb/speclang.hpp"

namespace ncdb {
namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1";

// Thrown for anything that should end with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Rational> rational_list(const std::string& text, std::size_t want, const std::string& flag) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    try {
      out.push_back(Rational::parse(item));
    } catch (const std::exception&) {
      throw UsageError(flag + ": '" + item + "' is not a rational");
    }
  }
  if (want && out.size() != want) throw UsageError(flag + " needs " + std::to_string(want) + " comma-separated values");
  return out;
}

Rational one_rational(const std::string& text, const std::string& flag) { return rational_list(text, 1, flag)[0]; }

json weight_json(const WeightVector& w) {
  json a = json::array();
  for (const auto& x : w) a.push_back(x.to_string());
  return a;
}

template <std::size_t N>
json rationals(const std::array<Rational, N>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(x.to_string());
  return a;
}

struct Loaded {
  SpecDocument doc;
  BracketSpec spec;
};

class Driver {
 public:
  Driver(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  Loaded load(const std::string& path) {
    std::string text;
    if (path == "-") {
      text.assign(std::istreambuf_iterator<char>(in_), {});
    } else {
      std::ifstream f(path, std::ios::binary);
      if (!f) throw UsageError("cannot read " + path);
      text.assign(std::istreambuf_iterator<char>(f), {});
    }
    const std::string label = path == "-" ? "<stdin>" : path;
    try {
      ParseResult r = parse_document(text);
      for (const auto& w : r.warnings)
        err_ << label << ":" << w.line << ":" << w.column << ": warning: " << w.message << "\n";
      BracketSpec spec = r.doc.spec();
      return {std::move(r.doc), std::move(spec)};
    } catch (const ParseError& e) {
      throw UsageError(label + ":" + e.what());
    }
  }

  json subject(const SpecDocument& doc) const {
    json s;
    s["name"] = doc.name;
    s["generators"] = doc.algebra.names();
    json inv = json::array();
    for (int g : doc.algebra.inverted()) inv.push_back(doc.algebra.name(g));
    s["inverted"] = inv;
    s["weight"] = doc.weight ? weight_json(*doc.weight) : json(nullptr);
    return s;
  }

  // Text summary of a report tree.
  void print(const VerificationReport& r, int depth = 0) {
    std::string pad(static_cast<std::size_t>(2 * depth), ' ');
    out_ << pad << (r.passed ? "PASS " : "FAIL ") << r.axiom;
    std::vector<std::string> params;
    for (const auto& [k, v] : r.parameters.items())
      if (v.is_primitive()) params.push_back(k + "=" + (v.is_string() ? v.get<std::string>() : v.dump()));
    if (!params.empty()) {
      out_ << " [";
      for (std::size_t i = 0; i < params.size(); ++i) out_ << (i ? " " : "") << params[i];
      out_ << "]";
    }
    out_ << "\n";
    if (!r.note.empty()) out_ << pad << "  note: " << r.note << "\n";
    for (const auto& w : r.witnesses) {
      out_ << pad << "  witness " << w.inputs.dump() << "\n";
      out_ << pad << "    expected: " << w.expected << "\n";
      out_ << pad << "    actual:   " << w.actual << "\n";
      out_ << pad << "    residual: " << w.residual << "\n";
    }
    for (const auto& c : r.components) print(c, depth + 1);
  }

  int emit(const std::string& command, const std::vector<VerificationReport>& reports, json extra, bool as_json) {
    bool passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
    if (as_json) {
      json j;
      j["schema_version"] = kSchemaVersion;
      j["command"] = command;
      j["passed"] = passed;
      for (auto& [k, v] : extra.items()) j[k] = v;
      json rs = json::array();
      for (const auto& r : reports) rs.push_back(r.to_json());
      j["reports"] = rs;
      out_ << j.dump(2) << "\n";
    } else {
      for (const auto& r : reports) print(r);
    }
    return passed ? 0 : 1;
  }

  // The base weight: declared, or inferred from the table.
  std::optional<WeightVector> weight_of(const Loaded& l, std::string& why) const {
    if (l.doc.weight) return l.doc.weight;
    auto inferred = infer_weight(l.spec);
    if (!inferred) {
      why = inferred.reason;
      return std::nullopt;
    }
    WeightVector w = *inferred.value;
    w.resize(static_cast<std::size_t>(l.spec.algebra().generators()));
    return w;
  }

  struct SpecFlags {
    std::string file;
    int max_degree = -1, pair_degree = -1, triple_degree = -1;
    bool json = false, all = false;
  };

  int verify(const SpecFlags& f) {
    Loaded l = load(f.file);
    int pd = f.pair_degree >= 0 ? f.pair_degree : f.max_degree >= 0 ? f.max_degree : kDefaultPairDegree;
    int td = f.triple_degree >= 0 ? f.triple_degree : f.max_degree >= 0 ? f.max_degree : kDefaultTripleDegree;
    CheckOptions base;
    base.all_witnesses = f.all;
    std::vector<VerificationReport> reports;
    std::string why;
    auto w = weight_of(l, why);
    if (w) {
      reports.push_back(check_weight(l.spec, *w, base));
      if (!l.doc.weight) reports.back().note = "weight inferred from the table";
      reports.push_back(check_poisson_property(l.spec, *w, base));
    } else {
      VerificationReport r;
      r.axiom = "weight";
      r.passed = false;
      r.note = "no weight declared and none fits: " + why;
      reports.push_back(r);
    }
    CheckOptions o2 = base, o3 = base;
    o2.max_degree = pd;
    o3.max_degree = td;
    reports.push_back(check_h0_skew(l.spec, o2));
    reports.push_back(check_jacobi(l.spec, o3));
    return emit("verify", reports, json{{"spec", subject(l.doc)}}, f.json);
  }

  int single(const SpecFlags& f, const std::string& command) {
    Loaded l = load(f.file);
    CheckOptions o;
    o.all_witnesses = f.all;
    o.max_degree = f.max_degree;
    auto r = command == "jacobi" ? check_jacobi(l.spec, o) : check_h0_skew(l.spec, o);
    return emit(command, {r}, json{{"spec", subject(l.doc)}}, f.json);
  }

  int localize_cmd(const std::string& file, const std::string& invert, bool all, bool as_json) {
    Loaded l = load(file);
    if (!l.doc.algebra.is_free()) throw UsageError("the algebra already has inverted generators");
    LocalisationPlan plan;
    try {
      if (all) {
        plan = LocalisationPlan::all(l.spec.algebra());
      } else {
        std::vector<std::string> names;
        std::stringstream ss(invert);
        std::string item;
        while (std::getline(ss, item, ',')) names.push_back(item);
        if (names.empty()) throw UsageError("--invert needs at least one generator (or use --all)");
        plan = LocalisationPlan::from_names(l.spec.algebra(), names);
      }
    } catch (const LocalisationError& e) {
      throw UsageError(e.what());
    }
    std::string why;
    auto w = weight_of(l, why);
    if (!w) {
      VerificationReport r;
      r.axiom = "weight";
      r.passed = false;
      r.note = "no weight declared and none fits: " + why;
      return emit("localize", {r}, json{{"spec", subject(l.doc)}}, as_json);
    }
    auto base = check_weight(l.spec, *w);
    if (!base.passed) {
      base.note = "the base weight check must pass before localising";
      return emit("localize", {base}, json{{"spec", subject(l.doc)}}, as_json);
    }
    Localised loc = localize(l.spec, *w, plan);
    SpecDocument doc = SpecDocument::from_spec(loc.spec, *w, l.doc.name);
    std::vector<VerificationReport> reports = {check_weight(loc.spec, loc.weight),
                                               check_poisson_property(loc.spec, loc.weight)};
    std::string text = render(doc);
    if (as_json) {
      json extra;
      extra["spec"] = subject(doc);
      extra["extended_weight"] = weight_json(loc.weight);
      extra["document"] = text;
      return emit("localize", reports, extra, true);
    }
    out_ << text;
    bool ok = true;
    for (const auto& r : reports) {
      err_ << (r.passed ? "PASS " : "FAIL ") << r.axiom << " on the localised algebra, extended weight "
           << render_weight(loc.weight) << "\n";
      ok = ok && r.passed;
    }
    return ok ? 0 : 1;
  }

  int rep(const std::string& file, int n, std::uint64_t seed, int max_degree, int points, bool all, bool as_json) {
    if (n < 1) throw UsageError("--size must be positive");
    if (points < 1) throw UsageError("--points must be positive");
    Loaded l = load(file);
    std::vector<MatrixPoint> pts;
    for (int i = 0; i < points; ++i) pts.push_back(MatrixPoint::random(l.spec.algebra(), n, seed + static_cast<std::uint64_t>(i)));
    auto r = check_induced_poisson(l.spec, pts, max_degree, all);
    r.parameters["seed"] = seed;
    return emit("rep", {r}, json{{"spec", subject(l.doc)}}, as_json);
  }

  struct ClassifyFlags {
    std::string family;
    std::string lambda = "1", gamma_values, rho_values;
    bool json = false;
  };

  int classify(const ClassifyFlags& f) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "classify";
    j["family"] = f.family;
    bool agree = false;
    if (f.family == "cl1") {
      Rational lambda = one_rational(f.lambda, "--lambda");
      if (lambda.is_zero()) throw UsageError("--lambda must be nonzero");
      auto gv = f.gamma_values.empty() ? std::vector<Rational>{} : rational_list(f.gamma_values, 0, "--gamma-values");
      auto rv = f.rho_values.empty() ? std::vector<Rational>{} : rational_list(f.rho_values, 0, "--rho-values");
      auto s = search_CL1(lambda, gv, rv);
      agree = s.conditions_agree();
      j["lambda"] = lambda.to_string();
      j["grid_size"] = s.grid.size();
      j["exhaustive"] = s.exhaustive;
      j["conditions_agree"] = agree;
      json sv = json::array();
      for (const auto& p : s.survivors) sv.push_back(json{{"rho", p.rho.to_string()}, {"gamma", rationals(p.gamma)}});
      j["survivors"] = sv;
      if (!f.json) {
        out_ << "cl1 lambda=" << lambda << ": " << s.survivors.size() << " of " << s.grid.size() << " points survive"
             << (s.exhaustive ? "" : " (exploratory grid)") << "\n";
        for (const auto& p : s.survivors)
          out_ << "  rho=" << p.rho << " gamma=(" << p.gamma[0] << "," << p.gamma[1] << "," << p.gamma[2] << ","
               << p.gamma[3] << ")\n";
      }
    } else {
      auto s = f.family == "cl3a" ? search_CL3a() : search_CL3b();
      agree = s.conditions_agree();
      j["grid_size"] = s.grid.size();
      j["conditions_agree"] = agree;
      // Rows are indexed by the alpha triple, columns by the beta triple.
      std::vector<std::array<Rational, 3>> triples;
      for (const auto& p : s.survivors)
        for (const auto& t : {p.alpha, p.beta})
          if (std::find(triples.begin(), triples.end(), t) == triples.end()) triples.push_back(t);
      std::sort(triples.begin(), triples.end());
      json sv = json::array(), tj = json::array(), table = json::array();
      for (const auto& p : s.survivors) sv.push_back(json{{"alpha", rationals(p.alpha)}, {"beta", rationals(p.beta)}});
      for (const auto& t : triples) tj.push_back(rationals(t));
      for (const auto& a : triples) {
        json row = json::array();
        for (const auto& b : triples)
          row.push_back(std::any_of(s.survivors.begin(), s.survivors.end(),
                                    [&](const CL3Point& p) { return p.alpha == a && p.beta == b; }));
        table.push_back(row);
      }
      j["survivors"] = sv;
      j["triples"] = tj;
      j["table"] = table;
      if (!f.json) {
        out_ << f.family << ": " << s.survivors.size() << " of " << s.grid.size() << " points survive\n";
        out_ << "rows: alpha triple, columns: beta triple\n";
        auto str = [](const std::array<Rational, 3>& t) {
          return "(" + t[0].to_string() + "," + t[1].to_string() + "," + t[2].to_string() + ")";
        };
        out_ << "         ";
        for (const auto& t : triples) out_ << " " << str(t);
        out_ << "\n";
        for (std::size_t r = 0; r < triples.size(); ++r) {
          out_ << str(triples[r]) << "  ";
          for (std::size_t c = 0; c < triples.size(); ++c) out_ << "    " << (table[r][c].get<bool>() ? "x" : ".") << "   ";
          out_ << "\n";
        }
      }
    }
    j["passed"] = agree;
    if (f.json) {
      out_ << j.dump(2) << "\n";
    } else {
      out_ << (agree ? "closed-form conditions agree with the verifier at every grid point\n"
                     : "closed-form conditions DISAGREE with the verifier\n");
    }
    return agree ? 0 : 1;
  }

  struct BuiltinFlags {
    std::string name;
    std::string lambda = "1", rho, gamma = "0,0,0,0", alpha, beta;
    int d = 4, delta = 0;
  };

  int builtin(const BuiltinFlags& f) {
    std::string n = f.name;
    std::transform(n.begin(), n.end(), n.begin(), ::tolower);
    FamilyParams p;
    std::vector<std::string> comments;
    auto scalar = [](const std::string& s, const char* flag) { return s.empty() ? Rational(0) : one_rational(s, flag); };
    auto triple = [](const std::string& s, const char* flag) {
      std::array<Rational, 3> t{};
      if (!s.empty()) {
        auto v = rational_list(s, 3, flag);
        std::copy(v.begin(), v.end(), t.begin());
      }
      return t;
    };
    if (n == "mdbi") {
      p = ParamsMdbOne{};
    } else if (n == "mdbii") {
      p = ParamsMdbTwo{};
    } else if (n == "kontsevich") {
      p = ParamsKontsevich{};
      comments = {" check_weight rejects this weight; the table itself has weight (1,-1)"};
    } else if (n == "cl1") {
      Rational lambda = one_rational(f.lambda, "--lambda");
      auto g = rational_list(f.gamma, 4, "--gamma");
      p = ParamsCL1{lambda, f.rho.empty() ? lambda : one_rational(f.rho, "--rho"), {g[0], g[1], g[2], g[3]}};
    } else if (n == "cl1-1") {
      p = ParamsCL1Minus{one_rational(f.lambda, "--lambda"), scalar(f.alpha, "--alpha"), scalar(f.beta, "--beta")};
    } else if (n == "cl1-2") {
      p = ParamsCL1Plus{one_rational(f.lambda, "--lambda"), scalar(f.alpha, "--alpha"), scalar(f.beta, "--beta")};
    } else if (n == "cl3a") {
      p = ParamsCL3a{triple(f.alpha, "--alpha"), triple(f.beta, "--beta")};
    } else if (n == "cl3b") {
      auto a = triple(f.alpha, "--alpha"), b = triple(f.beta, "--beta");
      p = ParamsCL3b{a[0], a[1], a[2], b[0], b[1], b[2]};
    } else if (n == "cld") {
      p = ParamsCLd{f.d, f.delta};
    } else if (n == "cld2") {
      p = ParamsCLd2{f.d, f.delta};
    } else {
      throw UsageError("unknown builtin '" + f.name + "'");
    }
    Family fam;
    try {
      fam = build(p);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    SpecDocument doc = SpecDocument::from_spec(fam.spec, fam.weight, family_name(p));
    doc.comments = comments;
    out_ << render(doc);
    return 0;
  }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact double-bracket calculus on free algebras", "ncdb"};
  app.require_subcommand(1);
  Driver drv(in, out, err);

  auto spec_flags = [](CLI::App* sc, Driver::SpecFlags& f, bool split_degrees) {
    sc->add_option("file", f.file, "spec document (.ndb), '-' for stdin")->required();
    sc->add_option("--max-degree", f.max_degree, "word degree bound")->check(CLI::NonNegativeNumber);
    if (split_degrees) {
      sc->add_option("--pair-degree", f.pair_degree, "degree bound for pair sweeps")->check(CLI::NonNegativeNumber);
      sc->add_option("--triple-degree", f.triple_degree, "degree bound for triple sweeps")->check(CLI::NonNegativeNumber);
    }
    sc->add_flag("--json", f.json, "print a JSON report");
    sc->add_flag("--all-witnesses", f.all, "collect every counterexample");
  };

  Driver::SpecFlags vf, jf, hf;
  auto* verify = app.add_subcommand("verify", "weight, Poisson property, H0 skew-symmetry and Jacobi");
  spec_flags(verify, vf, true);
  auto* jacobi = app.add_subcommand("jacobi", "Jacobi identity for the induced bracket");
  spec_flags(jacobi, jf, false);
  auto* h0 = app.add_subcommand("h0skew", "skew-symmetry modulo commutators");
  spec_flags(h0, hf, false);

  Driver::ClassifyFlags cf;
  auto* classify = app.add_subcommand("classify", "grid searches over the small families");
  classify->add_option("family", cf.family, "cl1, cl3a or cl3b")->required()->check(CLI::IsMember({"cl1", "cl3a", "cl3b"}));
  classify->add_option("--lambda", cf.lambda, "cl1 weight parameter");
  classify->add_option("--gamma-values", cf.gamma_values, "cl1: comma-separated values for each gamma");
  classify->add_option("--rho-values", cf.rho_values, "cl1: comma-separated values for rho");
  classify->add_flag("--json", cf.json, "print JSON");

  std::string lfile, invert;
  bool lall = false, ljson = false;
  auto* loc = app.add_subcommand("localize", "invert generators and re-check the weight and Poisson property");
  loc->add_option("file", lfile, "spec document, '-' for stdin")->required();
  auto* inv_opt = loc->add_option("--invert", invert, "comma-separated generator names");
  auto* all_opt = loc->add_flag("--all", lall, "invert every generator");
  inv_opt->excludes(all_opt);
  loc->add_flag("--json", ljson, "print JSON instead of the localised document");

  std::string rfile;
  int size = 2, rdeg = 3, points = 5;
  std::uint64_t seed = 1;
  bool rjson = false, rall = false;
  auto* rep = app.add_subcommand("rep", "trace bracket checks at random rational matrix points");
  rep->add_option("file", rfile, "spec document, '-' for stdin")->required();
  rep->add_option("--size", size, "matrix size N")->capture_default_str();
  rep->add_option("--seed", seed, "seed of the first point")->capture_default_str();
  rep->add_option("--max-degree", rdeg, "word degree bound")->capture_default_str()->check(CLI::NonNegativeNumber);
  rep->add_option("--points", points, "number of points")->capture_default_str();
  rep->add_flag("--json", rjson, "print a JSON report");
  rep->add_flag("--all-witnesses", rall, "collect every counterexample");

  Driver::BuiltinFlags bf;
  auto* builtin = app.add_subcommand("builtin", "print a bundled spec document");
  builtin->add_option("name", bf.name, "mdbI, mdbII, kontsevich, cl1, cl1-1, cl1-2, cl3a, cl3b, cld, cld2")->required();
  builtin->add_option("--lambda", bf.lambda, "cl1*: lambda");
  builtin->add_option("--rho", bf.rho, "cl1: rho (default lambda)");
  builtin->add_option("--gamma", bf.gamma, "cl1: g1,g2,g3,g4");
  builtin->add_option("--alpha", bf.alpha, "cl1-1/cl1-2: alpha; cl3a/cl3b: three values");
  builtin->add_option("--beta", bf.beta, "cl1-1/cl1-2: beta; cl3a/cl3b: three values");
  builtin->add_option("--d", bf.d, "cld/cld2: generator count");
  builtin->add_option("--delta", bf.delta, "cld/cld2: number of weight-one generators");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return drv.verify(vf);
    if (jacobi->parsed()) return drv.single(jf, "jacobi");
    if (h0->parsed()) return drv.single(hf, "h0skew");
    if (classify->parsed()) return drv.classify(cf);
    if (loc->parsed()) return drv.localize_cmd(lfile, invert, lall, ljson);
    if (rep->parsed()) return drv.rep(rfile, size, seed, rdeg, points, rall, rjson);
    if (builtin->parsed()) return drv.builtin(bf);
  } catch (const UsageError& e) {
    err << "ncdb: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "ncdb: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_main(args, std::cin, std::cout, std::cerr);
}

}  // namespace ncdb
