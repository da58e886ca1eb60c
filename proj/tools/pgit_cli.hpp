#pragma once

#include <algorithm>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pgit/pgit.hpp"

namespace pgit::cli {

using json = nlohmann::ordered_json;

enum class Format { Json, Tsv, Table };

struct RunConfig {
  std::string command;
  std::string type_string;
  std::string weight;
  std::string ray;
  std::string chamber;
  int kmax = 12;
  Format format = Format::Json;
  std::uint64_t guard_weyl = kDefaultWeylGuard;
  std::size_t guard_rank = kDefaultChamberRankGuard;
  std::uint64_t guard_oracle = kDefaultOracleGuard;
  std::uint64_t seed = 1;
};

/// A command result: a JSON document plus a flat table for tsv/table output.
struct Output {
  json doc;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  /// Process exit code; nonzero only for failed self-checks.
  int exit_code = 0;
};

/// Integers beyond the signed 64-bit range are emitted as strings.
inline json big_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::int64_t>::max() && v >= std::numeric_limits<std::int64_t>::min())
    return json(static_cast<std::int64_t>(v));
  return json(v.str());
}

inline json rational_json(const RationalWeight& w) {
  json a = json::array();
  for (const auto& c : w.coords) {
    if (boost::multiprecision::denominator(c) == 1) a.push_back(big_json(boost::multiprecision::numerator(c)));
    else a.push_back(c.str());
  }
  return a;
}

inline std::string words_cell(const WeylGroup& W, const std::vector<ElementId>& ids) {
  std::string s;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (k) s += ' ';
    s += format_word(W[ids[k]].word);
  }
  return s.empty() ? "-" : s;
}

inline json words_json(const WeylGroup& W, const std::vector<ElementId>& ids) {
  json a = json::array();
  for (ElementId id : ids) a.push_back(format_word(W[id].word));
  return a;
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline Weight parse_weight_for(const RootSystem& rs, const std::string& text, const char* flag) {
  if (text.empty()) throw ValidationError(std::string(flag) + " is required");
  Weight w(parse_weight(text));
  if (w.size() != rs.rank())
    throw ValidationError(std::string(flag) + " has " + std::to_string(w.size()) + " coordinates, " +
                          rs.type().to_string() + " has rank " + std::to_string(rs.rank()));
  return w;
}

inline Output cmd_info(const RunConfig& cfg) {
  CartanType t = CartanType::parse(cfg.type_string);
  RootSystem rs = build_root_system(t);
  PrincipalElement pe = principal_element(rs);
  Output o;
  o.doc["type"] = t.to_string();
  o.doc["rank"] = rs.rank();
  o.doc["dimX"] = rs.num_positive_roots();
  o.doc["weylOrder"] = big_json(t.classical_weyl_order());
  o.doc["iota"] = pe.iota;
  json comps = json::array();
  for (std::size_t c = 0; c < t.components().size(); ++c)
    comps.push_back({{"component", t.components()[c].name()}, {"m", pe.min_values[c]}});
  o.doc["components"] = comps;
  o.header = {"key", "value"};
  o.rows.push_back({"type", t.to_string()});
  o.rows.push_back({"rank", std::to_string(rs.rank())});
  o.rows.push_back({"dimX", std::to_string(rs.num_positive_roots())});
  o.rows.push_back({"weylOrder", t.classical_weyl_order().str()});
  o.rows.push_back({"iota", join(pe.iota)});
  o.rows.push_back({"m", join(pe.min_values)});
  try {
    OrbitCensus c = orbit_census(rs);
    o.doc["census"] = {{"curves", c.num_curves}, {"twoDim", big_json(c.num_two_dim)}};
    o.rows.push_back({"census", "1," + c.num_two_dim.str()});
  } catch (const HypothesisError& e) {
    o.doc["census"] = nullptr;
    o.doc["censusNote"] = e.what();
    o.rows.push_back({"census", std::string("suppressed: ") + e.what()});
  }
  return o;
}

inline Output cmd_census(const RunConfig& cfg) {
  CartanType t = CartanType::parse(cfg.type_string);
  RootSystem rs = build_root_system(t);
  OrbitCensus c = orbit_census(rs);
  Output o;
  o.doc["type"] = t.to_string();
  o.doc["dimX"] = c.dim_x;
  o.doc["curves"] = c.num_curves;
  o.doc["twoDim"] = big_json(c.num_two_dim);
  o.header = {"type", "dimX", "curves", "twoDim"};
  o.rows.push_back({t.to_string(), std::to_string(c.dim_x), std::to_string(c.num_curves), c.num_two_dim.str()});
  return o;
}

inline void strata_into(const StrataReport& r, Output& o) {
  o.doc["lambda"] = r.lambda.coords;
  o.doc["dimX"] = r.dim_x;
  json strata = json::array();
  for (const auto& s : r.strata) strata.push_back({{"w", s.word}, {"len", s.length}, {"dim", s.dim}});
  o.doc["strata"] = strata;
  o.doc["dimUnstable"] = r.dim_unstable;
  o.doc["codim"] = r.codim_unstable ? json(*r.codim_unstable) : json(nullptr);
  o.doc["movable"] = r.movable;
  o.doc["semistableNonempty"] = r.semistable_nonempty;
  if (r.a1xa1_special_case) o.doc["a1xa1SpecialCase"] = true;
}

inline Output cmd_strata(const RunConfig& cfg) {
  FlagSetting st = make_setting(CartanType::parse(cfg.type_string), cfg.guard_weyl);
  Weight lambda = parse_weight_for(st.rs, cfg.weight, "--weight");
  StrataReport r = strata_report(st, partition_weyl(st, lambda));
  Output o;
  strata_into(r, o);
  o.header = {"w", "len", "dim"};
  for (const auto& s : r.strata) o.rows.push_back({s.word, std::to_string(s.length), std::to_string(s.dim)});
  return o;
}

inline Output cmd_classify(const RunConfig& cfg) {
  FlagSetting st = make_setting(CartanType::parse(cfg.type_string), cfg.guard_weyl);
  Weight lambda = parse_weight_for(st.rs, cfg.weight, "--weight");
  WeylPartition part = partition_weyl(st, lambda);
  StrataReport r = strata_report(st, part);
  MovabilityResult mv = is_movable(st, lambda);
  HyperplaneFamily fam = hyperplane_family(st);
  Output o;
  strata_into(r, o);
  o.doc["plus"] = words_json(st.weyl, part.plus);
  o.doc["zero"] = words_json(st.weyl, part.zero);
  o.doc["minus"] = words_json(st.weyl, part.minus);
  if (mv.witness) {
    json w = {{"w", mv.witness->word}, {"alpha", mv.witness->alpha + 1}};
    w["beta"] = mv.witness->beta ? json(*mv.witness->beta + 1) : json(nullptr);
    w["value"] = mv.witness->value;
    o.doc["movabilityWitness"] = w;
  } else {
    o.doc["movabilityWitness"] = nullptr;
  }
  o.doc["pairCriterionAgrees"] = mv.criterion_agrees;
  if (r.semistable_nonempty) {
    GITClass c = git_signature(st, fam, lambda);
    o.doc["signature"] = c.signature;
    o.doc["kind"] = to_string(c.kind);
  } else {
    o.doc["signature"] = nullptr;
    o.doc["kind"] = nullptr;
  }
  o.header = {"key", "value"};
  o.rows.push_back({"lambda", lambda.to_string()});
  o.rows.push_back({"plus", words_cell(st.weyl, part.plus)});
  o.rows.push_back({"zero", words_cell(st.weyl, part.zero)});
  o.rows.push_back({"minus", words_cell(st.weyl, part.minus)});
  o.rows.push_back({"dimUnstable", std::to_string(r.dim_unstable)});
  o.rows.push_back({"codim", r.codim_unstable ? std::to_string(*r.codim_unstable) : "-"});
  o.rows.push_back({"movable", yes_no(r.movable)});
  o.rows.push_back({"movabilityWitness", mv.witness ? mv.witness->word : "-"});
  o.rows.push_back({"pairCriterionAgrees", yes_no(mv.criterion_agrees)});
  o.rows.push_back({"semistableNonempty", yes_no(r.semistable_nonempty)});
  o.rows.push_back({"signature", o.doc["signature"].is_null() ? "-" : o.doc["signature"].get<std::string>()});
  o.rows.push_back({"kind", o.doc["kind"].is_null() ? "-" : o.doc["kind"].get<std::string>()});
  return o;
}

inline Output cmd_chambers(const RunConfig& cfg) {
  FlagSetting st = make_setting(CartanType::parse(cfg.type_string), cfg.guard_weyl);
  HyperplaneFamily fam = hyperplane_family(st);
  ClassEnumeration e = enumerate_git_classes(st, fam, cfg.guard_rank);
  Output o;
  o.doc["type"] = st.rs.type().to_string();
  o.doc["hyperplanes"] = fam.functionals;
  json classes = json::array();
  for (std::size_t k = 0; k < e.classes.size(); ++k) {
    const auto& c = e.classes[k];
    classes.push_back({{"id", k},
                       {"signature", c.signature},
                       {"kind", to_string(c.kind)},
                       {"rep", rational_json(c.representative)},
                       {"zeroSet", words_json(st.weyl, c.zero_set)}});
  }
  o.doc["classes"] = classes;
  o.doc["counts"] = {{"chambers", e.num_chambers}, {"walls", e.num_wall_faces}, {"lowDim", e.num_low_dim}};
  o.doc["notes"] = e.notes;
  o.header = {"id", "signature", "kind", "rep"};
  for (std::size_t k = 0; k < e.classes.size(); ++k) {
    const auto& c = e.classes[k];
    o.rows.push_back({std::to_string(k), c.signature, to_string(c.kind), join(c.representative.primitive_integer())});
  }
  return o;
}

inline Output cmd_cones(const RunConfig& cfg) {
  FlagSetting st = make_setting(CartanType::parse(cfg.type_string), cfg.guard_weyl);
  require_cone_comparison(st.rs.type());
  if (cfg.chamber.empty()) throw ValidationError("a chamber id (index or signature) is required");
  HyperplaneFamily fam = hyperplane_family(st);
  ClassEnumeration e = enumerate_git_classes(st, fam, cfg.guard_rank);
  const GITClass& cls = find_class(e, cfg.chamber);
  ConeReport r = quotient_cone_report(st, fam, cls);
  auto ineqs = [](const std::vector<ConeInequality>& v) {
    json a = json::array();
    for (const auto& q : v) {
      json x = {{"coefficients", q.coefficients}};
      x["functional"] = q.functional ? json(*q.functional) : json(nullptr);
      a.push_back(x);
    }
    return a;
  };
  Output o;
  o.doc["type"] = st.rs.type().to_string();
  o.doc["signature"] = r.signature;
  o.doc["nef"] = ineqs(r.nef);
  o.doc["effMov"] = ineqs(r.eff_mov);
  o.doc["note"] = r.note;
  o.header = {"cone", "inequality"};
  for (const auto& q : r.nef) o.rows.push_back({"nef", join(q.coefficients) + " >= 0"});
  for (const auto& q : r.eff_mov) o.rows.push_back({"effMov", join(q.coefficients) + " >= 0"});
  return o;
}

inline Output cmd_mult(const RunConfig& cfg) {
  CartanType t = CartanType::parse(cfg.type_string);
  RootSystem rs = build_root_system(t);
  PrincipalElement pe = principal_element(rs);
  if (!cfg.weight.empty() == !cfg.ray.empty()) throw ValidationError("mult needs exactly one of --weight or --ray");
  Output o;
  if (!cfg.weight.empty()) {
    Weight lambda = parse_weight_for(rs, cfg.weight, "--weight");
    CharacterPoly p = principal_character(rs, pe, lambda);
    Sl2Decomposition d = sl2_decompose(p);
    BigInt m = p.coeff(0) - p.coeff(2);
    o.doc["lambda"] = lambda.coords;
    o.doc["mlambda"] = big_json(m);
    o.doc["dim"] = big_json(p.total());
    json sl2 = json::object();
    for (Int k = p.max_exponent() % 2 == 0 ? 0 : 1; k <= p.max_exponent(); k += 2)
      sl2[std::to_string(k)] = big_json(d[k]);
    o.doc["sl2"] = sl2;
    o.header = {"k", "N"};
    for (auto it = sl2.begin(); it != sl2.end(); ++it) o.rows.push_back({it.key(), it.value().dump()});
    return o;
  }
  Weight ray = parse_weight_for(rs, cfg.ray, "--ray");
  if (cfg.kmax < 1) throw ValidationError("--kmax must be at least 1");
  std::vector<BigInt> v = ray_multiplicities(rs, pe, ray, cfg.kmax);
  o.doc["ray"] = ray.coords;
  o.doc["kmax"] = cfg.kmax;
  json vals = json::array();
  json first = nullptr;
  o.header = {"k", "m"};
  for (std::size_t k = 0; k < v.size(); ++k) {
    vals.push_back({{"k", k + 1}, {"m", big_json(v[k])}});
    o.rows.push_back({std::to_string(k + 1), v[k].str()});
    if (first.is_null() && v[k] > 0) first = k + 1;
  }
  o.doc["values"] = vals;
  o.doc["saturation"] = {{"k", first}, {"searchedUpTo", cfg.kmax}};
  return o;
}

namespace detail {

inline Weight random_strict(std::mt19937_64& rng, std::size_t n, Int hi) {
  std::uniform_int_distribution<Int> d(1, hi);
  Weight w;
  for (std::size_t i = 0; i < n; ++i) w.coords.push_back(d(rng));
  return w;
}

}  // namespace detail

/// Seeded randomized consistency checks over a few small types.
inline Output cmd_selftest(const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  Output o;
  o.rows.push_back({"seed", std::to_string(cfg.seed), ""});
  json checks = json::array();
  bool all = true;
  auto record = [&](const std::string& name, bool ok, const std::string& detail) {
    checks.push_back({{"name", name}, {"passed", ok}, {"detail", detail}});
    o.rows.push_back({name, ok ? "pass" : "FAIL", detail});
    all = all && ok;
  };
  for (const char* name : {"A2", "C2", "G2", "A3", "B3"}) {
    FlagSetting st = make_setting(CartanType::parse(name), cfg.guard_weyl);
    const auto& W = st.weyl;
    HyperplaneFamily fam = hyperplane_family(st);
    bool flip = true, dims = true, bruhat = true, sig = true;
    for (int trial = 0; trial < 20; ++trial) {
      Weight lambda = detail::random_strict(rng, st.rs.rank(), 9);
      WeylPartition p = partition_weyl(st, lambda);
      StrataReport r = strata_report(st, p);
      for (ElementId w : p.plus) flip = flip && p.values[W.multiply(W.longest(), w)] < 0;
      dims = dims && r.codim_unstable && r.dim_unstable + *r.codim_unstable == st.dim_x();
      for (const auto& w : W.elements())
        for (ElementId u : W.covers(w.id)) bruhat = bruhat && p.values[u] > p.values[w.id];
      GITClass c = git_signature(st, fam, lambda);
      for (ElementId w = 0; w < W.order(); ++w) sig = sig && fam.value_sign(w, c.signs) == sign_of(p.values[w]);
    }
    record(std::string(name) + ".w0-flip", flip, "20 weights");
    record(std::string(name) + ".dimension-sum", dims, "20 weights");
    record(std::string(name) + ".bruhat-monotone", bruhat, "20 weights, all covers");
    record(std::string(name) + ".signature-values", sig, "20 weights");
    bool oracle = true;
    for (int trial = 0; trial < 5; ++trial) {
      Weight lambda;
      std::uniform_int_distribution<Int> d(0, 2);
      for (std::size_t i = 0; i < st.rs.rank(); ++i) lambda.coords.push_back(d(rng));
      oracle = oracle && principal_character(st.rs, st.pe, lambda) ==
                             restricted_character_oracle(st.rs, st.pe, lambda, cfg.guard_oracle);
    }
    record(std::string(name) + ".character-oracle", oracle, "5 weights");
  }
  o.doc["seed"] = cfg.seed;
  o.doc["checks"] = checks;
  o.doc["passed"] = all;
  o.header = {"check", "result", "detail"};
  o.exit_code = all ? 0 : 3;
  return o;
}

inline void render(const Output& o, Format f, std::ostream& out) {
  if (f == Format::Json) {
    out << o.doc.dump(2) << "\n";
    return;
  }
  if (f == Format::Tsv) {
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t k = 0; k < r.size(); ++k) out << (k ? "\t" : "") << r[k];
      out << "\n";
    };
    line(o.header);
    for (const auto& r : o.rows) line(r);
    return;
  }
  std::vector<std::size_t> width(o.header.size(), 0);
  for (std::size_t k = 0; k < o.header.size(); ++k) width[k] = o.header[k].size();
  for (const auto& r : o.rows)
    for (std::size_t k = 0; k < r.size() && k < width.size(); ++k) width[k] = std::max(width[k], r[k].size());
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (k) s += "  ";
      s += r[k];
      if (k + 1 < r.size()) s += std::string(width[k] - r[k].size(), ' ');
    }
    out << s << "\n";
  };
  line(o.header);
  std::vector<std::string> rule;
  for (auto w : width) rule.push_back(std::string(w, '-'));
  line(rule);
  for (const auto& r : o.rows) line(r);
}

inline Output dispatch(const RunConfig& cfg) {
  if (cfg.command == "info") return cmd_info(cfg);
  if (cfg.command == "census") return cmd_census(cfg);
  if (cfg.command == "strata") return cmd_strata(cfg);
  if (cfg.command == "classify") return cmd_classify(cfg);
  if (cfg.command == "chambers") return cmd_chambers(cfg);
  if (cfg.command == "cones") return cmd_cones(cfg);
  if (cfg.command == "mult") return cmd_mult(cfg);
  if (cfg.command == "selftest") return cmd_selftest(cfg);
  throw ValidationError("unknown command " + cfg.command);
}

/// Exit codes: 0 success, 1 usage error, 2 hypothesis or guard refusal,
/// 3 failed self-check or internal error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Principal SL2 GIT on flag varieties"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "json";
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv", "table"}));
    sub->add_option("--guard-weyl", cfg.guard_weyl, "Largest Weyl group order to enumerate")
        ->check(CLI::PositiveNumber);
  };
  auto typed = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("type", cfg.type_string, "Cartan type, e.g. A3 or A2xG2")->required();
    common(sub);
    return sub;
  };
  typed("info", "Rank, dim X, |W|, iota, m(g) and orbit census");
  typed("census", "Counts of 1- and 2-dimensional S-orbits");
  typed("strata", "Kirwan strata of the unstable locus")->add_option("--weight", cfg.weight, "a,b,...")->required();
  typed("classify", "Partition, strata, movability and GIT class of a weight")
      ->add_option("--weight", cfg.weight, "a,b,...")
      ->required();
  auto* ch = typed("chambers", "All GIT classes of ample line bundles");
  ch->add_option("--guard-rank", cfg.guard_rank, "Largest rank for chamber enumeration")->check(CLI::PositiveNumber);
  auto* co = typed("cones", "Nef and effective cones of the quotient of a chamber");
  co->add_option("chamber", cfg.chamber, "Chamber index or signature")->required();
  co->add_option("--guard-rank", cfg.guard_rank, "Largest rank for chamber enumeration")->check(CLI::PositiveNumber);
  auto* mu = typed("mult", "Principal character and invariant dimension");
  mu->add_option("--weight", cfg.weight, "a,b,...");
  mu->add_option("--ray", cfg.ray, "a,b,...");
  mu->add_option("--kmax", cfg.kmax, "Largest multiple along --ray")->check(CLI::PositiveNumber);
  auto* se = app.add_subcommand("selftest", "Seeded randomized consistency checks");
  se->add_option("--seed", cfg.seed, "Random seed");
  se->add_option("--guard-oracle", cfg.guard_oracle, "Largest dim V_lambda for the Freudenthal oracle")
      ->check(CLI::PositiveNumber);
  common(se);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  cfg.format = format == "tsv" ? Format::Tsv : format == "table" ? Format::Table : Format::Json;
  try {
    Output o = dispatch(cfg);
    render(o, cfg.format, out);
    return o.exit_code;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const HypothesisError& e) {
    err << "refused: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace pgit::cli
