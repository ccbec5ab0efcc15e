// abel_lab: exact center, moment and composition computations for the Abel
// equation y' = p y^3 + q y^2.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "abel/center.hpp"
#include "abel/decomp.hpp"
#include "abel/error.hpp"
#include "abel/io.hpp"
#include "abel/moments.hpp"
#include "abel/trig.hpp"
#include "abel/verify.hpp"

using namespace abel;
using io::Json;

namespace {

struct JobConfig {
  std::string input;
  int kmax = 12;
  std::optional<int> imax;
  int nmax = 20;
  std::optional<int> degree;
  std::string param = "eps";
  std::string direction = "forward";
  bool json = false;
  std::uint64_t seed = 0;
  // subcommand specific
  std::string word;
  std::string h1 = "p";
  std::optional<int> i;
  std::optional<int> j;
  bool certificate = false;
  std::string suite = "all";
};

Json load(const JobConfig& cfg) {
  if (cfg.input.empty()) throw InputError("field 'input': --input is required");
  return io::parse_file(cfg.input);
}

PCPair pc_pair(const io::EquationInput& in) {
  if (!in_pc_space(in.P, in.iv)) throw DomainError("P does not vanish at both endpoints");
  if (!in_pc_space(in.Q, in.iv)) throw DomainError("Q does not vanish at both endpoints");
  return PCPair(in.P, in.Q, in.iv);
}

Poly single_poly(const Json& doc, const char* key, Interval* iv) {
  if (!doc.is_object()) throw InputError("field '<root>': expected a JSON object");
  int ctx = io::read_context(doc);
  if (!doc.contains(key)) throw InputError(std::string("field '") + key + "': missing");
  if (!doc.contains("interval")) throw InputError("field 'interval': missing");
  *iv = io::interval_from_json(doc["interval"], ctx, "interval");
  return io::poly_from_json(doc[key], ctx, key);
}

std::optional<int> json_int(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) return std::nullopt;
  if (!doc[key].is_number_integer()) throw InputError(std::string("field '") + key + "': expected an integer");
  return doc[key].get<int>();
}

Param parse_param(const std::string& s) { return s == "delta" ? Param::delta_on_p : Param::eps_on_q; }
Direction parse_direction(const std::string& s) { return s == "backward" ? Direction::backward : Direction::forward; }

Json witness_json(const std::optional<CCWitness>& w) {
  Json out = Json::object();
  out["cc"] = w.has_value();
  if (w) {
    out["W"] = io::to_json(w->W);
    out["P_outer"] = io::to_json(w->P_outer);
    out["Q_outer"] = io::to_json(w->Q_outer);
  }
  return out;
}

Json factor_json(const FactorSet& f) {
  Json list = Json::array();
  for (const auto& W : f.factors) list.push_back(io::to_json(W));
  return list;
}

Json cmd_center_table(const JobConfig& cfg) {
  auto in = io::equation_from_json(load(cfg));
  CenterTable t = parametric_table(in.p, in.q, in.iv, cfg.kmax, parse_param(cfg.param), parse_direction(cfg.direction));
  return io::to_json(t);
}

Json cmd_iterated(const JobConfig& cfg) {
  Json doc = load(cfg);
  auto in = io::equation_from_json(doc);
  std::string word = cfg.word;
  if (word.empty() && doc.contains("word")) {
    if (!doc["word"].is_string()) throw InputError("field 'word': expected a string of 1s and 2s");
    word = doc["word"].get<std::string>();
  }
  if (word.empty()) throw InputError("field 'word': missing");
  MultiIndex alpha = MultiIndex::parse(word);
  bool h1_p = cfg.h1 == "p";
  Scalar v = iterated_integral(alpha, h1_p ? in.p : in.q, h1_p ? in.q : in.p, in.iv);
  return Json{{"word", word}, {"h1", cfg.h1}, {"value", v.str()}};
}

Json cmd_melnikov(const JobConfig& cfg) {
  PCPair pair = pc_pair(io::equation_from_json(load(cfg)));
  Json out = Json::object();
  for (int k = 6; k <= 8; ++k) out["D" + std::to_string(k)] = melnikov_D(k, pair).str();
  return out;
}

Json cmd_moments(const JobConfig& cfg) {
  auto in = io::equation_from_json(load(cfg));
  Json pq = Json::array();
  Json qp = Json::array();
  for (int i = 0; i <= cfg.nmax; ++i) {
    pq.push_back(moment(in.P, in.Q, in.iv, i).str());
    qp.push_back(moment(in.Q, in.P, in.iv, i).str());
  }
  return Json{{"N", cfg.nmax},
              {"m_PQ", pq},
              {"m_QP", qp},
              {"double_moments_vanish", double_moments_vanish(in.P, in.Q, in.iv, cfg.nmax)}};
}

Json cmd_zspace(const JobConfig& cfg) {
  Json doc = load(cfg);
  Interval iv(0, 1);
  Poly P = single_poly(doc, "P", &iv);
  int d = cfg.degree ? *cfg.degree : json_int(doc, "degree").value_or(-1);
  if (d < 2) throw InputError("field 'degree': --degree >= 2 is required");
  int imax = cfg.imax.value_or(default_imax(d));
  auto basis = zspace(P, iv, d, imax);
  Json list = Json::array();
  for (const auto& f : basis) list.push_back(io::to_json(f));
  return Json{{"d", d},
              {"I_max", imax},
              {"dimension", basis.size()},
              {"basis", list},
              {"equals_composition_sum", basis == composition_sum_space(P, iv, d)}};
}

Json cmd_factors(const JobConfig& cfg) {
  Interval iv(0, 1);
  Poly P = single_poly(load(cfg), "P", &iv);
  StructureReport r = structure_report(P, iv);
  Json pattern = Json::array();
  for (auto v : r.pattern) pattern.push_back(v);
  return Json{{"s", r.s},
              {"factors", factor_json(right_factors(P, iv))},
              {"indecomposable", factor_json(indecomposable_ab_factors(P, iv))},
              {"tag", r.tag},
              {"pattern", pattern}};
}

Json cmd_cc(const JobConfig& cfg) {
  auto in = io::equation_from_json(load(cfg));
  return witness_json(cc_check(in.P, in.Q, in.iv));
}

Json cmd_definite(const JobConfig& cfg) {
  Interval iv(0, 1);
  Poly P = single_poly(load(cfg), "P", &iv);
  FactorSet f = indecomposable_ab_factors(P, iv);
  return Json{{"definite", is_definite(P, iv)}, {"s", f.s}, {"indecomposable", factor_json(f)}};
}

Json cmd_report(const JobConfig& cfg) {
  PCPair pair = pc_pair(io::equation_from_json(load(cfg)));
  auto r = parametric_structure_report(pair, cfg.kmax, cfg.nmax);
  return Json{{"K", r.K},
              {"N", r.N},
              {"composition", witness_json(r.cc)},
              {"truncated_parametric_center", r.truncated_parametric_center},
              {"double_moments", r.double_moments},
              {"P_definite", r.P_definite},
              {"Q_definite", r.Q_definite},
              {"P_in_Z_of_Q", r.P_in_Z_of_Q},
              {"Q_in_Z_of_P", r.Q_in_Z_of_P},
              {"classification_consistent", r.classification_consistent}};
}

std::pair<TrigPoly, TrigPoly> trig_pair(const Json& doc) {
  if (!doc.is_object()) throw InputError("field '<root>': expected a JSON object");
  int ctx = io::read_context(doc);
  for (const char* key : {"P", "Q"})
    if (!doc.contains(key)) throw InputError(std::string("field '") + key + "': missing");
  return {io::trig_from_json(doc["P"], ctx, "P"), io::trig_from_json(doc["Q"], ctx, "Q")};
}

Json cmd_trig_moment(const JobConfig& cfg) {
  Json doc = load(cfg);
  auto [P, Q] = trig_pair(doc);
  if (cfg.certificate) {
    int bound = cfg.imax.value_or(6);
    auto c = non_cc_certificate(P, Q, bound, bound);
    Json out{{"bound", bound}, {"found", c.has_value()}};
    if (c) {
      out["i"] = c->i;
      out["j"] = c->j;
      out["value_over_pi"] = c->value.coeff.str();
    } else {
      out["note"] = "inconclusive: every mixed integral up to the bound vanishes";
    }
    return out;
  }
  auto i = cfg.i ? cfg.i : json_int(doc, "i");
  auto j = cfg.j ? cfg.j : json_int(doc, "j");
  if (!i) throw InputError("field 'i': missing");
  if (!j) throw InputError("field 'j': missing");
  if (*i < 0 || *j < 0) throw InputError("field 'i': exponents must be nonnegative");
  return Json{{"i", *i}, {"j", *j}, {"value_over_pi", trig_moment(P, Q, *i, *j).coeff.str()}};
}

FamilySpec spec_from_trig(const TrigPoly& f) { return FamilySpec{f.a0(), f.cos_coeffs(), f.sin_coeffs()}; }

Json cmd_trig_family(const JobConfig& cfg) {
  Json doc = load(cfg);
  auto [p_spec, q_spec] = trig_pair(doc);
  auto d1 = json_int(doc, "d1");
  auto d2 = json_int(doc, "d2");
  if (!d1) throw InputError("field 'd1': missing");
  if (!d2) throw InputError("field 'd2': missing");
  TrigPair fam = build_family(*d1, *d2, spec_from_trig(p_spec), spec_from_trig(q_spec));
  TrigPoly Q = fam.Q;
  if (doc.contains("R")) Q = modify_family(Q, *d2, io::poly_from_json(doc["R"], io::read_context(doc), "R"));
  bool pq = true;
  bool qp = true;
  TrigPoly dP = trig_diff(fam.P);
  TrigPoly dQ = trig_diff(Q);
  TrigPoly Pi = TrigPoly::constant(1);
  TrigPoly Qi = TrigPoly::constant(1);
  for (int i = 0; i <= cfg.nmax; ++i) {
    pq = pq && trig_integral(Pi * dQ).coeff.is_zero();
    qp = qp && trig_integral(Qi * dP).coeff.is_zero();
    Pi = Pi * fam.P;
    Qi = Qi * Q;
  }
  return Json{{"P", io::to_json(fam.P)},
              {"Q", io::to_json(Q)},
              {"N", cfg.nmax},
              {"P_moments_of_Q_vanish", pq},
              {"Q_moments_of_P_vanish", qp}};
}

int cmd_verify(const JobConfig& cfg) {
  auto ids = suite_criteria(cfg.suite);
  Json results = Json::array();
  bool all = true;
  for (const auto& id : ids) {
    CriterionResult r = run_criterion(id, cfg.seed);
    all = all && r.passed;
    if (cfg.json) {
      results.push_back(Json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    } else {
      std::cout << summary_line(r) << '\n';
      for (const auto& line : r.detail) std::cout << "    " << line << '\n';
      std::cout.flush();
    }
  }
  if (cfg.json) std::cout << Json{{"suite", cfg.suite}, {"seed", cfg.seed}, {"results", results}}.dump(2) << '\n';
  return all ? 0 : 1;
}

void print_text(const Json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) print_text(v, prefix.empty() ? k : prefix + "." + k);
  } else if (j.is_array() && !j.empty() && j.front().is_object()) {
    for (std::size_t n = 0; n < j.size(); ++n) print_text(j[n], prefix + "[" + std::to_string(n) + "]");
  } else {
    std::cout << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact center, moment and composition computations for the Abel equation"};
  app.require_subcommand(1);
  JobConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "JSON input file");
    sub->add_flag("--json", cfg.json, "machine-readable output");
  };
  auto add_param = [&](CLI::App* sub) {
    sub->add_option("--param", cfg.param, "parameter placement")->check(CLI::IsMember({"eps", "delta"}));
  };

  auto* center = app.add_subcommand("center-table", "stratified return-map coefficients");
  common(center);
  center->add_option("--kmax", cfg.kmax, "largest power of y")->check(CLI::Range(2, 40));
  add_param(center);
  center->add_option("--direction", cfg.direction, "forward map or its inverse")
      ->check(CLI::IsMember({"forward", "backward"}));

  auto* iterated = app.add_subcommand("iterated", "one iterated integral");
  common(iterated);
  iterated->add_option("--word", cfg.word, "multi-index such as 1121");
  iterated->add_option("--h1", cfg.h1, "coefficient bound to letter 1")->check(CLI::IsMember({"p", "q"}));

  auto* melnikov = app.add_subcommand("melnikov", "second Melnikov coefficients D6, D7, D8");
  common(melnikov);

  auto* moments = app.add_subcommand("moments", "moments m_i(P,Q) and m_i(Q,P)");
  common(moments);
  moments->add_option("--nmax", cfg.nmax, "largest moment index")->check(CLI::Range(0, 200));

  auto* zsp = app.add_subcommand("zspace", "basis of the zero-moment space of P");
  common(zsp);
  zsp->add_option("--degree", cfg.degree, "degree bound d")->check(CLI::Range(2, 200));
  zsp->add_option("--imax", cfg.imax, "number of moment rows")->check(CLI::Range(0, 1000));

  auto* factors = app.add_subcommand("factors", "right [a,b]-factors of P");
  common(factors);
  auto* cc = app.add_subcommand("cc", "composition condition check");
  common(cc);
  auto* definite = app.add_subcommand("definite", "definiteness of P");
  common(definite);

  auto* report = app.add_subcommand("report", "parametric structure report");
  common(report);
  report->add_option("--kmax", cfg.kmax, "table depth")->check(CLI::Range(2, 40));
  report->add_option("--nmax", cfg.nmax, "largest moment index")->check(CLI::Range(0, 200));

  auto* tmoment = app.add_subcommand("trig-moment", "trigonometric moment or certificate search");
  common(tmoment);
  tmoment->add_option("--i", cfg.i, "power of Q")->check(CLI::Range(0, 200));
  tmoment->add_option("--j", cfg.j, "power of P")->check(CLI::Range(0, 200));
  tmoment->add_flag("--certificate", cfg.certificate, "search the first nonzero mixed integral");
  tmoment->add_option("--imax", cfg.imax, "certificate search bound")->check(CLI::Range(1, 100));

  auto* tfamily = app.add_subcommand("trig-family", "build and check a trigonometric family");
  common(tfamily);
  tfamily->add_option("--nmax", cfg.nmax, "largest moment index")->check(CLI::Range(0, 100));

  auto* verify = app.add_subcommand("verify", "run the acceptance suites");
  verify->add_option("--suite", cfg.suite, "suite name")->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", cfg.seed, "seed for the random samples");
  verify->add_flag("--json", cfg.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(cfg);
    Json out;
    if (center->parsed()) out = cmd_center_table(cfg);
    else if (iterated->parsed()) out = cmd_iterated(cfg);
    else if (melnikov->parsed()) out = cmd_melnikov(cfg);
    else if (moments->parsed()) out = cmd_moments(cfg);
    else if (zsp->parsed()) out = cmd_zspace(cfg);
    else if (factors->parsed()) out = cmd_factors(cfg);
    else if (cc->parsed()) out = cmd_cc(cfg);
    else if (definite->parsed()) out = cmd_definite(cfg);
    else if (report->parsed()) out = cmd_report(cfg);
    else if (tmoment->parsed()) out = cmd_trig_moment(cfg);
    else if (tfamily->parsed()) out = cmd_trig_family(cfg);
    if (cfg.json) std::cout << out.dump(2) << '\n';
    else print_text(out, "");
    return 0;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
