// liftfb: exact lifting-factorization toolkit for two-channel linear phase
// filter banks. Reads kind-tagged text files, emits line-delimited JSON.
// Exit codes: 0 success, 2 parse error, 3 domain precondition failure,
// 4 property violation, 1 anything else.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "liftfb/factor.hpp"
#include "liftfb/generators.hpp"
#include "liftfb/selftest.hpp"
#include "liftfb/textio.hpp"
#include "liftfb/vspace.hpp"

using json = nlohmann::json;
using namespace liftfb;

namespace {

bool g_pretty = false;

void emit(const json& j) {
  if (g_pretty) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << j.dump() << "\n";
  }
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SpecFile load(const std::string& path) { return parse_spec_file(slurp(path)); }

// matrix payload of a filters or matrix file
PolyMatrix load_matrix(const std::string& path) {
  const SpecFile f = load(path);
  switch (f.kind) {
    case SpecKind::Filters:
      return filters_to_polyphase(f.filters);
    case SpecKind::Matrix:
      return f.matrix;
    case SpecKind::Cascade:
      return cascade_eval(f.cascade.hoisted());
    default:
      throw DomainError("expected a filters, matrix, or cascade input");
  }
}

LiftingGroupSpec spec_by_name(const std::string& name) {
  if (name == "ws") return LiftingGroupSpec::ws();
  if (name == "hs") return LiftingGroupSpec::hs();
  if (name == "hs-cascade") return LiftingGroupSpec::hs_cascade();
  if (name == "any") return LiftingGroupSpec::unrestricted();
  throw DomainError("unknown class '" + name + "' (ws, hs, hs-cascade, any)");
}

json rational_json(const Rational& r) { return r.str(); }

json order_json(const std::optional<Exp>& o) {
  if (!o) return nullptr;
  return *o;
}

json signal_json(const Signal& s) {
  json samples = json::array();
  for (const auto& x : s.samples) samples.push_back(x.str());
  return json{{"origin", s.origin}, {"samples", samples}};
}

json matrix_report(const PolyMatrix& m) {
  json rep;
  rep["matrix"] = format_matrix(m);
  const auto cert = classify_pr(m);
  rep["fir_pr"] = cert.has_value();
  if (cert) {
    rep["scale"] = rational_json(cert->scale);
    rep["delay"] = cert->delay;
  }
  rep["unimodular"] = is_unimodular(m);
  rep["ws"] = is_ws(m);
  rep["hs"] = is_hs(m);
  rep["order"] = order_json(pm_order(m));
  return rep;
}

int cmd_verify(const std::string& path) {
  const SpecFile f = load(path);
  json rep;
  if (f.kind == SpecKind::Filters) {
    rep = matrix_report(filters_to_polyphase(f.filters));
    rep["kind"] = "filters";
    rep["h0"] = format_poly(f.filters.lowpass);
    rep["h1"] = format_poly(f.filters.highpass);
  } else if (f.kind == SpecKind::Matrix) {
    rep = matrix_report(f.matrix);
    rep["kind"] = "matrix";
  } else {
    throw DomainError("verify expects a filters or matrix input");
  }
  emit(rep);
  return 0;
}

int cmd_classify(const std::string& path) {
  const SpecFile f = load(path);
  PolyMatrix m;
  FilterPair fp;
  if (f.kind == SpecKind::Filters) {
    fp = f.filters;
    m = filters_to_polyphase(fp);
  } else if (f.kind == SpecKind::Matrix) {
    m = f.matrix;
    fp = polyphase_to_filters(m);
  } else {
    throw DomainError("classify expects a filters or matrix input");
  }
  json rep;
  rep["h0_class"] = to_string(symmetry_class(fp.lowpass));
  rep["h1_class"] = to_string(symmetry_class(fp.highpass));
  rep["h0_order"] = order_json(fp.lowpass.order());
  rep["h1_order"] = order_json(fp.highpass.order());
  rep["unimodular"] = is_unimodular(m);
  rep["ws"] = is_ws(m);
  rep["hs"] = is_hs(m);
  rep["hs_lifter"] = is_hs_lifter(m);
  rep["hs_equal_order_base"] = hs_base_membership(m);
  emit(rep);
  return 0;
}

int cmd_reduce(const std::string& path, const std::string& cls) {
  const SpecFile f = load(path);
  if (f.kind != SpecKind::Cascade) throw DomainError("reduce expects a cascade input");
  const LiftingGroupSpec spec = spec_by_name(cls);
  const Cascade reduced =
      cascade_reduce(f.cascade.scale, f.cascade.steps, f.cascade.base, spec);
  json rep;
  rep["cascade"] = format_cascade(reduced);
  rep["steps"] = reduced.steps.size();
  rep["irreducible"] = is_irreducible(reduced);
  rep["order_increasing"] = is_order_increasing(reduced);
  rep["eval"] = format_matrix(cascade_eval(reduced));
  rep["order"] = order_json(pm_order(cascade_eval(reduced)));
  emit(rep);
  return 0;
}

int cmd_factor(const std::string& path, const std::string& cls) {
  const PolyMatrix m = load_matrix(path);
  FactorizationResult r;
  if (cls == "ws") {
    r = factor_ws(m);
  } else if (cls == "hs") {
    r = factor_hs(m);
  } else {
    r = factor_in_group(m, spec_by_name(cls));
  }
  json rep;
  rep["ok"] = r.ok;
  if (!r.ok) {
    rep["note"] = r.note;
    if (r.residual) rep["residual"] = format_matrix(*r.residual);
    emit(rep);
    return 3;
  }
  rep["cascade"] = format_cascade(r.cascade);
  rep["verified"] = verify_factorization(m, r);
  rep["steps"] = r.cascade.steps.size();
  rep["gain"] = rational_json(r.cascade.scale);
  if (cls == "ws") rep["order_increasing"] = is_order_increasing(r.cascade);
  if (cls == "hs") {
    rep["coset_id_C"] = format_coset_id(hs_coset_id(m, CosetScheme::C));
    rep["coset_id_S"] = format_coset_id(hs_coset_id(m, CosetScheme::S));
  }
  emit(rep);
  return rep["verified"].get<bool>() ? 0 : 4;
}

int cmd_words(const std::string& gens_text, const std::string& gens_file, int max_len,
              int max_exp) {
  GroupWord gens;
  if (!gens_file.empty()) {
    const SpecFile f = load(gens_file);
    if (f.kind != SpecKind::Word) throw DomainError("--gens-file expects a word input");
    gens = f.word;
  } else {
    gens = parse_word(gens_text);
  }
  const auto found = relation_search(gens.tokens, max_len, max_exp);
  for (const auto& w : found) {
    emit(json{{"relation", format_word(w)}, {"length", w.length()}});
  }
  emit(json{{"generators", format_word(gens)},
            {"max_len", max_len},
            {"max_exp", max_exp},
            {"relations", found.size()}});
  return 0;
}

int cmd_cosets(const std::string& path1, const std::string& path2,
               const std::string& scheme_name, int witness_budget, std::uint64_t seed) {
  const CosetScheme scheme = scheme_name == "S" ? CosetScheme::S : CosetScheme::C;
  const PolyMatrix h1 = load_matrix(path1);
  json rep;
  rep["scheme"] = scheme_name;
  rep["coset_id"] = format_coset_id(hs_coset_id(h1, scheme));
  if (!path2.empty()) {
    const PolyMatrix h2 = load_matrix(path2);
    rep["coset_id_2"] = format_coset_id(hs_coset_id(h2, scheme));
    rep["same_right_coset"] = same_right_coset(h1, h2, scheme);
  }
  if (witness_budget > 0) {
    const PolyMatrix base = hs_coset_id(h1, CosetScheme::C).base;
    const LeftCosetWitness w = left_coset_counterexample(base, witness_budget, seed);
    json wj;
    wj["found"] = w.found;
    if (w.found) {
      wj["h"] = format_matrix(w.h);
      wj["lift"] = format_word(w.lift);
      wj["certificate"] = w.certificate;
    }
    rep["left_coset_witness"] = wj;
  }
  emit(rep);
  return 0;
}

int cmd_scaled(const std::string& mul_a, const std::string& mul_b, const std::string& inv,
               const std::string& to_matrix, const std::string& from_matrix,
               const std::string& cls) {
  json rep;
  if (!mul_a.empty() && !mul_b.empty()) {
    const SpecFile a = load(mul_a), b = load(mul_b);
    if (a.kind != SpecKind::Scaled || b.kind != SpecKind::Scaled) {
      throw DomainError("scaled --mul expects two scaled inputs");
    }
    const ScaledElement r = semidirect_mul(a.scaled, b.scaled);
    rep["op"] = "mul";
    rep["result"] = format_scaled(r);
    rep["matrix"] = format_matrix(scaled_to_matrix(r));
  } else if (!inv.empty()) {
    const SpecFile a = load(inv);
    if (a.kind != SpecKind::Scaled) throw DomainError("scaled --inv expects a scaled input");
    const ScaledElement r = semidirect_inv(a.scaled);
    rep["op"] = "inv";
    rep["result"] = format_scaled(r);
    rep["matrix"] = format_matrix(scaled_to_matrix(r));
  } else if (!to_matrix.empty()) {
    const SpecFile a = load(to_matrix);
    if (a.kind != SpecKind::Scaled) {
      throw DomainError("scaled --to-matrix expects a scaled input");
    }
    rep["op"] = "to-matrix";
    rep["matrix"] = format_matrix(scaled_to_matrix(a.scaled));
  } else if (!from_matrix.empty()) {
    const ScaledElement r = matrix_to_scaled(load_matrix(from_matrix), spec_by_name(cls));
    rep["op"] = "from-matrix";
    rep["result"] = format_scaled(r);
  } else {
    throw DomainError("scaled requires one of --mul, --inv, --to-matrix, --from-matrix");
  }
  emit(rep);
  return 0;
}

int cmd_apply(const std::string& signal_path, const std::string& bank_path,
              const std::string& y0_path, const std::string& y1_path) {
  const PolyMatrix bank = load_matrix(bank_path);
  json rep;
  if (!y0_path.empty() || !y1_path.empty()) {
    if (y0_path.empty() || y1_path.empty()) {
      throw DomainError("synthesis needs both --y0 and --y1");
    }
    const SpecFile f0 = load(y0_path), f1 = load(y1_path);
    if (f0.kind != SpecKind::SignalData || f1.kind != SpecKind::SignalData) {
      throw DomainError("synthesis expects signal inputs");
    }
    rep["op"] = "synthesize";
    rep["signal"] = signal_json(synthesize(f0.signal, f1.signal, bank));
  } else {
    const SpecFile fx = load(signal_path);
    if (fx.kind != SpecKind::SignalData) throw DomainError("apply expects a signal input");
    const auto [y0, y1] = analyze(fx.signal, bank);
    rep["op"] = "analyze";
    rep["lowpass"] = signal_json(y0);
    rep["highpass"] = signal_json(y1);
  }
  emit(rep);
  return 0;
}

int cmd_selftest(std::uint64_t seed) {
  const auto results = run_selftest(seed);
  long failures = 0;
  for (const auto& r : results) {
    json rep;
    rep["family"] = r.family;
    rep["cases"] = r.cases;
    rep["failures"] = r.failures;
    if (r.failures > 0) rep["witness"] = r.witness;
    emit(rep);
    failures += r.failures;
  }
  emit(json{{"families", results.size()}, {"total_failures", failures}, {"seed", seed}});
  return failures == 0 ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lifting factorizations of two-channel linear phase filter banks"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "output format: json or pretty")
      ->check(CLI::IsMember({"json", "pretty"}));

  std::string in1, in2, cls = "ws", scheme = "C";
  std::uint64_t seed = 1;
  int max_len = 12, max_exp = 1, witness = 0;
  std::string gens_text, gens_file;
  std::string mul_a, mul_b, inv, to_matrix, from_matrix;
  std::string bank, y0, y1;

  auto* verify = app.add_subcommand("verify", "FIR-PR, unimodular, WS/HS predicates");
  verify->add_option("input", in1, "filters or matrix file ('-' for stdin)")->required();

  auto* classify = app.add_subcommand("classify", "symmetry classes of the filter pair");
  classify->add_option("input", in1)->required();

  auto* reduce = app.add_subcommand("reduce", "reduce a cascade to irreducible form");
  reduce->add_option("input", in1, "cascade file")->required();
  reduce->add_option("--class", cls, "lifting class: ws, hs, hs-cascade, any")
      ->default_val("any");

  auto* factor = app.add_subcommand("factor", "peel a matrix into lifting steps");
  factor->add_option("input", in1, "matrix, filters, or cascade file")->required();
  factor->add_option("--class", cls, "ws, hs, hs-cascade, any")->required();

  auto* words = app.add_subcommand("words", "bounded search for lifting relations");
  words->add_option("--gens", gens_text, "generator tokens, word text form");
  words->add_option("--gens-file", gens_file, "word file with generator tokens");
  words->add_option("--max-len", max_len, "maximum word length")->default_val(12);
  words->add_option("--max-exp", max_exp, "cyclic exponent bound")->default_val(1);

  auto* cosets = app.add_subcommand("cosets", "HS right-coset ids and comparisons");
  cosets->add_option("input", in1, "HS matrix or filters file")->required();
  cosets->add_option("input2", in2, "optional second HS input");
  cosets->add_option("--scheme", scheme, "C or S")->check(CLI::IsMember({"C", "S"}));
  cosets->add_option("--left-witness", witness,
                     "search budget for a left-coset counterexample");
  cosets->add_option("--seed", seed, "seed for the witness search");

  auto* scaled = app.add_subcommand("scaled", "semidirect-product arithmetic");
  scaled->add_option("--mul", mul_a, "left operand (scaled file)");
  scaled->add_option("--by", mul_b, "right operand (scaled file)");
  scaled->add_option("--inv", inv, "invert a scaled element");
  scaled->add_option("--to-matrix", to_matrix, "realize a scaled element");
  scaled->add_option("--from-matrix", from_matrix, "factor a matrix into (K, word)");
  scaled->add_option("--class", cls, "ws, hs-cascade, any")->default_val("ws");

  auto* apply = app.add_subcommand("apply", "exact analysis/synthesis of signals");
  apply->add_option("input", in1, "signal file (analysis)");
  apply->add_option("--bank", bank, "filters or matrix file")->required();
  apply->add_option("--y0", y0, "lowpass subband file (synthesis)");
  apply->add_option("--y1", y1, "highpass subband file (synthesis)");

  auto* selftest = app.add_subcommand("selftest", "run the property-family suite");
  selftest->add_option("--seed", seed, "RNG seed")->default_val(1);

  CLI11_PARSE(app, argc, argv);
  g_pretty = format == "pretty";

  try {
    if (*verify) return cmd_verify(in1);
    if (*classify) return cmd_classify(in1);
    if (*reduce) return cmd_reduce(in1, cls);
    if (*factor) return cmd_factor(in1, cls);
    if (*words) return cmd_words(gens_text, gens_file, max_len, max_exp);
    if (*cosets) return cmd_cosets(in1, in2, scheme, witness, seed);
    if (*scaled) return cmd_scaled(mul_a, mul_b, inv, to_matrix, from_matrix, cls);
    if (*apply) return cmd_apply(in1, bank, y0, y1);
    if (*selftest) return cmd_selftest(seed);
  } catch (const ParseError& e) {
    std::cerr << json{{"error", "parse"},
                      {"message", e.what()},
                      {"line", e.line()},
                      {"column", e.column()}}
                     .dump()
              << "\n";
    return 2;
  } catch (const PropertyViolation& e) {
    std::cerr << json{{"error", "property"}, {"message", e.what()}}.dump() << "\n";
    return 4;
  } catch (const DomainError& e) {
    std::cerr << json{{"error", "domain"}, {"message", e.what()}}.dump() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}
