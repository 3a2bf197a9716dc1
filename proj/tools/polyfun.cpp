// Command-line front end. Every subcommand parses its inputs, dispatches to
// one library operation, and prints a canonical JSON report: sorted keys, no
// floats, scalars as strings. The report always carries the command, an echo
// of the resolved inputs, the exact operation invoked, the result, and the
// wall time; identical configuration yields identical reports except for the
// timing field. Exit status: 0 on success, 2 for malformed input of any
// kind, 3 when a budget runs out.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polyfun/apply_map.hpp"
#include "polyfun/dense.hpp"
#include "polyfun/derivative.hpp"
#include "polyfun/element.hpp"
#include "polyfun/error.hpp"
#include "polyfun/fp.hpp"
#include "polyfun/json_io.hpp"
#include "polyfun/lessdot.hpp"
#include "polyfun/limits.hpp"
#include "polyfun/lr.hpp"
#include "polyfun/matrix.hpp"
#include "polyfun/partition.hpp"
#include "polyfun/quasiorder2.hpp"
#include "polyfun/rational.hpp"
#include "polyfun/shift.hpp"
#include "polyfun/strength.hpp"

using namespace polyfun;

namespace {

// Everything that shapes a run. The seed fully determines sampled inputs;
// library operations themselves are deterministic given their arguments.
struct JobConfig {
  std::string field = "q";
  long long budget = -1;  // -1 keeps each operation's own default
  int workers = 0;        // 0 resolves from POLYFUN_WORKERS, then the hardware
  std::uint64_t seed = 1;
  std::string out;        // optional path for a copy of the report
  std::string save;       // optional path for the produced object file
};

// What one subcommand hands back to the report writer.
struct Outcome {
  std::string operation;
  Json inputs = Json::object();
  Json result = Json::object();
};

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw error("MalformedInput", "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw error("MalformedInput", "bad JSON in " + path + ": " + e.what());
  }
}

void save_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out.good()) throw error("MalformedInput", "cannot write " + path);
  out << json_dump(j);
}

std::uint64_t field_modulus(const std::string& field) {
  if (field.rfind("fp:", 0) != 0)
    throw error("MalformedInput", "field must be 'q' or 'fp:<prime>': " + field);
  return detail::parse_u64(field.substr(3), "field modulus");
}

// Runs fn with the unit scalar of the requested field.
template <class Fn>
Json with_field(const std::string& field, Fn&& fn) {
  if (field == "q") return fn(Rational(1));
  return fn(Fp(1, field_modulus(field)));
}

// Partitions read as comma-separated parts, with or without parentheses.
Partition parse_partition(std::string s) {
  std::erase_if(s, [](char c) { return c == '(' || c == ')' || c == ' '; });
  Partition p;
  std::size_t start = 0;
  while (start < s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    p.push_back(static_cast<int>(detail::parse_u64(s.substr(start, comma - start), "partition part")));
    start = comma + 1;
  }
  return p;
}

// ----------------------------------------------------------- subcommands

Outcome run_strength(const JobConfig& job, const std::string& matrix_path, const std::string& mode,
                     const std::string& unipotent, const std::string& image_spec, int image_degree,
                     const std::string& cert_path) {
  if (job.field != "q")
    throw error("MalformedInput", "strength certificates use exact rational arithmetic; run with --field q");
  Outcome out;
  int given = (!matrix_path.empty()) + (!unipotent.empty()) + (!image_spec.empty());
  if (given != 1)
    throw error("MalformedInput", "pick exactly one of --matrix, --unipotent, --image-spec");

  if (!unipotent.empty()) {
    out.operation = "strength_unipotent";
    out.inputs = {{"x", unipotent}};
    UnipotentResult r = strength_unipotent(Rational::parse(unipotent));
    out.result["strength"] = r.strength;
    if (r.quadratic)
      out.result["quadratic"] = Json{(*r.quadratic)[0].str(), (*r.quadratic)[1].str(), (*r.quadratic)[2].str()};
    if (r.certificate) {
      out.result["certificate"] = certificate_json(*r.certificate);
      if (!cert_path.empty()) save_json(cert_path, certificate_json(*r.certificate));
    }
    return out;
  }
  if (!image_spec.empty()) {
    out.operation = "image_strength_bound";
    out.inputs = {{"degree", image_degree}, {"spec", image_spec}};
    out.result["bound"] = image_strength_bound(FunctorSpec::parse(image_spec), image_degree);
    return out;
  }

  out.operation = "strength_deg2";
  out.inputs = {{"matrix", matrix_path}, {"mode", mode}};
  Matrix<Rational> m = matrix_parse<Rational>(load_json(matrix_path));
  Deg2Mode dm = mode == "sym" ? Deg2Mode::Sym : mode == "alt" ? Deg2Mode::Alt : Deg2Mode::Full;
  if (mode != "sym" && mode != "alt" && mode != "full")
    throw error("MalformedInput", "mode must be sym, alt or full");
  Deg2Result r = strength_deg2(m, dm);
  out.result["lower"] = r.lower;
  out.result["upper"] = r.upper;
  if (r.certificate) {
    if ((dm == Deg2Mode::Sym || dm == Deg2Mode::Alt) && !verify_deg2_certificate(*r.certificate, m))
      throw error("Internal", "emitted certificate failed re-verification");
    out.result["certificate"] = certificate_json(*r.certificate);
    if (!cert_path.empty()) save_json(cert_path, certificate_json(*r.certificate));
  }
  return out;
}

Outcome run_lr(const std::string& lambda, const std::string& mu, const std::string& nu) {
  Outcome out;
  out.operation = "lr_coefficient";
  out.inputs = {{"lambda", lambda}, {"mu", mu}, {"nu", nu}};
  out.result["coefficient"] =
      lr_coefficient(parse_partition(lambda), parse_partition(mu), parse_partition(nu));
  return out;
}

Outcome run_derive(const std::string& spec_text, int n) {
  Outcome out;
  out.operation = "derivative_spec";
  out.inputs = {{"n", n}, {"spec", spec_text}};
  FunctorSpec p = FunctorSpec::parse(spec_text);
  FunctorSpec dp = derivative_spec(p);
  out.result["derivative"] = dp.str();
  out.result["dim"] = spec_dim(dp, n);
  out.result["input_dim"] = spec_dim(p, n);
  return out;
}

Outcome run_shift(const JobConfig& job, const std::string& spec_text, const std::string& element_path,
                  int m, int k, int j) {
  Outcome out;
  if (!element_path.empty()) {
    out.operation = "shift_decompose";
    out.inputs = {{"element", element_path}, {"m", m}};
    out.result["components"] = with_field(job.field, [&](auto one) {
      using F = decltype(one);
      Element<F> e = element_parse<F>(load_json(element_path));
      Json comps = Json::array();
      for (const auto& c : shift_decompose(e, m)) comps.push_back(element_json(c));
      return Json(std::move(comps));
    });
    return out;
  }
  out.operation = "shift_component_dim";
  out.inputs = {{"j", j}, {"k", k}, {"m", m}, {"spec", spec_text}};
  out.result["dim"] = shift_component_dim(FunctorSpec::parse(spec_text), m, k, j);
  return out;
}

Outcome run_lessdot(const std::string& q_text, const std::string& p_text) {
  Outcome out;
  out.operation = "lessdot";
  out.inputs = {{"p", p_text}, {"q", q_text}};
  out.result["lessdot"] = lessdot(FunctorSpec::parse(q_text), FunctorSpec::parse(p_text));
  return out;
}

Outcome run_minimal_q(const JobConfig& job, const std::string& spec_text, int blocks, bool pure_power,
                      bool verify) {
  Outcome out;
  out.operation = "minimal_q";
  out.inputs = {{"blocks", blocks}, {"pure_power", pure_power}, {"spec", spec_text}};
  out.result = with_field(job.field, [&](auto one) {
    auto q = minimal_q(FunctorSpec::parse(spec_text), blocks, one, pure_power);
    Json r{{"truncation", truncated_json(q)}};
    if (verify) r["coherent"] = coherence_check(q);
    if (!job.save.empty()) save_json(job.save, truncated_json(q));
    return r;
  });
  return out;
}

Outcome run_maximal_r(const JobConfig& job, int degree, int depth, bool verify) {
  Outcome out;
  out.operation = "maximal_r";
  out.inputs = {{"degree", degree}, {"depth", depth}};
  out.result = with_field(job.field, [&](auto one) {
    auto r = maximal_r(degree, depth, PairingInjection{degree}, one);
    Json res{{"truncation", truncated_json(r)}};
    if (verify) res["coherent"] = coherence_check(r);
    if (!job.save.empty()) save_json(job.save, truncated_json(r));
    return res;
  });
  return out;
}

Outcome run_specialize(const JobConfig& job, const std::string& target_path, int blocks, bool search,
                       bool pure_power) {
  Outcome out;
  out.inputs = {{"blocks", blocks}, {"search", search}, {"target", target_path}};
  if (search) {
    out.operation = "minimal_specializer_search";
    if (job.field == "q")
      throw error("MalformedInput", "the search enumerates maps over a finite prime field; use --field fp:<p>");
    Fp one(1, field_modulus(job.field));
    auto p = truncated_parse<Fp>(load_json(target_path));
    SearchOptions opt;
    if (job.budget >= 0) opt.budget = job.budget;
    opt.workers = job.workers;
    auto w = minimal_specializer_search(p, p.spec, blocks, one, opt);
    if (!witness_reverify(w)) throw error("Internal", "search returned a witness that fails re-verification");
    out.result = {{"verified_levels", Json(w.verified_levels)}, {"witness", witness_json(w)}};
    if (!job.save.empty()) save_json(job.save, witness_json(w));
    return out;
  }
  out.operation = "specializer_to_target";
  out.result = with_field(job.field, [&](auto one) {
    using F = decltype(one);
    Element<F> g = element_parse<F>(load_json(target_path));
    auto q = minimal_q(g.spec, blocks, one, pure_power);
    Matrix<F> phi = specializer_to_target(q, g);
    bool ok = apply_map(phi, q.layers.back()) == g;
    if (!ok) throw error("Internal", "constructive specializer failed its own check");
    Json r{{"matrix", matrix_json(phi)}, {"verified", true}};
    if (!job.save.empty()) save_json(job.save, matrix_json(phi));
    return r;
  });
  return out;
}

Outcome run_specialize2(const JobConfig& job, const std::string& stream_path, const std::string& kind,
                        int level) {
  Outcome out;
  out.operation = "deg2_specializer";
  out.inputs = {{"kind", kind}, {"level", level}, {"stream", stream_path}};
  Json sj = load_json(stream_path);
  out.result = with_field(job.field, [&](auto one) {
    using F = decltype(one);
    EElementTrunc<F> e{{}, EElementTrunc<F>::Tail::Zero, one};
    Element<F> want;
    if (kind == "mixed") {
      if (sj.is_object() && sj.contains("a"))
        throw error("MalformedInput", "this is a single-form stream; use --kind quadric or alternating");
      MixedStream<F> ms = mixed_stream_parse<F>(sj);
      if (ms.linear.empty() && ms.quadric.empty() && ms.alternating.empty())
        throw error("MalformedInput", "mixed stream has no components");
      e = deg2_specializer(ms, level, one);
      want = mixed_stream_element(ms, level);
      const int a = static_cast<int>(ms.linear.size());
      const int width = 2 * level * (static_cast<int>(ms.quadric.size() + ms.alternating.size()));
      auto src = canonical_deg2(a, static_cast<int>(ms.quadric.size()),
                                static_cast<int>(ms.alternating.size()), {a + width}, one);
      if (!(e_apply(e, src, level) == want))
        throw error("Internal", "banded matrix failed its reproduction guarantee");
    } else if (kind == "quadric" || kind == "alternating") {
      Deg2Kind dk = kind == "quadric" ? Deg2Kind::Quadric : Deg2Kind::Alternating;
      CoeffStream<F> s = stream_parse<F>(sj);
      e = deg2_specializer(s, level, dk, one);
      want = stream_element(s, level, dk);
      auto src = minimal_q(dk == Deg2Kind::Quadric ? FunctorSpec::parse("S2") : FunctorSpec::parse("E2"),
                           level, one);
      if (!(e_apply(e, src, level) == want))
        throw error("Internal", "banded matrix failed its reproduction guarantee");
    } else {
      throw error("MalformedInput", "kind must be quadric, alternating or mixed");
    }
    Json r{{"e", e_element_json(e)}, {"verified", true}};
    if (!job.save.empty()) save_json(job.save, e_element_json(e));
    return r;
  });
  return out;
}

Outcome run_e_apply(const JobConfig& job, const std::string& e_path, const std::string& p_path, int level) {
  Outcome out;
  out.operation = "e_apply";
  out.inputs = {{"e", e_path}, {"level", level}, {"p", p_path}};
  out.result = with_field(job.field, [&](auto one) {
    using F = decltype(one);
    auto e = e_element_parse<F>(load_json(e_path), one);
    auto p = truncated_parse<F>(load_json(p_path));
    return Json{{"element", element_json(e_apply(e, p, level))}};
  });
  return out;
}

Outcome run_orbit_check(const JobConfig& job, const std::string& input_path, const std::string& spec_text,
                        int blocks, int m, const std::string& mode, int samples, bool pure_power) {
  Outcome out;
  out.operation = "orbit_image_full_check";
  out.inputs = {{"blocks", blocks}, {"input", input_path}, {"m", m},
                {"mode", mode},     {"samples", samples},  {"seed", job.seed},
                {"spec", spec_text}};
  if (mode != "exhaustive" && mode != "span")
    throw error("MalformedInput", "mode must be exhaustive or span");
  out.result = with_field(job.field, [&](auto one) {
    using F = decltype(one);
    TruncatedElement<F> q;
    if (!input_path.empty()) {
      q = truncated_parse<F>(load_json(input_path));
    } else if (!spec_text.empty()) {
      q = minimal_q(FunctorSpec::parse(spec_text), blocks, one, pure_power);
    } else {
      throw error("MalformedInput", "give --input or --spec/--blocks");
    }
    OrbitOptions opt;
    if (job.budget >= 0) opt.budget = job.budget;
    opt.workers = job.workers;
    opt.seed = job.seed;
    opt.samples = samples;
    bool exhaustive = mode == "exhaustive";
    bool full = orbit_image_full_check(q, m, exhaustive ? OrbitMode::Exhaustive : OrbitMode::Span,
                                       one, opt);
    // Span mode proves fullness but cannot refute it; a false is only
    // "no proof found with these samples".
    return Json{{"conclusive", exhaustive || full}, {"full", full}};
  });
  return out;
}

Outcome run_omega_check(const JobConfig& job, const std::string& spec_text, int n) {
  Outcome out;
  out.operation = "omega_check";
  out.inputs = {{"n", n}, {"spec", spec_text}};
  out.result = with_field(job.field, [&](auto one) {
    OmegaReport rep = omega_check(FunctorSpec::parse(spec_text), n, one);
    Json parts = Json::array();
    for (const auto& p : rep.parts)
      parts.push_back(Json{{"dim", p.dim}, {"rank", p.rank}, {"summand", p.summand.str()}});
    return Json{{"ok", rep.ok}, {"parts", std::move(parts)}};
  });
  return out;
}

Outcome run_classify2(const JobConfig& job, const std::string& input_path) {
  Outcome out;
  out.operation = "classify_deg2";
  out.inputs = {{"input", input_path}};
  Json j = load_json(input_path);
  out.result = with_field(job.field, [&](auto one) {
    using F = decltype(one);
    (void)one;
    auto cls = j.contains("levels") ? classify_deg2(truncated_parse<F>(j))
                                    : classify_deg2(element_parse<F>(j));
    return Json{{"class", deg2_class_json(cls)}, {"description", cls.describe()}};
  });
  return out;
}

Outcome run_verify_witness(const JobConfig& job, const std::string& witness_path) {
  Outcome out;
  out.operation = "witness_reverify";
  out.inputs = {{"witness", witness_path}};
  Json j = load_json(witness_path);
  out.result = with_field(job.field, [&](auto one) {
    using F = decltype(one);
    auto w = witness_parse<F>(j, one);
    return Json{{"valid", witness_reverify(w)}, {"verified_levels", Json(w.verified_levels)}};
  });
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculator for polynomial functor spaces: strength, specialization, classification"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name

  JobConfig job;
  app.add_option("--field", job.field, "scalar field: q or fp:<prime>")->capture_default_str();
  app.add_option("--budget", job.budget, "work cap for search/enumeration (-1 = operation default)");
  app.add_option("--workers", job.workers, "worker threads (0 = POLYFUN_WORKERS or hardware)");
  app.add_option("--seed", job.seed, "seed for sampled inputs")->capture_default_str();
  app.add_option("--out", job.out, "also write the report to this path");
  app.add_option("--save", job.save, "write the produced object (truncation/witness/matrix) here");

  std::string matrix_path, mode = "sym", unipotent, image_spec;
  int image_degree = 0;
  std::string cert_path;
  auto* c_strength = app.add_subcommand("strength", "degree-2 strength with certificate");
  c_strength->add_option("--matrix", matrix_path, "matrix JSON over Q");
  c_strength->add_option("--mode", mode, "sym | alt | full")->capture_default_str();
  c_strength->add_option("--unipotent", unipotent, "parameter x of the 2x2 unipotent family");
  c_strength->add_option("--image-spec", image_spec, "functor spec for the image bound");
  c_strength->add_option("--image-degree", image_degree, "degree d for the image bound");
  c_strength->add_option("--cert", cert_path, "write the certificate JSON here");

  std::string lambda, mu, nu;
  auto* c_lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
  c_lr->add_option("--lambda", lambda, "outer partition, e.g. 3,1")->required();
  c_lr->add_option("--mu", mu, "first inner partition");
  c_lr->add_option("--nu", nu, "second inner partition");

  std::string d_spec;
  int d_n = 0;
  auto* c_derive = app.add_subcommand("derive", "derivative functor and its dimension");
  c_derive->add_option("--spec", d_spec, "functor spec, e.g. S3+E2")->required();
  c_derive->add_option("--n", d_n, "variable count")->required();

  std::string s_spec, s_element;
  int s_m = 0, s_k = 0, s_j = 0;
  auto* c_shift = app.add_subcommand("shift", "shift bidegree decomposition / component dims");
  c_shift->add_option("--spec", s_spec, "functor spec (dimension mode)");
  c_shift->add_option("--element", s_element, "element JSON (decomposition mode)");
  c_shift->add_option("--m", s_m, "variables kept")->required();
  c_shift->add_option("--k", s_k, "variables shifted in");
  c_shift->add_option("--j", s_j, "V-degree of the component");

  std::string ld_q, ld_p;
  auto* c_lessdot = app.add_subcommand("lessdot", "one-step order on functor specs");
  c_lessdot->add_option("--q", ld_q, "candidate smaller spec")->required();
  c_lessdot->add_option("--p", ld_p, "candidate larger spec")->required();

  std::string mq_spec;
  int mq_blocks = 0;
  bool mq_power = false, mq_verify = false;
  auto* c_minq = app.add_subcommand("minimal-q", "block element truncation");
  c_minq->add_option("--spec", mq_spec, "functor spec")->required();
  c_minq->add_option("--blocks", mq_blocks, "rounds of blocks")->required();
  c_minq->add_flag("--pure-power", mq_power, "pure powers instead of squarefree generators");
  c_minq->add_flag("--verify", mq_verify, "run the coherence check");

  int mr_degree = 0, mr_depth = 0;
  bool mr_verify = false;
  auto* c_maxr = app.add_subcommand("maximal-r", "nested tensor element truncation");
  c_maxr->add_option("--degree", mr_degree, "tensor degree d")->required();
  c_maxr->add_option("--depth", mr_depth, "variable-index cutoff")->required();
  c_maxr->add_flag("--verify", mr_verify, "run the coherence check");

  std::string sp_target;
  int sp_blocks = 0;
  bool sp_search = false, sp_power = false;
  auto* c_spec = app.add_subcommand("specialize", "map the block element onto a target");
  c_spec->add_option("--target", sp_target, "target element JSON (or truncation JSON with --search)")
      ->required();
  c_spec->add_option("--blocks", sp_blocks, "blocks available in the source")->required();
  c_spec->add_flag("--search", sp_search, "round-by-round search over a prime field");
  c_spec->add_flag("--pure-power", sp_power, "pure-power source generators");

  std::string s2_stream, s2_kind = "quadric";
  int s2_level = 0;
  auto* c_spec2 = app.add_subcommand("specialize2", "banded specializer from a coefficient stream");
  c_spec2->add_option("--stream", s2_stream, "coefficient stream JSON")->required();
  c_spec2->add_option("--kind", s2_kind, "quadric | alternating | mixed")->capture_default_str();
  c_spec2->add_option("--level", s2_level, "requested level (even)")->required();

  std::string ea_e, ea_p;
  int ea_level = 0;
  auto* c_eapply = app.add_subcommand("e-apply", "apply an E-element to a truncation");
  c_eapply->add_option("--e", ea_e, "E-element JSON")->required();
  c_eapply->add_option("--p", ea_p, "truncation JSON")->required();
  c_eapply->add_option("--level", ea_level, "output level")->required();

  std::string oc_input, oc_spec, oc_mode = "span";
  int oc_blocks = 0, oc_m = 0, oc_samples = 200;
  bool oc_power = false;
  auto* c_orbit = app.add_subcommand("orbit-check", "does the orbit image fill the target layer?");
  c_orbit->add_option("--input", oc_input, "truncation JSON");
  c_orbit->add_option("--spec", oc_spec, "build the block element instead");
  c_orbit->add_option("--blocks", oc_blocks, "blocks for --spec");
  c_orbit->add_option("--m", oc_m, "target variable count")->required();
  c_orbit->add_option("--mode", oc_mode, "exhaustive (finite field) | span")->capture_default_str();
  c_orbit->add_option("--samples", oc_samples, "span-mode endomorphisms per summand")
      ->capture_default_str();
  c_orbit->add_flag("--pure-power", oc_power, "pure-power source generators");

  std::string om_spec;
  int om_n = 0;
  auto* c_omega = app.add_subcommand("omega-check", "substitution-derivative full-rank check");
  c_omega->add_option("--spec", om_spec, "functor spec")->required();
  c_omega->add_option("--n", om_n, "variable count")->required();

  std::string cl_input;
  auto* c_classify = app.add_subcommand("classify2", "degree-<=2 classification");
  c_classify->add_option("--input", cl_input, "element or truncation JSON")->required();

  std::string vw_path;
  auto* c_verify = app.add_subcommand("verify-witness", "re-verify a stored witness");
  c_verify->add_option("--witness", vw_path, "witness JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::string command = app.get_subcommands().front()->get_name();
  auto start = std::chrono::steady_clock::now();
  try {
    Outcome oc;
    if (*c_strength)
      oc = run_strength(job, matrix_path, mode, unipotent, image_spec, image_degree, cert_path);
    else if (*c_lr)
      oc = run_lr(lambda, mu, nu);
    else if (*c_derive)
      oc = run_derive(d_spec, d_n);
    else if (*c_shift)
      oc = run_shift(job, s_spec, s_element, s_m, s_k, s_j);
    else if (*c_lessdot)
      oc = run_lessdot(ld_q, ld_p);
    else if (*c_minq)
      oc = run_minimal_q(job, mq_spec, mq_blocks, mq_power, mq_verify);
    else if (*c_maxr)
      oc = run_maximal_r(job, mr_degree, mr_depth, mr_verify);
    else if (*c_spec)
      oc = run_specialize(job, sp_target, sp_blocks, sp_search, sp_power);
    else if (*c_spec2)
      oc = run_specialize2(job, s2_stream, s2_kind, s2_level);
    else if (*c_eapply)
      oc = run_e_apply(job, ea_e, ea_p, ea_level);
    else if (*c_orbit)
      oc = run_orbit_check(job, oc_input, oc_spec, oc_blocks, oc_m, oc_mode, oc_samples, oc_power);
    else if (*c_omega)
      oc = run_omega_check(job, om_spec, om_n);
    else if (*c_classify)
      oc = run_classify2(job, cl_input);
    else if (*c_verify)
      oc = run_verify_witness(job, vw_path);
    else
      throw error("Internal", "unreachable: no subcommand matched");

    auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    oc.inputs["field"] = job.field;
    Json report{{"command", command},
                {"inputs", std::move(oc.inputs)},
                {"operation", oc.operation},
                {"result", std::move(oc.result)},
                {"wall_ms", wall}};
    if (!job.save.empty()) report["witness_path"] = job.save;
    if (!cert_path.empty()) report["witness_path"] = cert_path;
    std::cout << json_dump(report);
    if (!job.out.empty()) save_json(job.out, report);
    return 0;
  } catch (const error& e) {
    Json report{{"command", command}, {"detail", e.what()}, {"error", e.code()}};
    std::cout << json_dump(report);
    if (!job.out.empty()) {
      std::ofstream out(job.out);
      if (out.good()) out << json_dump(report);
    }
    return e.code() == "BudgetExceeded" ? 3 : 2;
  }
}
