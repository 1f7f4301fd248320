#pragma once

// Command-line driver. Exit codes: 0 success, 1 verification failure,
// 2 usage or parse error.

#include "pfhpd/bundle_expr.hpp"
#include "pfhpd/hilbert.hpp"
#include "pfhpd/hpd.hpp"
#include "pfhpd/json_io.hpp"
#include "pfhpd/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace pfhpd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// What a subcommand produces: a JSON payload, a text rendering of it, and
/// whether it verified.
struct CommandResult {
  Json inputs = Json::object();
  Json result;
  std::string text;
  bool failed = false;
  std::vector<std::string> warnings;
};

namespace detail {

inline std::string format_term_text(const Term& t, bool ty) {
  std::string s = "[" + format_weight(t.bundle.beta) + " | " + format_weight(t.bundle.gamma);
  if (ty) s += " | hy " + std::to_string(t.hy) + " | fiber " + format_weight(t.fiber);
  s += "] x " + format_rep(t.coeff) + " at position " + std::to_string(t.degree);
  return s;
}

inline std::string format_object_text(const EquivariantObject& o) {
  if (o.is_zero()) return "0\n";
  std::string s;
  for (const Term& t : o.terms()) s += "  " + format_term_text(t, o.space().is_ty()) + "\n";
  return s;
}

inline std::string format_answer_text(const ExtAnswer& a) {
  std::ostringstream os;
  if (a.is_exact()) {
    if (a.exact().is_zero()) os << "0 in all degrees\n";
    for (const auto& [d, r] : a.exact().degrees()) {
      os << "H^" << d << " = " << format_rep(r) << "  (dim " << to_decimal(dimension(r)) << ")\n";
    }
  } else {
    os << "not exact: the first page admits cancellation\n";
    os << "lower: " << format_graded(a.bounds().lower) << "\n";
    os << "upper: " << format_graded(a.bounds().upper) << "\n";
  }
  os << "euler characteristic: " << format_rep(euler_characteristic(a)) << "  (dim "
     << to_decimal(dimension(euler_characteristic(a))) << ")\n";
  os << "(representations of GL(W), recorded on W*)\n";
  return os.str();
}

inline Elaborated elaborate_arg(const std::string& text, const Space& space, CommandResult& out) {
  Elaborated e = parse_bundle(text, space);
  out.warnings.insert(out.warnings.end(), e.warnings.begin(), e.warnings.end());
  return e;
}

}  // namespace detail

inline CommandResult cmd_bbw(std::size_t rank, const std::string& weight) {
  CommandResult o;
  Weight w = parse_weight(weight);
  if (w.rank() != rank) {
    throw RankMismatch("--weight has " + std::to_string(w.rank()) + " entries but --rank is " +
                       std::to_string(rank));
  }
  o.inputs = {{"rank", rank}, {"weight", to_json(w)}};
  const BBWOutcome r = bbw_reduce(w);
  o.result = to_json(r);
  if (!r) {
    o.text = "acyclic: alpha + rho has a repeated entry\n";
  } else {
    o.text = "H^" + std::to_string(r->degree) + " = S(" + format_weight(r->weight) +
             ") V*, dim " + to_decimal(dimension(r->weight)) + "; all other degrees vanish\n";
  }
  return o;
}

inline CommandResult cmd_cohomology(const std::string& space_text, const std::string& expr) {
  CommandResult o;
  const Space space = parse_space(space_text);
  const Elaborated e = detail::elaborate_arg(expr, space, o);
  o.inputs = {{"space", space.name()}, {"expr", format_bundle_expr(*parse_bundle_expr(expr))}};
  const ExtAnswer a = cohomology(e.object);
  o.result = to_json(a);
  o.text = detail::format_answer_text(a);
  return o;
}

inline CommandResult cmd_ext(const std::string& space_text, const std::string& lhs,
                       const std::string& rhs) {
  CommandResult o;
  const Space space = parse_space(space_text);
  const Elaborated a = detail::elaborate_arg(lhs, space, o);
  const Elaborated b = detail::elaborate_arg(rhs, space, o);
  o.inputs = {{"space", space.name()},
              {"source", format_bundle_expr(*parse_bundle_expr(lhs))},
              {"target", format_bundle_expr(*parse_bundle_expr(rhs))}};
  const ExtAnswer r = ext(a.object, b.object);
  o.result = to_json(r);
  o.text = detail::format_answer_text(r);
  return o;
}

inline CommandResult cmd_pushforward(std::size_t n, Entry t, const std::string& expr) {
  CommandResult o;
  const Space space = Space::ty(n);
  const Elaborated e = detail::elaborate_arg(expr, space, o);
  o.inputs = {{"n", n}, {"twist", t}, {"expr", format_bundle_expr(*parse_bundle_expr(expr))}};
  const EquivariantObject p = projbundle_pushforward(n, t, e.object);
  o.result = to_json(p);
  o.text = "zeta_*(" + format_bundle_expr(*parse_bundle_expr(expr)) + " (" + std::to_string(t) +
           "H_Y)) on " + p.space().name() + ", terms [beta | gamma] (position p means degree p):\n" +
           detail::format_object_text(p);
  return o;
}

inline CommandResult cmd_hilbert(const std::string& space_text) {
  CommandResult o;
  const Space space = parse_space(space_text);
  HilbertData h;
  std::string what;
  if (space.is_ty()) {
    h = hilbert_data_pfaffian(space.n());
    what = "Pf(" + std::to_string(space.n() - 3) + ", W*) via " + space.name();
  } else {
    h = hilbert_data_gr(space.base.k, space.n());
    what = space.name();
  }
  o.inputs = {{"space", space.name()}};
  o.result = to_json(h);
  const auto idx = gorenstein_index(h);
  o.result["canonical_index"] = idx ? Json(*idx) : Json(nullptr);
  std::ostringstream os;
  os << what << "\nP(t) = " << h.poly.to_string() << "\ndimension " << h.dimension << ", degree "
     << to_decimal(h.degree);
  if (idx) os << ", omega = O(-" << *idx << ")";
  os << "\n";
  o.text = os.str();
  return o;
}

inline CommandResult cmd_pfaffian(std::size_t n, std::size_t t) {
  CommandResult o;
  const PfaffianStratum s = pfaffian_stratum(n, t);
  o.inputs = {{"n", n}, {"t", t}};
  o.result = to_json(s);
  std::ostringstream os;
  os << "Pf(" << 2 * t << ", W*) in P^" << ambient_dim(n) - 1 << ": dim " << s.dim << ", codim "
     << s.codim;
  if (s.hypersurface_degree) os << ", hypersurface of degree " << *s.hypersurface_degree;
  os << "\n";
  o.text = os.str();
  return o;
}

inline CommandResult cmd_hpd_case(std::size_t n, std::size_t r) {
  CommandResult o;
  const SectionReport rep = section_decompositions(n, r);
  o.inputs = {{"n", n}, {"r", r}};
  o.result = to_json(rep);
  o.text = to_markdown(rep);
  return o;
}

inline CommandResult cmd_verify(const std::string& suite, const VerifyOptions& opts) {
  CommandResult o;
  const VerificationLog log = run_suite(suite, opts);
  o.inputs = {{"suite", suite}};
  if (opts.t_max) o.inputs["t_max"] = *opts.t_max;
  if (opts.serre_direct) o.inputs["serre_direct"] = true;
  o.result = to_json(log);
  o.text = to_markdown(log);
  o.failed = !log.ok();
  return o;
}

inline CommandResult cmd_lefschetz(const std::string& name, bool dual) {
  CommandResult o;
  LefschetzModel m = builtin_lefschetz(name);
  o.inputs = {{"model", name}, {"dual", dual}};
  if (dual) m = dual_lefschetz(m);
  o.result = to_json(m);
  o.result["nested"] = is_nested(m);
  std::ostringstream os;
  os << m.name << ": N = " << m.ambient << ", " << m.length() << " blocks ("
     << (m.orientation == Orientation::Left ? "left" : "right") << ")\n";
  for (std::size_t k = 0; k < m.blocks.size(); ++k) {
    os << "  " << (m.orientation == Orientation::Left ? "A_" : "B_") << k << " = <";
    for (std::size_t i = 0; i < m.blocks[k].size(); ++i) os << (i ? ", " : "") << m.blocks[k][i];
    os << ">\n";
  }
  o.text = os.str();
  return o;
}

inline CommandResult cmd_geometry(std::size_t n) {
  CommandResult o;
  const ResolutionGeometry g = resolution_geometry(n);
  o.inputs = {{"n", n}};
  o.result = to_json(g);
  auto cls = [](PicClassTY c) {
    return std::to_string(c.hg) + "H_G " + (c.hy < 0 ? "- " : "+ ") +
           std::to_string(c.hy < 0 ? -c.hy : c.hy) + "H_Y";
  };
  o.text = "K_TY = " + cls(g.k_ty) + "\nK_TZ = " + cls(g.k_tz) + "\nTZ = " + cls(g.tz_pfaffian) +
           "\nadjunction " + (g.adjunction_ok ? "holds" : "FAILS") + "\n";
  o.failed = !g.adjunction_ok;
  return o;
}

inline CommandResult cmd_section(const std::string& ambient, std::size_t n, std::size_t r) {
  CommandResult o;
  Ambient a;
  if (ambient == "X") {
    a = Ambient::X;
  } else if (ambient == "Y") {
    a = Ambient::Y;
  } else if (ambient == "Z") {
    a = Ambient::Z;
  } else {
    throw std::invalid_argument("--ambient must be X, Y or Z");
  }
  const SectionInvariants s = section_invariants(a, n, r);
  o.inputs = {{"ambient", ambient}, {"n", n}, {"r", r}};
  o.result = to_json(s);
  std::ostringstream os;
  os << ambient << "_L (" << s.hyperplanes << " hyperplanes): ";
  if (s.dim < 0) {
    os << "empty\n";
  } else {
    os << "dim " << s.dim << ", degree " << to_decimal(s.degree) << ", chi(O) "
       << to_decimal(s.chi) << ", omega = O(" << s.canonical << ")";
    if (s.genus) os << ", genus " << to_decimal(*s.genus);
    os << "\nP(t) = " << s.hilbert.to_string() << "\n";
  }
  o.text = os.str();
  return o;
}

/// Runs the CLI on `args` (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Borel-Bott-Weil cohomology, Lefschetz bookkeeping and linear sections for "
               "Gr(2,n) and Pfaffians",
               "pfhpd"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  std::string out_file;
  app.add_flag("--json", json, "Emit the JSON report");
  app.add_option("--out", out_file, "Write the report to FILE");

  std::function<CommandResult()> action;

  auto* bbw = app.add_subcommand("bbw", "BBW reduction of a weight");
  std::size_t bbw_rank = 0;
  std::string bbw_weight;
  bbw->add_option("--rank", bbw_rank)->required();
  bbw->add_option("--weight", bbw_weight, "comma-separated integers")->required();
  bbw->callback([&] { action = [&] { return cmd_bbw(bbw_rank, bbw_weight); }; });

  auto* coh = app.add_subcommand("cohomology", "Cohomology of a bundle expression");
  std::string coh_space, coh_expr;
  coh->add_option("--space", coh_space, "gr(k,n) or ty(n)")->required();
  coh->add_option("expr", coh_expr)->required();
  coh->callback([&] { action = [&] { return cmd_cohomology(coh_space, coh_expr); }; });

  auto* ext_cmd = app.add_subcommand("ext", "Ext between two bundle expressions");
  std::string ext_space, ext_a, ext_b;
  ext_cmd->add_option("--space", ext_space, "gr(k,n) or ty(n)")->required();
  ext_cmd->add_option("source", ext_a)->required();
  ext_cmd->add_option("target", ext_b)->required();
  ext_cmd->callback([&] { action = [&] { return cmd_ext(ext_space, ext_a, ext_b); }; });

  auto* push = app.add_subcommand("pushforward", "Pushforward along TY(n) -> Gr(n-4,n)");
  std::size_t push_n = 0;
  Entry push_t = 0;
  std::string push_expr = "O";
  push->add_option("--n", push_n)->required();
  push->add_option("--twist", push_t, "multiple of H_Y")->required()->allow_extra_args(false);
  push->add_option("expr", push_expr, "object on ty(n), default O");
  push->callback([&] { action = [&] { return cmd_pushforward(push_n, push_t, push_expr); }; });

  auto* hil = app.add_subcommand("hilbert", "Hilbert polynomial of gr(k,n), or of the Pfaffian via ty(n)");
  std::string hil_space;
  hil->add_option("--space", hil_space)->required();
  hil->callback([&] { action = [&] { return cmd_hilbert(hil_space); }; });

  auto* pf = app.add_subcommand("pfaffian", "Pfaffian stratum Pf(2t, W*)");
  std::size_t pf_n = 0, pf_t = 0;
  pf->add_option("--n", pf_n)->required();
  pf->add_option("--t", pf_t)->required();
  pf->callback([&] { action = [&] { return cmd_pfaffian(pf_n, pf_t); }; });

  auto* hpd = app.add_subcommand("hpd-case", "Linear-section report for dim L = r");
  std::size_t hpd_n = 0, hpd_r = 0;
  hpd->add_option("--n", hpd_n)->required();
  hpd->add_option("--r", hpd_r)->required();
  hpd->callback([&] { action = [&] { return cmd_hpd_case(hpd_n, hpd_r); }; });

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  VerifyOptions vopts;
  Entry t_max = 0;
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  ver->add_option("--suite", suite)->required()->check(CLI::IsMember(choices));
  auto* tmax_opt = ver->add_option("--t-max", t_max, "largest t checked directly in fkl suites");
  ver->add_flag("--serre-direct", vopts.serre_direct, "also compute the Serre-rule entries");
  ver->callback([&] {
    if (tmax_opt->count() > 0) vopts.t_max = t_max;
    action = [&] { return cmd_verify(suite, vopts); };
  });

  auto* lef = app.add_subcommand("lefschetz", "Built-in Lefschetz model, or its dual");
  std::string lef_name;
  bool lef_dual = false;
  lef->add_option("--model", lef_name, "gr2n(m), ldx6, ldx7, ldtd6, ldtd7, beilinson(n)")->required();
  lef->add_flag("--dual", lef_dual);
  lef->callback([&] { action = [&] { return cmd_lefschetz(lef_name, lef_dual); }; });

  auto* geo = app.add_subcommand("geometry", "Canonical classes of TY and TZ");
  std::size_t geo_n = 0;
  geo->add_option("--n", geo_n)->required();
  geo->callback([&] { action = [&] { return cmd_geometry(geo_n); }; });

  auto* sec = app.add_subcommand("section", "Invariants of X_L, Y_L or Z_L");
  std::string sec_amb;
  std::size_t sec_n = 0, sec_r = 0;
  sec->add_option("--ambient", sec_amb, "X, Y or Z")->required();
  sec->add_option("--n", sec_n)->required();
  sec->add_option("--r", sec_r)->required();
  sec->callback([&] { action = [&] { return cmd_section(sec_amb, sec_n, sec_r); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CommandResult result;
  try {
    result = action();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::string command;
  for (const auto& a : args) {
    if (a == "--out" || (!out_file.empty() && a == out_file)) continue;
    command += (command.empty() ? "" : " ") + a;
  }
  std::string rendered;
  if (json) {
    Json report{{"command", command},
                {"inputs", result.inputs},
                {"result", result.result},
                {"status", result.failed ? "failed" : "ok"},
                {"warnings", result.warnings}};
    rendered = report.dump(2) + "\n";
  } else {
    for (const auto& w : result.warnings) rendered += "warning: " + w + "\n";
    rendered += result.text;
    if (result.failed) rendered += "VERIFICATION FAILED\n";
  }
  if (!out_file.empty()) {
    std::ofstream f(out_file, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << out_file << "\n";
      return kExitUsage;
    }
    f << rendered;
  } else {
    out << rendered;
  }
  return result.failed ? kExitFailed : kExitOk;
}

}  // namespace pfhpd::cli
