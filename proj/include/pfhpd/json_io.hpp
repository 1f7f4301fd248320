#pragma once

// JSON and markdown renderings of every result type. Integers are decimal
// strings throughout, so values of any size survive a round trip.

#include "pfhpd/bundle_expr.hpp"
#include "pfhpd/cohom.hpp"
#include "pfhpd/hilbert.hpp"
#include "pfhpd/hpd.hpp"
#include "pfhpd/verify.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace pfhpd {

using Json = nlohmann::json;

inline Json to_json(const Integer& x) { return to_decimal(x); }
inline Json to_json(const Rational& x) { return to_decimal(x); }

inline Json to_json(const std::vector<Entry>& v) {
  Json a = Json::array();
  for (Entry e : v) a.push_back(std::to_string(e));
  return a;
}
inline Json to_json(const Weight& w) { return to_json(w.entries()); }
inline Json to_json(const DominantWeight& w) { return to_json(w.entries()); }

inline Json to_json(const VirtualRep& r) {
  Json terms = Json::array();
  for (const auto& [w, m] : r.terms()) terms.push_back({{"weight", to_json(w)}, {"mult", to_json(m)}});
  return {{"rank", r.rank()}, {"terms", terms}};
}

inline VirtualRep virtual_rep_from_json(const Json& j) {
  VirtualRep r(j.at("rank").get<std::size_t>());
  for (const auto& t : j.at("terms")) {
    std::vector<Entry> w;
    for (const auto& e : t.at("weight")) w.push_back(std::stoll(e.get<std::string>()));
    r.add(DominantWeight(std::move(w)), parse_integer(t.at("mult").get<std::string>()));
  }
  return r;
}

inline Json to_json(const GradedRep& g) {
  Json degrees = Json::object();
  for (const auto& [d, r] : g.degrees()) degrees[std::to_string(d)] = to_json(r);
  return {{"degrees", degrees}, {"dual_convention", "W*"}};
}

inline Json to_json(const ExtAnswer& a) {
  if (a.is_exact()) {
    Json j = to_json(a.exact());
    j["exact"] = true;
    j["euler"] = to_json(euler_characteristic(a));
    return j;
  }
  return {{"exact", false},
          {"lower", to_json(a.bounds().lower)},
          {"upper", to_json(a.bounds().upper)},
          {"euler", to_json(a.bounds().euler)}};
}

inline Json to_json(const BBWOutcome& o) {
  if (!o) return {{"zero", true}};
  return {{"zero", false}, {"degree", o->degree}, {"weight", to_json(o->weight)}, {"on", "V*"}};
}

inline Json to_json(const EquivariantObject& o) {
  Json terms = Json::array();
  for (const Term& t : o.terms()) {
    Json j{{"beta", to_json(t.bundle.beta)},
           {"gamma", to_json(t.bundle.gamma)},
           {"position", t.degree},
           {"coeff", to_json(t.coeff)}};
    if (o.space().is_ty()) {
      j["hy"] = std::to_string(t.hy);
      j["fiber"] = to_json(t.fiber);
    }
    terms.push_back(std::move(j));
  }
  return {{"space", o.space().name()}, {"terms", terms}};
}

inline Json to_json(const Polynomial& p) {
  Json c = Json::array();
  for (const auto& x : p.coefficients()) c.push_back(to_json(x));
  return {{"coefficients", c}, {"text", p.to_string()}};
}

inline Json to_json(const HilbertData& h) {
  return {{"polynomial", to_json(h.poly)}, {"dimension", h.dimension}, {"degree", to_json(h.degree)}};
}

inline Json to_json(const PfaffianStratum& s) {
  Json j{{"dim", s.dim}, {"codim", s.codim}, {"is_hypersurface", s.is_hypersurface}};
  j["hypersurface_degree"] = s.hypersurface_degree ? Json(*s.hypersurface_degree) : Json(nullptr);
  return j;
}

inline Json to_json(const PicClassTY& c) { return {{"HG", c.hg}, {"HY", c.hy}}; }

inline Json to_json(const ResolutionGeometry& g) {
  return {{"K_TY", to_json(g.k_ty)},
          {"K_TZ", to_json(g.k_tz)},
          {"TZ_class", to_json(g.tz_pfaffian)},
          {"TZ_by_adjunction", to_json(g.tz_adjunction)},
          {"adjunction_ok", g.adjunction_ok}};
}

inline Json to_json(const LefschetzModel& m) {
  Json blocks = Json::array();
  for (const auto& b : m.blocks) blocks.push_back(b);
  return {{"name", m.name},
          {"N", m.ambient},
          {"orientation", m.orientation == Orientation::Left ? "left" : "right"},
          {"length", m.length()},
          {"block_sizes", m.block_sizes()},
          {"blocks", blocks}};
}

inline Json to_json(const SectionInvariants& s) {
  Json j{{"ambient", ambient_name(s.ambient)},
         {"hyperplanes", s.hyperplanes},
         {"dim", s.dim}};
  if (s.dim >= 0) {
    j["degree"] = to_json(s.degree);
    j["hilbert_polynomial"] = to_json(s.hilbert);
    j["chi_O"] = to_json(s.chi);
    j["canonical"] = s.canonical;
  }
  j["genus"] = s.genus ? to_json(*s.genus) : Json(nullptr);
  return j;
}

inline Json to_json(const SectionReport& r) {
  Json refs = Json::array();
  for (const auto& c : r.reference) {
    refs.push_back({{"quantity", c.quantity},
                    {"reference", to_json(c.reference)},
                    {"computed", c.computed ? to_json(*c.computed) : Json(nullptr)},
                    {"discrepancy", !c.agrees()}});
  }
  auto opt = [](const std::optional<Integer>& v) { return v ? to_json(*v) : Json(nullptr); };
  return {{"n", r.n},
          {"r", r.r},
          {"N", r.ambient},
          {"x_length", r.x_length},
          {"y_length", r.y_length},
          {"expected_dims", {{"X_L", r.dims.x}, {"Y_L", r.dims.y}, {"Z_L", r.dims.z}}},
          {"x_decomposition", r.x_decomposition},
          {"y_decomposition", r.y_decomposition},
          {"x_expanded", r.x_expanded},
          {"y_expanded", r.y_expanded},
          {"cl_is_x", r.cl_is_x},
          {"cl_is_y", r.cl_is_y},
          {"x_block_objects", r.x_block_objects},
          {"y_block_objects", r.y_block_objects},
          {"cl_objects", opt(r.cl_objects)},
          {"cl_source", r.cl_source},
          {"total_count", opt(r.total_count)},
          {"count_side", r.count_side},
          {"X_L", to_json(r.x)},
          {"Y_L", to_json(r.y)},
          {"Z_L", to_json(r.z)},
          {"descriptions", {{"X_L", r.x_description}, {"Y_L", r.y_description}, {"Z_L", r.z_description}}},
          {"tag", r.tag},
          {"reference", refs},
          {"discrepancy", r.has_discrepancy()}};
}

inline Json to_json(const VerificationLog& log) {
  Json entries = Json::array();
  for (const auto& e : log.entries) {
    entries.push_back({{"suite", e.suite},
                       {"claim", e.claim},
                       {"method", method_name(e.method)},
                       {"outcome", outcome_name(e.outcome)},
                       {"detail", e.detail}});
  }
  Json counts = Json::object();
  for (Outcome o : {Outcome::Pass, Outcome::Fail, Outcome::Indeterminate, Outcome::ByRule}) {
    counts[outcome_name(o)] = log.count(o);
  }
  return {{"entries", entries}, {"counts", counts}, {"ok", log.ok()}};
}

// ---------------------------------------------------------------------------
// Markdown.

inline std::string to_markdown(const SectionReport& r) {
  std::ostringstream os;
  os << "### r = " << r.r << ".\n\n";
  os << "n = " << r.n << ", N = " << r.ambient << ", expected dimensions: dim X_L = " << r.dims.x
     << ", dim Y_L = " << r.dims.y << ", dim Z_L = " << r.dims.z << "\n\n";
  os << "- " << r.x_decomposition << "\n";
  if (r.x_expanded != r.x_decomposition) os << "  - " << r.x_expanded << "\n";
  os << "- " << r.y_decomposition << "\n";
  if (r.y_expanded != r.y_decomposition) os << "  - " << r.y_expanded << "\n";
  os << "- X_L: " << r.x_description << "\n";
  os << "- Y_L: " << r.y_description << "\n";
  os << "- Z_L: " << r.z_description << "\n";
  if (r.total_count) {
    os << "- exceptional objects on " << r.count_side << ": " << to_decimal(*r.total_count) << " ("
       << r.cl_source << ")\n";
  }
  os << "- tag: " << r.tag << "\n";
  if (!r.reference.empty()) {
    os << "\n| quantity | reference | computed | status |\n|---|---|---|---|\n";
    for (const auto& c : r.reference) {
      os << "| " << c.quantity << " | " << to_decimal(c.reference) << " | "
         << (c.computed ? to_decimal(*c.computed) : std::string("-")) << " | "
         << (c.agrees() ? "agrees" : "DISCREPANCY") << " |\n";
    }
  }
  return os.str();
}

inline std::string to_markdown(const VerificationLog& log) {
  std::ostringstream os;
  os << "| suite | claim | method | outcome | detail |\n|---|---|---|---|---|\n";
  for (const auto& e : log.entries) {
    os << "| " << e.suite << " | " << e.claim << " | " << method_name(e.method) << " | "
       << outcome_name(e.outcome) << " | " << e.detail << " |\n";
  }
  os << "\npass " << log.count(Outcome::Pass) << ", fail " << log.count(Outcome::Fail)
     << ", indeterminate " << log.count(Outcome::Indeterminate) << ", by-rule "
     << log.count(Outcome::ByRule) << "\n";
  return os.str();
}

}  // namespace pfhpd
