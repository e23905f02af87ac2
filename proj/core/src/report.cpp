#include "torusbook/report.hpp"

#include <json.hpp>

namespace torusbook {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> int_list(const std::vector<Int>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const Int& e : v) out.push_back(e.get_str());
  return out;
}

ordered_json canonical_json(const Report& r) {
  ordered_json j;
  j["variant"] = canonical_variant_name(r.canonical.variant());
  j["d"] = r.canonical.d().get_str();
  if (r.canonical.is_pseudo_anosov()) {
    j["a"] = int_list(r.canonical.a());
    j["b"] = int_list(r.canonical.b());
  } else {
    j["m"] = r.canonical.m().get_str();
  }
  j["word"] = format_word(r.canonical_word);
  return j;
}

ordered_json certificate_json(const Certificate& c) {
  ordered_json j;
  if (const auto* stein = std::get_if<SteinWord>(&c)) {
    j["kind"] = "stein-word";
    j["word"] = format_word(stein->word);
  } else if (const auto* chain = std::get_if<InvariantChain>(&c)) {
    j["kind"] = "invariant-chain";
    j["base"] = format_word(chain->base);
    j["lspace_steps"] = chain->lspace_steps.get_str();
    j["naturality_steps"] = chain->naturality_steps.get_str();
    j["grading_argument"] = chain->grading_argument;
  } else {
    const auto& sob = std::get<SoberingForm>(c);
    j["kind"] = "sobering-arc";
    j["curve"] = std::string(1, generator_char(sob.curve));
    j["i_alg"] = sob.triple[0].get_str();
    j["i_geom"] = sob.triple[1].get_str();
    j["i_delta"] = sob.triple[2].get_str();
  }
  return j;
}

const char* lspace_key(LSpaceStatus s) {
  switch (s) {
    case LSpaceStatus::LSpace: return "lspace";
    case LSpaceStatus::NotLSpace: return "not-lspace";
    case LSpaceStatus::OutOfScope: return "out-of-scope";
  }
  return "?";
}

const char* dynamics_key(DynamicsClass c) {
  switch (c) {
    case DynamicsClass::PseudoAnosov: return "pseudo-anosov";
    case DynamicsClass::Reducible: return "reducible";
    case DynamicsClass::Periodic: return "periodic";
  }
  return "?";
}

}  // namespace

Report build_report(const TwistWord& word, std::string input_text) {
  CanonicalType canonical = normalize(word);
  TwistWord canonical_word = expand_to_word(canonical);
  auto [trace, expsum] = open_book_invariants(word);
  std::optional<Rational> hopf;
  if (canonical.variant() == CanonicalVariant::B && canonical.d() == 0) {
    hopf = hopf_invariant_B(canonical.a(), canonical.b());
  }
  return Report{
      std::move(input_text),
      canonical,
      std::move(canonical_word),
      dynamics_of(canonical),
      trace,
      expsum,
      decide(canonical),
      std::move(hopf),
      h1_order_from_trace(trace),
      is_l_space(canonical),
      dehn_obstruction(word),
      tight_minus_dehn(canonical),
  };
}

std::string report_to_json(const Report& r) {
  ordered_json j;
  j["word"] = r.input;
  j["canonical"] = canonical_json(r);
  ordered_json dyn;
  dyn["class"] = dynamics_key(r.dynamics);
  dyn["trace"] = r.trace.get_str();
  j["dynamics"] = dyn;
  j["verdict"] = tightness_name(r.verdict.status);
  j["certificate"] = certificate_json(r.verdict.certificate);
  ordered_json inv;
  inv["trace"] = r.trace.get_str();
  inv["exponent_sum"] = r.expsum.get_str();
  if (r.hopf) {
    inv["hopf"] = to_string(*r.hopf);
  } else {
    inv["hopf"] = nullptr;
  }
  if (r.h1_order == 0) {
    inv["h1_order"] = nullptr;  // infinite first homology
  } else {
    inv["h1_order"] = r.h1_order.get_str();
  }
  inv["lspace"] = lspace_key(r.lspace);
  j["invariants"] = inv;
  ordered_json dehn;
  dehn["obstructed"] = r.dehn_obstructed;
  dehn["tight_minus_dehn"] = r.in_tight_minus_dehn;
  j["dehn"] = dehn;
  return j.dump(2);
}

std::string report_to_text(const Report& r) {
  std::string s;
  s += "word:        " + (r.input.empty() ? std::string("(empty word)") : r.input) + "\n";
  s += "canonical:   " + format_canonical(r.canonical);
  std::string cw = format_word(r.canonical_word);
  s += "  [" + (cw.empty() ? std::string("empty word") : cw) + "]\n";
  s += "dynamics:    " + std::string(dynamics_name(r.dynamics)) + " (trace " +
       r.trace.get_str() + ")\n";
  s += "verdict:     " + std::string(tightness_name(r.verdict.status)) + "\n";
  s += "certificate: " + format_certificate(r.verdict.certificate) + "\n";
  s += "invariants:  exponent sum " + r.expsum.get_str();
  if (r.hopf) s += ", Hopf invariant " + to_string(*r.hopf);
  if (r.h1_order == 0) {
    s += ", |H1| infinite";
  } else {
    s += ", |H1| = " + r.h1_order.get_str();
  }
  s += ", " + std::string(lspace_name(r.lspace)) + "\n";
  s += "dehn monoid: ";
  if (r.dehn_obstructed) {
    s += "obstructed (exponent sum <= 0, not a product of right-handed twists)";
  } else {
    s += "inconclusive (exponent sum > 0)";
  }
  if (r.in_tight_minus_dehn) s += "; tight but not in the Dehn monoid";
  s += "\n";
  return s;
}

}  // namespace torusbook
