#pragma once

#include <optional>
#include <string>

#include "torusbook/floer.hpp"
#include "torusbook/tightness.hpp"

namespace torusbook {

// Everything the classify front end prints, assembled in one pass so each
// field is reproducible by re-running the corresponding library call.
struct Report {
  std::string input;
  CanonicalType canonical;
  TwistWord canonical_word;
  DynamicsClass dynamics;
  Int trace;
  Int expsum;
  Verdict verdict;
  std::optional<Rational> hopf;  // type B with d = 0 only
  Int h1_order;                  // |2 - trace|; 0 means infinite H_1
  LSpaceStatus lspace;
  bool dehn_obstructed;
  bool in_tight_minus_dehn;
};

Report build_report(const TwistWord& word, std::string input_text);

// Stable machine form; all integers are decimal strings. Keys:
// word, canonical, dynamics, verdict, certificate, invariants, dehn.
std::string report_to_json(const Report& r);

std::string report_to_text(const Report& r);

}  // namespace torusbook
