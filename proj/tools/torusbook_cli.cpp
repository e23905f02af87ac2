#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "torusbook/report.hpp"
#include "torusbook/surgery_oracle.hpp"

namespace {

using namespace torusbook;

constexpr int kExitTight = 0;
constexpr int kExitOvertwisted = 1;
constexpr int kExitError = 2;

TwistWord parse_or_die(const std::string& text) {
  try {
    return parse_word(text);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    std::exit(kExitError);
  }
}

std::vector<Int> parse_b_list(const std::string& text) {
  std::vector<Int> out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    out.emplace_back(cur, 10);
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t') {
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      cur += c;
    } else {
      std::cerr << "parse error: bad character '" << c << "' in parameter list\n";
      std::exit(kExitError);
    }
  }
  flush();
  if (out.empty()) {
    std::cerr << "parse error: empty parameter list\n";
    std::exit(kExitError);
  }
  return out;
}

int cmd_classify(const std::string& text, bool json) {
  Report r = build_report(parse_or_die(text), text);
  if (json) {
    std::cout << report_to_json(r) << "\n";
  } else {
    std::cout << report_to_text(r);
  }
  return r.verdict.status == TightnessStatus::Tight ? kExitTight : kExitOvertwisted;
}

int cmd_normalize(const std::string& text, bool json) {
  TwistWord word = parse_or_die(text);
  CanonicalType ct = normalize(word);
  TwistWord expanded = expand_to_word(ct);
  if (json) {
    nlohmann::ordered_json j;
    j["word"] = text;
    j["canonical"] = format_canonical(ct);
    j["canonical_word"] = format_word(expanded);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << format_canonical(ct) << "\n";
    std::string w = format_word(expanded);
    std::cout << "word: " << (w.empty() ? "(empty word)" : w) << "\n";
  }
  return 0;
}

int cmd_invariants(const std::string& text, bool json) {
  Report r = build_report(parse_or_die(text), text);
  if (json) {
    std::cout << report_to_json(r) << "\n";
    return 0;
  }
  std::cout << "trace:         " << r.trace.get_str() << "\n";
  std::cout << "exponent sum:  " << r.expsum.get_str() << "\n";
  std::cout << "dynamics:      " << dynamics_name(r.dynamics) << "\n";
  std::cout << "canonical:     " << format_canonical(r.canonical) << "\n";
  if (r.hopf) std::cout << "Hopf invariant: " << to_string(*r.hopf) << "\n";
  if (r.h1_order == 0) {
    std::cout << "|H1|:          infinite\n";
  } else {
    std::cout << "|H1|:          " << r.h1_order.get_str() << "\n";
  }
  std::cout << "L-space:       " << lspace_name(r.lspace) << "\n";
  return 0;
}

int cmd_h1(const std::string& blist, bool json) {
  std::vector<Int> b = parse_b_list(blist);
  Int closed;
  Int det;
  try {
    closed = h1_closed_form(b);
    det = det_exact(matrix_A(b));
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  if (json) {
    nlohmann::ordered_json j;
    std::vector<std::string> bs;
    for (const Int& e : b) bs.push_back(e.get_str());
    j["b"] = bs;
    j["h1"] = closed.get_str();
    j["det_linking_matrix"] = det.get_str();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "|H1| = " << closed.get_str() << " (closed form)\n";
    std::cout << "det linking matrix = " << det.get_str() << "\n";
  }
  return abs(det) == closed ? 0 : 1;
}

int cmd_lspace(const std::string& text, bool json) {
  TwistWord word = parse_or_die(text);
  CanonicalType ct = normalize(word);
  LSpaceStatus status = is_l_space(ct);
  if (json) {
    nlohmann::ordered_json j;
    j["word"] = text;
    j["canonical"] = format_canonical(ct);
    const char* key = status == LSpaceStatus::LSpace
                          ? "lspace"
                          : (status == LSpaceStatus::NotLSpace ? "not-lspace" : "out-of-scope");
    j["lspace"] = key;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << format_canonical(ct) << ": " << lspace_name(status) << "\n";
  }
  return 0;
}

int cmd_verify(int nmax, int bmax, int bound) {
  if (nmax < 1 || bmax < 1 || bound < 1) {
    std::cerr << "error: verify ranges must be positive\n";
    return kExitError;
  }
  bool ok = run_identity_sweep(nmax, bmax, std::cout);
  for (Int m = 1; m <= 99; m += 2) {
    bool pass = step3_obstruction(m, bound);
    std::cout << "step3_obstruction\tm=" << m.get_str() << " bound=" << bound << '\t'
              << (pass ? "pass" : "fail") << "\n";
    if (!pass) ok = false;
  }
  std::cout << (ok ? "all identities pass" : "FAILURES found") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus-one open book classifier: canonical monodromy forms, "
               "tight/overtwisted verdicts with certificates, and exact "
               "homological invariants"};
  app.require_subcommand(1);
  bool json = false;

  std::string word_text;
  std::string blist_text;
  int nmax = 4, bmax = 4, bound = 100;

  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", json, "emit JSON instead of text");
  };

  auto* classify = app.add_subcommand("classify", "full report; exit 0 tight, 1 overtwisted");
  classify->add_option("word", word_text, "monodromy word, e.g. \"d x y^-1\"");
  add_json(classify);

  auto* normalize_cmd = app.add_subcommand("normalize", "canonical type of a word");
  normalize_cmd->add_option("word", word_text, "monodromy word");
  add_json(normalize_cmd);

  auto* invariants = app.add_subcommand("invariants", "trace, dynamics, Hopf, |H1|, L-space");
  invariants->add_option("word", word_text, "monodromy word");
  add_json(invariants);

  auto* h1 = app.add_subcommand("h1", "|H1| closed form and linking-matrix determinant");
  h1->add_option("b", blist_text, "nonnegative integers, e.g. 1,0,2")->required();
  add_json(h1);

  auto* lspace = app.add_subcommand("lspace", "L-space status of a word's manifold");
  lspace->add_option("word", word_text, "monodromy word");
  add_json(lspace);

  auto* verify = app.add_subcommand("verify", "run the determinant identity sweeps");
  verify->add_option("--nmax", nmax, "max parameter-list length (default 4)");
  verify->add_option("--bmax", bmax, "max parameter value (default 4)");
  verify->add_option("--bound", bound, "search bound for the grading obstruction (default 100)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (classify->parsed()) return cmd_classify(word_text, json);
    if (normalize_cmd->parsed()) return cmd_normalize(word_text, json);
    if (invariants->parsed()) return cmd_invariants(word_text, json);
    if (h1->parsed()) return cmd_h1(blist_text, json);
    if (lspace->parsed()) return cmd_lspace(word_text, json);
    if (verify->parsed()) return cmd_verify(nmax, bmax, bound);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
