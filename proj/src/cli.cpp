#include "obstrukt/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "obstrukt/json_io.hpp"
#include "obstrukt/verifier.hpp"
#include "obstrukt/word_syntax.hpp"

namespace obstrukt {

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SurfaceLabel parse_label(const std::string& text, const char* flag) {
  GroupElement g;
  try {
    g = parse_element(text);
  } catch (const ParseError& ex) {
    throw UsageError(std::string(flag) + ": " + ex.what());
  }
  if (!SurfaceLabel::is_valid(g))
    throw UsageError(std::string(flag) + ": surface label must have zero third and fourth exponents");
  return SurfaceLabel(g);
}

struct EvalArgs {
  std::string sigma1;
  std::string sigma2;
  std::string word;
  std::size_t stab = 0;
  std::string expect;
  bool negate = false;
};

int run_eval(const EvalArgs& a, std::ostream& out) {
  const SurfaceLabel s1 = parse_label(a.sigma1, "--sigma1");
  const SurfaceLabel s2 = parse_label(a.sigma2, "--sigma2");
  MoveWord w;
  try {
    w = parse_word(a.word);
  } catch (const ParseError& ex) {
    throw UsageError(std::string("--word: ") + ex.what());
  }
  for (const auto& m : w)
    if (auto v = validate_move(m, a.stab)) throw UsageError("--word: " + format_move(m) + ": " + v->message);

  const ObstructionClass o = evaluate_obstruction(s1, s2, w, a.stab, a.negate);
  const Verdict verdict = decide_obstruction(s1, s2, w, a.stab, a.negate);
  out << to_json(o).dump() << '\n' << to_json(verdict).dump() << '\n';
  if (a.expect.empty()) return 0;
  return verdict.nonvanishing == (a.expect == "nonvanishing") ? 0 : kExitNegative;
}

int run_check(const InvarianceConfig& config, std::ostream& out) {
  const InvarianceReport report = check_move_invariance(config);
  out << to_json(report).dump() << '\n';
  return report.ok() ? 0 : kExitNegative;
}

struct SearchArgs {
  std::string sigma1;
  std::string sigma2;
  SearchConfig config;
};

int run_search(SearchArgs a, std::ostream& out, std::ostream& err) {
  const SurfaceLabel s1 = parse_label(a.sigma1, "--sigma1");
  const SurfaceLabel s2 = parse_label(a.sigma2, "--sigma2");
  if (a.config.max_word_len > kMaxSearchWordLength)
    throw UsageError("--maxlen: at most " + std::to_string(kMaxSearchWordLength));
  if (a.config.box < 0) throw UsageError("--box: must be non-negative");
  a.config.max_evaluations = max_enumeration_from_env();
  try {
    out << to_json(brute_force_search(s1, s2, a.config)).dump() << '\n';
  } catch (const BudgetExceeded& ex) {
    out << Json{{"error", "budget_exceeded"}, {"required", ex.required()}, {"limit", ex.limit()}}.dump()
        << '\n';
    err << "search: " << ex.what() << " (raise OBSTRUKT_MAX_ENUM to allow it)\n";
    return kExitNegative;
  }
  return 0;
}

struct CertifyArgs {
  CertifyConfig config;
  std::string out_path;
};

int run_certify(CertifyArgs a, std::ostream& out, std::ostream& err) {
  if (a.config.label_box < 0 || a.config.param_box < 0) throw UsageError("box radii must be non-negative");
  a.config.max_evaluations = max_enumeration_from_env();
  CertifyReport report;
  try {
    report = certify_theorem(a.config);
  } catch (const BudgetExceeded& ex) {
    err << "certify: oracle cross-check: " << ex.what() << '\n';
    return kExitNegative;
  }
  const std::string bundle = certificate_bundle(report);
  if (a.out_path.empty()) {
    out << bundle;
  } else {
    std::ofstream file(a.out_path, std::ios::binary);
    if (!file) throw UsageError("--out: cannot open " + a.out_path);
    file << bundle;
  }
  if (report.vacuous()) err << "certify: no distinct label pairs in the box\n";
  return report.all_certified() ? 0 : kExitNegative;
}

int run_j2(const std::string& element, std::ostream& out) {
  RingElement a;
  try {
    a = ring_from_json(Json::parse(element));
  } catch (const Json::exception& ex) {
    throw UsageError(std::string("--element: ") + ex.what());
  } catch (const JsonFormatError& ex) {
    throw UsageError(std::string("--element: ") + ex.what());
  }
  Json result;
  if (Integer aug = augmentation(a); aug != 0) {
    result = Json{{"in_J2", false}, {"in_J", false}, {"augmentation", aug.get_str()}};
  } else if (!is_in_J2(a)) {
    result = Json{{"in_J2", false}, {"in_J", true}, {"F", to_json(F_map(a))}};
  } else {
    const J2Decomposition dec = express_in_J2(a);
    result = Json{{"in_J2", true}, {"decomposition", to_json(dec)}, {"reexpands", expand(dec) == a}};
  }
  out << result.dump() << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Obstruction calculus for surfaces in Z^4 group rings", "obstrukt"};
  app.require_subcommand(1);

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate the obstruction of a move word");
  eval_cmd->add_option("--sigma1", eval.sigma1, "first surface label, (a,b,0,0)")->required();
  eval_cmd->add_option("--sigma2", eval.sigma2, "second surface label, (a,b,0,0)")->required();
  eval_cmd->add_option("--word", eval.word, "move word");
  eval_cmd->add_option("--stab", eval.stab, "number of external stabilizations");
  eval_cmd->add_option("--expect", eval.expect, "expected verdict")
      ->check(CLI::IsMember({"nonvanishing", "vanishing"}));
  eval_cmd->add_flag("--negate", eval.negate, "negate the summed delta of the word");

  InvarianceConfig check;
  auto* check_cmd = app.add_subcommand("check", "Check psi-invariance of random move deltas");
  check_cmd->add_option("--samples", check.samples, "draws per move kind")->check(CLI::PositiveNumber);
  check_cmd->add_option("--box", check.box, "exponent radius")->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--stab", check.n_stab, "stabilizations for delta draws");
  check_cmd->add_option("--seed", check.seed);

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive search for vanishing words");
  search_cmd->add_option("--sigma1", search.sigma1)->required();
  search_cmd->add_option("--sigma2", search.sigma2)->required();
  search_cmd->add_option("--maxlen", search.config.max_word_len, "maximum word length")->required();
  search_cmd->add_option("--box", search.config.box, "parameter exponent radius")->required();
  search_cmd->add_option("--stab", search.config.n_stab);
  search_cmd->add_option("--record", search.config.max_recorded, "vanishing words to list");
  search_cmd->add_option("--threads", search.config.threads);

  CertifyArgs certify;
  auto* certify_cmd = app.add_subcommand("certify", "Certify non-vanishing over a label box");
  certify_cmd->add_option("--labelbox", certify.config.label_box)->required();
  certify_cmd->add_option("--wordlen", certify.config.word_len)->required();
  certify_cmd->add_option("--parambox", certify.config.param_box)->required();
  certify_cmd->add_option("--stab", certify.config.n_stab)->required();
  certify_cmd->add_option("--words", certify.config.words_per_pair, "sampled words per pair");
  certify_cmd->add_option("--oracle-pairs", certify.config.oracle_pairs, "pairs cross-checked by search");
  certify_cmd->add_option("--seed", certify.config.seed);
  certify_cmd->add_option("--threads", certify.config.threads);
  certify_cmd->add_option("--out", certify.out_path, "write the bundle to a file");

  std::string j2_element;
  auto* j2_cmd = app.add_subcommand("j2", "Decide membership in J^2");
  j2_cmd->add_option("--element", j2_element, "ring element JSON")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*eval_cmd) return run_eval(eval, out);
    if (*check_cmd) return run_check(check, out);
    if (*search_cmd) return run_search(search, out, err);
    if (*certify_cmd) return run_certify(certify, out, err);
    if (*j2_cmd) return run_j2(j2_element, out);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const std::overflow_error& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace obstrukt
