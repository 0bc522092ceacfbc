// cancelkit: command-line front end. Presentation files in, JSON/TSV/DOT
// verdicts out. Exit codes: 0 success/yes/true, 1 no/false, 2 inconclusive,
// 64 usage error, 65 input data error.

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "cancelkit/conjtrans.hpp"
#include "cancelkit/errors.hpp"
#include "cancelkit/json_io.hpp"

namespace {

using namespace cancelkit;
using nlohmann::json;

constexpr int kExitFalse = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

struct Options {
  std::string format = "json";
  bool format_explicit = false;
  std::string model = "auto";
  int bound_conj = 6;
  int radius = 10;
  int rewrite_cap = -1;
  unsigned long seed = 12345;
};

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SyntaxError("cannot open '" + path + "'");
  return parse_presentation(in);
}

ConjContext make_conj_context(const Presentation& pres, const Options& opt) {
  GeodesicContext geo = GeodesicContext::build(pres);
  Oracle oracle(ReferenceModel::for_presentation(pres, opt.model), 4, opt.rewrite_cap);
  ConjOptions copt;
  copt.conjugator_bound = opt.bound_conj;
  copt.sweep_bound = opt.bound_conj;
  return ConjContext(std::move(geo), std::move(oracle), copt);
}

void emit(const json& j, const Options& opt, const std::string& text_form) {
  if (opt.format == "text")
    std::cout << text_form << '\n';
  else
    std::cout << j.dump() << '\n';
}

Word random_reduced_word(std::mt19937_64& rng, const std::string& alphabet, int len) {
  Word w;
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  while (static_cast<int>(w.size()) < len) {
    char c = alphabet[pick(rng)];
    if (!w.empty() && c == inverse_letter(w.back())) continue;
    w.push_back(c);
  }
  return w;
}

struct SuiteResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  long inconclusive = 0;
  bool skipped = false;
  std::string note;
};

void print_suite(const SuiteResult& s) {
  std::cout << "suite " << s.name << ": ";
  if (s.skipped) {
    std::cout << "SKIP (" << s.note << ")\n";
    return;
  }
  std::cout << s.cases << " cases, " << s.failures << " failures";
  if (s.inconclusive > 0) std::cout << ", " << s.inconclusive << " inconclusive";
  std::cout << (s.failures == 0 ? " ... PASS" : " ... FAIL") << '\n';
}

int run_selftest(const Presentation& pres, const Options& opt) {
  std::vector<SuiteResult> suites;
  ConditionReport report = check_conditions(pres);
  std::cout << "classification: " << to_string(report.classification) << '\n';

  {
    SuiteResult s;
    s.name = "condition-witnesses";
    SymmetrizedSet sym = symmetrize(pres);
    PieceIndex pieces = compute_pieces(sym);
    if (report.c_max) {
      ++s.cases;
      Word joined;
      bool ok = !report.witnesses.piece_decomposition.empty() &&
                static_cast<int>(report.witnesses.piece_decomposition.size()) == *report.c_max;
      for (const Word& p : report.witnesses.piece_decomposition) {
        if (!pieces.is_piece(p)) ok = false;
        joined += p;
      }
      if (joined != report.witnesses.decomposed_relator) ok = false;
      if (!ok) ++s.failures;
    }
    if (report.t_max) {
      ++s.cases;
      const auto& seq = report.witnesses.bad_sequence;
      bool ok = static_cast<int>(seq.size()) == *report.t_max && seq.size() >= 3;
      for (std::size_t i = 0; ok && i < seq.size(); ++i) {
        const Word& a = seq[i];
        const Word& b = seq[(i + 1) % seq.size()];
        if (!sym.contains(a) || b == inverse_word(a)) ok = false;
        if (is_cyclically_reduced(a + b)) ok = false;
      }
      if (!ok) ++s.failures;
    }
    suites.push_back(s);
  }

  bool supported = report.classification == Classification::Cpp4T4 ||
                   report.classification == Classification::Cpp3T6;
  if (!supported) {
    SuiteResult s;
    s.name = "strip-machinery";
    s.skipped = true;
    s.note = "presentation is not C''(4)-T(4) or C''(3)-T(6)";
    suites.push_back(s);
  } else {
    GeodesicContext geo = GeodesicContext::build(pres);
    ReferenceModel model = ReferenceModel::for_presentation(pres, opt.model);
    Oracle oracle(model, 4, opt.rewrite_cap);
    GeodesicDfa dfa = build_geodesic_dfa(geo);
    std::mt19937_64 rng(opt.seed);
    const std::string& alphabet = geo.alphabet();

    const int sweep_radius = std::min(opt.radius, model.feasible_ball_radius());
    if (model.exact()) {
      SuiteResult s;
      s.name = "geodesic-oracle-equivalence";
      std::vector<Word> frontier{""};
      for (int len = 1; len <= sweep_radius; ++len) {
        std::vector<Word> next;
        for (const Word& w : frontier)
          for (char c : alphabet) {
            if (!w.empty() && c == inverse_letter(w.back())) continue;
            next.push_back(w + c);
          }
        frontier = std::move(next);
        for (const Word& w : frontier) {
          ++s.cases;
          auto d = oracle.distance(w, len);
          bool oracle_geodesic = d && *d == len;
          if (is_geodesic(w, geo) != oracle_geodesic) ++s.failures;
        }
      }
      suites.push_back(s);
    } else {
      SuiteResult s;
      s.name = "geodesic-oracle-equivalence";
      s.skipped = true;
      s.note = "generic model has no exact distances";
      suites.push_back(s);
    }

    {
      SuiteResult s;
      s.name = "certificate-soundness";
      std::uniform_int_distribution<int> len_pick(2, std::max(3, 2 * opt.radius));
      for (int i = 0; i < 1000; ++i) {
        Word w = random_reduced_word(rng, alphabet, len_pick(rng));
        auto cert = find_bad_subword(w, geo);
        if (!cert) continue;
        ++s.cases;
        bool ok = true;
        try {
          validate_certificate(*cert, geo);
        } catch (const CertificateError&) {
          ok = false;
        }
        std::size_t drop = geo.kind() == GeometryKind::Square ? 2 : 1;
        if (cert->outer.size() != cert->replacement.size() + drop) ok = false;
        EqVerdict eq = oracle.equal(cert->outer, cert->replacement);
        if (eq.distinct()) ok = false;
        if (eq.inconclusive()) ++s.inconclusive;
        if (!ok) ++s.failures;
      }
      suites.push_back(s);
    }

    {
      SuiteResult s;
      s.name = "dfa-scanner-agreement";
      std::uniform_int_distribution<int> len_pick(0, std::max(4, 2 * opt.radius));
      for (int i = 0; i < 1000; ++i) {
        ++s.cases;
        Word w = random_reduced_word(rng, alphabet, len_pick(rng));
        if (dfa.accepts(w) != is_geodesic(w, geo)) ++s.failures;
      }
      suites.push_back(s);
    }

    if (model.exact()) {
      SuiteResult s;
      s.name = "reduction-length";
      std::uniform_int_distribution<int> len_pick(
          0, std::min(std::max(4, 2 * opt.radius), model.feasible_ball_radius()));
      for (int i = 0; i < 1000; ++i) {
        ++s.cases;
        Word w = random_reduced_word(rng, alphabet, len_pick(rng));
        ReductionResult red = reduce_to_geodesic(w, geo);
        auto d = oracle.distance(w, static_cast<int>(w.size()));
        if (!d || static_cast<std::size_t>(*d) != red.geodesic.size()) ++s.failures;
      }
      suites.push_back(s);
    }
  }

  bool all_pass = true;
  for (const SuiteResult& s : suites) {
    print_suite(s);
    if (!s.skipped && s.failures > 0) all_pass = false;
  }
  std::cout << (all_pass ? "selftest PASS" : "selftest FAIL") << '\n';
  return all_pass ? 0 : kExitFalse;
}

HalfInteger parse_half(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return half_from_integer(std::stol(text));
    if (text.substr(slash + 1) != "2") throw InvalidArg("");
    return HalfInteger{std::stol(text.substr(0, slash))};
  } catch (const std::exception&) {
    throw InvalidArg("cannot parse half-integer '" + text + "' (use k or k/2)");
  }
}

int dispatch(const std::string& cmd, const std::vector<std::string>& args, const Options& opt,
             const std::string& dfa_out) {
  Presentation pres = load_presentation(args[0]);

  if (cmd == "check") {
    ConditionReport r = check_conditions(pres);
    std::string text = std::string("classification: ") + to_string(r.classification);
    emit(to_json(r), opt, text);
    return 0;
  }

  if (cmd == "geodesic") {
    GeodesicContext geo = GeodesicContext::build(pres);
    Word w = parse_word(args[1], pres);
    json j;
    if (!is_freely_reduced(w)) {
      j["geodesic"] = false;
      j["reason"] = "not_freely_reduced";
      emit(j, opt, "false (not freely reduced)");
      return kExitFalse;
    }
    auto cert = find_bad_subword(w, geo);
    j["geodesic"] = !cert.has_value();
    if (cert) {
      j["certificate"] = to_json(*cert);
      emit(j, opt, "false (bad subword '" + cert->outer + "' at " + std::to_string(cert->start) + ")");
      return kExitFalse;
    }
    emit(j, opt, "true");
    return 0;
  }

  if (cmd == "reduce") {
    GeodesicContext geo = GeodesicContext::build(pres);
    ReductionResult r = reduce_to_geodesic(parse_word(args[1], pres), geo);
    emit(to_json(r), opt, "geodesic: " + r.geodesic + " (length " +
                              std::to_string(r.geodesic.size()) + ", " +
                              std::to_string(r.trail.size()) + " steps)");
    return 0;
  }

  if (cmd == "dfa") {
    GeodesicContext geo = GeodesicContext::build(pres);
    GeodesicDfa dfa = build_geodesic_dfa(geo);
    if (dfa_out == "dot")
      std::cout << dfa.to_dot();
    else
      std::cout << dfa.to_tsv();
    return 0;
  }

  if (cmd == "count") {
    GeodesicContext geo = GeodesicContext::build(pres);
    int k = std::stoi(args[1]);
    GrowthCount g = count_geodesics(build_geodesic_dfa(geo), k);
    if (opt.format == "tsv") {
      for (std::size_t i = 0; i < g.counts.size(); ++i)
        std::cout << i << '\t' << g.counts[i].str() << '\n';
      return 0;
    }
    json j;
    j["counts"] = to_json(g);
    std::string text = "counts:";
    for (const auto& c : g.counts) text += " " + c.str();
    emit(j, opt, text);
    return 0;
  }

  if (cmd == "class") {
    ConjContext ctx = make_conj_context(pres, opt);
    ClassRep r = shortest_class_rep(parse_word(args[1], pres), ctx);
    emit(to_json(r), opt, "rep: " + r.rep + " (length " + std::to_string(r.length) +
                              (r.certified ? ", certified)" : ", uncertified)"));
    return 0;
  }

  if (cmd == "tau") {
    ConjContext ctx = make_conj_context(pres, opt);
    HalfInteger t = translation_number(parse_word(args[1], pres), ctx);
    emit(to_json(t), opt, "tau = " + t.str());
    return 0;
  }

  if (cmd == "root") {
    ConjContext ctx = make_conj_context(pres, opt);
    int n = std::stoi(args[2]);
    if (n < 1) throw InvalidArg("root needs N >= 1");
    RootAnswer r = nth_root(parse_word(args[1], pres), n, ctx);
    std::string text = r.v == RootAnswer::V::Yes ? "yes, witness " + r.witness
                       : r.v == RootAnswer::V::No ? "no"
                                                  : "inconclusive";
    emit(to_json(r), opt, text);
    return r.v == RootAnswer::V::Yes ? 0
           : r.v == RootAnswer::V::No ? kExitFalse
                                      : kExitInconclusive;
  }

  if (cmd == "maxroot") {
    ConjContext ctx = make_conj_context(pres, opt);
    MaxRootAnswer r = max_root(parse_word(args[1], pres), ctx);
    emit(to_json(r), opt, "n = " + std::to_string(r.n) + ", witness " + r.witness);
    return r.v == MaxRootAnswer::V::Yes ? 0 : kExitInconclusive;
  }

  if (cmd == "powconj") {
    ConjContext ctx = make_conj_context(pres, opt);
    PowerConjAnswer r =
        power_conjugacy(parse_word(args[1], pres), parse_word(args[2], pres), ctx);
    std::string text = r.v == PowerConjAnswer::V::Yes
                           ? "yes, n = " + std::to_string(r.n)
                           : (r.v == PowerConjAnswer::V::No ? "no" : "inconclusive");
    emit(to_json(r), opt, text);
    return r.v == PowerConjAnswer::V::Yes ? 0
           : r.v == PowerConjAnswer::V::No ? kExitFalse
                                           : kExitInconclusive;
  }

  if (cmd == "classes") {
    ConjContext ctx = make_conj_context(pres, opt);
    ClassCount r = count_classes_by_tau(parse_half(args[1]), ctx);
    if (opt.format == "tsv") {
      for (const Word& w : r.reps) std::cout << w << '\n';
      return r.conclusive ? 0 : kExitInconclusive;
    }
    std::string text = std::to_string(r.count) + " classes";
    emit(to_json(r), opt, text);
    return r.conclusive ? 0 : kExitInconclusive;
  }

  if (cmd == "ball") {
    Oracle oracle(ReferenceModel::for_presentation(pres, opt.model));
    int radius = std::stoi(args[1]);
    if (radius < 0) throw InvalidArg("ball needs R >= 0");
    const CayleyBall& ball = oracle.ball(radius);
    // Ball dumps are TSV unless JSON is asked for explicitly.
    if (opt.format == "json" && opt.format_explicit) {
      std::cout << to_json(ball).dump() << '\n';
      return 0;
    }
    std::vector<std::pair<int, std::string>> rows;
    rows.reserve(ball.table.size());
    for (const auto& [key, dist] : ball.table) rows.emplace_back(dist, key);
    std::sort(rows.begin(), rows.end());
    for (const auto& [dist, key] : rows) std::cout << key << '\t' << dist << '\n';
    return 0;
  }

  if (cmd == "selftest") return run_selftest(pres, opt);

  throw InvalidArg("unknown command '" + cmd + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cancelkit: small cancellation presentation toolkit"};
  app.require_subcommand(1);

  Options opt;
  auto* format_opt = app.add_option("--format", opt.format, "output format")
                         ->envname("CANCELKIT_FORMAT")
                         ->check(CLI::IsMember({"json", "tsv", "text"}));
  app.add_option("--model", opt.model, "oracle model")
      ->check(CLI::IsMember({"auto", "z2", "klein", "hex", "freetri", "generic"}));
  app.add_option("--bound-conj", opt.bound_conj, "conjugator search bound")
      ->check(CLI::PositiveNumber);
  app.add_option("--radius", opt.radius, "oracle / selftest radius")->check(CLI::PositiveNumber);
  app.add_option("--rewrite-cap", opt.rewrite_cap, "generic rewriting length cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "seed for randomized suites");

  struct Sub {
    const char* name;
    const char* help;
    std::vector<const char*> positionals;
  };
  const std::vector<Sub> subs = {
      {"check", "verify the small cancellation conditions", {"FILE"}},
      {"geodesic", "decide geodesity of a word", {"FILE", "WORD"}},
      {"reduce", "reduce a word to a geodesic representative", {"FILE", "WORD"}},
      {"dfa", "emit the geodesic automaton", {"FILE"}},
      {"count", "count geodesic words up to length K", {"FILE", "K"}},
      {"class", "shortest conjugacy class representative", {"FILE", "WORD"}},
      {"tau", "exact translation number", {"FILE", "WORD"}},
      {"root", "decide x^N = WORD", {"FILE", "WORD", "N"}},
      {"maxroot", "largest n with an n-th root", {"FILE", "WORD"}},
      {"powconj", "is W1 conjugate to a power of W2", {"FILE", "W1", "W2"}},
      {"classes", "count conjugacy classes with tau <= R", {"FILE", "R"}},
      {"ball", "Cayley ball table", {"FILE", "R"}},
      {"selftest", "oracle-equivalence and property suites", {"FILE"}},
  };
  std::map<std::string, std::vector<std::string>> positional_values;
  std::string dfa_out = "dot";
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->fallthrough();
    auto& store = positional_values[s.name];
    store.resize(s.positionals.size());
    for (std::size_t i = 0; i < s.positionals.size(); ++i)
      sub->add_option(s.positionals[i], store[i])->required();
    if (std::string(s.name) == "dfa")
      sub->add_option("--out", dfa_out, "dot or tsv")->check(CLI::IsMember({"dot", "tsv"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::string cmd = app.get_subcommands().front()->get_name();
  opt.format_explicit = format_opt->count() > 0 || std::getenv("CANCELKIT_FORMAT") != nullptr;
  try {
    return dispatch(cmd, positional_values[cmd], opt, dfa_out);
  } catch (const InvalidArg& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
}
