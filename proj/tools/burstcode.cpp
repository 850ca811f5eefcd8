// burstcode: command-line front end for the burst-code library.
//
// Exit status: 0 success, 1 verification or decode failure, 2 usage or
// domain error, 3 resource guard refusal.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "burst/codebook.hpp"
#include "burst/component_codes.hpp"
#include "burst/construction_31.hpp"
#include "burst/construction_ts.hpp"
#include "burst/error_model.hpp"
#include "burst/errors.hpp"
#include "burst/serialization.hpp"
#include "burst/simulate.hpp"
#include "burst/verify.hpp"
#include "burst/word.hpp"

namespace {

using burst::CodeFamily;
using burst::Word;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::string fixed4(double v) {
  if (!std::isfinite(v)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw burst::DomainError("'" + text + "' is not a comma-separated integer list");
    }
    out.push_back(v);
  }
  return out;
}

// "8..16" or "12".
std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  auto number = [&](const std::string& part) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw burst::DomainError("'" + text + "' is not a range like 8..16");
    }
    return static_cast<std::size_t>(std::stoul(part));
  };
  if (dots == std::string::npos) {
    const std::size_t v = number(text);
    return {v, v};
  }
  const std::size_t lo = number(text.substr(0, dots));
  const std::size_t hi = number(text.substr(dots + 2));
  if (lo > hi) throw burst::DomainError("empty range '" + text + "'");
  return {lo, hi};
}

std::vector<Word> collect_words(const std::vector<std::string>& positional,
                                const std::string& file) {
  std::vector<Word> words;
  for (const auto& w : positional) words.push_back(Word::parse(w));
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw burst::DomainError("cannot open '" + file + "'");
    std::string line;
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      const auto last = line.find_last_not_of(" \t\r");
      words.push_back(Word::parse(line.substr(first, last - first + 1)));
    }
  }
  return words;
}

Word single_word(const std::vector<std::string>& positional, const std::string& file) {
  const auto words = collect_words(positional, file);
  if (words.size() != 1) {
    throw burst::DomainError("expected exactly one word, got " +
                             std::to_string(words.size()));
  }
  return words.front();
}

void print_members(const std::vector<Word>& members) {
  for (const Word& w : members) std::cout << (w.empty() ? "(empty)" : w.to_string()) << '\n';
}

// Shared family options.
struct FamilyArgs {
  std::string family;
  std::size_t n = 0;
  std::size_t t = 0;
  std::size_t s = 0;
  std::string params;
  int window_bound = 0;
  int rll_bound = 0;
  std::size_t max_n = burst::SearchLimits{}.max_n;

  CodeFamily parsed() const { return burst::parse_family(family); }

  burst::SearchOptions search_options() const {
    burst::SearchOptions options;
    options.limits.max_n = max_n;
    options.window = window_bound;
    options.rll_bound = rll_bound;
    return options;
  }

  // Codebook from --params when given, otherwise the best bucket.
  burst::Codebook codebook() const {
    const CodeFamily f = parsed();
    if (!params.empty()) {
      const auto p = burst::params_from_list(f, n, t, s, parse_int_list(params));
      return burst::codebook_from_params(f, n, t, s, p, search_options().limits);
    }
    return burst::search_family(f, n, t, s, search_options()).codebook;
  }
};

void add_family_options(CLI::App* cmd, FamilyArgs& args, bool need_n) {
  auto* n = cmd->add_option("--n", args.n, "codeword length");
  if (need_n) n->required();
  cmd->add_option("--t", args.t, "deleted symbols (cts)");
  cmd->add_option("--s", args.s, "inserted symbols (cts)");
  cmd->add_option("--params", args.params, "comma-separated residues");
  cmd->add_option("--P", args.window_bound, "window bound (svt21)");
  cmd->add_option("--rll", args.rll_bound, "run-length bound (c21rll)");
  cmd->add_option("--max-n", args.max_n, "enumeration guard")->capture_default_str();
}

// --- ball ------------------------------------------------------------------

struct BallArgs {
  std::vector<std::string> words;
  std::string file;
  std::size_t t = 1;
  std::size_t s = 1;
  std::vector<std::size_t> refined;
  bool json_out = false;
};

int run_ball(const BallArgs& args) {
  const Word x = single_word(args.words, args.file);
  if (!args.refined.empty()) {
    const std::size_t k = args.refined[0];
    const std::size_t l = args.refined[1];
    const auto members = burst::refined_ball(x, k, l);
    std::optional<std::uint64_t> closed;
    try {
      closed = burst::refined_ball_size(x, k, l);
    } catch (const burst::DomainError&) {
    }
    if (args.json_out) {
      json m = json::array();
      for (const Word& w : members) m.push_back(w.to_string());
      std::cout << json{{"center", x.to_string()}, {"k", k}, {"l", l},
                        {"size", members.size()},
                        {"closed_form", closed ? json(*closed) : json(nullptr)},
                        {"members", m}}
                       .dump()
                << '\n';
      return kExitOk;
    }
    std::cout << "center " << x.to_string() << '\n'
              << "refined k=" << k << " l=" << l << '\n';
    print_members(members);
    std::cout << "size " << members.size() << '\n'
              << "closed_form " << (closed ? std::to_string(*closed) : "n/a") << '\n';
    if (closed) std::cout << "match " << (*closed == members.size() ? "yes" : "no") << '\n';
    return kExitOk;
  }

  const burst::Ball b = burst::ball(x, args.t, args.s);
  const std::uint64_t formula = burst::ball_size_formula(x.size(), args.t, args.s);
  if (args.json_out) {
    json out = burst::to_json(b);
    out["formula"] = formula;
    out["match"] = formula == b.size();
    std::cout << out.dump() << '\n';
    return kExitOk;
  }
  std::cout << "center " << x.to_string() << '\n'
            << "burst t=" << args.t << " s=" << args.s << '\n';
  print_members(b.members);
  std::cout << "size " << b.size() << '\n'
            << "formula " << formula << '\n'
            << "match " << (formula == b.size() ? "yes" : "no") << '\n';
  return kExitOk;
}

// --- member ----------------------------------------------------------------

struct WordsArgs {
  FamilyArgs fam;
  std::vector<std::string> words;
  std::string file;
  bool json_out = false;
  bool verbose = false;
  std::string window;
};

int run_member(const WordsArgs& args) {
  const auto words = collect_words(args.words, args.file);
  if (words.empty()) throw burst::DomainError("no words given");
  const CodeFamily f = args.fam.parsed();
  const auto values = parse_int_list(args.fam.params);
  for (const Word& x : words) {
    const auto p = burst::params_from_list(f, x.size(), args.fam.t, args.fam.s, values);
    const bool in = burst::is_member(x, p);
    if (args.json_out) {
      std::cout << json{{"word", x.to_string()}, {"member", in}}.dump() << '\n';
    } else {
      std::cout << x.to_string() << ' ' << (in ? "yes" : "no") << '\n';
    }
  }
  return kExitOk;
}

// --- decode ----------------------------------------------------------------

std::string interval_text(const burst::Interval& w) {
  return "[" + std::to_string(w.lo) + "," + std::to_string(w.hi) + "]";
}

void print_outcome(const std::string& label, const burst::DecodeOutcome& o) {
  std::cout << label << ' ' << o.codeword.to_string() << " class "
            << burst::to_string(o.classification);
  if (o.location) std::cout << " location " << interval_text(*o.location);
  std::cout << '\n';
}

int run_decode(const WordsArgs& args) {
  const Word y = single_word(args.words, args.file);
  const CodeFamily f = args.fam.parsed();
  std::size_t n = args.fam.n;
  if (n == 0) {
    if (f == CodeFamily::kCts) {
      if (args.fam.t <= args.fam.s) throw burst::DomainError("cts needs --t > --s");
      n = y.size() + args.fam.t - args.fam.s;
    } else {
      const auto [t, s] = burst::family_burst(f);
      n = y.size() + t - s;
    }
  }
  if (args.fam.params.empty()) throw burst::DomainError("decode needs --params");
  const auto p = burst::params_from_list(f, n, args.fam.t, args.fam.s,
                                         parse_int_list(args.fam.params));
  json out;
  Word codeword;
  switch (f) {
    case CodeFamily::kVt:
      codeword = burst::vt_decode(y, std::get<burst::VtParams>(p), n);
      out = {{"codeword", codeword.to_string()}};
      break;
    case CodeFamily::kLev2: {
      const auto o = burst::lev2_decode(y, std::get<burst::Lev2Params>(p), n);
      codeword = o.codeword;
      out = burst::to_json(o);
      if (args.verbose && !args.json_out) print_outcome("outcome", o);
      break;
    }
    case CodeFamily::kC21:
    case CodeFamily::kC21Rll: {
      burst::C21Params c21;
      if (const auto* q = std::get_if<burst::C21RllParams>(&p)) {
        c21 = {q->a, q->b};
      } else {
        c21 = std::get<burst::C21Params>(p);
      }
      const auto o = burst::c21_decode(y, c21, n);
      codeword = o.codeword;
      if (f == CodeFamily::kC21Rll &&
          !burst::c21rll_member(codeword, std::get<burst::C21RllParams>(p))) {
        throw burst::DecodeFailure("decoded word violates the run-length bound");
      }
      out = burst::to_json(o);
      if (args.verbose && !args.json_out) print_outcome("outcome", o);
      break;
    }
    case CodeFamily::kSvt21: {
      const auto bounds = parse_int_list(args.window);
      if (bounds.size() != 2 || bounds[0] < 1 || bounds[1] < bounds[0]) {
        throw burst::DomainError("svt21 decode needs --window lo,hi (1-based)");
      }
      const burst::Interval w{static_cast<std::size_t>(bounds[0]),
                              static_cast<std::size_t>(bounds[1])};
      codeword = burst::svt21_decode(y, std::get<burst::Svt21Params>(p), w, n);
      out = {{"codeword", codeword.to_string()}, {"window", {w.lo, w.hi}}};
      break;
    }
    case CodeFamily::kCts: {
      const auto trace = burst::cts_decode_traced(y, std::get<burst::CtsParams>(p));
      codeword = trace.codeword;
      out = burst::to_json(trace);
      if (args.verbose && !args.json_out) {
        std::cout << "received_rows " << trace.received_rows.to_string() << '\n';
        print_outcome("row 1", trace.first_row);
        for (std::size_t i = 0; i < trace.windows.size(); ++i) {
          std::cout << "row " << i + 2 << ' ' << trace.decoded_rows[i + 1].to_string()
                    << " window " << interval_text(trace.windows[i]) << '\n';
        }
      }
      break;
    }
    case CodeFamily::kC31: {
      const auto trace = burst::c31_decode_traced(y, std::get<burst::C31Params>(p));
      codeword = trace.codeword;
      out = burst::to_json(trace);
      if (args.verbose && !args.json_out) {
        std::cout << "deltas odd=" << trace.deltas.odd << " even=" << trace.deltas.even
                  << " runs=" << trace.deltas.runs << '\n'
                  << "class " << burst::to_string(trace.classification) << '\n'
                  << "candidates " << trace.candidates << '\n'
                  << "survivors_without_runs " << trace.survivors_without_runs << '\n'
                  << "survivors " << trace.survivors << '\n';
      }
      break;
    }
    case CodeFamily::kExplicit:
      throw burst::DomainError("an explicit word set has no decoder");
  }
  if (args.json_out) {
    out["family"] = args.fam.family;
    out["received"] = y.to_string();
    std::cout << out.dump() << '\n';
  } else {
    std::cout << (args.verbose ? "codeword " : "") << codeword.to_string() << '\n';
  }
  return kExitOk;
}

// --- search ----------------------------------------------------------------

int run_search(const FamilyArgs& args) {
  const auto result = burst::search_family(args.parsed(), args.n, args.t, args.s,
                                           args.search_options());
  json out = burst::to_json(result.codebook);
  out["ambient_size"] = result.ambient_size;
  out["tuple_count"] = result.tuple_count;
  out["nonempty_buckets"] = result.buckets.size();
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string check;
  std::vector<std::string> rest;
  std::string file;
  FamilyArgs fam;
  burst::BallLawOptions laws;
  bool timing = false;
};

int emit(const std::vector<burst::VerificationReport>& reports, bool timing) {
  int status = kExitOk;
  for (const auto& r : reports) {
    std::cout << r.to_json(timing).dump() << '\n';
    if (!r.passed) {
      std::cerr << r.check << " failed: " << r.witness.dump() << '\n';
      status = kExitFailure;
    }
  }
  return status;
}

int run_verify(VerifyArgs& args) {
  if (args.check == "ball-laws") {
    if (!args.rest.empty()) throw burst::DomainError("ball-laws takes no positional input");
    return emit({burst::verify_ball_laws(args.laws)}, args.timing);
  }
  if (args.rest.empty()) throw burst::DomainError("verify " + args.check + " needs a family");
  args.fam.family = args.rest.front();
  const CodeFamily f = args.fam.parsed();

  burst::Codebook book;
  if (f == CodeFamily::kExplicit) {
    const std::vector<std::string> words(args.rest.begin() + 1, args.rest.end());
    if (args.fam.t == 0 && args.fam.s == 0) {
      throw burst::DomainError("an explicit codebook needs --t and --s");
    }
    book = burst::Codebook::from_words(collect_words(words, args.file), args.fam.t,
                                       args.fam.s);
  } else {
    if (args.rest.size() > 1) throw burst::DomainError("unexpected words after the family");
    if (args.fam.n == 0) throw burst::DomainError("verify needs --n");
    book = args.fam.codebook();
  }
  // Explicit --t/--s override the codebook's declared burst.
  const std::size_t t = args.fam.t ? args.fam.t : book.t;
  const std::size_t s = (args.fam.t || args.fam.s) ? args.fam.s : book.s;

  std::vector<burst::VerificationReport> reports;
  const auto& c = args.check;
  // svt21 corrects bursts only with a known window, so "all" skips the
  // global checks for it.
  const bool global = c == "all" && f != CodeFamily::kSvt21;
  if (c == "disjoint" || global) reports.push_back(burst::verify_disjoint(book, t, s));
  if (c == "roundtrip" || (c == "all" && f != CodeFamily::kSvt21 && f != CodeFamily::kExplicit)) {
    reports.push_back(burst::verify_roundtrip(book, t, s));
  }
  if (c == "svt-roundtrip" || (c == "all" && f == CodeFamily::kSvt21)) {
    reports.push_back(burst::verify_svt_roundtrip(book));
  }
  if (c == "equivalence" || global) {
    reports.push_back(burst::verify_equivalence(book, t, s));
  }
  if (c == "bound" || global) reports.push_back(burst::bound_report(book));
  if (c == "classification" || (c == "all" && f == CodeFamily::kC31)) {
    reports.push_back(burst::verify_c31_classification(book));
  }
  if (c == "structure" || (c == "all" && f == CodeFamily::kCts)) {
    reports.push_back(burst::verify_cts_structure(book));
  }
  if (reports.empty()) throw burst::DomainError("unknown check '" + c + "'");
  return emit(reports, args.timing);
}

// --- bounds ----------------------------------------------------------------

struct BoundsArgs {
  std::size_t t = 0;
  std::size_t s = 0;
  std::string range = "8..16";
  std::size_t search_max = 16;
};

std::optional<burst::CodeFamily> construction_for(std::size_t n, std::size_t t,
                                                  std::size_t s) {
  if (t == 2 && s == 1) return CodeFamily::kC21;
  if (t == 3 && s == 1) {
    if (n % 2 == 0) return CodeFamily::kC31;
    return std::nullopt;
  }
  if (s >= 1 && t >= 2 * s && n % (t - s) == 0) return CodeFamily::kCts;
  return std::nullopt;
}

int run_bounds(const BoundsArgs& args) {
  if (args.t == 0 || args.s == 0) throw burst::DomainError("bounds needs --t and --s >= 1");
  const auto [lo, hi] = parse_range(args.range);
  std::printf("%-4s %14s %10s %14s %8s %10s\n", "n", "sphere_bound", "r_floor",
              "construction", "size", "redundancy");
  for (std::size_t n = lo; n <= hi; ++n) {
    if (std::max(args.t, args.s) > n) continue;
    const std::uint64_t bound = burst::sphere_packing_bound(n, args.t, args.s);
    const double floor_r = burst::redundancy_lower_bound(n, args.t, args.s);
    std::string name = "-", size = "-", red = "-";
    if (const auto fam = construction_for(n, args.t, args.s); fam && n <= args.search_max) {
      burst::SearchOptions options;
      options.limits.max_n = args.search_max;
      const auto book = burst::search_family(*fam, n, args.t, args.s, options).codebook;
      name = std::string(burst::to_string(*fam));
      size = std::to_string(book.size());
      red = fixed4(book.redundancy());
    }
    std::printf("%-4zu %14llu %10s %14s %8s %10s\n", n,
                static_cast<unsigned long long>(bound), fixed4(floor_r).c_str(),
                name.c_str(), size.c_str(), red.c_str());
  }
  return kExitOk;
}

// --- simulate --------------------------------------------------------------

struct SimulateArgs {
  FamilyArgs fam;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  bool json_out = false;
};

int run_simulate(const SimulateArgs& args) {
  burst::SimConfig config;
  config.family = args.fam.parsed();
  config.n = args.fam.n;
  config.t = args.fam.t;
  config.s = args.fam.s;
  config.trials = args.trials;
  config.seed = args.seed;

  burst::SimResult result;
  if (!args.fam.params.empty()) {
    const burst::Codebook book = args.fam.codebook();
    result = burst::simulate(config, book, burst::make_decoder(book));
  } else {
    burst::SearchLimits limits;
    limits.max_n = args.fam.max_n;
    result = burst::simulate(config, limits);
  }
  if (args.json_out) {
    json out = {{"family", args.fam.family},
                {"n", result.codebook.n},
                {"t", result.codebook.t},
                {"s", result.codebook.s},
                {"params", burst::to_json(result.codebook.params)},
                {"codebook_size", result.codebook.size()},
                {"seed", config.seed},
                {"trials", config.trials},
                {"successes", result.successes}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << result.summary();
  }
  if (!result.all_decoded()) {
    std::cerr << "simulate failed: " << result.witness.dump() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Burst-correcting codes: balls, codes, decoders and exhaustive checks"};
  app.require_subcommand(1);

  BallArgs ball_args;
  auto* ball = app.add_subcommand("ball", "enumerate a (t,s)-burst ball or a refined ball");
  ball->add_option("word", ball_args.words, "center word");
  ball->add_option("--file", ball_args.file, "read words from a file, one per line");
  ball->add_option("--t", ball_args.t, "deleted symbols")->capture_default_str();
  ball->add_option("--s", ball_args.s, "inserted symbols")->capture_default_str();
  ball->add_option("--refined", ball_args.refined, "refined ball B'_{k,l}")->expected(2);
  ball->add_flag("--json", ball_args.json_out, "JSON output");

  WordsArgs member_args;
  auto* member = app.add_subcommand("member", "test code membership");
  member->add_option("family", member_args.fam.family, "code family")->required();
  member->add_option("word", member_args.words, "words to test");
  member->add_option("--file", member_args.file, "read words from a file");
  member->add_option("--t", member_args.fam.t, "deleted symbols (cts)");
  member->add_option("--s", member_args.fam.s, "inserted symbols (cts)");
  member->add_option("--params", member_args.fam.params, "comma-separated residues")
      ->required();
  member->add_flag("--json", member_args.json_out, "JSON lines output");

  WordsArgs decode_args;
  auto* decode = app.add_subcommand("decode", "decode a received word");
  decode->add_option("family", decode_args.fam.family, "code family")->required();
  decode->add_option("word", decode_args.words, "received word");
  decode->add_option("--file", decode_args.file, "read the word from a file");
  decode->add_option("--n", decode_args.fam.n, "codeword length (inferred when omitted)");
  decode->add_option("--t", decode_args.fam.t, "deleted symbols (cts)");
  decode->add_option("--s", decode_args.fam.s, "inserted symbols (cts)");
  decode->add_option("--params", decode_args.fam.params, "comma-separated residues");
  decode->add_option("--window", decode_args.window, "svt21 window lo,hi");
  decode->add_flag("--verbose", decode_args.verbose, "print the decode trace");
  decode->add_flag("--json", decode_args.json_out, "JSON output with trace");

  FamilyArgs search_args;
  auto* search = app.add_subcommand("search", "best-bucket parameter search");
  search->add_option("family", search_args.family, "code family")->required();
  add_family_options(search, search_args, true);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify",
      "exhaustive checks: ball-laws, disjoint, roundtrip, svt-roundtrip, equivalence, "
      "bound, classification, structure, all");
  verify->add_option("check", verify_args.check, "check name")->required();
  verify->add_option("input", verify_args.rest, "family, then words for 'explicit'");
  verify->add_option("--file", verify_args.file, "explicit codebook words");
  add_family_options(verify, verify_args.fam, false);
  verify->add_option("--n-min", verify_args.laws.n_min, "ball-laws smallest n")
      ->capture_default_str();
  verify->add_option("--n-max", verify_args.laws.n_max, "ball-laws largest n")
      ->capture_default_str();
  verify->add_option("--t-max", verify_args.laws.t_max, "ball-laws largest t")
      ->capture_default_str();
  verify->add_option("--s-max", verify_args.laws.s_max, "ball-laws largest s")
      ->capture_default_str();
  verify->add_option("--guard", verify_args.laws.guard, "ball-laws n guard")
      ->capture_default_str();
  verify->add_flag("--timing", verify_args.timing, "include wall_ms in reports");

  BoundsArgs bounds_args;
  auto* bounds = app.add_subcommand("bounds", "sphere-packing bound vs constructions");
  bounds->add_option("--t", bounds_args.t, "deleted symbols")->required();
  bounds->add_option("--s", bounds_args.s, "inserted symbols")->required();
  bounds->add_option("--n", bounds_args.range, "length range lo..hi")->capture_default_str();
  bounds->add_option("--search-max", bounds_args.search_max,
                     "largest n for construction searches")
      ->capture_default_str();

  SimulateArgs sim_args;
  auto* sim = app.add_subcommand("simulate", "seeded random bursts through a decoder");
  sim->add_option("family", sim_args.fam.family, "code family")->required();
  add_family_options(sim, sim_args.fam, true);
  sim->add_option("--trials", sim_args.trials, "number of trials")->capture_default_str();
  sim->add_option("--seed", sim_args.seed, "64-bit seed")->capture_default_str();
  sim->add_flag("--json", sim_args.json_out, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*ball) return run_ball(ball_args);
    if (*member) return run_member(member_args);
    if (*decode) return run_decode(decode_args);
    if (*search) return run_search(search_args);
    if (*verify) return run_verify(verify_args);
    if (*bounds) return run_bounds(bounds_args);
    if (*sim) return run_simulate(sim_args);
  } catch (const burst::ResourceError& e) {
    std::cerr << "resource guard: " << e.what() << '\n';
    return kExitResource;
  } catch (const burst::DecodeFailure& e) {
    std::cerr << "decode failure: " << e.what() << '\n';
    return kExitFailure;
  } catch (const burst::AmbiguityError& e) {
    std::cerr << "ambiguous: " << e.what() << '\n';
    return kExitFailure;
  } catch (const burst::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
