// Command-line front end: batch classification and exhaustive verification
// over the text grammar (see README).  Inputs are inline text or a file path;
// output is plain text, or one JSON object per query with --json.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ladders/classify.hpp"
#include "ladders/document.hpp"
#include "ladders/errors.hpp"
#include "ladders/orbits.hpp"
#include "ladders/symplectic.hpp"
#include "ladders/verify.hpp"
#include "ladders/zelevinsky.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace ladders;

struct Session {
  bool emit_json = false;
  bool strict = false;
  bool saw_undetermined = false;
  bool saw_failure = false;
};

std::string load_input(const std::string& arg) {
  std::error_code ec;
  if (!arg.empty() && std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  return arg;
}

// Bare queries may reference conventional names without declaring them:
// rho, rho2, delta, delta3, ... declare themselves as r=<digits or 1> sc=no.
Document parse_lenient(const std::string& text,
                       const std::string& default_line) {
  std::string prefix;
  static const std::regex implicit("^(rho|delta)([0-9]*)$");
  for (int guard = 0; guard < 64; ++guard) {
    try {
      return parse(prefix + text, default_line);
    } catch (const UnknownLine& e) {
      std::smatch match;
      const std::string name = e.name();
      if (!std::regex_match(name, match, implicit)) throw;
      const int r = match[2].str().empty() ? 1 : std::stoi(match[2].str());
      if (r < 1) throw;
      prefix += "line " + name + " r=" + std::to_string(r) + " sc=no\n";
    }
  }
  return parse(prefix + text, default_line);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string cleaned;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') cleaned.push_back(c);
  std::stringstream stream(cleaned);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) throw Error("empty entry in list '" + text + "'");
    out.push_back(std::stoi(item));
  }
  if (out.empty())
    throw Error("expected a comma-separated list, got '" + text + "'");
  return out;
}

void print_json(const json& object) { std::cout << object.dump() << "\n"; }

json verdict_json(const std::string& query, const std::string& command,
                  const Verdict& v) {
  json out;
  out["query"] = query;
  out["command"] = command;
  out["verdict"] = to_string(v.decision);
  out["reason"] = v.reason;
  if (v.witness) out["witness"] = format(*v.witness);
  if (v.certificate)
    out["certificates"] = json::array({format(*v.certificate)});
  return out;
}

void emit_verdict(Session& session, const std::string& query,
                  const std::string& command, const Verdict& v) {
  if (v.decision == Decision::Undetermined) session.saw_undetermined = true;
  if (session.emit_json)
    print_json(verdict_json(query, command, v));
  else
    std::cout << format(v) << "\n";
}

const Multisegment& expect_multisegment(const Query& query) {
  if (const auto* m = std::get_if<Multisegment>(&query.payload)) return *m;
  throw Error("this command expects a multisegment query");
}

const Segment& expect_single_segment(const Multisegment& m) {
  if (m.size() != 1)
    throw Error("this command expects a single segment, got " +
                std::to_string(m.size()));
  return m.segments().front();
}

struct QueryContext {
  Session& session;
  std::string canonical;
  bool announce;  // print a header when a document carries several queries
};

void announce(const QueryContext& ctx) {
  if (!ctx.session.emit_json && ctx.announce)
    std::cout << "# query: " << ctx.canonical << "\n";
}

void run_multisegment_command(QueryContext ctx, const std::string& command,
                              const Multisegment& m,
                              const std::vector<int>& jacquet_parts,
                              int speh_s) {
  Session& session = ctx.session;
  announce(ctx);
  if (command == "dual") {
    const Multisegment dual = mw_dual(m);
    if (session.emit_json)
      print_json({{"query", ctx.canonical},
                  {"command", command},
                  {"result", format(dual)}});
    else
      std::cout << format(dual) << "\n";
  } else if (command == "is-ladder") {
    const auto order = ladder_order(m);
    if (session.emit_json) {
      json out{{"query", ctx.canonical}, {"command", command}};
      out["result"] = json{{"ladder", order.has_value()}};
      if (order) out["result"]["order"] = format(*order);
      print_json(out);
    } else if (order) {
      std::cout << "ladder: " << format(*order) << "\n";
    } else {
      std::cout << "not a ladder\n";
    }
  } else if (command == "speh-halve") {
    const auto half = speh_halve(m);
    if (session.emit_json)
      print_json({{"query", ctx.canonical},
                  {"command", command},
                  {"result", half ? json(format(*half)) : json(nullptr)}});
    else if (half)
      std::cout << "m' = " << format(*half) << "\n";
    else
      std::cout << "not of Speh type\n";
  } else if (command == "classify-q") {
    emit_verdict(session, ctx.canonical, command, classify_ladder_q(m));
  } else if (command == "classify-z") {
    emit_verdict(session, ctx.canonical, command, classify_ladder_z(m));
  } else if (command == "good-decomps") {
    json orders = json::array();
    for (const OrderedMultisegment& order : standard_orders(m)) {
      const auto certs = good_decompositions(order);
      if (session.emit_json) {
        json entry{{"order", format(order)}};
        entry["certificates"] = json::array();
        for (const GoodDecomposition& g : certs)
          entry["certificates"].push_back(format(g));
        orders.push_back(std::move(entry));
      } else {
        std::cout << "order: " << format(order) << "\n";
        if (certs.empty()) std::cout << "  no certificates\n";
        for (const GoodDecomposition& g : certs)
          std::cout << "  " << format(g) << "\n";
      }
    }
    if (session.emit_json)
      print_json({{"query", ctx.canonical},
                  {"command", command},
                  {"orders", std::move(orders)}});
  } else if (command == "is-symplectic") {
    const bool symplectic = is_symplectic(m);
    if (session.emit_json)
      print_json({{"query", ctx.canonical},
                  {"command", command},
                  {"result", symplectic}});
    else
      std::cout << (symplectic ? "symplectic" : "not symplectic") << "\n";
  } else if (command == "kernel") {
    const auto order = ladder_order(m);
    if (!order) throw NotALadder("kernel components require a ladder");
    const auto components = kernel_components(*order);
    if (session.emit_json) {
      json list = json::array();
      for (const auto& component : components)
        list.push_back(component ? json(format(*component)) : json(nullptr));
      print_json({{"query", ctx.canonical},
                  {"command", command},
                  {"result", std::move(list)}});
    } else {
      for (std::size_t i = 0; i < components.size(); ++i)
        std::cout << (i + 1) << ": "
                  << (components[i] ? format(*components[i]) : "0") << "\n";
      if (components.empty()) std::cout << "no components\n";
    }
  } else if (command == "jacquet") {
    if (jacquet_parts.empty())
      throw Error("jacquet needs --parts, e.g. --parts 1,2");
    const Segment& d = expect_single_segment(m);
    const auto pieces = jacquet_decomposition(d, jacquet_parts);
    const OrderedMultisegment ordered(d.line(), pieces);
    if (session.emit_json) {
      json list = json::array();
      for (const Segment& piece : pieces) list.push_back(format(piece));
      print_json({{"query", ctx.canonical},
                  {"command", command},
                  {"result", std::move(list)}});
    } else {
      std::cout << format(ordered) << "\n";
    }
  } else if (command == "speh") {
    const Segment& d = expect_single_segment(m);
    emit_verdict(session, ctx.canonical, command, classify_speh(d, speh_s));
  } else {
    throw Error("unknown command '" + command + "'");
  }
}

void run_document(Session& session, const std::string& default_command,
                  const std::string& raw_input,
                  const std::string& default_line,
                  const std::vector<int>& jacquet_parts, int speh_s) {
  const Document doc = parse_lenient(load_input(raw_input), default_line);
  if (doc.queries.empty()) throw Error("the document contains no queries");
  const bool several = doc.queries.size() > 1;
  for (const Query& query : doc.queries) {
    const std::string command =
        query.command.empty() ? default_command : query.command;
    if (const auto* factors =
            std::get_if<std::vector<UnitaryFactor>>(&query.payload)) {
      if (command != "unitary")
        throw Error("factor queries are answered by 'unitary'");
      for (const UnitaryFactor& f : *factors) validate_factor(f);
      QueryContext ctx{session, format(*factors), several};
      announce(ctx);
      emit_verdict(session, ctx.canonical, command,
                   unitary_family_member(*factors));
      continue;
    }
    const Multisegment& m = expect_multisegment(query);
    QueryContext ctx{session, format(m), several};
    run_multisegment_command(ctx, command, m, jacquet_parts, speh_s);
  }
}

// ---------------------------------------------------------------------------
// verify

struct VerifyWindow {
  std::optional<int> max_segs;
  std::optional<int> lo;
  std::optional<int> hi;
};

SuiteResult run_suite(const std::string& name, const VerifyWindow& window) {
  const int segs4 = window.max_segs.value_or(4);
  const int segs3 = window.max_segs.value_or(3);
  if (name == "rank4-table") return verify_rank4_table();
  if (name == "ladder-pairing")
    return verify_ladder_pairing(segs4, 3, window.lo.value_or(0),
                                 window.hi.value_or(6));
  if (name == "dual-parity")
    return verify_dual_parity(segs4, 3, window.lo.value_or(0),
                              window.hi.value_or(6));
  if (name == "dual-laws")
    return verify_dual_laws(segs4, window.lo.value_or(0),
                            window.hi.value_or(4));
  if (name == "speh-implication")
    return verify_speh_implication_suite(segs3, window.lo.value_or(0),
                                         window.hi.value_or(3));
  if (name == "speh-parity") return verify_speh_parity(6, 3);
  if (name == "orbit-counts") return verify_orbit_counts(6);
  if (name == "classifier-duality")
    return verify_classifier_duality(segs4, 3, window.lo.value_or(0),
                                     window.hi.value_or(6));
  if (name == "roundtrip") return verify_roundtrip();
  throw Error(
      "unknown suite '" + name +
      "'; available: rank4-table, ladder-pairing, dual-parity, dual-laws, "
      "speh-implication, speh-parity, orbit-counts, classifier-duality, "
      "roundtrip, all");
}

void emit_suite(Session& session, const SuiteResult& result) {
  if (!result.passed()) session.saw_failure = true;
  if (session.emit_json) {
    print_json({{"command", "verify"},
                {"suite", result.suite},
                {"cases", result.cases},
                {"mismatches", result.mismatches},
                {"passed", result.passed()},
                {"notes", result.notes},
                {"examples", result.examples}});
    return;
  }
  std::cout << result.suite << ": " << result.mismatches
            << " counterexamples / " << result.cases << " cases -- "
            << (result.passed() ? "PASS" : "FAIL") << "\n";
  for (const std::string& note : result.notes)
    std::cout << "  note: " << note << "\n";
  for (const std::string& example : result.examples)
    std::cout << "  e.g. " << example << "\n";
}

void run_verify(Session& session, const std::string& suite,
                const VerifyWindow& window) {
  if (suite == "all") {
    for (const char* name :
         {"rank4-table", "ladder-pairing", "dual-parity", "dual-laws",
          "speh-implication", "speh-parity", "orbit-counts",
          "classifier-duality", "roundtrip"})
      emit_suite(session, run_suite(name, window));
    return;
  }
  emit_suite(session, run_suite(suite, window));
}

// ---------------------------------------------------------------------------
// orbits

void run_orbits_s2(Session& session, const std::string& composition_text) {
  const Composition alpha(parse_int_list(composition_text));
  const auto involutions = s2_of(alpha);
  if (session.emit_json) {
    json list = json::array();
    for (const BlockInvolution& tau : involutions)
      list.push_back(format_cycles(tau));
    print_json({{"command", "orbits s2"},
                {"composition", alpha.parts()},
                {"involutions", std::move(list)},
                {"count", involutions.size()}});
    return;
  }
  for (const BlockInvolution& tau : involutions)
    std::cout << format_cycles(tau) << "\n";
  std::cout << "count: " << involutions.size() << "\n";
}

void run_orbits_exponents(Session& session,
                          const std::string& composition_text,
                          const std::string& tau_text) {
  const Composition alpha(parse_int_list(composition_text));
  const BlockInvolution tau = parse_cycles(tau_text, alpha.size());
  const auto exponents = character_exponents(alpha, tau);
  if (session.emit_json) {
    print_json({{"command", "orbits exponents"},
                {"composition", alpha.parts()},
                {"tau", format_cycles(tau)},
                {"exponents", exponents}});
    return;
  }
  std::cout << "(";
  for (std::size_t i = 0; i < exponents.size(); ++i)
    std::cout << (i ? ", " : "") << exponents[i];
  std::cout << ")\n";
}

void run_orbits_rep(Session& session, const std::string& composition_text,
                    const std::string& tau_text) {
  const Composition alpha(parse_int_list(composition_text));
  const BlockInvolution tau = parse_cycles(tau_text, alpha.size());
  const OrbitRep rep = admissible_rep(alpha, tau);
  if (session.emit_json) {
    json markers = json::array();
    for (const auto& marker : rep.markers())
      markers.push_back({marker.row, marker.col, marker.size});
    print_json({{"command", "orbits rep"},
                {"composition", alpha.parts()},
                {"tau", format_cycles(tau)},
                {"markers", std::move(markers)}});
    return;
  }
  for (const auto& marker : rep.markers())
    std::cout << "(" << marker.row << "," << marker.col << "): J_"
              << marker.size << "\n";
}

void run_orbits_mp(Session& session, int n, int k, int r) {
  const int exponent = maximal_parabolic_exponent(n, k, r);
  if (session.emit_json)
    print_json({{"command", "orbits mp-exponent"},
                {"n", n},
                {"k", k},
                {"r", r},
                {"exponent", exponent}});
  else
    std::cout << exponent << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  Session session;
  CLI::App app{
      "ladders -- combinatorial classification of symplectic models for "
      "ladder and unitary-type representations over a quaternion division "
      "algebra"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", session.emit_json,
               "emit one JSON object per query (stable ordering)");
  app.add_flag("--strict", session.strict,
               "exit with status 1 when a verdict is Undetermined");
  std::string line_name;
  app.add_option("--line", line_name,
                 "default line for queries written without '@ <name>'");

  std::string input;
  std::string parts_text;
  int speh_s = 1;

  struct Plain {
    const char* name;
    const char* help;
  };
  const Plain plain_commands[] = {
      {"dual", "Zelevinsky dual of each multisegment query"},
      {"is-ladder", "report the ladder order, when one exists"},
      {"speh-halve", "the half m' with m = m' + nu m', when m is Speh type"},
      {"classify-q", "quotient-side symplectic-model classification"},
      {"classify-z", "Zelevinsky-side symplectic-model classification"},
      {"good-decomps", "list distinction certificates per standard order"},
      {"is-symplectic", "certificates exist for every standard order"},
      {"kernel", "kernel components of the ladder projection"},
  };
  std::vector<CLI::App*> doc_subs;
  for (const Plain& command : plain_commands) {
    CLI::App* sub = app.add_subcommand(command.name, command.help);
    sub->add_option("input", input, "document text or file path")->required();
    doc_subs.push_back(sub);
  }

  CLI::App* jacquet = app.add_subcommand(
      "jacquet", "restrict a single segment along block sizes");
  jacquet->add_option("input", input, "document text or file path")
      ->required();
  jacquet->add_option("--parts", parts_text, "block sizes, e.g. 1,2")
      ->required();

  CLI::App* speh =
      app.add_subcommand("speh", "classify the Speh block Sp(Q(base), s)");
  speh->add_option("input", input, "document with one base segment")
      ->required();
  speh->add_option("--s", speh_s, "multiplicity s >= 1")->required();

  CLI::App* unitary = app.add_subcommand(
      "unitary", "membership in the covered unitary family");
  unitary->add_option("input", input, "factor list or file path")->required();

  CLI::App* orbits = app.add_subcommand("orbits", "block-orbit combinatorics");
  orbits->require_subcommand(1);
  std::string composition_text, tau_text;
  int mp_n = 0, mp_k = 0, mp_r = 0;
  CLI::App* s2 = orbits->add_subcommand(
      "s2", "size-preserving block involutions of a composition");
  s2->add_option("composition", composition_text, "e.g. 1,2,1")->required();
  CLI::App* exponents = orbits->add_subcommand(
      "exponents", "modulus-character exponents of an admissible orbit");
  exponents->add_option("composition", composition_text, "e.g. 1,1")
      ->required();
  exponents->add_option("tau", tau_text, "cycles, e.g. \"(1 2)\" or e")
      ->required();
  CLI::App* rep = orbits->add_subcommand(
      "rep", "block markers of the admissible-orbit representative");
  rep->add_option("composition", composition_text, "e.g. 2,1,2")->required();
  rep->add_option("tau", tau_text, "cycles, e.g. \"(1 3)\" or e")->required();
  CLI::App* mp = orbits->add_subcommand("mp-exponent",
                                        "stabilizer exponent -(n - 2r + 1)");
  mp->add_option("n", mp_n, "ambient rank")->required();
  mp->add_option("k", mp_k, "parabolic block, k <= n - k")->required();
  mp->add_option("r", mp_r, "isotropic rank, 0 <= r <= k")->required();

  CLI::App* verify =
      app.add_subcommand("verify", "run an exhaustive verification suite");
  std::string suite;
  std::string window_text;
  int max_segs = 0;
  verify
      ->add_option("suite", suite,
                   "rank4-table | ladder-pairing | dual-parity | dual-laws | "
                   "speh-implication | speh-parity | orbit-counts | "
                   "classifier-duality | roundtrip | all")
      ->required();
  verify->add_option("--max-segs", max_segs, "enumeration bound on segments");
  verify->add_option("--window", window_text, "support window a:b");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (std::size_t i = 0; i < doc_subs.size(); ++i)
      if (doc_subs[i]->parsed())
        run_document(session, plain_commands[i].name, input, line_name, {},
                     0);
    if (jacquet->parsed())
      run_document(session, "jacquet", input, line_name,
                   parse_int_list(parts_text), 0);
    if (speh->parsed())
      run_document(session, "speh", input, line_name, {}, speh_s);
    if (unitary->parsed())
      run_document(session, "unitary", input, line_name, {}, 0);
    if (orbits->parsed()) {
      if (s2->parsed()) run_orbits_s2(session, composition_text);
      if (exponents->parsed())
        run_orbits_exponents(session, composition_text, tau_text);
      if (rep->parsed()) run_orbits_rep(session, composition_text, tau_text);
      if (mp->parsed()) run_orbits_mp(session, mp_n, mp_k, mp_r);
    }
    if (verify->parsed()) {
      VerifyWindow window;
      if (max_segs > 0) window.max_segs = max_segs;
      if (!window_text.empty()) {
        const auto colon = window_text.find(':');
        if (colon == std::string::npos)
          throw Error("--window expects a:b, got '" + window_text + "'");
        window.lo = std::stoi(window_text.substr(0, colon));
        window.hi = std::stoi(window_text.substr(colon + 1));
      }
      run_verify(session, suite, window);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }

  if (session.saw_failure) return 1;
  if (session.strict && session.saw_undetermined) return 1;
  return 0;
}
