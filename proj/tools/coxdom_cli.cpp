// coxdom: root systems, dominance order, elementary roots, infinity
// heights, and imaginary-cone membership for finite-rank Coxeter groups.
//
// One structured JSON document per invocation on stdout; timing on
// stderr.  Exit codes: 0 success, 1 input error, 2 cap/inconclusive.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "coxdom/coxdom.hpp"

using namespace coxdom;

namespace {

struct CliOptions {
  std::string command;
  std::string datum_path;
  int depth = 10;
  int n = 3;
  std::string x, y, word;
  std::string backend = "float";
  double epsilon = 1e-9;
  unsigned threads = 1;
  bool pretty = false;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::cap_exceeded:
    case ErrorKind::certification_failed:
      return 2;
    default:
      return 1;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::parse_error, "cannot open datum file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<unsigned> parse_word(const std::string& text, std::size_t rank) {
  std::vector<unsigned> word;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('.', start);
    if (end == std::string::npos) end = text.size();
    const std::string piece = text.substr(start, end - start);
    char* tail = nullptr;
    const long v = std::strtol(piece.c_str(), &tail, 10);
    if (*tail != '\0' || v < 1 || v > static_cast<long>(rank))
      fail(ErrorKind::parse_error, "bad word literal '" + text + "'");
    word.push_back(static_cast<unsigned>(v - 1));
    if (end == text.size()) break;
    start = end + 1;
  }
  return word;
}

// Generic readable rendering of the JSON document for --pretty.
void render_pretty(const Json& j, int indent, std::ostream& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !value.empty() &&
                                (value.front().is_object() || value.front().is_array()))) {
        out << pad << key << ":\n";
        render_pretty(value, indent + 1, out);
      } else {
        out << pad << key << ": " << value.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_object() || value.is_array()) {
        out << pad << "-\n";
        render_pretty(value, indent + 1, out);
      } else {
        out << pad << "- " << value.dump() << "\n";
      }
    }
  } else {
    out << pad << j.dump() << "\n";
  }
}

void emit(const Json& j, bool pretty) {
  if (pretty) {
    render_pretty(j, 0, std::cout);
  } else {
    std::cout << j.dump() << "\n";
  }
}

template <class S>
Vec<S> parse_coeffs(const std::string& text, std::size_t rank,
                    const char* flag) {
  if (text.empty())
    fail(ErrorKind::parse_error, std::string("missing required --") + flag);
  return parse_vector<S>(text, rank);
}

// alpha_t of a reflection given by a word: the unique positive root the
// element negates while acting as its reflection.
template <class S>
Vec<S> reflection_root_of_word(RootStore<S>& store,
                               const std::vector<unsigned>& word) {
  auto t = reduce_word(store.datum(), word);
  if (t.length() % 2 == 0)
    fail(ErrorKind::parse_error, "word has even length; not a reflection");
  const int depth = static_cast<int>(t.length() + 1) / 2;
  store.ensure_depth(depth);
  for (RootId id : store.roots_up_to(std::min(depth, store.max_depth()))) {
    const Vec<S>& x = store.root(id).coeffs;
    if (!vec_eq(t.apply(x), vec_neg(x))) continue;
    if (mat_eq(store.datum().reflection_matrix_in(x), t.matrix())) return x;
  }
  fail(ErrorKind::parse_error, "word is not a reflection");
}

template <class S>
Json json_verdict(const DominanceVerdict& v) {
  Json j;
  j["holds"] = v.holds;
  j["reason"] = dom_reason_name(v.reason);
  return j;
}

template <class S>
Json json_element(const GroupElement<S>& g) {
  Json j;
  j["word"] = g.word_str();
  j["length"] = g.length();
  return j;
}

template <class S>
int run_command(const CliOptions& opt) {
  const auto started = std::chrono::steady_clock::now();
  auto datum = load_datum<S>(read_file(opt.datum_path));
  {
    auto validation = validate_datum(datum);
    if (!validation.ok && opt.command != "validate") {
      Json err;
      err["error"] = Json{{"type", "C1Violation"},
                          {"violations", validation.violations}};
      emit(err, opt.pretty);
      return 1;
    }
  }
  typename RootStore<S>::Options store_opts;
  store_opts.threads = opt.threads;
  RootStore<S> store(datum, store_opts);

  Json out;
  out["command"] = opt.command;
  out["backend"] = S::backend_name();
  out["datum"] = json_datum(datum);
  int code = 0;

  if (opt.command == "validate") {
    auto rep = validate_datum(datum);
    out["ok"] = rep.ok;
    out["violations"] = rep.violations;
    out["note"] = rep.note;
    if (!rep.ok) code = 1;
  } else if (opt.command == "roots") {
    store.ensure_depth(opt.depth);
    out["count"] = store.size();
    out["complete"] = store.exhausted();
    Json roots = Json::array();
    for (int dep = 1; dep <= store.max_depth(); ++dep)
      for (RootId id : store.level(dep)) roots.push_back(json_root(store, id));
    out["roots"] = std::move(roots);
  } else if (opt.command == "dominates") {
    const Vec<S> x = parse_coeffs<S>(opt.x, datum.rank(), "x");
    const Vec<S> y = parse_coeffs<S>(opt.y, datum.rank(), "y");
    store.ensure_depth(opt.depth);
    ensure_root(store, vec_sign(x) == VecSign::negative ? vec_neg(x) : x);
    ensure_root(store, vec_sign(y) == VecSign::negative ? vec_neg(y) : y);
    out["verdict"] = json_verdict<S>(dominates(store, x, y));
    out["bilinear"] = datum.bilinear(x, y).str();
  } else if (opt.command == "dn" || opt.command == "small-roots") {
    const int n_max = opt.command == "small-roots" ? 0 : opt.n;
    auto rep = enumerate_Dn(store, n_max);
    out["complete_up_to"] = rep.complete_up_to;
    out["depth_scanned"] = rep.depth_scanned;
    out["exhausted"] = rep.exhausted;
    Json sets;
    for (int n = 0; n <= n_max; ++n) {
      Json set = Json::array();
      if (rep.sets.count(n))
        for (RootId id : rep.sets.at(n)) set.push_back(json_root(store, id));
      sets["D" + std::to_string(n)] = std::move(set);
    }
    out["sets"] = std::move(sets);
    out["caveats"] = rep.caveats;
  } else if (opt.command == "height") {
    Vec<S> x;
    if (!opt.word.empty()) {
      x = reflection_root_of_word(store, parse_word(opt.word, datum.rank()));
    } else {
      x = parse_coeffs<S>(opt.x, datum.rank(), "x");
      ensure_root(store, x);
    }
    auto rep = infinity_height(store, x);
    out["root"] = vec_str(x);
    out["word"] = reflection_word(store, rep.reflection_root).word_str();
    out["standard_height"] = rep.standard;
    out["infinity_height"] = rep.infinity_via_dominance;
    out["via_decomposition"] = rep.infinity_via_decomposition;
    out["methods_agree"] = rep.methods_agree;
    Json subs = Json::array();
    for (const auto& [sub, h] : rep.per_subsystem) {
      Json one = json_subsystem(sub);
      one["height"] = h;
      subs.push_back(std::move(one));
    }
    out["subsystems"] = std::move(subs);
    out["caveats"] = rep.caveats;
  } else if (opt.command == "tn") {
    auto rep = enumerate_Tn(store, opt.n);
    out["complete_up_to"] = rep.complete_up_to;
    out["exhausted"] = rep.exhausted;
    Json sets;
    for (int n = 0; n <= opt.n; ++n) {
      Json set = Json::array();
      if (rep.sets.count(n)) {
        for (RootId id : rep.sets.at(n)) {
          Json t;
          t["root"] = vec_str(store.root(id).coeffs);
          t["word"] = reflection_word(store, id).word_str();
          set.push_back(std::move(t));
        }
      }
      sets["T" + std::to_string(n)] = std::move(set);
    }
    out["sets"] = std::move(sets);
  } else if (opt.command == "decompose") {
    Vec<S> x;
    if (!opt.word.empty()) {
      x = reflection_root_of_word(store, parse_word(opt.word, datum.rank()));
    } else {
      x = parse_coeffs<S>(opt.x, datum.rank(), "x");
      ensure_root(store, x);
    }
    auto dec = decompose_reflections(store, x, opt.depth);
    out["root"] = vec_str(x);
    out["window_depth"] = dec.window_depth;
    out["partition_ok"] = dec.partition_ok;
    Json subs = Json::array();
    for (std::size_t p = 0; p < dec.subsystems.size(); ++p) {
      Json one = json_subsystem(dec.subsystems[p]);
      one["height"] = subsystem_height(dec.subsystems[p], x);
      one["window_members"] = dec.members[p].size();
      subs.push_back(std::move(one));
    }
    out["subsystems"] = std::move(subs);
    out["caveats"] = dec.caveats;
  } else if (opt.command == "chains") {
    const Vec<S> x = parse_coeffs<S>(opt.x, datum.rank(), "x");
    const Vec<S> y = parse_coeffs<S>(opt.y, datum.rank(), "y");
    ensure_root(store, x);
    ensure_root(store, y);
    auto sub = maximal_dihedral(store, x, y);
    out["subsystem"] = json_subsystem(sub);
    if (!sub.certified) {
      out["caveats"] = sub.caveats;
      emit(out, opt.pretty);
      return 2;
    }
    auto [first, second] = dominance_chains(store, sub, std::max(opt.n, 2));
    Json c1 = Json::array(), c2 = Json::array();
    for (const auto& v : first) c1.push_back(vec_str(v));
    for (const auto& v : second) c2.push_back(vec_str(v));
    out["chain_alpha"] = std::move(c1);
    out["chain_beta"] = std::move(c2);
  } else if (opt.command == "cone") {
    const Vec<S> x = parse_coeffs<S>(opt.x, datum.rank(), "x");
    ConeVerdict<S> verdict;
    if (!opt.y.empty()) {
      const Vec<S> y = parse_vector<S>(opt.y, datum.rank());
      store.ensure_depth(opt.depth);
      ensure_root(store, vec_sign(x) == VecSign::negative ? vec_neg(x) : x);
      ensure_root(store, vec_sign(y) == VecSign::negative ? vec_neg(y) : y);
      verdict = imaginary_cone_contains_difference(store, x, y);
      out["mode"] = "root-difference";
    } else {
      verdict = imaginary_cone_contains(datum, x);
      out["mode"] = "general";
    }
    out["status"] = cone_status_name(verdict.status);
    out["certificate"] = verdict.certificate;
    if (verdict.witness) out["witness"] = json_element(*verdict.witness);
    if (verdict.status == ConeStatus::inconclusive) code = 2;
  } else if (opt.command == "witness") {
    const Vec<S> x = parse_coeffs<S>(opt.x, datum.rank(), "x");
    const Vec<S> y = parse_coeffs<S>(opt.y, datum.rank(), "y");
    store.ensure_depth(opt.depth);
    ensure_root(store, vec_sign(x) == VecSign::negative ? vec_neg(x) : x);
    ensure_root(store, vec_sign(y) == VecSign::negative ? vec_neg(y) : y);
    auto w = key_witness(store, x, y);
    out["witness"] = json_element(w);
    out["wx"] = vec_str(w.apply(x));
    out["wy"] = vec_str(w.apply(y));
    Json pairings = Json::array();
    const Vec<S> diff = vec_sub(w.apply(x), w.apply(y));
    for (unsigned a = 0; a < datum.rank(); ++a)
      pairings.push_back(datum.pair_with_simple(diff, a).str());
    out["difference_pairings"] = std::move(pairings);
  } else if (opt.command == "verify") {
    auto heights = verify_height_identities(store, 2 * std::min(opt.depth, 6) - 1,
                                            opt.n);
    auto cone = verify_cone_identities(store, std::min(opt.depth, 6), 4);
    out["heights"] = Json{{"ok", heights.ok()},
                          {"reflections_checked", heights.reflections_checked},
                          {"failures", heights.failures}};
    out["cone"] = Json{{"ok", cone.ok()},
                       {"dominated_pairs", cone.dominated_pairs},
                       {"rejected_pairs", cone.rejected_pairs},
                       {"failures", cone.failures}};
    if (!heights.ok() || !cone.ok()) code = 2;
  } else if (opt.command == "report") {
    ReportBounds bounds;
    bounds.depth = opt.depth;
    bounds.n_max = opt.n;
    bounds.threads = opt.threads;
    out = report_all(datum, bounds);
  } else {
    fail(ErrorKind::parse_error, "unknown command: " + opt.command);
  }

  emit(out, opt.pretty);
  const auto elapsed = std::chrono::duration<double>(
      std::chrono::steady_clock::now() - started);
  std::fprintf(stderr, "coxdom %s: %.3fs\n", opt.command.c_str(),
               elapsed.count());
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"root systems, dominance order and infinity heights for "
               "finite-rank Coxeter groups"};
  app.require_subcommand(1);

  CliOptions opt;
  const std::vector<std::string> commands = {
      "validate", "roots", "dominates", "dn",      "small-roots",
      "height",   "tn",    "decompose", "chains",  "cone",
      "witness",  "verify", "report"};
  for (const auto& name : commands) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--datum", opt.datum_path, "datum file")->required();
    sub->add_option("--depth", opt.depth, "enumeration depth");
    sub->add_option("--n", opt.n, "classification bound / chain window");
    sub->add_option("--x", opt.x, "coefficient vector, e.g. 2,1,1");
    sub->add_option("--y", opt.y, "coefficient vector");
    sub->add_option("--word", opt.word, "generator word, e.g. 1.2.1");
    sub->add_option("--backend", opt.backend, "float | rational");
    sub->add_option("--epsilon", opt.epsilon, "comparison tolerance");
    sub->add_option("--threads", opt.threads, "parallelism degree");
    sub->add_flag("--pretty", opt.pretty, "human-readable output");
    sub->callback([&opt, name] { opt.command = name; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (opt.backend == "float") {
      Tol::epsilon() = opt.epsilon;
      return run_command<Tol>(opt);
    }
    if (opt.backend == "rational") return run_command<Rat>(opt);
    fail(ErrorKind::parse_error, "unknown backend: " + opt.backend);
  } catch (const Error& e) {
    Json err;
    err["error"] = Json{{"type", error_kind_name(e.kind())},
                        {"message", e.what()}};
    std::cout << err.dump() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    Json err;
    err["error"] = Json{{"type", "InternalError"}, {"message", e.what()}};
    std::cout << err.dump() << "\n";
    return 1;
  }
}
