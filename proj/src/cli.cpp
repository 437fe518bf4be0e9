#include "quiverseq/cli.hpp"

#include <functional>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "quiverseq/admissible.hpp"
#include "quiverseq/component.hpp"
#include "quiverseq/error.hpp"
#include "quiverseq/io.hpp"
#include "quiverseq/rep.hpp"
#include "quiverseq/weyl.hpp"

namespace quiverseq::cli {

namespace {

using io::json;

constexpr const char* schema_help = R"(File formats:
  quiver         {"n": N, "arrows": [[s, t], ...]}  vertices 1..N
                 or {"cartan": [[...]], "arrows": [[s, t], ...]}  (arrows must realize the matrix)
  cartan         {"cartan": [[2, -1], [-1, 2]]}  (a quiver file is also accepted)
  representation {"quiver": {...}, "dims": [d1, ..., dN],
                  "maps": [{"arrow": i, "matrix": [[a, "p/q", ...], ...]}]}
                 arrow i is the 0-based index into quiver.arrows; the matrix has
                 dims[target] rows and dims[source] columns; omitted arrows are zero.

Literals:
  SEQ, WORD      comma-separated vertex ids, e.g. 3,2,3.  A word x1,...,xs denotes
                 sigma_xs ... sigma_x1: the first letter acts first.

JSON output fields (--format json):
  sequence       {"letters", "segments", "multiplicities"}
  check-seq      {"admissible", "index", "end_quiver"}
  equiv, preceq, principal-reduced, sortable, finite   {"result"}
  complement     {"meet", "u", "v", "quiver"}  u and v live on "quiver"
  principal      {"r", "x", "sequence"}
  decompose      {"principals": [{"r", "x", "sequence"}]}
  tail           {"quiver", "tail", "r", "x"}
  psi            {"level", "vertex"}
  word           {"letters", "matrix"}
  reduced        {"reduced", "length"}
  coxeter-check  {"powers": [{"m", "reduced", "length"}]}
  sorting-word   {"letters", "blocks", "sortable"}
  module, apply, phi-plus   representation format
  preproj        {"preprojective", "m"}  m is null when undecided
  sm, sm-brute   sequence
  component      {"nodes": [{"level", "vertex", "sequence", "reduced", "dims"}],
                  "edges": [{"from": [level, vertex], "to": [level, vertex], "arrow"}]}

Exit codes: 0 success or true, 1 checked property false, 2 input error.)";

struct Options {
  std::string quiver;
  std::string cartan;
  std::string module;
  std::optional<std::string> s;
  std::optional<std::string> t;
  std::optional<std::string> w;
  std::optional<std::string> coxeter;
  std::optional<int> r;
  std::optional<int> x;
  std::optional<int> m;
  int levels = 1;
  std::string format = "text";
  bool inverse = false;
  bool k_order = false;
};

[[noreturn]] void usage(const std::string& what) { throw Error(Errc::invalid_argument, what); }

class Session {
 public:
  Session(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  bool json_mode() const { return o_.format == "json"; }

  Quiver quiver() {
    if (!quiver_) {
      if (o_.quiver.empty()) usage("this verb needs -q/--quiver");
      quiver_ = io::quiver_from_json(io::read_json_file(o_.quiver));
    }
    return *quiver_;
  }

  CartanMatrix cartan() {
    if (!o_.cartan.empty()) return io::cartan_from_json(io::read_json_file(o_.cartan));
    if (!o_.quiver.empty()) return quiver().graph().cartan();
    usage("this verb needs --cartan or -q/--quiver");
  }

  AdmissibleSeq seq(const std::optional<std::string>& text, const char* flag) {
    if (!text) usage(std::string("this verb needs ") + flag);
    return check_admissible(quiver(), io::parse_vertex_list(*text));
  }
  AdmissibleSeq s() { return seq(o_.s, "-s"); }
  AdmissibleSeq t() { return seq(o_.t, "-t"); }

  int r() {
    if (!o_.r) usage("this verb needs -r");
    return *o_.r;
  }
  Vertex x() {
    if (!o_.x) usage("this verb needs -x");
    return *o_.x;
  }

  // -w on the Cartan matrix, or the word of -s.
  WeylWord word() {
    if (o_.w) return WeylWord{cartan(), io::parse_vertex_list(*o_.w)};
    if (o_.s) return word_of(s());
    usage("this verb needs -w or -q with -s");
  }

  Representation module() {
    if (!o_.module.empty()) return io::representation_from_json(io::read_json_file(o_.module));
    if (!o_.quiver.empty() && o_.x) return simple(quiver(), *o_.x);
    usage("this verb needs --module, or -q with -x for a simple module");
  }

  // -s must be a complete sequence on -q, or --coxeter a word on --cartan.
  WeylWord coxeter() {
    WeylWord c = o_.coxeter ? WeylWord{cartan(), io::parse_vertex_list(*o_.coxeter)} : coxeter_element(s());
    return o_.k_order ? inverse_word(std::move(c)) : c;
  }

  std::ostream& out() { return out_; }
  const Options& opts() const { return o_; }

  int boolean(bool value) {
    if (json_mode())
      out_ << json{{"result", value}}.dump() << "\n";
    else
      out_ << (value ? "true" : "false") << "\n";
    return value ? exit_true : exit_false;
  }

  int sequence(const AdmissibleSeq& s) {
    if (json_mode())
      out_ << seq_json(s).dump() << "\n";
    else
      out_ << io::format_canonical(s) << "\n";
    return exit_true;
  }

  int representation(const Representation& m) {
    if (json_mode()) {
      out_ << io::to_json(m).dump() << "\n";
      return exit_true;
    }
    out_ << "dims " << io::format_dims(m.dims()) << "\n";
    for (std::size_t a = 0; a < m.maps().size(); ++a) {
      const Arrow& arrow = m.quiver().arrows()[a];
      const Matrix& f = m.map(a);
      out_ << "arrow " << a << " (" << arrow.source << "->" << arrow.target << "): " << f.rows() << "x" << f.cols();
      for (std::size_t i = 0; i < f.rows(); ++i) {
        out_ << (i ? "; " : " [");
        for (std::size_t j = 0; j < f.cols(); ++j) out_ << (j ? " " : "") << f(i, j);
      }
      out_ << (f.rows() ? "]" : "") << "\n";
    }
    return exit_true;
  }

  static json seq_json(const AdmissibleSeq& s) {
    json segments = json::array();
    if (!s.empty())
      for (const auto& seg : canonical_form(s).segments) segments.push_back(seg);
    return json{{"letters", s.letters()}, {"segments", segments}, {"multiplicities", multiplicities(s)}};
  }

 private:
  const Options& o_;
  std::ostream& out_;
  std::optional<Quiver> quiver_;
};

using Handler = std::function<int(Session&)>;

int check_seq(Session& ss) {
  const Quiver q = ss.quiver();
  if (!ss.opts().s) usage("this verb needs -s");
  const auto letters = io::parse_vertex_list(*ss.opts().s);
  try {
    const AdmissibleSeq s = check_admissible(q, letters);
    if (ss.json_mode())
      ss.out() << json{{"admissible", true}, {"index", nullptr}, {"end_quiver", io::to_json(s.end_orientation())}}.dump()
               << "\n";
    else
      ss.out() << "admissible\n";
    return exit_true;
  } catch (const NotAdmissibleError& e) {
    if (ss.json_mode())
      ss.out() << json{{"admissible", false}, {"index", e.index()}, {"end_quiver", nullptr}}.dump() << "\n";
    else
      ss.out() << "not admissible at letter " << e.index() << "\n";
    return exit_false;
  }
}

int canon(Session& ss) {
  const AdmissibleSeq s = ss.s();
  if (s.empty()) throw Error(Errc::empty_sequence, "canonical form of the empty sequence");
  return ss.sequence(s);
}

int mult(Session& ss) {
  const auto m = multiplicities(ss.s());
  if (ss.json_mode())
    ss.out() << json{{"multiplicities", m}}.dump() << "\n";
  else
    ss.out() << io::format_dims(m) << "\n";
  return exit_true;
}

int complement(Session& ss) {
  const auto c = complement_pair(ss.s(), ss.t());
  if (ss.json_mode()) {
    ss.out() << json{{"meet", Session::seq_json(c.meet)},
                     {"u", Session::seq_json(c.u)},
                     {"v", Session::seq_json(c.v)},
                     {"quiver", io::to_json(c.u.base())}}
                    .dump()
             << "\n";
  } else {
    ss.out() << "meet: " << io::format_canonical(c.meet) << "\n";
    ss.out() << "U: " << io::format_canonical(c.u) << "\n";
    ss.out() << "V: " << io::format_canonical(c.v) << "\n";
  }
  return exit_true;
}

int principal_verb(Session& ss) {
  const int r = ss.r();
  if (r < 1) usage("-r must be positive");
  const AdmissibleSeq s = principal(ss.quiver(), r, ss.x());
  if (ss.json_mode()) {
    ss.out() << json{{"r", r}, {"x", ss.x()}, {"sequence", Session::seq_json(s)}}.dump() << "\n";
    return exit_true;
  }
  return ss.sequence(s);
}

int decompose(Session& ss) {
  const AdmissibleSeq s = ss.s();
  const auto parts = principal_decomposition(s);
  if (ss.json_mode()) {
    json list = json::array();
    for (const auto& p : parts)
      list.push_back(
          json{{"r", p.size}, {"x", p.vertex}, {"sequence", Session::seq_json(principal(s.base(), p.size, p.vertex))}});
    ss.out() << json{{"principals", list}}.dump() << "\n";
  } else {
    for (const auto& p : parts)
      ss.out() << "S(" << p.size << "," << p.vertex << ") = "
               << io::format_canonical(principal(s.base(), p.size, p.vertex)) << "\n";
  }
  return exit_true;
}

int tail(Session& ss) {
  const auto t = principal_tail(ss.s());
  if (ss.json_mode()) {
    ss.out() << json{{"quiver", io::to_json(t.quiver)},
                     {"tail", Session::seq_json(t.tail)},
                     {"r", t.index.size},
                     {"x", t.index.vertex}}
                    .dump()
             << "\n";
  } else {
    ss.out() << "tail: " << io::format_vertex_list(t.tail.letters()) << "\n";
    ss.out() << "principal: S(" << t.index.size << "," << t.index.vertex << ")\n";
    ss.out() << "quiver: " << io::to_json(t.quiver)["arrows"].dump() << "\n";
  }
  return exit_true;
}

int psi_verb(Session& ss) {
  const int r = ss.r();
  if (r < 1) usage("-r must be positive");
  const NodeIndex n = psi(PrincipalIndex{r, ss.x()});
  if (ss.json_mode())
    ss.out() << json{{"level", n.level}, {"vertex", n.vertex}}.dump() << "\n";
  else
    ss.out() << "(" << n.level << "," << n.vertex << ")\n";
  return exit_true;
}

json matrix_json(const WeylElement& e) {
  json rows = json::array();
  for (int i = 0; i < e.rank(); ++i) {
    RootVector row;
    for (int j = 0; j < e.rank(); ++j) row.push_back(e.at(i, j));
    rows.push_back(io::to_json(row));
  }
  return rows;
}

int word_verb(Session& ss) {
  const WeylWord w = ss.word();
  const WeylElement e = evaluate(w);
  if (ss.json_mode()) {
    ss.out() << json{{"letters", w.letters}, {"matrix", matrix_json(e)}}.dump() << "\n";
    return exit_true;
  }
  if (w.letters.empty()) ss.out() << "identity\n";
  for (std::size_t i = w.letters.size(); i-- > 0;)
    ss.out() << "s" << w.letters[i] << (i ? " " : "\n");
  for (int i = 0; i < e.rank(); ++i) {
    for (int j = 0; j < e.rank(); ++j) ss.out() << (j ? " " : "") << e.at(i, j);
    ss.out() << "\n";
  }
  return exit_true;
}

int reduced_verb(Session& ss) {
  const WeylWord w = ss.word();
  const bool reduced = is_reduced(w);
  const std::size_t len = length(evaluate(w));
  if (ss.json_mode())
    ss.out() << json{{"reduced", reduced}, {"length", len}}.dump() << "\n";
  else
    ss.out() << (reduced ? "reduced" : "not reduced") << " (length " << len << ")\n";
  return reduced ? exit_true : exit_false;
}

int principal_reduced(Session& ss) {
  if (ss.opts().s) return ss.boolean(principal_reduced_criterion(ss.s()));
  return ss.boolean(principal_reduced_criterion(principal(ss.quiver(), ss.r(), ss.x())));
}

int coxeter_check(Session& ss) {
  const int m_max = ss.opts().m.value_or(10);
  if (m_max < 1) usage("-m must be positive");
  const auto reports = coxeter_powers_reduced(ss.s(), m_max);
  bool all = true;
  json list = json::array();
  for (const auto& p : reports) {
    all = all && p.reduced;
    list.push_back(json{{"m", p.m}, {"reduced", p.reduced}, {"length", p.length}});
    if (!ss.json_mode())
      ss.out() << "m=" << p.m << " " << (p.reduced ? "reduced" : "not reduced") << " (length " << p.length << ")\n";
  }
  if (ss.json_mode()) ss.out() << json{{"powers", list}}.dump() << "\n";
  return all ? exit_true : exit_false;
}

int finite(Session& ss) {
  const Graph g = ss.opts().cartan.empty() ? ss.quiver().graph() : Graph::from_cartan(ss.cartan());
  const bool fin = weyl_is_finite(g);
  if (ss.json_mode())
    ss.out() << json{{"result", fin}}.dump() << "\n";
  else
    ss.out() << (fin ? "finite" : "infinite") << "\n";
  return fin ? exit_true : exit_false;
}

WeylElement sorting_target(Session& ss, const CartanMatrix& a) {
  if (!ss.opts().w) usage("this verb needs -w for the target element");
  const WeylElement e = evaluate(WeylWord{a, io::parse_vertex_list(*ss.opts().w)});
  return ss.opts().inverse ? e.inverse() : e;
}

int sorting_word(Session& ss) {
  const WeylWord c = ss.coxeter();
  const WeylElement target = sorting_target(ss, c.cartan);
  const SortingWord sw = c_sorting_word(c, target);
  const bool sortable = is_c_sortable(c, target);
  if (ss.json_mode())
    ss.out() << json{{"letters", sw.letters}, {"blocks", sw.blocks}, {"sortable", sortable}}.dump() << "\n";
  else
    ss.out() << (sw.letters.empty() ? "()" : sw.to_string()) << "\n";
  return exit_true;
}

int sortable(Session& ss) {
  const WeylWord c = ss.coxeter();
  return ss.boolean(is_c_sortable(c, sorting_target(ss, c.cartan)));
}

int phi_plus(Session& ss) {
  const int times = ss.opts().m.value_or(1);
  if (times < 0) usage("-m must be nonnegative");
  Representation m = ss.module();
  for (int i = 0; i < times; ++i) m = coxeter_plus(m);
  return ss.representation(m);
}

int preproj(Session& ss) {
  const int max_iter = ss.opts().m.value_or(default_max_iterations);
  if (max_iter < 1) usage("-m must be positive");
  const auto k = is_preprojective(ss.module(), max_iter);
  if (ss.json_mode())
    ss.out() << json{{"preprojective", k.has_value()}, {"m", k ? json(*k) : json(nullptr)}}.dump() << "\n";
  else if (k)
    ss.out() << "preprojective (m = " << *k << ")\n";
  else
    ss.out() << "undecided after " << max_iter << " iterations\n";
  return k ? exit_true : exit_false;
}

int sm(Session& ss) {
  return ss.sequence(shortest_annihilator_indec(ss.module(), ss.opts().m.value_or(default_max_iterations)));
}

int sm_brute(Session& ss) {
  const Representation m = ss.module();
  if (ss.opts().t) {
    const AdmissibleSeq t = check_admissible(m.quiver(), io::parse_vertex_list(*ss.opts().t));
    return ss.sequence(shortest_annihilator_bruteforce(m, t));
  }
  const int p = ss.opts().m.value_or(-1);
  if (p < 0) usage("sm-brute needs -t or -m (power of the canonical complete sequence)");
  return ss.sequence(shortest_annihilator_bruteforce(m, power(canonical_complete_sequence(m.quiver()), p)));
}

int component(Session& ss) {
  const Component c = build_component(ss.quiver(), ss.opts().levels);
  if (!ss.json_mode()) {
    ss.out() << to_dot(c);
    return exit_true;
  }
  json nodes = json::array();
  for (const auto& n : c.nodes)
    nodes.push_back(json{{"level", n.node.level},
                         {"vertex", n.node.vertex},
                         {"sequence", Session::seq_json(n.seq)},
                         {"reduced", n.reduced},
                         {"dims", n.dims ? json(*n.dims) : json(nullptr)}});
  json edges = json::array();
  for (const auto& e : c.edges)
    edges.push_back(json{{"from", {e.from.level, e.from.vertex}}, {"to", {e.to.level, e.to.vertex}}, {"arrow", e.arrow}});
  ss.out() << json{{"nodes", nodes}, {"edges", edges}}.dump() << "\n";
  return exit_true;
}

struct Verb {
  const char* name;
  const char* help;
  const char* flags;  // which option groups apply
  Handler run;
};

const std::vector<Verb>& verbs() {
  static const std::vector<Verb> table = {
      {"check-seq", "check that -s is (+)-admissible on -q", "qs", check_seq},
      {"canon", "canonical form of -s", "qs", canon},
      {"mult", "multiplicity vector of -s", "qs", mult},
      {"equiv", "is -s equivalent to -t", "qst", [](Session& ss) { return ss.boolean(equivalent(ss.s(), ss.t())); }},
      {"preceq", "is -s below -t", "qst", [](Session& ss) { return ss.boolean(precedes(ss.s(), ss.t())); }},
      {"meet", "meet of -s and -t", "qst", [](Session& ss) { return ss.sequence(meet(ss.s(), ss.t())); }},
      {"join", "join of -s and -t", "qst", [](Session& ss) { return ss.sequence(join(ss.s(), ss.t())); }},
      {"complement", "meet and disjoint complements U, V of -s and -t", "qst", complement},
      {"principal", "principal sequence S(r,x)", "qrx", principal_verb},
      {"decompose", "minimal principal join decomposition of -s", "qs", decompose},
      {"tail", "drop the first letter of a principal -s", "qs", tail},
      {"psi", "translation quiver vertex of S(r,x)", "rx", psi_verb},
      {"word", "Weyl element of -w (with --cartan) or of -s", "qcsw", word_verb},
      {"reduced", "is the word -w (or the word of -s) reduced", "qcsw", reduced_verb},
      {"principal-reduced", "positivity test for a principal -s (or S(r,x))", "qsrx", principal_reduced},
      {"coxeter-check", "reducedness of c^m for m = 1..-m, c from complete -s", "qsm", coxeter_check},
      {"finite", "is the Weyl group finite (ADE)", "qc", finite},
      {"sorting-word", "c-sorting word of -w; c from complete -s or --coxeter", "qcswk", sorting_word},
      {"sortable", "is -w c-sortable; c from complete -s or --coxeter", "qcswk", sortable},
      {"module", "the module M(S) for -s", "qs", [](Session& ss) { return ss.representation(build_module(ss.s())); }},
      {"apply", "apply the reflection functors of -s to a module", "qsxM",
       [](Session& ss) {
         const Representation m = ss.module();
         if (!ss.opts().s) usage("this verb needs -s");
         return ss.representation(apply_sequence(m, check_admissible(m.quiver(), io::parse_vertex_list(*ss.opts().s))));
       }},
      {"phi-plus", "Coxeter functor, -m times (default 1)", "qxmM", phi_plus},
      {"preproj", "least m with (Phi+)^m M = 0, up to -m iterations", "qxmM", preproj},
      {"sm", "shortest annihilating sequence of an indecomposable preprojective module", "qxmM", sm},
      {"sm-brute", "shortest annihilating sequence by search below -t (or K^m)", "qxtmM", sm_brute},
      {"component", "preprojective component truncated to --levels levels", "qL", component},
  };
  return table;
}

void add_options(CLI::App* sub, const std::string& flags, Options& o) {
  auto has = [&](char c) { return flags.find(c) != std::string::npos; };
  if (has('q')) sub->add_option("-q,--quiver", o.quiver, "quiver JSON file");
  if (has('c')) sub->add_option("--cartan", o.cartan, "Cartan matrix JSON file");
  if (has('s')) sub->add_option("-s", o.s, "sequence, e.g. 3,2,3");
  if (has('t')) sub->add_option("-t", o.t, "second sequence");
  if (has('w')) sub->add_option("-w", o.w, "word, first letter acts first");
  if (has('r')) sub->add_option("-r", o.r, "size of a principal sequence");
  if (has('x')) sub->add_option("-x", o.x, "vertex");
  if (has('m')) sub->add_option("-m", o.m, "integer parameter");
  if (has('L')) sub->add_option("--levels", o.levels, "number of levels")->capture_default_str();
  if (has('M')) sub->add_option("--module", o.module, "representation JSON file");
  if (has('k')) {
    sub->add_option("--coxeter", o.coxeter, "Coxeter word on --cartan (alternative to -s)");
    sub->add_flag("--inverse", o.inverse, "use the inverse of -w as target");
    sub->add_flag("--k-order", o.k_order, "read c^inf in the order of K (sorts by the inverse of c)");
  }
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Admissible sequences, reflection functors and Weyl group words on acyclic quivers", "quiverseq"};
  app.footer(schema_help);
  app.require_subcommand(1);
  Options opts;
  std::map<std::string, Handler> handlers;
  for (const auto& v : verbs()) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    add_options(sub, v.flags, opts);
    sub->footer(schema_help);
    handlers[v.name] = v.run;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_true : exit_input_error;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  if (opts.format == "dot" && verb != "component") {
    err << "error: --format dot only applies to component\n";
    return exit_input_error;
  }
  Session session(opts, out);
  try {
    return handlers.at(verb)(session);
  } catch (const Error& e) {
    err << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
    return exit_input_error;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"quiverseq"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace quiverseq::cli
