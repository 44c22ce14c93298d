#include "kgraph/cli.hpp"

#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kgraph/decider.hpp"
#include "kgraph/errors.hpp"
#include "kgraph/graph.hpp"
#include "kgraph/ktheory.hpp"
#include "kgraph/oracle.hpp"
#include "kgraph/serialize.hpp"

namespace kgraph::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct Options {
  std::string path;
  bool json = false;
  bool no_timing = false;
  std::size_t color = 1;
  std::string box;
  std::int64_t bound = 2;
  std::uint64_t seed = 0;
  std::size_t n = 3;
  std::size_t k = 2;
  std::uint64_t max_entry = 2;
  std::string strategy = "polynomial";
  std::size_t count = 1;
};

struct Loaded {
  std::string hash;
  std::vector<Violation> violations;
  std::optional<KGraph> graph;
};

class Session {
 public:
  Session(std::string command, const Options& opt, std::ostream& out, std::ostream& err)
      : command_(std::move(command)), opt_(opt), out_(out), err_(err), start_(Clock::now()) {}

  Loaded load() {
    const std::string text = read_text_file(opt_.path);
    Loaded l;
    l.hash = fnv1a_hex(text);
    const RawGraph raw = parse_graph(text);
    l.violations = check(raw);
    if (l.violations.empty()) l.graph = validate(raw);
    hash_ = l.hash;
    return l;
  }

  Json envelope() const {
    Json j{{"tool", "kgraph"}, {"version", KGRAPH_VERSION}, {"command", command_}};
    if (!hash_.empty()) j["input"] = Json{{"fnv1a64", hash_}};
    return j;
  }

  static Json validation(const Loaded& l) {
    return Json{{"valid", l.violations.empty()}, {"violations", violations_to_json(l.violations)}};
  }

  void emit(Json report) {
    if (!opt_.no_timing) {
      const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
      report["timing"] = Json{{"elapsed_ms", static_cast<double>(static_cast<long long>(ms * 1000)) / 1000}};
    }
    out_ << report.dump(2) << "\n";
  }

  /// Reports invalid input and returns the exit code.
  int reject(const Loaded& l) {
    if (opt_.json) {
      Json r = envelope();
      r["validation"] = validation(l);
      emit(std::move(r));
    } else {
      err_ << "invalid graph (" << l.violations.size() << " violation"
           << (l.violations.size() == 1 ? "" : "s") << ")\n";
      for (const auto& v : l.violations) err_ << "  " << to_string(v.kind) << ": " << v.message << "\n";
    }
    return kInvalid;
  }

  const Options& opt() const { return opt_; }
  std::ostream& out() { return out_; }

 private:
  std::string command_;
  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
  Clock::time_point start_;
  std::string hash_;
};

std::string names(const KGraph& g, const std::vector<std::size_t>& idx) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? " " : "") + g.vertex(idx[i]);
  return s;
}

std::string rat_list(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + ")";
}

void print_certificate(std::ostream& os, const Certificate& c) {
  if (const auto* t = std::get_if<FaithfulTrace>(&c)) {
    os << "certificate: faithful trace g = " << rat_list(t->g) << "\n";
    return;
  }
  const auto& w = std::get<PositiveWitness>(c);
  os << "certificate: positivity witness\n";
  for (std::size_t i = 0; i < w.x.size(); ++i) os << "  x" << i + 1 << " = " << to_string(w.x[i]) << "\n";
  os << "  c  = " << to_string(w.c) << "\n";
}

void print_cycle(std::ostream& os, const KGraph& g, const CycleReport& r) {
  os << "color " << r.color + 1 << " cycle [" << names(g, r.cycle) << "]";
  if (r.entrance)
    os << " entrance at " << g.vertex(r.entrance->vertex) << " from " << g.vertex(r.entrance->source);
  os << "\n";
}

int cmd_validate(Session& s) {
  const Loaded l = s.load();
  if (!l.violations.empty()) return s.reject(l);
  if (s.opt().json) {
    Json r = s.envelope();
    r["validation"] = Session::validation(l);
    r["graph"] = Json{{"k", l.graph->rank()}, {"vertices", l.graph->size()}};
    s.emit(std::move(r));
  } else {
    s.out() << "valid: k=" << l.graph->rank() << ", " << l.graph->size() << " vertices\n";
  }
  return kOk;
}

int cmd_classify(Session& s) {
  const Loaded l = s.load();
  if (!l.violations.empty()) return s.reject(l);
  const KGraph& g = *l.graph;
  const Classification c = classify(g);
  if (s.opt().json) {
    Json r = s.envelope();
    r["validation"] = Session::validation(l);
    r["certificate"] = certificate_to_json(c.certificate);
    r["verdict"] = verdict_to_json(g, c.verdict);
    r["citations"] = c.verdict.citations();
    s.emit(std::move(r));
    return kOk;
  }
  std::ostream& os = s.out();
  const Verdict& v = c.verdict;
  os << "k=" << g.rank() << ", " << g.size() << " vertices, cofinal: " << (v.cofinal ? "yes" : "no") << "\n";
  print_certificate(os, c.certificate);
  os << "stably finite:  " << to_string(v.stably_finite.answer) << "\n";
  os << "quasidiagonal:  " << to_string(v.quasidiagonal.answer) << "\n";
  os << "AF-embeddable:  " << to_string(v.af_embeddable.answer) << "\n";
  for (const auto& e : v.structural.entrance_cycles)
    if (e) print_cycle(os, g, *e);
  if (v.structural.t2_case) {
    os << "C(T^2) case at " << g.vertex(v.structural.t2_case->vertex) << "\n";
    print_cycle(os, g, v.structural.t2_case->zeta);
    print_cycle(os, g, v.structural.t2_case->xi);
  }
  if (v.structural.infinite_projection) os << "infinite projection: " << *v.structural.infinite_projection << "\n";
  for (const auto& n : v.notes) os << "note: " << n << "\n";
  for (const auto& cite : v.citations()) os << "cite: " << cite << "\n";
  return kOk;
}

int cmd_certificate(Session& s) {
  const Loaded l = s.load();
  if (!l.violations.empty()) return s.reject(l);
  const KGraph& g = *l.graph;
  const Certificate c = decide_condition(g);
  if (s.opt().json) {
    Json r = s.envelope();
    r["certificate"] = certificate_to_json(c);
    r["verified"] = verify_certificate(g, c);
    s.emit(std::move(r));
  } else {
    print_certificate(s.out(), c);
  }
  return kOk;
}

int cmd_k0(Session& s) {
  const Loaded l = s.load();
  if (!l.violations.empty()) return s.reject(l);
  const KGraph& g = *l.graph;
  const std::size_t color = s.opt().color;
  if (color < 1 || color > g.rank())
    throw Error(ErrorCode::InvalidInput, "--color must lie in 1.." + std::to_string(g.rank()));
  const CokerPresentation p = coker_presentation(g.matrix(color - 1));
  std::optional<CokerEndomorphism> endo;
  if (g.rank() == 2) endo = induced_coker_endo(g);
  if (s.opt().json) {
    Json r = s.envelope();
    r["color"] = color;
    r["coker"] = coker_to_json(p);
    if (endo)
      r["red_coker_endomorphism"] = Json{{"moduli", to_json(endo->coker.moduli())}, {"action", to_json(endo->action)}};
    s.emit(std::move(r));
    return kOk;
  }
  std::ostream& os = s.out();
  os << "coker(1 - A_" << color << "^t) = ";
  bool first = true;
  for (const auto& d : p.torsion) {
    os << (first ? "" : " + ") << "Z/" << d.get_str();
    first = false;
  }
  if (p.free_rank > 0) {
    os << (first ? "" : " + ") << "Z^" << p.free_rank;
    first = false;
  }
  if (first) os << "0";
  os << "\n";
  if (endo) {
    os << "A_1^t on coker(1 - A_2^t), moduli " << to_string(endo->coker.moduli()) << ":\n";
    os << endo->action;
  }
  return kOk;
}

StageBox parse_box(const std::string& text, std::size_t k) {
  auto axis = [](const std::string& part) {
    const auto colon = part.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::InvalidInput, "box axis must be lo:hi, got " + part);
    std::size_t used = 0;
    try {
      const std::int64_t lo = std::stoll(part.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("lo");
      const std::string hs = part.substr(colon + 1);
      const std::int64_t hi = std::stoll(hs, &used);
      if (used != hs.size()) throw std::invalid_argument("hi");
      return std::pair{lo, hi};
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidInput, "bad box axis " + part);
    }
  };
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ',');) parts.push_back(p);
  if (parts.size() == 1) {
    const auto [lo, hi] = axis(parts[0]);
    return StageBox::cube(k, lo, hi);
  }
  if (parts.size() != k)
    throw Error(ErrorCode::InvalidInput, "box needs 1 or " + std::to_string(k) + " axes");
  StageBox box;
  for (const auto& p : parts) {
    const auto [lo, hi] = axis(p);
    box.lo.push_back(lo);
    box.hi.push_back(hi);
  }
  return box;
}

int cmd_skew(Session& s) {
  const Loaded l = s.load();
  if (!l.violations.empty()) return s.reject(l);
  const KGraph& g = *l.graph;
  const StageBox box = parse_box(s.opt().box, g.rank());
  const SkewWindow w = skew_product_window(g, box);
  const auto order = topological_order(w);
  Integer omitted = 0;
  for (const auto& e : w.omitted) omitted += e.multiplicity;
  if (s.opt().json) {
    Json r = s.envelope();
    r["box"] = Json{{"lo", box.lo}, {"hi", box.hi}};
    r["layers"] = w.layer_count();
    r["vertices"] = w.vertex_count();
    r["edges"] = to_json(w.edge_count());
    r["omitted_edges"] = to_json(omitted);
    r["acyclic"] = order.has_value();
    s.emit(std::move(r));
  } else {
    s.out() << "layers " << w.layer_count() << ", vertices " << w.vertex_count() << ", edges "
            << w.edge_count().get_str() << ", omitted " << omitted.get_str() << ", acyclic "
            << (order ? "yes" : "no") << "\n";
  }
  return kOk;
}

int cmd_oracle(Session& s) {
  const Loaded l = s.load();
  if (!l.violations.empty()) return s.reject(l);
  const KGraph& g = *l.graph;
  const auto w = box_witness_search(g, s.opt().bound);
  if (s.opt().json) {
    Json r = s.envelope();
    r["bound"] = s.opt().bound;
    r["witness"] = w ? witness_to_json(*w) : Json(nullptr);
    s.emit(std::move(r));
  } else if (w) {
    print_certificate(s.out(), *w);
  } else {
    s.out() << "no witness in [-" << s.opt().bound << ", " << s.opt().bound << "]^" << g.rank() * g.size() << "\n";
  }
  return kOk;
}

int cmd_generate(Session& s) {
  const Options& o = s.opt();
  const auto strategy = parse_strategy(o.strategy);
  if (!strategy) throw Error(ErrorCode::InvalidInput, "unknown strategy " + o.strategy);
  for (std::size_t i = 0; i < o.count; ++i) {
    GeneratorConfig cfg;
    cfg.seed = o.seed + i;
    cfg.n = o.n;
    cfg.k = o.k;
    cfg.max_entry = o.max_entry;
    cfg.strategy = *strategy;
    const KGraph g = o.k == 1 ? random_digraph(cfg) : random_kgraph(cfg);
    s.out() << graph_to_jsonl(g) << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finiteness certificates and K-theory for finite k-graphs", "kgraph"};
  app.set_version_flag("--version", std::string(KGRAPH_VERSION));
  app.require_subcommand(1);
  Options opt;

  auto graph_cmd = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("path", opt.path, "graph JSON file")->required();
    sub->add_flag("--json", opt.json, "JSON report on stdout");
    sub->add_flag("--no-timing", opt.no_timing, "omit the timing field");
    return sub;
  };
  CLI::App* validate_cmd = graph_cmd("validate", "check the graph invariants");
  CLI::App* classify_cmd = graph_cmd("classify", "verdicts with certificate and citations");
  CLI::App* certificate_cmd = graph_cmd("certificate", "faithful trace or positivity witness");
  CLI::App* k0_cmd = graph_cmd("k0", "cokernel of 1 - A_i^t");
  k0_cmd->add_option("--color", opt.color, "color index, 1-based")->capture_default_str();
  CLI::App* skew_cmd = graph_cmd("skew", "degree skew-product window");
  skew_cmd->add_option("--box", opt.box, "lo:hi for every axis, or lo:hi,lo:hi,...")->required();
  CLI::App* oracle_cmd = graph_cmd("oracle", "exhaustive witness search");
  oracle_cmd->add_option("--box", opt.bound, "search bound B")->capture_default_str();
  CLI::App* generate_cmd = app.add_subcommand("generate", "seeded random graphs as JSONL");
  generate_cmd->add_option("--seed", opt.seed, "seed of the first graph; graph i uses seed + i")->capture_default_str();
  generate_cmd->add_option("--n", opt.n, "vertex count")->capture_default_str();
  generate_cmd->add_option("--k", opt.k, "rank (number of colors)")->capture_default_str();
  generate_cmd->add_option("--max-entry", opt.max_entry, "largest matrix entry")->capture_default_str();
  generate_cmd->add_option("--strategy", opt.strategy, "polynomial, permutation or rejection")
      ->capture_default_str();
  generate_cmd->add_option("--count", opt.count, "number of graphs, one JSON line each")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalid;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Session session(chosen->get_name(), opt, out, err);
  try {
    if (chosen == validate_cmd) return cmd_validate(session);
    if (chosen == classify_cmd) return cmd_classify(session);
    if (chosen == certificate_cmd) return cmd_certificate(session);
    if (chosen == k0_cmd) return cmd_k0(session);
    if (chosen == skew_cmd) return cmd_skew(session);
    if (chosen == oracle_cmd) return cmd_oracle(session);
    if (chosen == generate_cmd) return cmd_generate(session);
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return is_bound_error(e.code()) ? kBound : kInvalid;
  }
  return kInvalid;
}

}  // namespace kgraph::cli
