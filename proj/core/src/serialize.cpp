#include "kgraph/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "kgraph/errors.hpp"

namespace kgraph {

namespace {

// DOM builder that keeps oversized and non-integer number literals as text.
class ExactSax : public nlohmann::json_sax<Json> {
 public:
  bool null() override { return add(nullptr); }
  bool boolean(bool b) override { return add(b); }
  bool number_integer(number_integer_t v) override { return add(v); }
  bool number_unsigned(number_unsigned_t v) override { return add(v); }
  bool number_float(number_float_t, const string_t& text) override { return add(text); }
  bool string(string_t& s) override { return add(s); }
  bool binary(binary_t&) override { return fail("binary values are not supported"); }
  bool start_object(std::size_t) override { return open(Json::object()); }
  bool key(string_t& k) override {
    key_ = k;
    return true;
  }
  bool end_object() override { return close(); }
  bool start_array(std::size_t) override { return open(Json::array()); }
  bool end_array() override { return close(); }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& e) override {
    return fail(e.what());
  }

  Json root;
  std::string error;

 private:
  Json* place(Json v) {
    if (stack_.empty()) {
      root = std::move(v);
      return &root;
    }
    Json& top = *stack_.back();
    if (top.is_array()) {
      top.push_back(std::move(v));
      return &top.back();
    }
    Json& slot = top[key_];
    slot = std::move(v);
    return &slot;
  }
  bool add(Json v) {
    place(std::move(v));
    return true;
  }
  bool open(Json v) {
    stack_.push_back(place(std::move(v)));
    return true;
  }
  bool close() {
    stack_.pop_back();
    return true;
  }
  bool fail(const std::string& msg) {
    error = msg;
    return false;
  }

  std::vector<Json*> stack_;
  std::string key_;
};

bool is_decimal_integer(const std::string& s) {
  std::size_t i = s.size() > 0 && s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) parse_fail("graph description must be a JSON object");
  auto it = j.find(name);
  if (it == j.end()) parse_fail(std::string("missing field \"") + name + "\"");
  return *it;
}

Json vertex_list(const KGraph& g, const std::vector<std::size_t>& idx) {
  Json out = Json::array();
  for (std::size_t v : idx) out.push_back(g.vertex(v));
  return out;
}

Json property_json(const PropertyVerdict& p) {
  return Json{{"answer", std::string(to_string(p.answer))}, {"citation", p.citation}};
}

}  // namespace

Json parse_json_exact(std::string_view text) {
  ExactSax sax;
  const bool ok = Json::sax_parse(text.begin(), text.end(), &sax);
  if (!ok) parse_fail(sax.error.empty() ? "malformed JSON" : sax.error);
  return std::move(sax.root);
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (!is_decimal_integer(s)) parse_fail("not an integer: \"" + s + "\"");
    return Integer(s, 10);
  }
  parse_fail("expected an integer, found " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) return Rational(integer_from_json(j));
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(integer_from_json(j));
  const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den) || den[0] == '-')
    parse_fail("not a rational: \"" + s + "\"");
  Rational r(Integer(num, 10), Integer(den, 10));
  if (sgn(r.get_den()) == 0) parse_fail("zero denominator in \"" + s + "\"");
  r.canonicalize();
  return r;
}

RawGraph graph_from_json(const Json& j) {
  RawGraph raw;
  const Json& k = field(j, "k");
  const Integer kk = integer_from_json(k);
  if (!kk.fits_slong_p()) parse_fail("k is out of range");
  raw.k = kk.get_si();
  const Json& vs = field(j, "vertices");
  if (!vs.is_array()) parse_fail("\"vertices\" must be an array");
  for (const auto& v : vs) {
    if (!v.is_string()) parse_fail("vertex ids must be strings");
    raw.vertices.push_back(v.get<std::string>());
  }
  const Json& ms = field(j, "matrices");
  if (!ms.is_array()) parse_fail("\"matrices\" must be an array");
  for (const auto& m : ms) {
    if (!m.is_array()) parse_fail("each matrix must be an array of rows");
    std::vector<IntVector> rows;
    for (const auto& row : m) {
      if (!row.is_array()) parse_fail("each matrix row must be an array");
      IntVector r;
      for (const auto& e : row) r.push_back(integer_from_json(e));
      rows.push_back(std::move(r));
    }
    raw.matrices.push_back(std::move(rows));
  }
  return raw;
}

RawGraph parse_graph(std::string_view text) { return graph_from_json(parse_json_exact(text)); }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::Io, "cannot read " + path);
  return ss.str();
}

Json to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json to_json(const Rational& v) { return Json(v.get_str()); }

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(to_json(e));
  return out;
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(to_json(e));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json graph_to_json(const KGraph& g) {
  Json ms = Json::array();
  for (const auto& m : g.matrices()) ms.push_back(to_json(m));
  return Json{{"k", g.rank()}, {"vertices", g.vertices()}, {"matrices", std::move(ms)}};
}

std::string graph_to_jsonl(const KGraph& g) { return graph_to_json(g).dump(); }

Json violations_to_json(const std::vector<Violation>& violations) {
  Json out = Json::array();
  for (const auto& v : violations) {
    Json j{{"kind", std::string(to_string(v.kind))}};
    switch (v.kind) {
      case ViolationKind::NonCommuting:
        j["colors"] = {v.color + 1, v.other_color + 1};
        j["position"] = {v.row, v.col};
        break;
      case ViolationKind::ZeroRow:
        j["color"] = v.color + 1;
        j["row"] = v.row;
        break;
      case ViolationKind::NegativeEntry:
        j["color"] = v.color + 1;
        j["position"] = {v.row, v.col};
        break;
      case ViolationKind::ShapeMismatch:
        break;
    }
    j["message"] = v.message;
    out.push_back(std::move(j));
  }
  return out;
}

Json cycle_to_json(const KGraph& g, const CycleReport& report) {
  Json j{{"color", report.color + 1}, {"cycle", vertex_list(g, report.cycle)}};
  if (report.entrance) {
    const Entrance& e = *report.entrance;
    j["entrance"] = Json{{"vertex", g.vertex(e.vertex)},
                         {"excess", to_json(e.excess)},
                         {"source", g.vertex(e.source)},
                         {"parallel_index", e.parallel_index}};
  } else {
    j["entrance"] = nullptr;
  }
  return j;
}

Json t2_to_json(const KGraph& g, const T2Data& t2) {
  return Json{{"vertex", g.vertex(t2.vertex)},
              {"zeta", cycle_to_json(g, t2.zeta)},
              {"xi", cycle_to_json(g, t2.xi)}};
}

Json witness_to_json(const PositiveWitness& w) {
  Json xs = Json::array();
  for (const auto& x : w.x) xs.push_back(to_json(x));
  return Json{{"type", "witness"}, {"x", std::move(xs)}, {"c", to_json(w.c)}};
}

Json certificate_to_json(const Certificate& c) {
  if (const auto* t = std::get_if<FaithfulTrace>(&c)) return Json{{"type", "trace"}, {"g", to_json(t->g)}};
  return witness_to_json(std::get<PositiveWitness>(c));
}

Certificate certificate_from_json(const Json& j) {
  const Json& type = field(j, "type");
  if (type == "trace") {
    FaithfulTrace t;
    const Json& g = field(j, "g");
    if (!g.is_array()) parse_fail("\"g\" must be an array");
    for (const auto& e : g) t.g.push_back(rational_from_json(e));
    return t;
  }
  if (type == "witness") {
    PositiveWitness w;
    const Json& xs = field(j, "x");
    if (!xs.is_array()) parse_fail("\"x\" must be an array");
    for (const auto& x : xs) {
      if (!x.is_array()) parse_fail("witness blocks must be arrays");
      IntVector v;
      for (const auto& e : x) v.push_back(integer_from_json(e));
      w.x.push_back(std::move(v));
    }
    const Json& c = field(j, "c");
    if (!c.is_array()) parse_fail("\"c\" must be an array");
    for (const auto& e : c) w.c.push_back(integer_from_json(e));
    return w;
  }
  parse_fail("unknown certificate type " + type.dump());
}

Json verdict_to_json(const KGraph& g, const Verdict& v) {
  Json cycles = Json::array();
  for (const auto& c : v.structural.entrance_cycles)
    cycles.push_back(c ? cycle_to_json(g, *c) : Json(nullptr));
  Json structural{{"entrance_cycles", std::move(cycles)},
                  {"t2_case", v.structural.t2_case ? t2_to_json(g, *v.structural.t2_case) : Json(nullptr)},
                  {"infinite_projection",
                   v.structural.infinite_projection ? Json(*v.structural.infinite_projection) : Json(nullptr)}};
  return Json{{"cofinal", v.cofinal},
              {"stably_finite", property_json(v.stably_finite)},
              {"quasidiagonal", property_json(v.quasidiagonal)},
              {"af_embeddable", property_json(v.af_embeddable)},
              {"structural", std::move(structural)},
              {"notes", v.notes}};
}

Json coker_to_json(const CokerPresentation& p) {
  Json gens = Json::array();
  for (const auto& g : p.generator_images) gens.push_back(to_json(g));
  return Json{{"invariant_factors", to_json(p.invariant_factors)},
              {"torsion", to_json(p.torsion)},
              {"free_rank", p.free_rank},
              {"moduli", to_json(p.moduli())},
              {"generator_images", std::move(gens)},
              {"cone", p.cone_is_exact ? "positive cone image" : "formal generators"}};
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace kgraph
