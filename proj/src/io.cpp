#include "bodycad/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "bodycad/error.hpp"

namespace bodycad {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // The reported byte is one past the offending character.
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    if (const auto cut = msg.find(": "); cut != std::string::npos) {
      msg = msg.substr(cut + 2);
    }
    parse_fail("line " + std::to_string(line) + ", column " + std::to_string(col), msg);
  }
}

Rational number_at(const json& v, const std::string& path) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Rational(mpz_class(std::to_string(v.get<std::uint64_t>())))
                                  : Rational(mpz_class(std::to_string(v.get<std::int64_t>())));
  }
  if (v.is_number_float()) {
    parse_fail(path, "binary floating-point number; write it as a string such as \"0.25\"");
  }
  if (!v.is_string()) parse_fail(path, "expected an exact number");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const Error& e) {
    parse_fail(path, e.what());
  }
}

Vec3 vec_at(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 3) parse_fail(path, "expected an array of 3 numbers");
  return {number_at(v[0], path + "[0]"), number_at(v[1], path + "[1]"),
          number_at(v[2], path + "[2]")};
}

const json& member(const json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) parse_fail(path, std::string("missing \"") + key + "\"");
  return *it;
}

std::string string_at(const json& v, const std::string& path) {
  if (!v.is_string()) parse_fail(path, "expected a string");
  return v.get<std::string>();
}

json exact(const Rational& q) { return to_string(q); }

json vec_json(const Vec3& v) { return json::array({exact(v[0]), exact(v[1]), exact(v[2])}); }

}  // namespace

CadFramework parse_framework(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) parse_fail("$", "expected an object");
  if (const auto it = doc.find("format"); it != doc.end()) {
    if (string_at(*it, "$.format") != kFormatVersion) {
      parse_fail("$.format", "unsupported format '" + it->get<std::string>() +
                                 "', expected '" + std::string(kFormatVersion) + "'");
    }
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "format" && key != "bodies" && key != "constraints") {
      parse_fail("$." + key, "unknown member");
    }
  }

  CadFramework fw;
  std::map<std::string, int> body_index;
  const json& bodies = member(doc, "bodies", "$");
  if (!bodies.is_array()) parse_fail("$.bodies", "expected an array");
  for (std::size_t b = 0; b < bodies.size(); ++b) {
    const std::string path = "$.bodies[" + std::to_string(b) + "]";
    const json& body = bodies[b];
    if (!body.is_object()) parse_fail(path, "expected an object");
    Body out;
    out.id = string_at(member(body, "id", path), path + ".id");
    if (const auto it = body.find("name"); it != body.end()) {
      out.name = string_at(*it, path + ".name");
    }
    if (!body_index.emplace(out.id, static_cast<int>(b)).second) {
      parse_fail(path + ".id", "duplicate body id '" + out.id + "'");
    }
    fw.bodies.push_back(std::move(out));
  }

  const json& constraints = member(doc, "constraints", "$");
  if (!constraints.is_array()) parse_fail("$.constraints", "expected an array");
  std::map<std::string, bool> seen_ids;
  for (std::size_t c = 0; c < constraints.size(); ++c) {
    const std::string path = "$.constraints[" + std::to_string(c) + "]";
    const json& obj = constraints[c];
    if (!obj.is_object()) parse_fail(path, "expected an object");
    CadConstraint out;
    if (const auto it = obj.find("id"); it != obj.end()) {
      out.id = string_at(*it, path + ".id");
    } else {
      out.id = "c" + std::to_string(c + 1);
    }
    if (!seen_ids.emplace(out.id, true).second) {
      parse_fail(path + ".id", "duplicate constraint id '" + out.id + "'");
    }
    const std::string kind = string_at(member(obj, "kind", path), path + ".kind");
    const auto parsed = constraint_kind_from_string(kind);
    if (!parsed) parse_fail(path + ".kind", "unknown constraint kind '" + kind + "'");
    out.kind = *parsed;
    for (const char* end : {"i", "j"}) {
      const std::string body = string_at(member(obj, end, path), path + "." + end);
      const auto it = body_index.find(body);
      if (it == body_index.end()) parse_fail(path + "." + end, "unknown body '" + body + "'");
      (end[0] == 'i' ? out.i : out.j) = it->second;
    }
    Geometry& g = out.geometry;
    for (const auto& [key, value] : obj.items()) {
      const std::string at = path + "." + key;
      if (key == "id" || key == "kind" || key == "i" || key == "j") continue;
      try {
        if (key == "p") g.p = vec_at(value, at);
        else if (key == "p_i") g.p_i = vec_at(value, at);
        else if (key == "p_j") g.p_j = vec_at(value, at);
        else if (key == "d") g.d = Direction3(vec_at(value, at));
        else if (key == "d_i") g.d_i = Direction3(vec_at(value, at));
        else if (key == "d_j") g.d_j = Direction3(vec_at(value, at));
        else if (key == "distance") g.distance = number_at(value, at);
        else if (key == "angle") g.angle = number_at(value, at);
        else parse_fail(at, "unknown member");
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ZeroDirection) throw;
        parse_fail(at, "direction must be nonzero");
      }
    }
    try {
      validate(out, static_cast<int>(fw.bodies.size()));
    } catch (const Error& e) {
      throw Error(e.code(), path + ": " + e.what());
    }
    fw.constraints.push_back(std::move(out));
  }
  return fw;
}

std::string framework_to_json(const CadFramework& fw) {
  json doc;
  doc["format"] = kFormatVersion;
  doc["bodies"] = json::array();
  for (const auto& b : fw.bodies) {
    json body{{"id", b.id}};
    if (!b.name.empty()) body["name"] = b.name;
    doc["bodies"].push_back(std::move(body));
  }
  doc["constraints"] = json::array();
  for (const auto& c : fw.constraints) {
    json obj{{"id", c.id},
             {"kind", to_string(c.kind)},
             {"i", fw.bodies.at(static_cast<std::size_t>(c.i)).id},
             {"j", fw.bodies.at(static_cast<std::size_t>(c.j)).id}};
    const Geometry& g = c.geometry;
    if (g.p) obj["p"] = vec_json(*g.p);
    if (g.p_i) obj["p_i"] = vec_json(*g.p_i);
    if (g.p_j) obj["p_j"] = vec_json(*g.p_j);
    if (g.d) obj["d"] = vec_json(g.d->vec());
    if (g.d_i) obj["d_i"] = vec_json(g.d_i->vec());
    if (g.d_j) obj["d_j"] = vec_json(g.d_j->vec());
    if (g.distance) obj["distance"] = exact(*g.distance);
    if (g.angle) obj["angle"] = exact(*g.angle);
    doc["constraints"].push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

// --- bare graphs -------------------------------------------------------------

BiColoredMultigraph parse_bare_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  int n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string where = "line " + std::to_string(line_no);
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::string first;
    if (!(fields >> first)) continue;
    if (n < 0) {
      if (first.rfind("n=", 0) != 0) parse_fail(where, "expected header 'n=<int>'");
      try {
        std::size_t used = 0;
        n = std::stoi(first.substr(2), &used);
        if (used != first.size() - 2 || n < 1) throw std::invalid_argument("n");
      } catch (const std::exception&) {
        parse_fail(where, "vertex count must be a positive integer");
      }
      std::string extra;
      if (fields >> extra) parse_fail(where, "unexpected text after header");
      continue;
    }
    std::string v_text, color;
    if (!(fields >> v_text >> color)) parse_fail(where, "expected 'u v color [label]'");
    Edge e;
    e.id = edges.size();
    try {
      std::size_t a = 0, b = 0;
      e.u = std::stoi(first, &a);
      e.v = std::stoi(v_text, &b);
      if (a != first.size() || b != v_text.size()) throw std::invalid_argument("vertex");
    } catch (const std::exception&) {
      parse_fail(where, "vertices must be integers");
    }
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
      parse_fail(where, "vertex out of range 1.." + std::to_string(n));
    }
    if (e.u == e.v) parse_fail(where, "self-loop");
    if (color == "red" || color == "r" || color == "R") {
      e.color = Color::Red;
    } else if (color == "black" || color == "b" || color == "B") {
      e.color = Color::Black;
    } else {
      parse_fail(where, "color must be 'red' or 'black', got '" + color + "'");
    }
    fields >> e.label;
    std::string extra;
    if (fields >> extra) parse_fail(where, "unexpected text after label");
    edges.push_back(std::move(e));
  }
  if (n < 0) parse_fail("line " + std::to_string(line_no), "missing header 'n=<int>'");
  return BiColoredMultigraph(n, std::move(edges));
}

std::string bare_graph_to_text(const BiColoredMultigraph& h) {
  std::ostringstream out;
  out << "n=" << h.n() << "\n";
  for (const Edge& e : h.edges()) {
    out << e.u << ' ' << e.v << ' ' << to_string(e.color);
    if (!e.label.empty()) out << ' ' << e.label;
    out << "\n";
  }
  return out.str();
}

// --- reports -----------------------------------------------------------------

namespace {

json summary_json(const NumericSummary& s) {
  json out{{"rows", s.rows}, {"rank", s.rank}, {"dof", s.dof}, {"attempts", s.attempts}};
  out["det_nonzero"] = s.det_nonzero ? json(*s.det_nonzero) : json(nullptr);
  return out;
}

NumericSummary summary_from(const json& j) {
  NumericSummary s;
  s.rows = j.at("rows").get<int>();
  s.rank = j.at("rank").get<int>();
  s.dof = j.at("dof").get<int>();
  s.attempts = j.at("attempts").get<int>();
  if (!j.at("det_nonzero").is_null()) s.det_nonzero = j.at("det_nonzero").get<bool>();
  return s;
}

PrimitiveFlavor flavor_from(const std::string& s) {
  for (auto f : {PrimitiveFlavor::Angular, PrimitiveFlavor::Blind,
                 PrimitiveFlavor::PointPointCoincidenceRow}) {
    if (to_string(f) == s) return f;
  }
  throw Error(ErrorCode::ParseError, "unknown primitive flavor '" + s + "'");
}

template <class T, class F>
T required(std::optional<T> v, const std::string& what, const F& text) {
  if (!v) throw Error(ErrorCode::ParseError, "unknown " + what + " '" + text + "'");
  return *v;
}

}  // namespace

std::string report_to_json(const AnalysisReport& r) {
  json doc;
  doc["format"] = "bodycad-report/1";
  doc["seed"] = r.seed;
  doc["field"] = to_string(r.field);
  doc["bodies"] = r.bodies;
  doc["constraints"] = r.constraints;
  doc["rows"] = {{"angular", r.angular_rows},
                 {"blind", r.blind_rows},
                 {"point_point", r.point_point_rows}};
  if (r.combinatorial) {
    const CombinatorialVerdict& v = *r.combinatorial;
    json comb{{"status", to_string(v.status)},
              {"rank", v.rank},
              {"deficiency", v.deficiency},
              {"circuits", v.circuits}};
    if (v.certificate) {
      json cert = json::array();
      for (const auto& [id, cls] : v.certificate->class_of) {
        cert.push_back({{"edge", id}, {"tree", cls + 1}});
      }
      comb["certificate"] = std::move(cert);
    } else {
      comb["certificate"] = nullptr;
    }
    doc["combinatorial"] = std::move(comb);
  } else {
    doc["combinatorial"] = nullptr;
  }
  doc["withheld_reason"] = r.withheld_reason;
  doc["embedding"] = summary_json(r.embedding);
  doc["generic"] = r.generic ? summary_json(*r.generic) : json(nullptr);
  doc["cross_check"] = to_string(r.cross_check);
  doc["embedding_nongeneric"] = r.embedding_nongeneric;
  doc["exit_code"] = exit_code(r);
  doc["primitives"] = json::array();
  for (const auto& p : r.primitives) {
    doc["primitives"].push_back({{"constraint", p.constraint_id},
                                 {"row", p.row},
                                 {"flavor", to_string(p.flavor)},
                                 {"body_i", p.body_i},
                                 {"body_j", p.body_j},
                                 {"tree", p.tree ? json(*p.tree) : json(nullptr)}});
  }
  doc["circuits"] = json::array();
  for (const auto& c : r.circuits) {
    json members = json::array();
    for (const auto& m : c.members) {
      members.push_back({{"constraint", m.constraint_id}, {"row", m.row}});
    }
    doc["circuits"].push_back({{"members", members}, {"constraints", c.constraints}});
  }
  return doc.dump(2) + "\n";
}

AnalysisReport report_from_json(std::string_view text) {
  const json doc = parse_json(text);
  try {
    AnalysisReport r;
    r.seed = doc.at("seed").get<std::uint64_t>();
    const auto field = doc.at("field").get<std::string>();
    r.field = required(field_choice_from_string(field), "field", field);
    r.bodies = doc.at("bodies").get<int>();
    r.constraints = doc.at("constraints").get<int>();
    r.angular_rows = doc.at("rows").at("angular").get<int>();
    r.blind_rows = doc.at("rows").at("blind").get<int>();
    r.point_point_rows = doc.at("rows").at("point_point").get<int>();
    if (const json& comb = doc.at("combinatorial"); !comb.is_null()) {
      CombinatorialVerdict v;
      const auto status = comb.at("status").get<std::string>();
      v.status = required(verdict_status_from_string(status), "status", status);
      v.rank = comb.at("rank").get<int>();
      v.deficiency = comb.at("deficiency").get<int>();
      v.circuits = comb.at("circuits").get<std::vector<EdgeSet>>();
      if (const json& cert = comb.at("certificate"); !cert.is_null()) {
        ForestCertificate fc;
        for (const auto& entry : cert) {
          fc.class_of[entry.at("edge").get<EdgeId>()] = entry.at("tree").get<int>() - 1;
        }
        v.certificate = std::move(fc);
      }
      r.combinatorial = std::move(v);
    }
    r.withheld_reason = doc.at("withheld_reason").get<std::string>();
    r.embedding = summary_from(doc.at("embedding"));
    if (!doc.at("generic").is_null()) r.generic = summary_from(doc.at("generic"));
    const auto cc = doc.at("cross_check").get<std::string>();
    r.cross_check = required(cross_check_from_string(cc), "cross-check", cc);
    r.embedding_nongeneric = doc.at("embedding_nongeneric").get<bool>();
    for (const auto& p : doc.at("primitives")) {
      PrimitiveRecord rec;
      rec.constraint_id = p.at("constraint").get<std::string>();
      rec.row = p.at("row").get<int>();
      rec.flavor = flavor_from(p.at("flavor").get<std::string>());
      rec.body_i = p.at("body_i").get<int>();
      rec.body_j = p.at("body_j").get<int>();
      if (!p.at("tree").is_null()) rec.tree = p.at("tree").get<int>();
      r.primitives.push_back(std::move(rec));
    }
    for (const auto& c : doc.at("circuits")) {
      CircuitRecord rec;
      for (const auto& m : c.at("members")) {
        rec.members.push_back({m.at("constraint").get<std::string>(), m.at("row").get<int>()});
      }
      rec.constraints = c.at("constraints").get<std::vector<std::string>>();
      r.circuits.push_back(std::move(rec));
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("report: ") + e.what());
  }
}

namespace {

std::string summary_text(const NumericSummary& s) {
  std::ostringstream out;
  out << "rank " << s.rank << " of " << s.rows << " rows, dof " << s.dof;
  if (s.det_nonzero) out << ", det " << (*s.det_nonzero ? "nonzero" : "zero");
  return out.str();
}

}  // namespace

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "bodies: " << r.bodies << ", constraints: " << r.constraints << "\n";
  out << "primitive rows: " << r.angular_rows << " angular (red), " << r.blind_rows
      << " blind (black), " << r.point_point_rows << " point-point\n";
  if (r.combinatorial) {
    out << "combinatorial: " << to_string(r.combinatorial->status) << " (rank "
        << r.combinatorial->rank << ", deficiency " << r.combinatorial->deficiency << ")\n";
  } else {
    out << "combinatorial: Withheld (" << r.withheld_reason << ")\n";
  }
  out << "embedding: " << summary_text(r.embedding) << "\n";
  if (r.generic) {
    out << "generic (" << to_string(r.field) << " field, seed " << r.seed
        << "): " << summary_text(*r.generic) << ", attempts " << r.generic->attempts
        << "\n";
  }
  out << "cross-check: " << to_string(r.cross_check) << "\n";
  if (r.embedding_nongeneric) {
    out << "note: the given embedding is non-generic (rank below the generic rank)\n";
  }
  out << "primitives:\n";
  for (const auto& p : r.primitives) {
    out << "  " << p.constraint_id << "#" << p.row << " " << to_string(p.flavor)
        << " bodies " << p.body_i << "-" << p.body_j;
    if (p.tree) out << " tree " << *p.tree;
    out << "\n";
  }
  if (!r.circuits.empty()) {
    out << "circuits:\n";
    for (const auto& c : r.circuits) {
      out << "  {";
      for (std::size_t i = 0; i < c.members.size(); ++i) {
        out << (i ? ", " : "") << c.members[i].constraint_id << "#" << c.members[i].row;
      }
      out << "} from constraints";
      for (const auto& id : c.constraints) out << " " << id;
      out << "\n";
    }
  }
  out << "exit: " << exit_code(r) << "\n";
  return out.str();
}

std::string verdict_to_text(const BiColoredMultigraph& h, const SparsityParams& params,
                            const CombinatorialVerdict& v) {
  std::ostringstream out;
  auto name = [&](EdgeId id) {
    const Edge& e = h.edge(id);
    return e.label.empty() ? std::to_string(id) : e.label;
  };
  out << "graph: n=" << h.n() << ", m=" << h.m() << " (" << h.m_red() << " red), k="
      << params.k() << ", g=" << params.g() << "\n";
  out << "verdict: " << to_string(v.status) << " (rank " << v.rank << ", deficiency "
      << v.deficiency << ")\n";
  if (v.certificate) {
    out << "certificate:\n";
    for (int t = 0; t < params.k(); ++t) {
      out << "  tree " << t + 1 << (t < params.black_only() ? " (black)" : " (angular)")
          << ":";
      for (EdgeId id : v.certificate->tree(t)) out << " " << name(id);
      out << "\n";
    }
    out << "  B':";
    for (EdgeId id : v.certificate->b_prime(h, params)) out << " " << name(id);
    out << "\n";
  }
  if (!v.circuits.empty()) {
    out << "circuits:\n";
    for (const auto& c : v.circuits) {
      out << "  {";
      for (std::size_t i = 0; i < c.size(); ++i) out << (i ? ", " : "") << name(c[i]);
      out << "}\n";
    }
  }
  out << "exit: " << exit_code(v) << "\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace bodycad
