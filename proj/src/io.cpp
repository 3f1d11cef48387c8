#include "latcover/io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace latcover::io {

using nlohmann::json;

namespace {

struct Context {
  std::string source;
  [[noreturn]] void fail(const std::string& where, const std::string& what) const {
    throw ParseError(source + ": " + where + ": " + what);
  }
};

json parse_json(const std::string& text, const Context& ctx) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    ctx.fail("byte " + std::to_string(e.byte), std::string("malformed JSON (") + e.what() + ")");
  }
}

Integer to_integer(const json& v, const std::string& where, const Context& ctx) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
    return Integer(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    try {
      return parse_integer(v.get<std::string>());
    } catch (const ParseError& e) {
      ctx.fail(where, e.what());
    }
  }
  ctx.fail(where, "expected an integer (number or decimal string), got " + std::string(v.type_name()));
}

std::size_t to_index(const json& v, const std::string& where, const Context& ctx) {
  const Integer z = to_integer(v, where, ctx);
  if (z < 0 || !z.fits_ulong_p()) ctx.fail(where, "expected a non-negative index");
  return z.get_ui();
}

LatticeVector to_vector(const json& v, const std::string& where, const Context& ctx) {
  if (!v.is_array()) ctx.fail(where, "expected an array of integers");
  LatticeVector out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(to_integer(v[i], where + "[" + std::to_string(i) + "]", ctx));
  return out;
}

std::vector<LatticeVector> to_vectors(const json& v, const std::string& where, const Context& ctx) {
  if (!v.is_array()) ctx.fail(where, "expected an array of vectors");
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(to_vector(v[i], where + "[" + std::to_string(i) + "]", ctx));
  return out;
}

const json& field(const json& obj, const char* name, const std::string& where, const Context& ctx) {
  if (!obj.is_object()) ctx.fail(where, "expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) ctx.fail(where, std::string("missing field \"") + name + "\"");
  return *it;
}

json integer_json(const Integer& z) {
  static const Integer limit = Integer(1) << 53;
  if (abs(z) <= limit) return json(z.get_si());
  return json(z.get_str());
}

json vector_json(const LatticeVector& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(integer_json(c));
  return a;
}

}  // namespace

LatticeSimplex parse_simplex(const std::string& text, const std::string& source) {
  const Context ctx{source};
  const json doc = parse_json(text, ctx);
  const auto dim = to_index(field(doc, "dim", "simplex", ctx), "dim", ctx);
  auto verts = to_vectors(field(doc, "vertices", "simplex", ctx), "vertices", ctx);
  if (verts.size() != dim + 1)
    ctx.fail("vertices", "expected " + std::to_string(dim + 1) + " vertices for dim " + std::to_string(dim) +
                             ", got " + std::to_string(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (verts[i].size() != dim)
      ctx.fail("vertices[" + std::to_string(i) + "]", "expected " + std::to_string(dim) + " coordinates");
  try {
    return LatticeSimplex(std::move(verts));
  } catch (const Error& e) {
    ctx.fail("vertices", e.what());
  }
}

std::vector<DilationSpec> parse_cover_specs(const std::string& text, const std::string& source) {
  const Context ctx{source};
  const json doc = parse_json(text, ctx);
  const json& list = field(doc, "dilations", "cover", ctx);
  if (!list.is_array()) ctx.fail("dilations", "expected an array");
  std::vector<DilationSpec> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "dilations[" + std::to_string(i) + "]";
    const json& e = list[i];
    const json& kind = field(e, "kind", where, ctx);
    if (!kind.is_string()) ctx.fail(where + ".kind", "expected a string");
    const Integer k = to_integer(field(e, "modulus", where, ctx), where + ".modulus", ctx);
    if (kind == "apex") {
      ApexSpec s;
      s.apex = to_index(field(e, "apex", where, ctx), where + ".apex", ctx);
      s.modulus = k;
      if (e.contains("translation")) s.translation = to_vector(e["translation"], where + ".translation", ctx);
      out.emplace_back(std::move(s));
    } else if (kind == "explicit") {
      out.emplace_back(ExplicitSpec{k, to_vectors(field(e, "vertices", where, ctx), where + ".vertices", ctx)});
    } else {
      ctx.fail(where + ".kind", "unknown kind \"" + kind.get<std::string>() + "\" (expected apex or explicit)");
    }
  }
  return out;
}

Cover parse_cover(const std::string& text, const LatticeSimplex& p, const std::string& source) {
  const Context ctx{source};
  const auto specs = parse_cover_specs(text, source);
  if (specs.empty()) ctx.fail("dilations", "empty cover");
  std::vector<Dilation> ds;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    auto spec = specs[i];
    if (auto* a = std::get_if<ApexSpec>(&spec)) {
      if (a->apex >= p.num_vertices())
        ctx.fail("dilations[" + std::to_string(i) + "].apex", "vertex index out of range");
      if (a->translation.empty()) a->translation.assign(p.num_vertices(), Integer(0));
    }
    try {
      ds.push_back(make_dilation(p, spec));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      ctx.fail("dilations[" + std::to_string(i) + "]", e.what());
    }
  }
  return Cover(p, std::move(ds));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

LatticeSimplex read_simplex(const std::string& path) { return parse_simplex(read_file(path), path); }

Cover read_cover(const std::string& path, const LatticeSimplex& p) { return parse_cover(read_file(path), p, path); }

std::string simplex_json(const LatticeSimplex& p) {
  json doc;
  doc["dim"] = p.dim();
  doc["vertices"] = json::array();
  for (const auto& v : p.vertices()) doc["vertices"].push_back(vector_json(v));
  return doc.dump() + "\n";
}

std::string cover_json(const Cover& cover) {
  json doc;
  doc["dim"] = cover.parent().dim();
  doc["dilations"] = json::array();
  for (const auto& d : cover.dilations()) {
    json e;
    if (const auto* a = std::get_if<ApexSpec>(&d.spec())) {
      e["kind"] = "apex";
      e["apex"] = a->apex;
      e["modulus"] = integer_json(a->modulus);
      e["translation"] = vector_json(a->translation);
    } else {
      const auto& x = std::get<ExplicitSpec>(d.spec());
      e["kind"] = "explicit";
      e["modulus"] = integer_json(x.modulus);
      e["vertices"] = json::array();
      for (const auto& v : x.vertices) e["vertices"].push_back(vector_json(v));
    }
    doc["dilations"].push_back(std::move(e));
  }
  return doc.dump(1) + "\n";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(path + ": cannot write file");
  out << text;
  if (!out) throw Error(path + ": write failed");
}

}  // namespace latcover::io
