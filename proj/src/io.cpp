#include "quiverseq/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "quiverseq/error.hpp"

namespace quiverseq::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::parse_error, what); }

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<Arrow> arrows_from_json(const json& j) {
  if (!j.is_array()) bad("\"arrows\" must be an array of [source, target] pairs");
  std::vector<Arrow> out;
  for (const auto& a : j) {
    if (!a.is_array() || a.size() != 2) bad("each arrow must be a [source, target] pair");
    out.push_back(Arrow{as_int(a[0], "arrow endpoint"), as_int(a[1], "arrow endpoint")});
  }
  return out;
}

CartanMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) bad("\"cartan\" must be an array of rows");
  CartanMatrix a;
  for (const auto& row : j) {
    if (!row.is_array()) bad("\"cartan\" rows must be arrays");
    std::vector<int> r;
    for (const auto& x : row) r.push_back(as_int(x, "Cartan entry"));
    a.push_back(std::move(r));
  }
  return a;
}

}  // namespace

Quiver quiver_from_json(const json& j) {
  if (!j.is_object()) bad("quiver must be a JSON object");
  if (!j.contains("arrows")) bad("quiver needs an \"arrows\" field");
  auto arrows = arrows_from_json(j["arrows"]);
  if (j.contains("cartan")) {
    const Graph g = Graph::from_cartan(matrix_from_json(j["cartan"]));
    if (j.contains("n") && as_int(j["n"], "\"n\"") != g.size()) bad("\"n\" disagrees with the Cartan matrix");
    return Quiver::make(g, std::move(arrows));
  }
  if (!j.contains("n")) bad("quiver needs \"n\" or \"cartan\"");
  return Quiver::from_arrows(as_int(j["n"], "\"n\""), std::move(arrows));
}

json to_json(const Quiver& q) {
  json arrows = json::array();
  for (const auto& a : q.arrows()) arrows.push_back({a.source, a.target});
  return json{{"n", q.size()}, {"arrows", arrows}};
}

CartanMatrix cartan_from_json(const json& j) {
  if (!j.is_object()) bad("Cartan document must be a JSON object");
  if (j.contains("cartan")) {
    CartanMatrix a = matrix_from_json(j["cartan"]);
    Graph::from_cartan(a);
    if (j.contains("arrows")) quiver_from_json(j);  // consistency check only
    return a;
  }
  return quiver_from_json(j).graph().cartan();
}

json cartan_to_json(const CartanMatrix& a) { return json{{"cartan", a}}; }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) bad("matrix entries must be integers or \"p/q\" strings");
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    const BigInt p(s.substr(0, slash));
    const BigInt q(s.substr(slash + 1));
    if (q == 0) bad("zero denominator in \"" + s + "\"");
    return Rational(p, q);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    bad("malformed rational \"" + s + "\"");
  }
}

json to_json(const Rational& x) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(x) == 1) {
    const BigInt n = numerator(x);
    if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
      return json(n.convert_to<long long>());
    return json(n.str());
  }
  return json(numerator(x).str() + "/" + denominator(x).str());
}

Representation representation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("quiver") || !j.contains("dims"))
    bad("representation needs \"quiver\" and \"dims\"");
  const Quiver q = quiver_from_json(j["quiver"]);
  DimVector dims;
  if (!j["dims"].is_array()) bad("\"dims\" must be an array");
  for (const auto& d : j["dims"]) dims.push_back(as_int(d, "dimension"));
  if (static_cast<int>(dims.size()) != q.size()) bad("\"dims\" has the wrong length");
  for (int d : dims)
    if (d < 0) bad("negative dimension");

  std::vector<Matrix> maps;
  for (const auto& a : q.arrows()) maps.emplace_back(dims[a.target - 1], dims[a.source - 1]);
  std::vector<char> seen(maps.size(), 0);
  if (j.contains("maps")) {
    if (!j["maps"].is_array()) bad("\"maps\" must be an array");
    for (const auto& entry : j["maps"]) {
      if (!entry.is_object() || !entry.contains("arrow") || !entry.contains("matrix"))
        bad("each map needs \"arrow\" and \"matrix\"");
      const int idx = as_int(entry["arrow"], "\"arrow\"");
      if (idx < 0 || idx >= static_cast<int>(maps.size())) bad("arrow index out of range");
      if (seen[idx]) bad("arrow " + std::to_string(idx) + " given twice");
      seen[idx] = 1;
      Matrix& m = maps[idx];
      const json& rows = entry["matrix"];
      if (!rows.is_array() || rows.size() != m.rows())
        bad("matrix of arrow " + std::to_string(idx) + " has the wrong number of rows");
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (!rows[r].is_array() || rows[r].size() != m.cols())
          bad("matrix of arrow " + std::to_string(idx) + " has the wrong number of columns");
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rational_from_json(rows[r][c]);
      }
    }
  }
  return Representation(q, std::move(dims), std::move(maps));
}

json to_json(const Representation& m) {
  json maps = json::array();
  for (std::size_t a = 0; a < m.maps().size(); ++a) {
    const Matrix& f = m.map(a);
    json rows = json::array();
    for (std::size_t r = 0; r < f.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < f.cols(); ++c) row.push_back(to_json(f(r, c)));
      rows.push_back(std::move(row));
    }
    maps.push_back(json{{"arrow", a}, {"matrix", std::move(rows)}});
  }
  return json{{"quiver", to_json(m.quiver())}, {"dims", m.dims()}, {"maps", std::move(maps)}};
}

json to_json(const RootVector& v) {
  json out = json::array();
  for (const auto& x : v) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
      out.push_back(x.convert_to<long long>());
    else
      out.push_back(x.str());
  }
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

std::vector<Vertex> parse_vertex_list(std::string_view text) {
  std::vector<Vertex> out;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) return out;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto piece = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    int v = 0;
    const auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || end != piece.data() + piece.size())
      bad("malformed vertex list \"" + std::string(text) + "\"");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string format_vertex_list(const std::vector<Vertex>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

std::string format_vertex_set(const VertexSet& xs) {
  return "{" + format_vertex_list(std::vector<Vertex>(xs.begin(), xs.end())) + "}";
}

std::string format_canonical(const CanonicalForm& c) {
  if (c.segments.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < c.segments.size(); ++i) {
    if (i) out += " | ";
    out += format_vertex_list(c.segments[i]);
  }
  return out;
}

std::string format_canonical(const AdmissibleSeq& s) {
  return s.empty() ? "()" : format_canonical(canonical_form(s));
}

std::string format_root(const RootVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string format_dims(const DimVector& d) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ")";
  return os.str();
}

}  // namespace quiverseq::io
