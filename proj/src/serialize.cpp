#include "geocrystal/serialize.hpp"

#include <regex>

namespace geocrystal {

using linalg::Index;

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(([+-]?[0-9]+)(?:/([0-9]+))?)");
  std::smatch match;
  require(std::regex_match(text, match, pattern), ErrorKind::Parse, "not a rational: \"" + text + "\"");
  const Integer num(match[1].str().front() == '+' ? match[1].str().substr(1) : match[1].str());
  const Integer den(match[2].matched ? match[2].str() : std::string("1"));
  require(den != 0, ErrorKind::Parse, "zero denominator in \"" + text + "\"");
  return Rational(num, den);
}

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw Error(ErrorKind::Parse, "matrix entry must be an integer or a \"p/q\" string");
}

std::vector<int> int_list(const Json& j, const std::string& what) {
  require(j.is_array(), ErrorKind::Parse, what + " must be an array of integers");
  std::vector<int> out;
  for (const Json& x : j) {
    require(x.is_number_integer(), ErrorKind::Parse, what + " must be an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

IntVec to_intvec(const std::vector<int>& v) {
  IntVec out(static_cast<Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Index>(i)) = v[i];
  return out;
}

Json int_array(const IntVec& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

}  // namespace

Json to_json(const RatMat& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMat matrix_from_json(const Json& j, Index rows, Index cols) {
  require(j.is_array(), ErrorKind::Parse, "matrix must be an array of rows");
  require(static_cast<Index>(j.size()) == rows, ErrorKind::Parse,
          "matrix has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
  RatMat m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    require(row.is_array() && static_cast<Index>(row.size()) == cols, ErrorKind::Parse,
            "matrix row " + std::to_string(r) + " does not have " + std::to_string(cols) + " entries");
    for (Index c = 0; c < cols; ++c) m(r, c) = rational_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

Json to_json(const RatSubspace& s) {
  Json basis = Json::array();
  for (Index c = 0; c < s.dim(); ++c) {
    Json v = Json::array();
    for (Index r = 0; r < s.ambient_dim(); ++r) v.push_back(to_string(s.basis()(r, c)));
    basis.push_back(std::move(v));
  }
  return basis;
}

Json to_json(const Flag& flag) {
  Json spaces = Json::array();
  for (const RatSubspace& s : flag.spaces()) spaces.push_back(to_json(s));
  return Json{{"schema_version", kSchemaVersion},
              {"d", flag.d()},
              {"n", flag.n()},
              {"composition", to_json(composition_of(flag))},
              {"spaces", std::move(spaces)}};
}

Json to_json(const Composition& a) { return Json(a.parts); }

Json to_json(const Partition& lambda) { return Json(lambda.parts); }

Json to_json(const QuiverRep& r) {
  Json maps = Json::object();
  for (const QuiverEdge& e : r.shape().edges())
    maps["B:" + std::to_string(e.from) + "->" + std::to_string(e.to)] = to_json(r.B(e.from, e.to));
  for (int k = 1; k < r.n(); ++k) maps["i:" + std::to_string(k)] = to_json(r.i(k));
  for (int k = 1; k < r.n(); ++k) maps["j:" + std::to_string(k)] = to_json(r.j(k));
  return Json{{"schema_version", kSchemaVersion},
              {"n", r.n()},
              {"v", int_array(r.v().v)},
              {"w", int_array(r.w().w)},
              {"maps", std::move(maps)}};
}

QuiverRep quiver_from_json(const Json& j) {
  require(j.is_object(), ErrorKind::Parse, "quiver point must be a JSON object");
  for (const char* key : {"n", "v", "w"}) require(j.contains(key), ErrorKind::Parse, std::string("missing field ") + key);
  require(j["n"].is_number_integer(), ErrorKind::Parse, "n must be an integer");
  const int n = j["n"].get<int>();
  require(n >= 2, ErrorKind::Parse, "n must be at least 2");
  const std::vector<int> v = int_list(j["v"], "v");
  const std::vector<int> w = int_list(j["w"], "w");
  require(static_cast<int>(v.size()) == n - 1 && static_cast<int>(w.size()) == n - 1, ErrorKind::Parse,
          "v and w need n-1 entries");
  for (int x : v) require(x >= 0, ErrorKind::Parse, "v entries must be non-negative");
  for (int x : w) require(x >= 0, ErrorKind::Parse, "w entries must be non-negative");
  QuiverRep r{DimVec(to_intvec(v)), HighestWeight(to_intvec(w))};
  if (!j.contains("maps")) return r;
  const Json& maps = j["maps"];
  require(maps.is_object(), ErrorKind::Parse, "maps must be an object");
  for (const auto& [key, value] : maps.items()) {
    static const std::regex edge(R"(B:([0-9]+)->([0-9]+))");
    static const std::regex frame(R"(([ij]):([0-9]+))");
    std::smatch m;
    if (std::regex_match(key, m, edge)) {
      const int from = std::stoi(m[1].str()), to = std::stoi(m[2].str());
      require(from >= 1 && to >= 1 && from < n && to < n && std::abs(from - to) == 1, ErrorKind::Parse,
              "no edge " + key);
      r.B(from, to) = matrix_from_json(value, r.v()[to], r.v()[from]);
    } else if (std::regex_match(key, m, frame)) {
      const int k = std::stoi(m[2].str());
      require(k >= 1 && k < n, ErrorKind::Parse, "no vertex in " + key);
      if (m[1].str() == "i")
        r.i(k) = matrix_from_json(value, r.v()[k], r.w()[k]);
      else
        r.j(k) = matrix_from_json(value, r.w()[k], r.v()[k]);
    } else {
      throw Error(ErrorKind::Parse, "unknown map " + key);
    }
  }
  return r;
}

Json to_json(const CrystalGraph& g) {
  Json vertices = Json::array();
  for (int x = 0; x < g.size(); ++x) {
    const VertexStats s = vertex_stats(g, x);
    vertices.push_back(Json{{"id", x},
                            {"word", word_to_string(g.word(x), g.n())},
                            {"composition", to_json(s.a)},
                            {"epsilon", s.epsilon},
                            {"phi", s.phi}});
  }
  Json edges = Json::array();
  for (int k = 1; k < g.n(); ++k)
    for (int x = 0; x < g.size(); ++x)
      if (g.f(k, x) != CrystalGraph::kNone) edges.push_back(Json{{"from", x}, {"to", g.f(k, x)}, {"k", k}});
  return Json{{"schema_version", kSchemaVersion},
              {"n", g.n()},
              {"size", g.size()},
              {"highest", g.highest()},
              {"vertices", std::move(vertices)},
              {"edges", std::move(edges)}};
}

Json to_json(const CheckResult& c) {
  Json out{{"name", c.name}, {"passed", c.passed}};
  if (!c.detail.empty()) out["detail"] = c.detail;
  return out;
}

Json to_json(const Fact& f) {
  Json values = Json::object();
  for (const auto& [key, value] : f.values) values[key] = value;
  return Json{{"name", f.name}, {"passed", f.passed}, {"values", std::move(values)}};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

}  // namespace geocrystal
