#include "io.hpp"

#include <fstream>
#include <sstream>

#include "sqw/error.hpp"

namespace sqw::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '(' || s.front() == '[')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == ')' || s.back() == ']')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  s = trim(s);
  if (s.empty()) return out;
  size_t start = 0;
  while (true) {
    const size_t c = s.find(',', start);
    std::string_view piece = s.substr(start, c == std::string_view::npos ? std::string_view::npos : c - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    out.push_back(piece);
    if (c == std::string_view::npos) break;
    start = c + 1;
  }
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "";
  return j.dump();
}

void csv_rec(const Json& j, const std::string& path, std::ostringstream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) csv_rec(v, path.empty() ? k : path + "." + k, os);
  } else if (j.is_array()) {
    size_t i = 0;
    for (const auto& v : j) csv_rec(v, path + "[" + std::to_string(i++) + "]", os);
  } else {
    os << csv_escape(path) << "," << csv_escape(scalar_text(j)) << "\n";
  }
}

bool is_flat_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& v : j)
    if (v.is_structured()) return false;
  return true;
}

void pretty_rec(const Json& j, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !is_flat_array(v)) {
        os << pad << k << ":\n";
        pretty_rec(v, indent + 2, os);
      } else if (v.is_array()) {
        os << pad << k << ": [";
        for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
        os << "]\n";
      } else {
        os << pad << k << ": " << scalar_text(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured() && !is_flat_array(v)) {
        os << pad << "-\n";
        pretty_rec(v, indent + 2, os);
      } else {
        os << pad << "- ";
        if (v.is_array()) {
          os << "[";
          for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
          os << "]\n";
        } else {
          os << scalar_text(v) << "\n";
        }
      }
    }
  } else {
    os << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  for (std::string_view piece : split(text)) {
    if (piece.empty()) throw Error(Errc::ParseError, "empty partition entry");
    int v = 0;
    for (char c : piece) {
      if (c < '0' || c > '9') throw Error(Errc::ParseError, "bad partition entry '" + std::string(piece) + "'");
      v = v * 10 + (c - '0');
    }
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

std::vector<Rational> parse_rationals(std::string_view text) {
  std::vector<Rational> out;
  for (std::string_view piece : split(text)) out.push_back(Rational::parse(piece));
  return out;
}

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw Error(Errc::ParseError, "expected an exact rational string such as \"3/7\"");
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(rational_from_json(v));
  return out;
}

Json to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const Rational& r : v) a.push_back(r.str());
  return a;
}

Json to_json(const Partition& p) { return p.parts(); }

Json to_json(const SymPoly& p) {
  Json terms = Json::array();
  for (const auto& [mu, c] : p.terms()) terms.push_back({{"m", to_json(mu)}, {"coeff", c.str()}});
  return {{"nvars", p.nvars()}, {"basis", "monomial"}, {"terms", terms}, {"text", p.str()}};
}

Json to_json(const GridTag& t) {
  Json j = {{"kind", grid_kind_name(t.kind)}};
  if (t.kind == GridTag::Kind::QType) {
    j["c"] = t.c.str();
    j["q"] = t.q.str();
    j["a"] = to_json(t.a);
  } else if (t.kind == GridTag::Kind::LinearType) {
    j["d"] = t.d.str();
    j["c"] = to_json(t.cs);
  }
  return j;
}

Json to_json(const Grid& g) {
  Json rows = Json::array();
  for (const auto& row : g.values()) rows.push_back(to_json(row));
  return {{"n", g.n()}, {"depth", g.depth()}, {"values", rows}, {"tag", to_json(g.tag())}};
}

Grid grid_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("values")) throw Error(Errc::ParseError, "grid needs a \"values\" table");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j.at("values")) rows.push_back(rationals_from_json(row));
  GridTag tag;
  if (j.contains("tag") && j.at("tag").is_object()) {
    const Json& t = j.at("tag");
    const std::string kind = t.value("kind", "raw");
    if (kind == grid_kind_name(GridTag::Kind::QType)) {
      tag.kind = GridTag::Kind::QType;
      tag.c = rational_from_json(t.at("c"));
      tag.q = rational_from_json(t.at("q"));
      tag.a = rationals_from_json(t.at("a"));
    } else if (kind == grid_kind_name(GridTag::Kind::LinearType)) {
      tag.kind = GridTag::Kind::LinearType;
      tag.d = rational_from_json(t.at("d"));
      tag.cs = rationals_from_json(t.at("c"));
    }
  }
  Grid g(std::move(rows), tag);
  if (j.contains("n") && j.at("n").get<int>() != g.n()) throw Error(Errc::ParseError, "grid n does not match values");
  if (j.contains("depth") && j.at("depth").get<int>() != g.depth())
    throw Error(Errc::ParseError, "grid depth does not match values");
  return g;
}

Json to_json(const Classification& c) {
  Json j = {{"kind", classification_name(c.kind)}, {"nondegenerate", c.nondegenerate}};
  if (c.kind != Classification::Kind::NotPerfect) j["fitted"] = to_json(c.fitted);
  if (c.violated_cell) j["violated_cell"] = {c.violated_cell->first, c.violated_cell->second};
  if (!c.reason.empty()) j["reason"] = c.reason;
  return j;
}

Json to_json(const CriterionResult& r, bool timing) {
  Json j = {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"exact", r.exact}, {"checks", r.checks}};
  if (timing) j["seconds"] = r.seconds;
  j["limit_seconds"] = r.limit;
  j["detail"] = r.detail;
  j["witnesses"] = r.witnesses;
  return j;
}

ParamFile params_from_json(const Json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "parameter file must be an object");
  ParamFile p;
  if (j.contains("A")) p.A = rationals_from_json(j.at("A"));
  if (j.contains("B")) p.B = rationals_from_json(j.at("B"));
  if (j.contains("C")) p.C = rationals_from_json(j.at("C"));
  if (j.contains("q")) p.q = rational_from_json(j.at("q"));
  if (j.contains("d")) p.d = rational_from_json(j.at("d"));
  return p;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

std::string to_csv(const Json& j) {
  std::ostringstream os;
  os << "path,value\n";
  csv_rec(j, "", os);
  return os.str();
}

std::string to_pretty(const Json& j) {
  std::ostringstream os;
  pretty_rec(j, 0, os);
  return os.str();
}

}  // namespace sqw::cli
