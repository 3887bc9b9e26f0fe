#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace margeo {

nlohmann::json integer_json(const Integer& v)
{
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

nlohmann::json rational_json(const Rational& v)
{
  if (denominator(v) == 1)
    return integer_json(Integer(numerator(v)));
  return v.str();
}

nlohmann::json to_json(const CodegreeResult& r)
{
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : r.evidence)
    steps.push_back({{"k", s.k}, {"interior_points", s.interior_points}});
  nlohmann::json j{{"codegree", r.codegree},
                   {"witness", r.witness},
                   {"interior_points", r.interior_points},
                   {"interior_point_count", r.interior_points.size()},
                   {"evidence", steps},
                   {"dim", r.dim},
                   {"conjecture_holds", r.conjecture_holds}};
  j["omega"] = r.omega ? nlohmann::json(*r.omega) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const NormalityEvidence& e)
{
  nlohmann::json holes = nlohmann::json::array();
  for (const auto& h : e.holes)
    holes.push_back({{"degree", h.degree}, {"point", h.point}});
  nlohmann::json j{{"verdict", to_string(e.verdict)},
                   {"method", to_string(e.method)},
                   {"lattice", to_string(e.mode)},
                   {"degree_from", e.degree_from},
                   {"degree_to", e.degree_to},
                   {"holes", holes},
                   {"lattice_index", integer_json(e.lattice_index)}};
  if (e.method == NormalityMethod::triangulation) {
    j["compressed"] = e.compressed;
    j["simplices"] = e.simplices;
    j["parallelepiped_points"] = e.parallelepiped_points;
  }
  return j;
}

nlohmann::json to_json(const GorensteinCertificate& c)
{
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : c.steps)
    steps.push_back({{"name", s.name}, {"status", to_string(s.status)}, {"detail", s.detail}});
  nlohmann::json distances = nlohmann::json::array();
  for (const auto& d : c.distances)
    distances.push_back(integer_json(d));
  nlohmann::json j{{"is_gorenstein", c.is_gorenstein},
                   {"index", c.index},
                   {"omega", c.omega},
                   {"equal_weights", c.equal_weights},
                   {"interior_points", c.interior_points},
                   {"facet_distances", distances},
                   {"failure_reason", c.failure_reason},
                   {"steps", steps}};
  j["interior_point"] = c.interior_point ? nlohmann::json(*c.interior_point) : nlohmann::json(nullptr);
  j["normality"] = c.normality ? to_json(*c.normality) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const WmltResult& r)
{
  nlohmann::json per = nlohmann::json::array();
  for (const auto& s : r.per_m)
    per.push_back({{"m", s.m}, {"distinct_marginals", s.distinct_marginals}, {"status", s.status}});
  nlohmann::json j{{"start", r.start},           {"m_max", r.m_max}, {"codegree", r.codegree},
                   {"per_m", per},               {"truncated", r.truncated},
                   {"witness_u", r.witness_u},   {"witness_marginal", r.witness_marginal}};
  j["wmlt"] = r.wmlt ? nlohmann::json(*r.wmlt) : nlohmann::json(nullptr);
  if (!r.wmlt) {
    j["witness_u"] = nullptr;
    j["witness_marginal"] = nullptr;
  }
  return j;
}

nlohmann::json to_json(const ReducibleDecomposition& d)
{
  return {{"gamma1", d.gamma1.to_string()}, {"separator", d.separator},   {"gamma2", d.gamma2.to_string()},
          {"augmented1", d.augmented1},     {"augmented2", d.augmented2}, {"clean", d.clean()}};
}

nlohmann::json to_json(const FactorizationReport& r)
{
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& l : r.levels)
    levels.push_back({{"complex", l.complex.to_string()},
                      {"decomposition", to_json(l.decomposition)},
                      {"direct_columns", l.direct_vertices},
                      {"fiber_product_vertices", l.fiber_vertices},
                      {"equal", l.equal},
                      {"identification", l.identification}});
  return {{"holds", r.holds}, {"levels", levels}};
}

nlohmann::json to_json(const TransferReport& r)
{
  auto brief = [](const std::optional<GorensteinCertificate>& c) -> nlohmann::json {
    if (!c)
      return nullptr;
    nlohmann::json j{{"is_gorenstein", c->is_gorenstein}, {"index", c->index}, {"failure_reason", c->failure_reason}};
    j["interior_point"] = c->interior_point ? nlohmann::json(*c->interior_point) : nlohmann::json(nullptr);
    return j;
  };
  nlohmann::json j{{"preconditions_met", r.preconditions_met},
                   {"precondition_note", r.precondition_note},
                   {"piece1", brief(r.piece1)},
                   {"piece2", brief(r.piece2)},
                   {"same_index", r.same_index},
                   {"interior_points_ones", r.interior_points_ones},
                   {"projections_agree", r.projections_agree},
                   {"hypotheses_hold", r.hypotheses_hold},
                   {"prediction", to_string(r.prediction)},
                   {"direct", brief(r.direct)},
                   {"agrees", r.agrees}};
  j["decomposition"] = r.decomposition ? to_json(*r.decomposition) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json make_verdict(bool negative, std::string summary)
{
  return {{"negative", negative}, {"summary", std::move(summary)}};
}

// ---------------------------------------------------------------------------
// rendering

namespace {

std::string scalar_text(const nlohmann::json& v)
{
  if (v.is_string())
    return v.get<std::string>();
  if (v.is_null())
    return "-";
  if (v.is_array()) {
    bool flat = std::all_of(v.begin(), v.end(), [](const nlohmann::json& x) { return x.is_primitive(); });
    if (flat) {
      std::string s = "(";
      for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + scalar_text(v[i]);
      return s + ")";
    }
  }
  return v.dump();
}

bool is_flat(const nlohmann::json& v)
{
  if (v.is_primitive())
    return true;
  if (v.is_array())
    return std::all_of(v.begin(), v.end(), [](const nlohmann::json& x) { return x.is_primitive(); });
  return false;
}

void table_of_objects(std::ostream& os, const nlohmann::json& rows, const std::string& indent)
{
  std::vector<std::string> keys;
  for (const auto& r : rows)
    for (auto it = r.begin(); it != r.end(); ++it)
      if (is_flat(it.value()) && std::find(keys.begin(), keys.end(), it.key()) == keys.end())
        keys.push_back(it.key());
  std::vector<std::size_t> width(keys.size());
  std::vector<std::vector<std::string>> cells;
  for (std::size_t k = 0; k < keys.size(); ++k)
    width[k] = keys[k].size();
  for (const auto& r : rows) {
    std::vector<std::string> line;
    for (std::size_t k = 0; k < keys.size(); ++k) {
      line.push_back(r.contains(keys[k]) ? scalar_text(r[keys[k]]) : "");
      width[k] = std::max(width[k], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    os << indent;
    for (std::size_t k = 0; k < line.size(); ++k) {
      os << line[k];
      if (k + 1 < line.size())
        os << std::string(width[k] - line[k].size() + 2, ' ');
    }
    os << '\n';
  };
  emit(keys);
  for (const auto& line : cells)
    emit(line);
}

void render_value(std::ostream& os, const std::string& key, const nlohmann::json& v, const std::string& indent)
{
  if (is_flat(v)) {
    os << indent << key << ": " << scalar_text(v) << '\n';
    return;
  }
  if (v.is_object()) {
    os << indent << key << ":\n";
    for (auto it = v.begin(); it != v.end(); ++it)
      render_value(os, it.key(), it.value(), indent + "  ");
    return;
  }
  // array with structure
  os << indent << key << ": " << v.size() << (v.size() == 1 ? " item" : " items") << '\n';
  if (v.empty())
    return;
  if (std::all_of(v.begin(), v.end(), [](const nlohmann::json& x) { return x.is_object(); })) {
    table_of_objects(os, v, indent + "  ");
    return;
  }
  for (const auto& x : v)
    os << indent << "  " << scalar_text(x) << '\n';
}

void render_matrix(std::ostream& os, const nlohmann::json& m)
{
  const auto& rows = m["rows"];
  const auto& cols = m["columns"];
  std::size_t label = 0;
  for (const auto& r : rows)
    label = std::max(label, r["name"].get<std::string>().size());
  std::size_t cw = 1;
  for (const auto& c : cols)
    cw = std::max(cw, c.get<std::string>().size());
  os << std::string(label, ' ');
  for (const auto& c : cols)
    os << ' ' << std::string(cw - c.get<std::string>().size(), ' ') << c.get<std::string>();
  os << '\n';
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string name = rows[r]["name"];
    os << name << std::string(label - name.size(), ' ');
    for (const auto& x : m["entries"][r])
      os << ' ' << std::string(cw - 1, ' ') << x.get<int>();
    os << '\n';
  }
}

}  // namespace

std::string render_table(const nlohmann::json& doc)
{
  std::ostringstream os;
  const std::string command = doc.value("command", "");
  os << "margeo " << command << '\n';
  if (doc.contains("input")) {
    const auto& in = doc["input"];
    if (in.contains("complex_text"))
      os << "complex: " << in["complex_text"].get<std::string>() << '\n';
    if (in.contains("d") && !in["d"].is_null())
      os << "d: " << scalar_text(in["d"]) << '\n';
  }
  const auto& result = doc["result"];
  if (command == "matrix" && result.contains("matrix")) {
    render_matrix(os, result["matrix"]);
    for (auto it = result.begin(); it != result.end(); ++it)
      if (it.key() != "matrix")
        render_value(os, it.key(), it.value(), "");
  } else if (command == "facets" && result.contains("text")) {
    for (const auto& line : result["text"])
      os << line.get<std::string>() << '\n';
    for (auto it = result.begin(); it != result.end(); ++it)
      if (it.key() != "text" && it.key() != "hrep")
        render_value(os, it.key(), it.value(), "");
  } else if (result.is_object()) {
    for (auto it = result.begin(); it != result.end(); ++it)
      render_value(os, it.key(), it.value(), "");
  }
  if (doc.contains("timing"))
    render_value(os, "timing", doc["timing"], "");
  if (doc.contains("verdict"))
    os << "verdict: " << doc["verdict"].value("summary", "") << (doc["verdict"].value("negative", false) ? " [negative]" : "")
       << '\n';
  return os.str();
}

std::string render_csv(const nlohmann::json& doc)
{
  if (doc.value("command", "") != "matrix")
    fail(ErrorKind::invalid_argument, "csv output is only available for the matrix command");
  const auto& m = doc["result"]["matrix"];
  std::ostringstream os;
  os << "row";
  for (const auto& c : m["columns"])
    os << ',' << c.get<std::string>();
  os << '\n';
  for (std::size_t r = 0; r < m["rows"].size(); ++r) {
    os << '"' << m["rows"][r]["name"].get<std::string>() << '"';
    for (const auto& x : m["entries"][r])
      os << ',' << x.get<int>();
    os << '\n';
  }
  return os.str();
}

std::string render(const nlohmann::json& doc, const std::string& format)
{
  if (format == "json")
    return doc.dump(2) + "\n";
  if (format == "table")
    return render_table(doc);
  if (format == "both")
    return render_table(doc) + "\n" + doc.dump(2) + "\n";
  if (format == "csv")
    return render_csv(doc);
  fail(ErrorKind::invalid_argument, "unknown output format '" + format + "' (expected json, table, both or csv)");
}

}  // namespace margeo
