#include "liederiv/algebra_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace liederiv {

using nlohmann::json;

namespace {

LieAlgebra algebra_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("algebra file must be a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    throw ParseError("algebra file needs an integer \"dim\"");
  int dim = doc["dim"].get<int>();
  if (dim < 0) throw ParseError("\"dim\" must be nonnegative");
  std::string name = doc.value("name", std::string());

  LieAlgebra::BracketMap structure;
  for (const auto& entry : doc.value("brackets", json::array())) {
    if (!entry.contains("i") || !entry.contains("j")) throw ParseError("bracket entry needs \"i\" and \"j\"");
    int i = entry["i"].get<int>();
    int j = entry["j"].get<int>();
    if (i < 1 || j < 1 || i > dim || j > dim) throw ParseError("bracket index out of range");
    if (i >= j) throw ParseError("bracket entries require i < j");
    std::vector<LieAlgebra::Term> terms;
    for (const auto& term : entry.value("terms", json::array())) {
      int k = term.at("k").get<int>();
      if (k < 1 || k > dim) throw ParseError("term index out of range");
      terms.push_back({k - 1, parse_scalar(term.at("c").get<std::string>())});
    }
    if (!structure.emplace(std::make_pair(i - 1, j - 1), std::move(terms)).second)
      throw ParseError("duplicate bracket pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return LieAlgebra(dim, std::move(structure), std::move(name));
}

}  // namespace

LieAlgebra algebra_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return algebra_from_json(doc);
}

LieAlgebra algebra_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return algebra_from_json_text(buf.str());
}

std::string algebra_to_json_text(const LieAlgebra& algebra) {
  json doc;
  doc["name"] = algebra.name();
  doc["dim"] = algebra.dim();
  json brackets = json::array();
  for (const auto& [pair, terms] : algebra.structure()) {
    json entry;
    entry["i"] = pair.first + 1;
    entry["j"] = pair.second + 1;
    json ts = json::array();
    for (const auto& t : terms) ts.push_back({{"k", t.k + 1}, {"c", to_string(t.c)}});
    entry["terms"] = std::move(ts);
    brackets.push_back(std::move(entry));
  }
  doc["brackets"] = std::move(brackets);
  return doc.dump(2);
}

}  // namespace liederiv
