#include "graev/io.hpp"

#include <fstream>

namespace graev {

namespace {

Value value_from_json(const nlohmann::json& j, const std::string& where) {
  if (j.is_number_integer()) return Value(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Value::parse(j.get<std::string>());
    } catch (const argument_error& e) {
      throw structural_error(where + ": " + e.what());
    }
  }
  throw structural_error(where + ": expected rational string, got " + j.dump());
}

Dendrogram::Node node_from_json(const nlohmann::json& j,
                                const std::string& where) {
  Dendrogram::Node node;
  if (j.is_string()) {
    node.leaf = j.get<std::string>();
    return node;
  }
  if (!j.is_object() || !j.contains("height") || !j.contains("children"))
    throw structural_error(where +
                           ": dendrogram node needs height and children");
  node.height = value_from_json(j.at("height"), where + ".height");
  const auto& children = j.at("children");
  if (!children.is_array() || children.empty())
    throw structural_error(where + ".children: expected nonempty array");
  for (size_t c = 0; c < children.size(); ++c)
    node.children.push_back(node_from_json(
        children[c], where + ".children[" + std::to_string(c) + "]"));
  return node;
}

}  // namespace

UltraMetricSpace space_from_json(const nlohmann::json& j) {
  if (!j.is_object())
    throw structural_error("space: top-level JSON object expected");
  if (j.contains("dendrogram")) {
    Dendrogram tree;
    tree.root = node_from_json(j.at("dendrogram"), "dendrogram");
    return from_dendrogram(tree);
  }
  if (!j.contains("points") || !j.contains("matrix"))
    throw structural_error("space: expected points+matrix or dendrogram");
  std::vector<std::string> points;
  for (const auto& p : j.at("points")) {
    if (!p.is_string()) throw structural_error("space: point names must be strings");
    points.push_back(p.get<std::string>());
  }
  const auto& m = j.at("matrix");
  if (!m.is_array()) throw structural_error("space: matrix must be an array");
  std::vector<std::vector<Value>> matrix;
  for (size_t r = 0; r < m.size(); ++r) {
    if (!m[r].is_array())
      throw structural_error("space: matrix row " + std::to_string(r) +
                             " must be an array");
    std::vector<Value> row;
    for (size_t c = 0; c < m[r].size(); ++c)
      row.push_back(value_from_json(
          m[r][c],
          "matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
    matrix.push_back(std::move(row));
  }
  return UltraMetricSpace::from_matrix(std::move(points), matrix);
}

UltraMetricSpace load_space(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw structural_error("cannot open space file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw structural_error("space file '" + path + "': " + e.what());
  }
  return space_from_json(j);
}

nlohmann::ordered_json space_to_json(const UltraMetricSpace& space) {
  nlohmann::ordered_json j;
  j["points"] = space.points();
  nlohmann::ordered_json matrix = nlohmann::ordered_json::array();
  for (int i = 0; i < space.size(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int k = 0; k < space.size(); ++k) row.push_back(space.dist(i, k).str());
    matrix.push_back(std::move(row));
  }
  j["matrix"] = std::move(matrix);
  return j;
}

std::string format_space(const UltraMetricSpace& space) {
  return space_to_json(space).dump(2) + "\n";
}

nlohmann::ordered_json report_to_json(const CampaignReport& report) {
  nlohmann::ordered_json j;
  j["seed"] = report.config.seed;
  j["instances"] = report.config.instances;
  j["n_points"] = report.config.n_points;
  j["max_word_len"] = report.config.max_word_len;
  j["scheme"] = to_string(report.config.scheme);
  nlohmann::ordered_json pool = nlohmann::ordered_json::array();
  for (const Value& v : report.config.value_pool) pool.push_back(v.str());
  j["value_pool"] = std::move(pool);
  nlohmann::ordered_json props = nlohmann::ordered_json::array();
  for (const auto& p : report.properties) {
    nlohmann::ordered_json pj;
    pj["id"] = p.id;
    pj["checks"] = p.checks;
    pj["passes"] = p.passes;
    if (p.first_failure) {
      pj["first_failure"] = {{"instance", p.first_failure->instance},
                             {"detail", p.first_failure->detail}};
    } else {
      pj["first_failure"] = nullptr;
    }
    props.push_back(std::move(pj));
  }
  j["properties"] = std::move(props);
  j["all_pass"] = report.all_pass();
  return j;
}

nlohmann::ordered_json ball_report_to_json(const BallCheckReport& report,
                                           const UltraMetricSpace& space) {
  nlohmann::ordered_json j;
  j["epsilon"] = report.epsilon.str();
  j["basepoint"] = space.name(report.basepoint);
  j["words_checked"] = report.words_checked;
  nlohmann::ordered_json ces = nlohmann::ordered_json::array();
  for (const auto& c : report.counterexamples) {
    ces.push_back({{"word", print_word(c.word, space.points())},
                   {"delta", c.delta.str()},
                   {"in_closure", c.in_closure}});
  }
  j["counterexamples"] = std::move(ces);
  j["ok"] = report.ok();
  return j;
}

}  // namespace graev
