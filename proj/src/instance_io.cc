#include "lagrel/instance_io.h"

#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "lagrel/errors.h"

namespace lagrel {
namespace {

using json = nlohmann::json;

Vector ToVector(const json& node) {
  const auto values = node.get<std::vector<double>>();
  Vector out(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i];
  return out;
}

Matrix ToMatrix(const json& node, const char* name, Eigen::Index cols) {
  const auto rows = node.get<std::vector<std::vector<double>>>();
  Matrix out(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<Eigen::Index>(rows[r].size()) != cols) {
      throw DimensionError(std::string(name) + " row " + std::to_string(r) +
                           " has " + std::to_string(rows[r].size()) +
                           " entries, expected " + std::to_string(cols));
    }
    for (Eigen::Index c = 0; c < cols; ++c) out(r, c) = rows[r][c];
  }
  return out;
}

json MatrixToJson(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json VectorToJson(const Vector& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

}  // namespace

MilpInstance ParseInstanceJson(std::string_view text) {
  try {
    const json root = json::parse(text);
    for (const char* key : {"c", "A", "b", "m", "p"}) {
      if (!root.contains(key)) {
        throw DimensionError(std::string("instance JSON missing '") + key +
                             "'");
      }
    }
    const int m = root.at("m").get<int>();
    const int p = root.at("p").get<int>();
    const Vector c = ToVector(root.at("c"));
    const Eigen::Index n = c.size();
    Matrix C(0, n);
    Vector d(0);
    if (root.contains("C")) C = ToMatrix(root.at("C"), "C", n);
    if (root.contains("d")) d = ToVector(root.at("d"));
    return MilpInstance(c, ToMatrix(root.at("A"), "A", n),
                        ToVector(root.at("b")), std::move(C),
                        std::move(d), m, p);
  } catch (const json::exception& e) {
    throw DimensionError(std::string("malformed instance JSON: ") + e.what());
  }
}

MilpInstance LoadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open instance file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseInstanceJson(buffer.str());
}

std::string InstanceToJson(const MilpInstance& instance) {
  json root;
  root["c"] = VectorToJson(instance.c());
  root["A"] = MatrixToJson(instance.A());
  root["b"] = VectorToJson(instance.b());
  root["C"] = MatrixToJson(instance.C());
  root["d"] = VectorToJson(instance.d());
  root["m"] = instance.num_continuous();
  root["p"] = instance.num_binary();
  return root.dump();
}

}  // namespace lagrel
