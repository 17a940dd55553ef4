#include "graphon/step_graphon.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "graphon/catalog.hpp"

namespace graphon {

namespace {

std::string at(int i, int j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

StepGraphon make_step_graphon(std::string name, std::vector<Rational> sigma,
                              std::vector<std::vector<Rational>> values) {
  const int q = static_cast<int>(values.size());
  if (q < 1) throw std::invalid_argument("graphon needs at least one block");
  if (static_cast<int>(sigma.size()) != q + 1)
    throw std::invalid_argument("sigma must have " + std::to_string(q + 1) + " entries, got " +
                                std::to_string(sigma.size()));
  if (sigma.front() != 0) throw std::invalid_argument("sigma[0] must be 0");
  if (sigma.back() != 1) throw std::invalid_argument("sigma[" + std::to_string(q) + "] must be 1");
  for (int i = 0; i + 1 <= q; ++i)
    if (!(sigma[i] < sigma[i + 1]))
      throw std::invalid_argument("sigma not strictly increasing at index " + std::to_string(i + 1));

  for (int i = 0; i < q; ++i) {
    if (static_cast<int>(values[i].size()) != q)
      throw std::invalid_argument("values row " + std::to_string(i + 1) + " has " +
                                  std::to_string(values[i].size()) + " entries, expected " + std::to_string(q));
    for (int j = 0; j < q; ++j) {
      if (values[i][j] < 0 || values[i][j] > 1)
        throw std::invalid_argument("value out of range [0,1] at " + at(i, j));
    }
  }
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j)
      if (values[i][j] != values[j][i]) throw std::invalid_argument("values not symmetric at " + at(i, j));

  StepGraphon w;
  w.name = std::move(name);
  w.sigma = std::move(sigma);
  w.values = std::move(values);
  return w;
}

std::vector<Rational> concentration_vector(const StepGraphon& w) {
  std::vector<Rational> x;
  x.reserve(w.q());
  for (int i = 0; i < w.q(); ++i) x.push_back(w.sigma[i + 1] - w.sigma[i]);
  return x;
}

SkeletonGraph skeleton_graph(const StepGraphon& w) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < w.q(); ++i)
    for (int j = i; j < w.q(); ++j)
      if (w.values[i][j] != 0) edges.emplace_back(i, j);
  return make_skeleton(w.q(), edges);
}

Rational min_edge_value(const StepGraphon& w) {
  Rational best = 0;
  bool found = false;
  for (int i = 0; i < w.q(); ++i)
    for (int j = i; j < w.q(); ++j)
      if (w.values[i][j] != 0 && (!found || w.values[i][j] < best)) {
        best = w.values[i][j];
        found = true;
      }
  return best;
}

StepGraphon split_self_loops(const StepGraphon& w) {
  const int q = w.q();
  std::vector<bool> split(q);
  bool any = false;
  for (int i = 0; i < q; ++i) {
    split[i] = w.values[i][i] != 0;
    any = any || split[i];
  }
  if (!any) return w;

  // Map each old community to one or two new ones, halving the interval
  // of every split community.
  std::vector<Rational> sigma{0};
  std::vector<std::vector<int>> copies(q);
  for (int i = 0; i < q; ++i) {
    const Rational width = w.sigma[i + 1] - w.sigma[i];
    if (split[i]) {
      copies[i] = {static_cast<int>(sigma.size()) - 1, static_cast<int>(sigma.size())};
      sigma.push_back(sigma.back() + width / 2);
      sigma.push_back(sigma.back() + width / 2);
    } else {
      copies[i] = {static_cast<int>(sigma.size()) - 1};
      sigma.push_back(sigma.back() + width);
    }
  }
  const int new_q = static_cast<int>(sigma.size()) - 1;
  std::vector<std::vector<Rational>> values(new_q, std::vector<Rational>(new_q, Rational(0)));
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      for (int a : copies[i]) {
        for (int b : copies[j]) {
          if (i == j && split[i]) {
            // Zero diagonal sub-blocks, old value on the off-diagonal ones.
            values[a][b] = (a == b) ? Rational(0) : w.values[i][i];
          } else {
            values[a][b] = w.values[i][j];
          }
        }
      }
    }
  }
  return make_step_graphon(w.name + "-split", std::move(sigma), std::move(values));
}

StepGraphon parse_graphon(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed graphon document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("name") || !doc.contains("sigma") || !doc.contains("values"))
    throw std::invalid_argument("graphon document needs fields name, sigma, values");
  if (!doc["name"].is_string() || !doc["sigma"].is_array() || !doc["values"].is_array())
    throw std::invalid_argument("graphon document field has wrong type");

  std::vector<Rational> sigma;
  for (const auto& s : doc["sigma"]) {
    if (!s.is_string()) throw std::invalid_argument("sigma entries must be rational strings");
    sigma.push_back(parse_rational(s.get<std::string>()));
  }
  std::vector<std::vector<Rational>> values;
  for (const auto& row : doc["values"]) {
    if (!row.is_array()) throw std::invalid_argument("values rows must be arrays");
    std::vector<Rational> r;
    for (const auto& v : row) {
      if (!v.is_string()) throw std::invalid_argument("values entries must be rational strings");
      r.push_back(parse_rational(v.get<std::string>()));
    }
    values.push_back(std::move(r));
  }
  return make_step_graphon(doc["name"].get<std::string>(), std::move(sigma), std::move(values));
}

std::string serialize_graphon(const StepGraphon& w) {
  nlohmann::ordered_json doc;
  doc["name"] = w.name;
  nlohmann::ordered_json sigma = nlohmann::ordered_json::array();
  for (const auto& s : w.sigma) sigma.push_back(format_rational(s));
  doc["sigma"] = std::move(sigma);
  nlohmann::ordered_json values = nlohmann::ordered_json::array();
  for (const auto& row : w.values) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& v : row) r.push_back(format_rational(v));
    values.push_back(std::move(r));
  }
  doc["values"] = std::move(values);
  return doc.dump(2) + "\n";
}

StepGraphon load_graphon(const std::string& name_or_path) {
  if (is_catalog_name(name_or_path)) return catalog(name_or_path);
  std::ifstream in(name_or_path);
  if (!in) throw std::runtime_error("cannot open graphon file '" + name_or_path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graphon(buf.str());
}

}  // namespace graphon
