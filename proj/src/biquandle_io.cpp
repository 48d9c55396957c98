#include <sstream>
#include <stdexcept>

#include "fkb/biquandle.hpp"
#include "json.hpp"

namespace fkb {

namespace {

std::string key_of(const Tuple& x) {
  std::string s;
  for (size_t i = 0; i < x.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(x[i]);
  }
  return s;
}

Tuple tuple_of(const std::string& s, int k) {
  Tuple x;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) x.push_back(std::stoi(item));
  if (static_cast<int>(x.size()) != k)
    throw std::invalid_argument("biquandle file: tuple '" + s + "' has wrong arity");
  return x;
}

}  // namespace

std::string biquandle_to_json(const FiniteKBiquandle& B) {
  nlohmann::ordered_json j;
  j["k"] = B.k();
  j["m"] = B.m();
  nlohmann::ordered_json table = nlohmann::ordered_json::object();
  for (const auto& [rep, img] : B.orbit_table()) table[key_of(rep)] = key_of(img);
  j["table"] = std::move(table);
  return j.dump(2);
}

FiniteKBiquandle biquandle_from_json(const std::string& text, bool skip_axioms) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("biquandle file: ") + e.what());
  }
  if (!j.contains("k") || !j.contains("m") || !j.contains("table"))
    throw std::invalid_argument("biquandle file: expected fields k, m, table");
  int k = j["k"].get<int>();
  int m = j["m"].get<int>();
  std::map<Tuple, Tuple> table;
  for (const auto& [key, val] : j["table"].items()) {
    Tuple rep = tuple_of(key, k);
    for (size_t i = 0; i + 1 < rep.size(); ++i)
      if (rep[i] > rep[i + 1])
        throw std::invalid_argument("biquandle file: key '" + key + "' is not sorted");
    table[rep] = tuple_of(val.get<std::string>(), k);
  }
  auto B = FiniteKBiquandle::from_orbit_table(k, m, table);
  if (!skip_axioms) {
    auto rep = check_axioms(B);
    if (!rep.all_pass()) {
      std::string which;
      if (!rep.equivariance.pass) which = "equivariance: " + rep.equivariance.counterexample;
      else if (!rep.involution.pass) which = "involution: " + rep.involution.counterexample;
      else if (!rep.far_commutativity.pass)
        which = "far commutativity: " + rep.far_commutativity.counterexample;
      else which = "tetrahedron: " + rep.tetrahedron.counterexample;
      throw std::invalid_argument("biquandle file: axiom check failed (" + which + ")");
    }
  }
  return B;
}

}  // namespace fkb
