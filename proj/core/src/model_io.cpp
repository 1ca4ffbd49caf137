#include "mpsa/model_io.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "mpsa/errors.hpp"

namespace mpsa {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "mpsa-model/1";

const json& require(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end())
    throw ParseError("model document: missing field '" + std::string(key) + "' in " + where);
  return *it;
}

Vector as_vector(const json& value, const char* key, const std::string& where) {
  if (!value.is_array())
    throw ParseError("model document: field '" + std::string(key) + "' in " + where +
                     " must be an array");
  Vector out;
  out.reserve(value.size());
  for (const auto& entry : value) {
    if (!entry.is_number())
      throw ParseError("model document: field '" + std::string(key) + "' in " + where +
                       " must contain numbers");
    out.push_back(entry.get<double>());
  }
  return out;
}

void check_orthonormal(const Matrix& basis, const std::string& where) {
  const std::size_t p = basis.rows();
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = a; b < p; ++b) {
      double dot = 0.0;
      for (std::size_t i = 0; i < p; ++i) dot += basis(i, a) * basis(i, b);
      const double target = a == b ? 1.0 : 0.0;
      if (std::abs(dot - target) > 1e-8)
        throw InputError("model document: basis of " + where + " is not orthonormal");
    }
}

}  // namespace

std::string serialize(const MpsaModel& model) {
  json doc;
  doc["version"] = kVersion;
  doc["p"] = model.ambient;
  doc["C"] = model.size();
  doc["alpha"] = model.alpha;
  json components = json::array();
  for (const auto& comp : model.components) {
    json entry;
    entry["weight"] = comp.weight;
    entry["mean"] = comp.estimate.mean;
    entry["composition"] = comp.estimate.composition.parts();
    entry["block_eigenvalues"] = comp.estimate.block_eigenvalues;
    entry["basis"] = comp.estimate.basis.entries();
    components.push_back(std::move(entry));
  }
  doc["components"] = std::move(components);
  return doc.dump(2);
}

MpsaModel deserialize(const std::string& document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("model document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("model document: top level must be an object");

  const json& version = require(doc, "version", "document");
  if (!version.is_string() || version.get<std::string>() != kVersion)
    throw ParseError("model document: unsupported version (expected mpsa-model/1)");

  MpsaModel model;
  model.ambient = require(doc, "p", "document").get<int>();
  model.alpha = require(doc, "alpha", "document").get<double>();
  const int c_count = require(doc, "C", "document").get<int>();
  if (model.ambient < 1) throw ParseError("model document: p must be positive");
  if (c_count < 1) throw ParseError("model document: C must be positive");

  const json& components = require(doc, "components", "document");
  if (!components.is_array() || static_cast<int>(components.size()) != c_count)
    throw ParseError("model document: components must be an array of C entries");

  const std::size_t p = static_cast<std::size_t>(model.ambient);
  double weight_sum = 0.0;
  for (int c = 0; c < c_count; ++c) {
    std::ostringstream where;
    where << "component " << c + 1;
    const json& entry = components[static_cast<std::size_t>(c)];
    if (!entry.is_object())
      throw ParseError("model document: " + where.str() + " must be an object");

    PsaComponent comp;
    const json& weight = require(entry, "weight", where.str());
    if (!weight.is_number())
      throw ParseError("model document: weight in " + where.str() + " must be a number");
    comp.weight = weight.get<double>();
    if (!(comp.weight > 0.0) || comp.weight > 1.0)
      throw InputError("model document: weight in " + where.str() + " must lie in (0, 1]");
    weight_sum += comp.weight;

    comp.estimate.mean = as_vector(require(entry, "mean", where.str()), "mean", where.str());
    if (comp.estimate.mean.size() != p)
      throw ParseError("model document: mean in " + where.str() + " has wrong length");

    const json& parts_json = require(entry, "composition", where.str());
    if (!parts_json.is_array())
      throw ParseError("model document: composition in " + where.str() + " must be an array");
    std::vector<int> parts;
    for (const auto& part : parts_json) {
      if (!part.is_number_integer())
        throw ParseError("model document: composition in " + where.str() +
                         " must contain integers");
      parts.push_back(part.get<int>());
    }
    comp.estimate.composition = Composition(std::move(parts));
    if (comp.estimate.composition.ambient() != model.ambient)
      throw InputError("model document: composition in " + where.str() +
                       " does not sum to p");

    comp.estimate.block_eigenvalues =
        as_vector(require(entry, "block_eigenvalues", where.str()), "block_eigenvalues",
                  where.str());
    if (static_cast<int>(comp.estimate.block_eigenvalues.size()) !=
        comp.estimate.composition.blocks())
      throw ParseError("model document: block_eigenvalues in " + where.str() +
                       " has wrong length");
    for (std::size_t k = 0; k < comp.estimate.block_eigenvalues.size(); ++k) {
      const double value = comp.estimate.block_eigenvalues[k];
      if (!(value > 0.0))
        throw InputError("model document: block eigenvalues in " + where.str() +
                         " must be positive");
      if (k > 0 && value > comp.estimate.block_eigenvalues[k - 1])
        throw InputError("model document: block eigenvalues in " + where.str() +
                         " must be non-increasing");
    }

    const Vector basis_entries =
        as_vector(require(entry, "basis", where.str()), "basis", where.str());
    if (basis_entries.size() != p * p)
      throw ParseError("model document: basis in " + where.str() + " has wrong size");
    comp.estimate.basis = Matrix(p, p);
    std::copy(basis_entries.begin(), basis_entries.end(), comp.estimate.basis.data());
    check_orthonormal(comp.estimate.basis, where.str());

    model.components.push_back(std::move(comp));
  }
  if (std::abs(weight_sum - 1.0) > 1e-6)
    throw InputError("model document: component weights must sum to 1");
  return model;
}

}  // namespace mpsa
