#include <iostream>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"
#include "mpsa/csv.hpp"
#include "mpsa/datagen.hpp"
#include "mpsa/errors.hpp"
#include "mpsa/io_util.hpp"
#include "mpsa/model_io.hpp"

namespace mpsa::cli {

namespace {

using nlohmann::json;

[[noreturn]] void spec_error(const std::string& path, const std::string& field,
                             const std::string& what) {
  throw InputError(path + ": " + field + " " + what);
}

double number_at(const json& obj, const std::string& path, const std::string& field) {
  if (!obj.contains(field)) spec_error(path, field, "is required");
  if (!obj[field].is_number()) spec_error(path, field, "must be a number");
  return obj[field].get<double>();
}

SyntheticSpec parse_spec(const std::string& text, const std::string& path) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (!doc.is_object()) spec_error(path, "document", "must be a JSON object");

  SyntheticSpec spec;
  spec.n = static_cast<long>(number_at(doc, path, "n"));
  spec.p = static_cast<int>(number_at(doc, path, "p"));
  spec.c_count = static_cast<int>(number_at(doc, path, "C"));
  if (spec.n < 1) spec_error(path, "n", "must be positive");
  if (spec.p < 1) spec_error(path, "p", "must be positive");
  if (spec.c_count < 1) spec_error(path, "C", "must be positive");

  if (!doc.contains("weights") || !doc["weights"].is_array())
    spec_error(path, "weights", "must be an array");
  for (const auto& w : doc["weights"]) {
    if (!w.is_number()) spec_error(path, "weights", "must contain numbers");
    spec.weights.push_back(w.get<double>());
  }

  if (doc.contains("means")) {
    if (!doc["means"].is_array()) spec_error(path, "means", "must be an array of vectors");
    for (std::size_t c = 0; c < doc["means"].size(); ++c) {
      const auto& mean = doc["means"][c];
      std::ostringstream field;
      field << "means[" << c << "]";
      if (!mean.is_array()) spec_error(path, field.str(), "must be an array");
      Vector values;
      for (const auto& v : mean) {
        if (!v.is_number()) spec_error(path, field.str(), "must contain numbers");
        values.push_back(v.get<double>());
      }
      spec.means.push_back(std::move(values));
    }
  }
  if (doc.contains("mean_bound")) spec.mean_bound = number_at(doc, path, "mean_bound");
  if (spec.means.empty() && !spec.mean_bound)
    spec_error(path, "means/mean_bound", "one of the two is required");

  if (!doc.contains("components") || !doc["components"].is_array())
    spec_error(path, "components", "must be an array");
  for (std::size_t c = 0; c < doc["components"].size(); ++c) {
    const auto& entry = doc["components"][c];
    std::ostringstream field;
    field << "components[" << c << "]";
    if (!entry.is_object()) spec_error(path, field.str(), "must be an object");
    if (!entry.contains("type") || !entry["type"].is_array())
      spec_error(path, field.str() + ".type", "must be an array of positive integers");
    std::vector<int> parts;
    for (const auto& part : entry["type"]) {
      if (!part.is_number_integer())
        spec_error(path, field.str() + ".type", "must contain integers");
      parts.push_back(part.get<int>());
    }
    SpectrumSpec spectrum;
    try {
      spectrum.composition = Composition(parts);
    } catch (const InputError& e) {
      spec_error(path, field.str() + ".type", e.what());
    }
    spectrum.lambda1 = number_at(entry, path, "lambda1");
    if (spectrum.lambda1 <= 0.0)
      spec_error(path, field.str() + ".lambda1", "must be positive");
    if (entry.contains("snr")) spectrum.snr = number_at(entry, path, "snr");
    if (entry.contains("delta")) spectrum.delta = number_at(entry, path, "delta");
    spec.spectra.push_back(std::move(spectrum));
  }

  if (doc.contains("distribution")) {
    const auto& dist = doc["distribution"];
    if (!dist.is_string()) spec_error(path, "distribution", "must be a string");
    const std::string name = dist.get<std::string>();
    if (name == "skew-normal") {
      spec.skew_shape.assign(static_cast<std::size_t>(spec.p), 1.0);
      if (doc.contains("skew_shape")) {
        spec.skew_shape.clear();
        if (!doc["skew_shape"].is_array())
          spec_error(path, "skew_shape", "must be an array");
        for (const auto& v : doc["skew_shape"]) {
          if (!v.is_number()) spec_error(path, "skew_shape", "must contain numbers");
          spec.skew_shape.push_back(v.get<double>());
        }
      }
    } else if (name != "gaussian") {
      spec_error(path, "distribution", "must be 'gaussian' or 'skew-normal'");
    }
  }
  return spec;
}

}  // namespace

void cmd_generate(const GenerateOptions& options) {
  SyntheticSpec spec = parse_spec(read_file(options.spec_path), options.spec_path);
  if (options.n_override > 0) spec.n = options.n_override;

  Rng rng(options.seed);
  SampleResult result;
  try {
    result = sample_mpsa(spec, rng);
  } catch (const InputError& e) {
    throw InputError(options.spec_path + ": " + e.what());
  }

  write_file_atomic(options.out_csv, dataset_to_csv(result.x, &result.labels));
  const std::string truth_path =
      options.truth_path.empty() ? options.out_csv + ".truth.json" : options.truth_path;
  write_file_atomic(truth_path, serialize(result.truth));
  std::cout << "wrote " << result.x.rows() << " samples to " << options.out_csv
            << " and the generating model to " << truth_path << "\n";
}

}  // namespace mpsa::cli
