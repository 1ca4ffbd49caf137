#include <iostream>

#include "commands.hpp"
#include "common.hpp"
#include "mpsa/csv.hpp"
#include "mpsa/errors.hpp"
#include "mpsa/io_util.hpp"
#include "mpsa/metrics.hpp"
#include "mpsa/model_io.hpp"

namespace mpsa::cli {

namespace {

TypesInit parse_init_types(const std::string& name) {
  if (name == "auto") return TypesInit::Auto;
  if (name == "spherical") return TypesInit::Spherical;
  if (name == "full") return TypesInit::Full;
  throw InputError("--init-types must be auto, spherical or full");
}

}  // namespace

void cmd_fit(const FitOptions& options) {
  const Dataset dataset = read_dataset_csv(options.data_path);
  const int p = static_cast<int>(dataset.x.cols());

  FitConfig config;
  config.strategy = parse_strategy(options.strategy);
  config.alpha = parse_alpha(options.alpha);
  config.reg_eps = options.reg_eps;
  config.max_iter = options.max_iter;
  config.rel_tol = options.tol;
  config.seed = options.seed;
  config.init_types = parse_init_types(options.init_types);
  config.relative_gap_uses_component_mass = !options.relative_n_total;

  FitResult fit;
  if (!options.types.empty()) {
    fit = em_fit(dataset.x, options.components,
                 parse_types(options.types, p, options.components), config);
  } else if (config.strategy == Strategy::Fixed) {
    throw InputError("--strategy fixed requires --types");
  } else {
    fit = cpem_fit(dataset.x, options.components, config);
  }

  write_file_atomic(options.out_model, serialize(fit.model));
  if (!options.trace_path.empty())
    write_file_atomic(options.trace_path, trace_to_csv(fit.trace));

  const auto& last = fit.trace.records.back();
  std::cout << "fit " << options.components << " components in "
            << fit.trace.records.size() << " iterations: penalized_ll=" << last.penalized
            << " kappa=" << last.kappa << " types=" << format_types(last.types) << "\n";
}

void cmd_cluster(const ClusterOptions& options) {
  const Dataset dataset = read_dataset_csv(options.data_path);
  const MpsaModel model = deserialize(read_file(options.model_path));
  if (model.ambient != static_cast<int>(dataset.x.cols()))
    throw InputError("cluster: the model dimension does not match the data");

  const std::vector<int> labels = predict(dataset.x, model);
  write_file_atomic(options.out_labels, labels_to_csv(labels));
  std::cout << "wrote " << labels.size() << " labels to " << options.out_labels << "\n";

  if (!options.truth_path.empty()) {
    const std::vector<int> truth = read_labels_csv(options.truth_path);
    std::cout << "ARI " << ari(labels, truth) << "\n";
  }
}

}  // namespace mpsa::cli
