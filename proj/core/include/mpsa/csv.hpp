#pragma once

#include <string>
#include <vector>

#include "mpsa/matrix.hpp"

namespace mpsa {

struct Dataset {
  Matrix x;
  std::vector<int> labels;  // empty when the file has no label column
  bool has_labels() const { return !labels.empty(); }
};

// Header "x1,...,xp[,label]"; one sample per row. Values are written with
// enough digits to round-trip exactly.
std::string dataset_to_csv(const Matrix& x, const std::vector<int>* labels = nullptr);
Dataset read_dataset_csv(const std::string& path);

// A labels file is either a one-column "label" CSV or any dataset CSV with a
// label column.
std::vector<int> read_labels_csv(const std::string& path);
std::string labels_to_csv(const std::vector<int>& labels);

}  // namespace mpsa
