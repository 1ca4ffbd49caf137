#include "mpsa/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "mpsa/errors.hpp"
#include "mpsa/io_util.hpp"

namespace mpsa {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  for (auto& field : fields) {
    while (!field.empty() && (field.back() == '\r' || field.back() == ' '))
      field.pop_back();
    std::size_t lead = 0;
    while (lead < field.size() && field[lead] == ' ') ++lead;
    field.erase(0, lead);
  }
  return fields;
}

double parse_double(const std::string& field, const std::string& path, std::size_t line) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    std::ostringstream msg;
    msg << path << ":" << line << ": invalid number '" << field << "'";
    throw ParseError(msg.str());
  }
  return value;
}

std::string format_double(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

}  // namespace

std::string dataset_to_csv(const Matrix& x, const std::vector<int>* labels) {
  if (labels != nullptr && labels->size() != x.rows())
    throw InputError("dataset_to_csv: label count does not match the sample count");
  std::ostringstream out;
  for (std::size_t j = 0; j < x.cols(); ++j) {
    if (j) out << ',';
    out << 'x' << j + 1;
  }
  if (labels != nullptr) out << ",label";
  out << '\n';
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const double* row = x.row(i);
    for (std::size_t j = 0; j < x.cols(); ++j) {
      if (j) out << ',';
      out << format_double(row[j]);
    }
    if (labels != nullptr) out << ',' << (*labels)[i];
    out << '\n';
  }
  return out.str();
}

Dataset read_dataset_csv(const std::string& path) {
  const std::string content = read_file(path);
  std::istringstream in(content);
  std::string line;
  std::size_t line_number = 0;

  if (!std::getline(in, line)) throw ParseError(path + ": empty file");
  ++line_number;
  const std::vector<std::string> header = split_line(line);
  if (header.empty()) throw ParseError(path + ":1: empty header");
  const bool labeled = header.back() == "label";
  const std::size_t p = header.size() - (labeled ? 1 : 0);
  if (p == 0) throw ParseError(path + ":1: no feature columns");

  std::vector<double> values;
  std::vector<int> labels;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> fields = split_line(line);
    if (fields.size() != header.size()) {
      std::ostringstream msg;
      msg << path << ":" << line_number << ": expected " << header.size()
          << " fields, found " << fields.size();
      throw ParseError(msg.str());
    }
    for (std::size_t j = 0; j < p; ++j)
      values.push_back(parse_double(fields[j], path, line_number));
    if (labeled) {
      const double label = parse_double(fields[p], path, line_number);
      if (label != std::floor(label)) {
        std::ostringstream msg;
        msg << path << ":" << line_number << ": label must be an integer";
        throw ParseError(msg.str());
      }
      labels.push_back(static_cast<int>(label));
    }
    ++rows;
  }
  if (rows == 0) throw ParseError(path + ": no data rows");

  Dataset dataset;
  dataset.x = Matrix(rows, p);
  std::copy(values.begin(), values.end(), dataset.x.data());
  dataset.labels = std::move(labels);
  return dataset;
}

std::vector<int> read_labels_csv(const std::string& path) {
  const std::string content = read_file(path);
  std::istringstream in(content);
  std::string line;
  if (!std::getline(in, line)) throw ParseError(path + ": empty file");

  // A labels-only file: single "label" header, one integer per row.
  if (split_line(line) == std::vector<std::string>{"label"}) {
    std::vector<int> labels;
    std::size_t line_number = 1;
    while (std::getline(in, line)) {
      ++line_number;
      if (line.empty() || line == "\r") continue;
      const double value = parse_double(split_line(line)[0], path, line_number);
      if (value != std::floor(value)) {
        std::ostringstream msg;
        msg << path << ":" << line_number << ": label must be an integer";
        throw ParseError(msg.str());
      }
      labels.push_back(static_cast<int>(value));
    }
    if (labels.empty()) throw ParseError(path + ": no labels");
    return labels;
  }

  const Dataset dataset = read_dataset_csv(path);
  if (!dataset.has_labels()) throw ParseError(path + ": expected a 'label' column");
  return dataset.labels;
}

std::string labels_to_csv(const std::vector<int>& labels) {
  std::ostringstream out;
  out << "label\n";
  for (int label : labels) out << label << '\n';
  return out.str();
}

}  // namespace mpsa
