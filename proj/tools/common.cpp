#include "common.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include "mpsa/errors.hpp"

namespace mpsa::cli {

Strategy parse_strategy(const std::string& name) {
  if (name == "hierarchical") return Strategy::Hierarchical;
  if (name == "relative") return Strategy::Relative;
  if (name == "bottom-up") return Strategy::BottomUp;
  if (name == "top-down") return Strategy::TopDown;
  if (name == "fixed") return Strategy::Fixed;
  throw InputError("unknown strategy '" + name +
                   "' (expected hierarchical, relative, bottom-up, top-down or fixed)");
}

std::string strategy_name(Strategy strategy) {
  switch (strategy) {
    case Strategy::Hierarchical: return "hierarchical";
    case Strategy::Relative: return "relative";
    case Strategy::BottomUp: return "bottom-up";
    case Strategy::TopDown: return "top-down";
    case Strategy::Fixed: return "fixed";
  }
  return "?";
}

double parse_alpha(const std::string& text) {
  if (text == "bic") return FitConfig::kAlphaBic;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0.0)
    throw InputError("--alpha must be a nonnegative number or 'bic'");
  return value;
}

std::vector<Composition> parse_types(const std::string& text, int p, int c_count) {
  const std::size_t count = static_cast<std::size_t>(c_count);
  if (text == "full") return std::vector<Composition>(count, Composition::full(p));
  if (text == "spherical" || text == "p")
    return std::vector<Composition>(count, Composition::spherical(p));

  std::vector<Composition> types;
  std::istringstream components(text);
  std::string component;
  while (std::getline(components, component, ';')) {
    std::vector<int> parts;
    std::istringstream fields(component);
    std::string field;
    while (std::getline(fields, field, ',')) {
      int part = 0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), part);
      if (ec != std::errc() || ptr != field.data() + field.size())
        throw InputError("--types: invalid part '" + field + "'");
      parts.push_back(part);
    }
    Composition gamma(parts);
    if (gamma.ambient() != p) {
      std::ostringstream msg;
      msg << "--types: composition " << gamma.to_string() << " does not sum to p = " << p;
      throw InputError(msg.str());
    }
    types.push_back(std::move(gamma));
  }
  if (types.size() == 1 && count > 1) types.assign(count, types[0]);
  if (types.size() != count)
    throw InputError("--types: expected one composition or one per component");
  return types;
}

std::string format_types(const std::vector<Composition>& types) {
  std::ostringstream out;
  for (std::size_t c = 0; c < types.size(); ++c) {
    if (c) out << '|';
    const auto& parts = types[c].parts();
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (k) out << '+';
      out << parts[k];
    }
  }
  return out.str();
}

std::string trace_to_csv(const FitTrace& trace) {
  std::ostringstream out;
  out << "iteration,loglik,penalized_ll,kappa,types,reseeds\n";
  char buffer[32];
  for (const auto& record : trace.records) {
    out << record.iteration << ',';
    std::snprintf(buffer, sizeof(buffer), "%.17g", record.loglik);
    out << buffer << ',';
    std::snprintf(buffer, sizeof(buffer), "%.17g", record.penalized);
    out << buffer << ',';
    out << record.kappa << ',' << format_types(record.types) << ',' << record.reseeds << '\n';
  }
  return out.str();
}

}  // namespace mpsa::cli
