#include "chargent/models.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "chargent/errors.hpp"

namespace chargent {

std::string_view to_string(GroupKind g) { return g == GroupKind::U1 ? "U1" : "SU2"; }

GroupKind parse_group(std::string_view text) {
  if (text == "U1") return GroupKind::U1;
  if (text == "SU2") return GroupKind::SU2;
  throw ModelError("unknown group '" + std::string(text) + "' (expected U1 or SU2)");
}

std::string to_string(DoubledCharge q) {
  if (q.twice % 2 == 0) return std::to_string(q.twice / 2);
  return std::to_string(q.twice) + "/2";
}

DoubledCharge parse_charge(std::string_view text) {
  const auto fail = [&] {
    return DomainError("charge '" + std::string(text) + "' is not a multiple of 1/2");
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    int num = 0;
    int den = 0;
    auto num_txt = text.substr(0, slash);
    auto den_txt = text.substr(slash + 1);
    if (std::from_chars(num_txt.data(), num_txt.data() + num_txt.size(), num).ec != std::errc{} ||
        std::from_chars(den_txt.data(), den_txt.data() + den_txt.size(), den).ec != std::errc{})
      throw fail();
    if (den == 1) return {2 * num};
    if (den == 2) return {num};
    throw fail();
  }
  double value = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) throw fail();
  const double twice = 2.0 * value;
  if (std::abs(twice - std::round(twice)) > 1e-9) throw fail();
  return {static_cast<int>(std::lround(twice))};
}

ChargeModel::ChargeModel(GroupKind group, Multiplicities multiplicities, std::string name)
    : group_(group), multiplicities_(std::move(multiplicities)), name_(std::move(name)) {
  if (multiplicities_.empty()) throw ModelError("model has no local charges");
  for (const auto& [q, a] : multiplicities_) {
    if (a < 1) throw ModelError("multiplicity of charge " + to_string(q) + " must be >= 1");
    if (group_ == GroupKind::SU2 && q.twice < 0)
      throw ModelError("SU2 local spin " + to_string(q) + " is negative");
    k_ += group_ == GroupKind::U1 ? a : (q.twice + 1) * a;
  }
  if (k_ < 2) throw ModelError("local dimension must be at least 2");
  if (group_ == GroupKind::U1 && multiplicities_.size() < 2)
    throw ModelError("U1 model needs at least two distinct local charges");
}

std::map<DoubledCharge, std::int64_t> weight_multiplicities(const ChargeModel& model) {
  std::map<DoubledCharge, std::int64_t> w;
  for (const auto& [q, a] : model.multiplicities()) {
    if (model.group() == GroupKind::U1) {
      w[q] += a;
    } else {
      for (int m = -q.twice; m <= q.twice; m += 2) w[DoubledCharge{m}] += a;
    }
  }
  return w;
}

namespace {

constexpr std::array<std::string_view, 6> kCatalog = {
    "u1-qubit", "u1-qutrit", "u1-2bosons", "su2-qubit", "su2-qutrit", "su2-trimer"};

}  // namespace

std::span<const std::string_view> catalog_names() { return kCatalog; }

ChargeModel catalog(std::string_view name) {
  const std::string n(name);
  if (name == "u1-qubit") return {GroupKind::U1, {{{-1}, 1}, {{1}, 1}}, n};
  if (name == "u1-qutrit") return {GroupKind::U1, {{{-2}, 1}, {{0}, 1}, {{2}, 1}}, n};
  if (name == "u1-2bosons") return {GroupKind::U1, {{{0}, 1}, {{2}, 2}}, n};
  if (name == "su2-qubit") return {GroupKind::SU2, {{{1}, 1}}, n};
  if (name == "su2-qutrit") return {GroupKind::SU2, {{{2}, 1}}, n};
  if (name == "su2-trimer") return {GroupKind::SU2, {{{1}, 2}, {{3}, 1}}, n};
  std::string valid;
  for (auto c : kCatalog) valid += (valid.empty() ? "" : ", ") + std::string(c);
  throw ModelError("unknown model '" + n + "'; valid names: " + valid);
}

ChargeModel parse_model_config(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ModelError(std::string("model config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("group") || !doc.contains("multiplicities"))
    throw ModelError("model config needs 'group' and 'multiplicities'");
  if (!doc["group"].is_string()) throw ModelError("'group' must be a string");
  const GroupKind group = parse_group(doc["group"].get<std::string>());
  const auto& mult = doc["multiplicities"];
  if (!mult.is_object()) throw ModelError("'multiplicities' must be an object");
  Multiplicities m;
  for (const auto& [key, value] : mult.items()) {
    int twice = 0;
    auto res = std::from_chars(key.data(), key.data() + key.size(), twice);
    if (res.ec != std::errc{} || res.ptr != key.data() + key.size())
      throw ModelError("multiplicity key '" + key + "' is not a doubled-charge integer");
    if (!value.is_number_integer()) throw ModelError("multiplicity of '" + key + "' must be an integer");
    m[DoubledCharge{twice}] = value.get<int>();
  }
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ModelError("'name' must be a string");
    name = doc["name"].get<std::string>();
  }
  return {group, std::move(m), std::move(name)};
}

ChargeModel load_model_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_model_config(ss.str());
}

std::string model_config_json(const ChargeModel& model) {
  nlohmann::ordered_json doc;
  doc["group"] = std::string(to_string(model.group()));
  nlohmann::ordered_json mult = nlohmann::ordered_json::object();
  for (const auto& [q, a] : model.multiplicities()) mult[std::to_string(q.twice)] = a;
  doc["multiplicities"] = mult;
  if (!model.name().empty()) doc["name"] = model.name();
  return doc.dump();
}

SystemGeometry::SystemGeometry(int n_total_, int n_a_) : n_total(n_total_), n_a(n_a_) {
  if (n_total < 1) throw DomainError("number of bodies must be >= 1");
  if (n_a < 0 || n_a > n_total) throw DomainError("subsystem size must lie in [0, N]");
}

}  // namespace chargent
