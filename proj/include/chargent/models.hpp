#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace chargent {

enum class GroupKind { U1, SU2 };

std::string_view to_string(GroupKind g);
GroupKind parse_group(std::string_view text);

/// A charge stored as twice its physical value, so half-integers stay exact.
struct DoubledCharge {
  int twice = 0;

  constexpr double physical() const { return 0.5 * twice; }

  friend constexpr auto operator<=>(DoubledCharge, DoubledCharge) = default;
  friend constexpr DoubledCharge operator+(DoubledCharge a, DoubledCharge b) {
    return {a.twice + b.twice};
  }
  friend constexpr DoubledCharge operator-(DoubledCharge a, DoubledCharge b) {
    return {a.twice - b.twice};
  }
  friend constexpr DoubledCharge operator-(DoubledCharge a) { return {-a.twice}; }
};

/// "3/2", "-1/2", "2".
std::string to_string(DoubledCharge q);

/// Parses "3/2", "-1", "0.5", "1.5". Throws DomainError unless the value is
/// an exact multiple of 1/2.
DoubledCharge parse_charge(std::string_view text);

using Multiplicities = std::map<DoubledCharge, int>;

/// Group plus the multiplicity a_q of every local irrep q. For U(1) the
/// keys are local charges m; for SU(2) they are local spins j.
class ChargeModel {
 public:
  /// Validates the invariants; throws ModelError.
  ChargeModel(GroupKind group, Multiplicities multiplicities, std::string name = {});

  GroupKind group() const { return group_; }
  const Multiplicities& multiplicities() const { return multiplicities_; }
  const std::string& name() const { return name_; }

  /// Local Hilbert space dimension k.
  int local_dimension() const { return k_; }

  friend bool operator==(const ChargeModel&, const ChargeModel&) = default;

 private:
  GroupKind group_;
  Multiplicities multiplicities_;
  std::string name_;
  int k_ = 0;
};

/// Coefficients of the local character in the weight basis: for U(1) the
/// multiplicities themselves, for SU(2) each spin j contributes a_j to
/// every weight m = -j, ..., j.
std::map<DoubledCharge, std::int64_t> weight_multiplicities(const ChargeModel& model);

std::span<const std::string_view> catalog_names();

/// One of u1-qubit, u1-qutrit, u1-2bosons, su2-qubit, su2-qutrit,
/// su2-trimer. Throws ModelError listing the valid names otherwise.
ChargeModel catalog(std::string_view name);

/// Model config document:
///   {"group": "U1"|"SU2", "multiplicities": {"<2q>": a, ...}, "name": "..."}
/// Keys are doubled charges written as decimal integers.
ChargeModel parse_model_config(std::string_view json_text);
ChargeModel load_model_file(const std::filesystem::path& path);
std::string model_config_json(const ChargeModel& model);

using Fraction = boost::rational<std::int64_t>;

struct SystemGeometry {
  int n_total = 0;
  int n_a = 0;

  /// Throws DomainError unless n_total >= 1 and 0 <= n_a <= n_total.
  SystemGeometry(int n_total, int n_a);

  int n_b() const { return n_total - n_a; }
  Fraction fraction() const { return {n_a, n_total}; }
  bool is_half() const { return 2 * n_a == n_total; }
  bool is_degenerate() const { return n_a == 0 || n_a == n_total; }
};

}  // namespace chargent
