#pragma once

#include "wfh/core.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wfh {

struct Irrep {
  std::string name;
  int dim = 0;
  std::vector<Rational> values;  // one per class, canonical class order
};

// A finite group given by its multiplication table. Classes are ordered by
// their minimal element index, so class 0 is the identity class.
class GroupData {
 public:
  // Validates the group law and (when given) the character table.
  static GroupData from_table(std::string name, const std::vector<std::vector<int>>& mult,
                              std::optional<std::vector<Irrep>> irreps);

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int class_count() const { return static_cast<int>(classes_.size()); }
  int mul(int a, int b) const { return mult_[a * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int class_of(int g) const { return class_of_[g]; }
  const std::vector<int>& class_elements(int c) const { return classes_[c]; }
  int class_size(int c) const { return static_cast<int>(classes_[c].size()); }
  int representative(int c) const { return classes_[c].front(); }
  // A_{i,j}^k.
  std::int64_t a_coeff(int i, int j, int k) const {
    int l = class_count();
    return a_coeffs_[(i * l + j) * l + k];
  }
  const std::vector<std::vector<int>>& mult_rows() const { return mult_rows_; }

  bool has_char_table() const { return irreps_.has_value(); }
  // Throws UnsupportedCharacterField when the group carries no rational table.
  const std::vector<Irrep>& irreps() const;
  int irrep_count() const { return has_char_table() ? static_cast<int>(irreps_->size()) : 0; }

 private:
  std::string name_;
  int order_ = 0;
  std::vector<int> mult_;
  std::vector<std::vector<int>> mult_rows_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  std::vector<std::int64_t> a_coeffs_;
  std::optional<std::vector<Irrep>> irreps_;
};

GroupData load_group(const nlohmann::json& doc);
GroupData load_group_file(const std::string& path);
// trivial, C2, V4 (alias klein), S3, S4, C3. C3 has no character table.
GroupData builtin_group(const std::string& name);
std::vector<std::string> builtin_group_names();
// Built-in name or path to a JSON group file.
GroupData resolve_group(const std::string& spec);
nlohmann::json group_to_json(const GroupData& g);

// Flattened l*l*l array, index (i*l + j)*l + k.
std::vector<std::int64_t> class_coefficients(const GroupData& g);
Rational central_character(const GroupData& g, int chi, int c);
// Integer-valued central character; throws UnsupportedCharacterField otherwise.
BigInt central_character_int(const GroupData& g, int chi, int c);
std::vector<std::vector<int>> p_blocks(const GroupData& g, int p);

}  // namespace wfh
