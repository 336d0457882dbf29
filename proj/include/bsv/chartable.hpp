#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "bsv/cyclotomic.hpp"
#include "bsv/jsonx.hpp"

namespace bsv {

/// One conjugacy class in ATLAS conventions ("2a", "3b", ...).
struct ClassInfo {
  std::string name;
  long element_order = 0;
  Int centralizer_order;
  bool in_socle = true;
};

class CharacterTable {
public:
  CharacterTable(std::string group_name, Int order, std::vector<ClassInfo> classes,
                 std::vector<std::vector<Cyclotomic>> irreducibles);

  const std::string& group_name() const { return group_name_; }
  const Int& order() const { return order_; }
  std::size_t num_classes() const { return classes_.size(); }
  const std::vector<ClassInfo>& classes() const { return classes_; }
  const ClassInfo& class_info(std::size_t i) const { return classes_.at(i); }
  const std::vector<std::vector<Cyclotomic>>& irreducibles() const { return irreducibles_; }
  const Cyclotomic& value(std::size_t chi, std::size_t cls) const {
    return irreducibles_.at(chi).at(cls);
  }

  /// |G| / |C_G(x)|; throws table_corruption_error when not integral.
  Int class_size(std::size_t i) const;

  /// Index of the unique class with the given label; throws unknown_label_error.
  std::size_t class_by_name(const std::string& name) const;

  bool has_outer_classes() const;
  /// Sum of the in_socle class sizes (the order of the socle).
  Int socle_order() const;

private:
  std::string group_name_;
  Int order_;
  std::vector<ClassInfo> classes_;
  std::vector<std::vector<Cyclotomic>> irreducibles_;
  std::unordered_map<std::string, std::size_t> index_;
};

CharacterTable load_table(const std::string& path);
CharacterTable table_from_json(const JsonValue& v);
JsonValue table_to_json(const CharacterTable& t);
void save_table(const CharacterTable& t, const std::string& path);

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // offending indices on failure
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_passed() const;
};

/// Mathematical validation: size/degree sums, divisibility, and the exact
/// row and column orthogonality relations. Leaves the table untouched.
ValidationReport validate(const CharacterTable& t, bool stop_on_first_failure = false);

}  // namespace bsv
