#include "bsv/chartable.hpp"

#include <fstream>
#include <sstream>

namespace bsv {

CharacterTable::CharacterTable(std::string group_name, Int order, std::vector<ClassInfo> classes,
                               std::vector<std::vector<Cyclotomic>> irreducibles)
    : group_name_(std::move(group_name)),
      order_(std::move(order)),
      classes_(std::move(classes)),
      irreducibles_(std::move(irreducibles)) {
  if (order_ <= 0) throw parse_error("group order must be positive");
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    const auto& c = classes_[i];
    if (c.element_order < 1) throw parse_error("class " + c.name + ": bad element order");
    if (c.centralizer_order <= 0) throw parse_error("class " + c.name + ": bad centralizer order");
    if (!index_.emplace(c.name, i).second)
      throw parse_error("duplicate class name: " + c.name);
  }
  for (std::size_t r = 0; r < irreducibles_.size(); ++r) {
    if (irreducibles_[r].size() != classes_.size()) {
      throw parse_error("character row " + std::to_string(r) + " has " +
                        std::to_string(irreducibles_[r].size()) + " values for " +
                        std::to_string(classes_.size()) + " classes");
    }
  }
}

Int CharacterTable::class_size(std::size_t i) const {
  const Int& c = classes_.at(i).centralizer_order;
  if (order_ % c != 0)
    throw table_corruption_error("centralizer order of " + classes_[i].name +
                                 " does not divide the group order");
  return order_ / c;
}

std::size_t CharacterTable::class_by_name(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end())
    throw unknown_label_error("no class named '" + name + "' in " + group_name_);
  return it->second;
}

bool CharacterTable::has_outer_classes() const {
  for (const auto& c : classes_)
    if (!c.in_socle) return true;
  return false;
}

Int CharacterTable::socle_order() const {
  Int total = 0;
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].in_socle) total += class_size(i);
  return total;
}

CharacterTable table_from_json(const JsonValue& v) {
  const std::string& name = v.at("group").as_string();
  Int order = v.at("order").as_int();
  std::vector<ClassInfo> classes;
  for (const auto& cj : v.at("classes").as_array()) {
    ClassInfo ci;
    ci.name = cj.at("name").as_string();
    ci.element_order = cj.at("order").as_long();
    ci.centralizer_order = cj.at("centralizer").as_int();
    ci.in_socle = cj.at("in_socle").as_bool();
    classes.push_back(std::move(ci));
  }
  std::vector<std::vector<Cyclotomic>> irr;
  for (const auto& row : v.at("irreducibles").as_array()) {
    std::vector<Cyclotomic> r;
    for (const auto& val : row.as_array()) r.push_back(Cyclotomic::from_json(val));
    irr.push_back(std::move(r));
  }
  return CharacterTable(name, std::move(order), std::move(classes), std::move(irr));
}

CharacterTable load_table(const std::string& path) {
  return table_from_json(JsonValue::parse_file(path));
}

JsonValue table_to_json(const CharacterTable& t) {
  JsonValue::Object obj;
  obj.emplace("group", JsonValue(t.group_name()));
  obj.emplace("order", JsonValue(t.order()));
  JsonValue::Array classes;
  for (const auto& c : t.classes()) {
    JsonValue::Object cj;
    cj.emplace("name", JsonValue(c.name));
    cj.emplace("order", JsonValue(Int(c.element_order)));
    cj.emplace("centralizer", JsonValue(c.centralizer_order));
    cj.emplace("in_socle", JsonValue(c.in_socle));
    classes.emplace_back(std::move(cj));
  }
  obj.emplace("classes", JsonValue(std::move(classes)));
  JsonValue::Array irr;
  for (const auto& row : t.irreducibles()) {
    JsonValue::Array r;
    for (const auto& val : row) r.push_back(val.to_json());
    irr.emplace_back(std::move(r));
  }
  obj.emplace("irreducibles", JsonValue(std::move(irr)));
  return JsonValue(std::move(obj));
}

void save_table(const CharacterTable& t, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot write file: " + path);
  out << write_json(table_to_json(t), 1) << '\n';
}

bool ValidationReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

ValidationReport validate(const CharacterTable& t, bool stop_on_first_failure) {
  ValidationReport rep;
  auto add = [&](std::string name, bool ok, std::string detail = "") {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
    return ok;
  };
  auto done = [&]() { return stop_on_first_failure && !rep.checks.back().passed; };

  const std::size_t k = t.num_classes();

  add("square", t.irreducibles().size() == k,
      t.irreducibles().size() == k
          ? ""
          : std::to_string(t.irreducibles().size()) + " irreducibles for " + std::to_string(k) +
                " classes");
  if (done()) return rep;

  {
    bool ok = !t.classes().empty() && t.classes()[0].name == "1a" &&
              t.classes()[0].element_order == 1 && t.classes()[0].centralizer_order == t.order();
    add("identity_class", ok, ok ? "" : "class 1a must come first with centralizer |G|");
    if (done()) return rep;
  }

  {
    bool ok = true;
    std::string bad;
    for (std::size_t i = 0; i < k; ++i) {
      if (t.order() % t.class_info(i).centralizer_order != 0) {
        ok = false;
        bad = t.class_info(i).name;
        break;
      }
    }
    add("centralizer_divides", ok, ok ? "" : "class " + bad);
    if (done()) return rep;
    if (!ok) return rep;  // sizes below would not be well defined
  }

  {
    bool ok = true;
    std::string bad;
    for (std::size_t i = 0; i < k; ++i) {
      if (t.order() % Int(t.class_info(i).element_order) != 0) {
        ok = false;
        bad = t.class_info(i).name;
        break;
      }
    }
    add("element_order_divides", ok, ok ? "" : "class " + bad);
    if (done()) return rep;
  }

  {
    Int total = 0;
    for (std::size_t i = 0; i < k; ++i) total += t.class_size(i);
    bool ok = total == t.order();
    add("class_size_sum", ok, ok ? "" : "sum " + total.get_str());
    if (done()) return rep;
  }

  if (t.irreducibles().size() == k) {
    bool ok = true;
    std::string bad;
    Int degsum = 0;
    for (std::size_t r = 0; r < k; ++r) {
      auto deg = t.value(r, 0).as_integer();
      if (!deg || *deg <= 0) {
        ok = false;
        bad = "row " + std::to_string(r);
        break;
      }
      degsum += (*deg) * (*deg);
    }
    add("degrees_positive", ok, ok ? "" : bad);
    if (done()) return rep;
    if (ok) {
      bool sq = degsum == t.order();
      add("degree_square_sum", sq, sq ? "" : "sum " + degsum.get_str());
      if (done()) return rep;
    }

    // Row orthogonality: sum_c |c^G| chi(c) conj(psi(c)) = |G| delta.
    std::vector<Int> sizes(k);
    for (std::size_t i = 0; i < k; ++i) sizes[i] = t.class_size(i);
    {
      bool rows_ok = true;
      std::string bad_pair;
      for (std::size_t r = 0; r < k && rows_ok; ++r) {
        for (std::size_t s2 = r; s2 < k && rows_ok; ++s2) {
          Cyclotomic acc;
          for (std::size_t c = 0; c < k; ++c) {
            Cyclotomic term = t.value(r, c) * t.value(s2, c).conj();
            term *= Cyclotomic(Rat(sizes[c]));
            acc += term;
          }
          Cyclotomic expect = (r == s2) ? Cyclotomic(t.order()) : Cyclotomic();
          if (acc != expect) {
            rows_ok = false;
            bad_pair = "rows " + std::to_string(r) + "," + std::to_string(s2);
          }
        }
      }
      add("row_orthogonality", rows_ok, bad_pair);
      if (done()) return rep;
    }

    // Column orthogonality: sum_chi chi(a) conj(chi(b)) = delta |C(a)|.
    {
      bool cols_ok = true;
      std::string bad_pair;
      for (std::size_t a = 0; a < k && cols_ok; ++a) {
        for (std::size_t b = a; b < k && cols_ok; ++b) {
          Cyclotomic acc;
          for (std::size_t r = 0; r < k; ++r) acc += t.value(r, a) * t.value(r, b).conj();
          Cyclotomic expect =
              (a == b) ? Cyclotomic(t.class_info(a).centralizer_order) : Cyclotomic();
          if (acc != expect) {
            cols_ok = false;
            bad_pair = "classes " + t.class_info(a).name + "," + t.class_info(b).name;
          }
        }
      }
      add("column_orthogonality", cols_ok, bad_pair);
      if (done()) return rep;
    }
  }

  return rep;
}

}  // namespace bsv
