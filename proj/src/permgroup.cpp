#include "bsv/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace bsv {

Permutation::Permutation(std::vector<std::uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto v : img_) {
    if (v >= img_.size() || seen[v]) throw precondition_error("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<std::uint32_t>(i);
  Permutation p;
  p.img_ = std::move(img);
  return p;
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (degree() != o.degree()) throw precondition_error("degree mismatch");
  Permutation r;
  r.img_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) r.img_[i] = o.img_[img_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) r.img_[img_[i]] = static_cast<std::uint32_t>(i);
  return r;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  return g.inverse() * (*this) * g;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

long Permutation::order() const {
  long result = 1;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    std::uint32_t j = static_cast<std::uint32_t>(i);
    while (!seen[j]) {
      seen[j] = true;
      j = img_[j];
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(img_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = true;
      continue;
    }
    os << '(';
    std::uint32_t j = static_cast<std::uint32_t>(i);
    bool first = true;
    while (!seen[j]) {
      if (!first) os << ' ';
      first = false;
      os << j;
      seen[j] = true;
      j = img_[j];
    }
    os << ')';
    any = true;
  }
  if (!any) os << "()";
  return os.str();
}

std::size_t PermHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ull;
  for (auto v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

bool PrimeSet::contains(long p) const {
  bool listed = std::binary_search(primes.begin(), primes.end(), p);
  return complement ? !listed : listed;
}

std::string PrimeSet::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i) os << ',';
    os << primes[i];
  }
  os << '}';
  if (complement) os << '\'';
  return os.str();
}

bool is_pi_number(const Int& n, const PrimeSet& pi) {
  Int m = n;
  if (m < 0) m = -m;
  if (m == 0) throw precondition_error("is_pi_number: zero");
  for (long p = 2; Int(p) * p <= m; ++p) {
    if (m % p == 0) {
      if (!pi.contains(p)) return false;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) {
    if (!m.fits_slong_p()) throw resource_error("order too large to factor");
    if (!pi.contains(m.get_si())) return false;
  }
  return true;
}

PrimeSet parse_prime_set(const std::string& text) {
  PrimeSet ps;
  std::string body = text;
  if (!body.empty() && body.back() == '\'') {
    ps.complement = true;
    body.pop_back();
  }
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    long p = std::stol(tok);
    if (p < 2) throw precondition_error("not a prime: " + tok);
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0) throw precondition_error("not a prime: " + tok);
    ps.primes.push_back(p);
  }
  std::sort(ps.primes.begin(), ps.primes.end());
  ps.primes.erase(std::unique(ps.primes.begin(), ps.primes.end()), ps.primes.end());
  if (ps.primes.empty() && !ps.complement)
    throw precondition_error("empty prime set");
  return ps;
}

struct PermGroup::Lookup {
  std::unordered_map<Permutation, std::uint32_t, PermHash> index;
};

PermGroup::~PermGroup() = default;
PermGroup::PermGroup(PermGroup&&) noexcept = default;
PermGroup& PermGroup::operator=(PermGroup&&) noexcept = default;

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)), lookup_(std::make_unique<Lookup>()) {
  for (const auto& g : gens_)
    if (g.degree() != degree_) throw precondition_error("generator degree mismatch");
}

PermGroup PermGroup::from_json(const JsonValue& v) {
  std::size_t degree = static_cast<std::size_t>(v.at("degree").as_long());
  std::vector<Permutation> gens;
  for (const auto& gj : v.at("generators").as_array()) {
    std::vector<std::uint32_t> img;
    for (const auto& x : gj.as_array()) img.push_back(static_cast<std::uint32_t>(x.as_long()));
    if (img.size() != degree) throw parse_error("generator image length != degree");
    gens.emplace_back(std::move(img));
  }
  PermGroup g(degree, std::move(gens));
  if (v.has("name")) g.set_name(v.at("name").as_string());
  return g;
}

PermGroup PermGroup::load(const std::string& path) {
  return from_json(JsonValue::parse_file(path));
}

void PermGroup::generate_elements(std::size_t cap) {
  if (!elements_.empty()) return;
  if (cap < 1) throw precondition_error("cap must be >= 1");
  elements_.push_back(Permutation::identity(degree_));
  lookup_->index.emplace(elements_[0], 0);
  std::deque<std::uint32_t> frontier{0};
  while (!frontier.empty()) {
    std::uint32_t cur = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens_) {
      Permutation next = elements_[cur] * g;
      auto it = lookup_->index.find(next);
      if (it == lookup_->index.end()) {
        if (elements_.size() >= cap)
          throw resource_error("element cap " + std::to_string(cap) + " exceeded");
        std::uint32_t idx = static_cast<std::uint32_t>(elements_.size());
        lookup_->index.emplace(next, idx);
        elements_.push_back(std::move(next));
        frontier.push_back(idx);
      }
    }
  }
  inverse_.resize(elements_.size());
  for (std::uint32_t i = 0; i < elements_.size(); ++i)
    inverse_[i] = lookup_->index.at(elements_[i].inverse());
}

void PermGroup::require_generated() const {
  if (elements_.empty()) throw precondition_error("elements not generated");
}

const std::vector<Permutation>& PermGroup::elements() const {
  require_generated();
  return elements_;
}

Int PermGroup::order() const {
  require_generated();
  return Int(static_cast<unsigned long>(elements_.size()));
}

std::uint32_t PermGroup::index_of(const Permutation& p) const {
  require_generated();
  auto it = lookup_->index.find(p);
  if (it == lookup_->index.end()) throw precondition_error("element not in group");
  return it->second;
}

std::uint32_t PermGroup::element_index(const Permutation& p) const { return index_of(p); }

bool PermGroup::contains(const Permutation& p) const {
  require_generated();
  return p.degree() == degree_ && lookup_->index.count(p) > 0;
}

std::uint32_t PermGroup::mul(std::uint32_t a, std::uint32_t b) const {
  return lookup_->index.at(elements_[a] * elements_[b]);
}

void PermGroup::build_classes() const {
  require_generated();
  if (!classes_.empty()) return;
  class_of_.assign(elements_.size(), UINT32_MAX);
  std::vector<ConjugacyClass> found;
  for (std::uint32_t i = 0; i < elements_.size(); ++i) {
    if (class_of_[i] != UINT32_MAX) continue;
    // conjugation orbit of element i
    std::vector<std::uint32_t> members{i};
    class_of_[i] = static_cast<std::uint32_t>(found.size());
    std::deque<std::uint32_t> frontier{i};
    while (!frontier.empty()) {
      std::uint32_t cur = frontier.front();
      frontier.pop_front();
      for (const auto& g : gens_) {
        std::uint32_t next = lookup_->index.at(elements_[cur].conjugated_by(g));
        if (class_of_[next] == UINT32_MAX) {
          class_of_[next] = class_of_[i];
          members.push_back(next);
          frontier.push_back(next);
        }
      }
    }
    std::sort(members.begin(), members.end());
    ConjugacyClass cls;
    cls.rep = members.front();
    cls.members = std::move(members);
    cls.element_order = elements_[i].order();
    found.push_back(std::move(cls));
  }
  // Order classes by (element order, class size, minimal element lex).
  std::vector<std::size_t> perm(found.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const auto& A = found[a];
    const auto& B = found[b];
    if (A.element_order != B.element_order) return A.element_order < B.element_order;
    if (A.members.size() != B.members.size()) return A.members.size() < B.members.size();
    return elements_[A.rep] < elements_[B.rep];
  });
  classes_.clear();
  for (std::size_t rank = 0; rank < perm.size(); ++rank) classes_.push_back(found[perm[rank]]);
  // rep = lexicographically minimal member
  for (auto& cls : classes_) {
    std::uint32_t best = cls.members.front();
    for (auto m : cls.members)
      if (elements_[m] < elements_[best]) best = m;
    cls.rep = best;
  }
  // names: order + letter within equal element order
  std::map<long, char> next_letter;
  for (auto& cls : classes_) {
    char& letter = next_letter.try_emplace(cls.element_order, 'a').first->second;
    cls.name = std::to_string(cls.element_order) + letter;
    ++letter;
  }
  for (std::size_t ci = 0; ci < classes_.size(); ++ci)
    for (auto m : classes_[ci].members) class_of_[m] = static_cast<std::uint32_t>(ci);
}

const std::vector<ConjugacyClass>& PermGroup::conjugacy_classes() const {
  build_classes();
  return classes_;
}

std::size_t PermGroup::class_of(std::uint32_t element_index) const {
  build_classes();
  return class_of_.at(element_index);
}

std::size_t PermGroup::class_by_name(const std::string& name) const {
  build_classes();
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].name == name) return i;
  throw unknown_label_error("no class named '" + name + "'");
}

std::vector<std::uint32_t> PermGroup::subgroup_generated(
    const std::vector<std::uint32_t>& gens) const {
  require_generated();
  std::vector<bool> in(elements_.size(), false);
  std::vector<std::uint32_t> members;
  auto push = [&](std::uint32_t x) {
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
      return true;
    }
    return false;
  };
  push(0);  // identity has index 0 by construction
  std::deque<std::uint32_t> frontier{0};
  // BFS closure under right multiplication by the given elements.
  std::vector<std::uint32_t> gs;
  for (auto g : gens)
    if (g < elements_.size()) gs.push_back(g);
  while (!frontier.empty()) {
    std::uint32_t cur = frontier.front();
    frontier.pop_front();
    for (auto g : gs) {
      std::uint32_t next = mul(cur, g);
      if (push(next)) frontier.push_back(next);
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::uint32_t> PermGroup::normal_closure(const Permutation& x) const {
  build_classes();
  std::size_t cls = class_of(index_of(x));
  return subgroup_generated(classes_[cls].members);
}

std::vector<std::uint32_t> PermGroup::pi_radical(const PrimeSet& pi) const {
  build_classes();
  std::vector<std::uint32_t> good;
  for (const auto& cls : classes_) {
    auto closure = subgroup_generated(cls.members);
    if (is_pi_number(Int(static_cast<unsigned long>(closure.size())), pi)) {
      good.insert(good.end(), cls.members.begin(), cls.members.end());
    }
  }
  auto radical = subgroup_generated(good);
  // sanity: normal and a pi-group
  if (!is_pi_number(Int(static_cast<unsigned long>(radical.size())), pi))
    throw std::logic_error("pi_radical produced a non-pi subgroup");
  std::vector<bool> in(elements_.size(), false);
  for (auto m : radical) in[m] = true;
  for (auto m : radical)
    for (const auto& g : gens_)
      if (!in[index_of(elements_[m].conjugated_by(g))])
        throw std::logic_error("pi_radical produced a non-normal subgroup");
  return radical;
}

std::vector<std::vector<std::uint32_t>> PermGroup::all_normal_subgroups() const {
  build_classes();
  std::set<std::vector<std::uint32_t>> seen;
  std::deque<std::vector<std::uint32_t>> queue;
  std::vector<std::uint32_t> triv{0};
  seen.insert(triv);
  queue.push_back(triv);
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (const auto& cls : classes_) {
      // join with the normal closure of one more class
      if (std::binary_search(cur.begin(), cur.end(), cls.rep)) continue;
      auto gens = cur;
      gens.insert(gens.end(), cls.members.begin(), cls.members.end());
      auto join = subgroup_generated(gens);
      if (seen.insert(join).second) queue.push_back(join);
    }
  }
  return std::vector<std::vector<std::uint32_t>>(seen.begin(), seen.end());
}

Int PermGroup::brute_force_cmc(std::size_t class_a, std::size_t class_b,
                               const Permutation& c_rep) const {
  build_classes();
  if (class_a >= classes_.size() || class_b >= classes_.size())
    throw precondition_error("class index out of range");
  std::uint32_t c_idx = index_of(c_rep);
  unsigned long count = 0;
  for (auto u : classes_[class_a].members) {
    std::uint32_t v = mul(inverse_[u], c_idx);
    if (class_of_[v] == class_b) ++count;
  }
  return Int(count);
}

PermGroup::BetaResult PermGroup::beta_oracle(const std::vector<std::uint32_t>& L,
                                             const Permutation& x, long r,
                                             const BetaOptions& opt) const {
  require_generated();
  if (r < 2 || L.size() % static_cast<unsigned long>(r) != 0)
    throw precondition_error("r does not divide |L|");

  std::uint32_t xi = index_of(x);

  // L-conjugates of x (L is an explicit element set, so sweep it directly).
  std::vector<std::uint32_t> cls;
  {
    std::vector<bool> mark(elements_.size(), false);
    for (auto l : L) {
      std::uint32_t conj = mul(mul(inverse_[l], xi), l);
      if (!mark[conj]) {
        mark[conj] = true;
        cls.push_back(conj);
      }
    }
    std::sort(cls.begin(), cls.end());
  }

  BetaResult result;
  if (x.order() % r == 0) {
    result.k = 1;
    return result;
  }

  std::mt19937_64 rng(opt.seed);
  auto tuple_has_r = [&](const std::vector<std::uint32_t>& tuple) {
    auto sub = subgroup_generated(tuple);
    return Int(static_cast<unsigned long>(sub.size())) % r == 0;
  };

  for (int k = 2; k <= opt.k_max; ++k) {
    // first conjugate pinned to x itself (tuples may be conjugated into
    // this form without changing the generated subgroup's order)
    double combos = 1;
    for (int i = 1; i < k; ++i) combos *= static_cast<double>(cls.size());
    bool exhaustive_level = combos <= static_cast<double>(opt.tuple_cap);
    if (exhaustive_level) {
      std::vector<std::uint32_t> tuple(static_cast<std::size_t>(k), xi);
      std::vector<std::size_t> odo(static_cast<std::size_t>(k - 1), 0);
      while (true) {
        for (int i = 0; i < k - 1; ++i) tuple[static_cast<std::size_t>(i) + 1] = cls[odo[static_cast<std::size_t>(i)]];
        if (tuple_has_r(tuple)) {
          result.k = k;
          return result;
        }
        int pos = k - 2;
        while (pos >= 0 && ++odo[static_cast<std::size_t>(pos)] == cls.size()) {
          odo[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
      }
    } else {
      result.exhaustive = false;
      std::uniform_int_distribution<std::size_t> pick(0, cls.size() - 1);
      std::vector<std::uint32_t> tuple(static_cast<std::size_t>(k), xi);
      for (std::size_t trial = 0; trial < opt.tuple_cap; ++trial) {
        for (int i = 1; i < k; ++i) tuple[static_cast<std::size_t>(i)] = cls[pick(rng)];
        if (tuple_has_r(tuple)) {
          result.k = k;
          return result;
        }
      }
    }
  }
  return result;
}

PermGroup::BsReport PermGroup::bs_width_check(const PrimeSet& pi, std::size_t m, SearchMode mode,
                                              std::size_t tuple_cap, std::uint64_t seed) const {
  build_classes();
  if (m < 1) throw precondition_error("m must be >= 1");
  BsReport report;
  report.seed = seed;
  report.m = m;
  auto radical = pi_radical(pi);
  std::vector<bool> in_rad(elements_.size(), false);
  for (auto e : radical) in_rad[e] = true;

  std::mt19937_64 rng(seed);
  bool all_agree = true;
  bool any_inconclusive = false;

  for (const auto& cls : classes_) {
    BsClassRow row;
    row.class_name = cls.name;
    row.in_radical = in_rad[cls.rep];

    if (mode == SearchMode::Exhaustive) {
      double combos = 1;
      for (std::size_t i = 1; i < m; ++i) combos *= static_cast<double>(cls.members.size());
      if (combos > static_cast<double>(tuple_cap))
        throw resource_error("combinatorial blowup: class " + cls.name + " needs " +
                             std::to_string(combos) + " tuples (cap " +
                             std::to_string(tuple_cap) + ")");
      std::vector<std::uint32_t> tuple(m, cls.rep);
      std::vector<std::size_t> odo(m > 1 ? m - 1 : 0, 0);
      while (true) {
        for (std::size_t i = 0; i + 1 < m; ++i) tuple[i + 1] = cls.members[odo[i]];
        auto sub = subgroup_generated(tuple);
        if (!is_pi_number(Int(static_cast<unsigned long>(sub.size())), pi)) {
          row.witness_found = true;
          row.witness = tuple;
          break;
        }
        if (m == 1) break;
        std::size_t pos = m - 2;
        bool carry;
        do {
          carry = (++odo[pos] == cls.members.size());
          if (carry) odo[pos] = 0;
        } while (carry && pos-- > 0);
        if (carry) break;
      }
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, cls.members.size() - 1);
      std::vector<std::uint32_t> tuple(m, cls.rep);
      for (std::size_t trial = 0; trial < tuple_cap && !row.witness_found; ++trial) {
        for (std::size_t i = 1; i < m; ++i) tuple[i] = cls.members[pick(rng)];
        auto sub = subgroup_generated(tuple);
        if (!is_pi_number(Int(static_cast<unsigned long>(sub.size())), pi)) {
          row.witness_found = true;
          row.witness = tuple;
        }
      }
      if (!row.witness_found && !row.in_radical) {
        row.inconclusive = true;
        any_inconclusive = true;
      }
    }

    if (row.witness_found == row.in_radical && !row.inconclusive) all_agree = false;
    report.rows.push_back(std::move(row));
  }
  report.inconclusive = any_inconclusive;
  report.passed = all_agree && !any_inconclusive;
  return report;
}

}  // namespace bsv
