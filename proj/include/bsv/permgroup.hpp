#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bsv/jsonx.hpp"

namespace bsv {

/// Permutation of {0,...,degree-1} as an image array. Products act left to
/// right: (a*b)(x) = b(a(x)), matching x^(ab) = (x^a)^b.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);
  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return img_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return img_[x]; }
  const std::vector<std::uint32_t>& images() const { return img_; }

  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  /// g^{-1} * (*this) * g
  Permutation conjugated_by(const Permutation& g) const;
  bool is_identity() const;
  long order() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  std::string cycle_string() const;

private:
  std::vector<std::uint32_t> img_;
};

struct PermHash {
  std::size_t operator()(const Permutation& p) const;
};

/// Finite or co-finite set of primes; expresses both pi and pi'.
struct PrimeSet {
  std::vector<long> primes;   // sorted, distinct
  bool complement = false;    // true: all primes except `primes`
  bool contains(long p) const;
  std::string str() const;
};

/// Is every prime divisor of n in pi?
bool is_pi_number(const Int& n, const PrimeSet& pi);

struct ConjugacyClass {
  std::uint32_t rep;                    // element index
  std::vector<std::uint32_t> members;   // sorted element indices
  long element_order = 0;
  std::string name;                     // order + letter, e.g. "2a"
};

/// Brute-force engine over an explicitly enumerated permutation group.
/// The element set, once generated, is immutable; indices into it are the
/// working currency of every oracle.
class PermGroup {
public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup load(const std::string& path);
  static PermGroup from_json(const JsonValue& v);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  /// BFS closure of the generators; throws resource_error above the cap.
  void generate_elements(std::size_t cap = 1000000);
  bool generated() const { return !elements_.empty(); }
  const std::vector<Permutation>& elements() const;
  Int order() const;
  std::uint32_t element_index(const Permutation& p) const;  // throws if absent
  bool contains(const Permutation& p) const;

  const std::vector<ConjugacyClass>& conjugacy_classes() const;
  std::size_t class_of(std::uint32_t element_index) const;
  std::size_t class_by_name(const std::string& name) const;

  /// Smallest subgroup containing every G-conjugate of x (element indices,
  /// sorted).
  std::vector<std::uint32_t> normal_closure(const Permutation& x) const;

  /// Subgroup generated by the given elements (indices, sorted).
  std::vector<std::uint32_t> subgroup_generated(const std::vector<std::uint32_t>& gens) const;

  /// O_pi(G) via the normal-closure membership criterion: the subgroup
  /// generated by every x whose normal closure is a pi-group.
  std::vector<std::uint32_t> pi_radical(const PrimeSet& pi) const;

  /// Every normal subgroup, as sorted index sets, found by closing the
  /// lattice of class-closure joins. Exhaustive for any enumerated group.
  std::vector<std::vector<std::uint32_t>> all_normal_subgroups() const;

  /// |{(u,v) in a^G x b^G : uv = c_rep}| counted directly.
  Int brute_force_cmc(std::size_t class_a, std::size_t class_b, const Permutation& c_rep) const;

  struct BetaOptions {
    int k_max = 4;
    std::size_t tuple_cap = 1000000;
    std::uint64_t seed = 1;
  };
  struct BetaResult {
    std::optional<int> k;   // minimal k found
    bool exhaustive = true; // false when any undecided level was sampled
  };
  /// Minimal number of L-conjugates of x generating a subgroup of order
  /// divisible by r. L is a normal subgroup given by element indices.
  BetaResult beta_oracle(const std::vector<std::uint32_t>& L, const Permutation& x, long r,
                         const BetaOptions& opt) const;
  BetaResult beta_oracle(const std::vector<std::uint32_t>& L, const Permutation& x, long r) const {
    return beta_oracle(L, x, r, BetaOptions{});
  }

  enum class SearchMode { Exhaustive, Sampled };
  struct BsClassRow {
    std::string class_name;
    bool in_radical = false;
    bool witness_found = false;
    bool inconclusive = false;
    std::vector<std::uint32_t> witness;  // element indices of a non-pi tuple
  };
  struct BsReport {
    std::vector<BsClassRow> rows;
    bool passed = false;
    bool inconclusive = false;
    std::uint64_t seed = 0;
    std::size_t m = 0;
  };
  /// Checks, class by class, that some m-tuple generates a non-pi-subgroup
  /// exactly when the class is not inside O_pi(G).
  BsReport bs_width_check(const PrimeSet& pi, std::size_t m, SearchMode mode,
                          std::size_t tuple_cap = 1000000, std::uint64_t seed = 1) const;

  Int subgroup_order(const std::vector<std::uint32_t>& subgroup) const {
    return Int(static_cast<unsigned long>(subgroup.size()));
  }

private:
  std::size_t degree_;
  std::vector<Permutation> gens_;
  std::string name_;

  std::vector<Permutation> elements_;
  std::vector<std::uint32_t> inverse_;  // index of inverse
  mutable std::vector<ConjugacyClass> classes_;
  mutable std::vector<std::uint32_t> class_of_;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;  // index of elements[a]*elements[b]
  mutable std::vector<std::vector<std::uint32_t>> gen_right_;  // cayley columns for generators
  std::uint32_t index_of(const Permutation& p) const;
  void require_generated() const;
  void build_classes() const;

  struct Lookup;
  std::unique_ptr<Lookup> lookup_;

public:
  ~PermGroup();
  PermGroup(PermGroup&&) noexcept;
  PermGroup& operator=(PermGroup&&) noexcept;
};

/// Parses "2,3,5" or "2,3'" (trailing apostrophe = complement).
PrimeSet parse_prime_set(const std::string& text);

}  // namespace bsv
