#include "bsv/cyclotomic.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace bsv {

namespace {

std::atomic<long> g_conductor_limit{1000000};

std::vector<long> prime_factors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// Dense integer coefficients of Phi_n, low degree first, obtained by
// dividing x^n - 1 by Phi_d for every proper divisor d (bottom-up cache).
const std::vector<Int>& cyclotomic_poly(long n) {
  static std::mutex mu;
  static std::unordered_map<long, std::vector<Int>> cache;
  std::lock_guard<std::mutex> lock(mu);

  std::vector<long> todo;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0 && !cache.count(d)) todo.push_back(d);

  for (long m : todo) {
    std::vector<Int> poly(static_cast<std::size_t>(m) + 1, Int(0));
    poly.front() = -1;
    poly.back() = 1;
    for (long d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      const auto& phi_d = cache.at(d);
      std::size_t deg_num = poly.size() - 1;
      std::size_t deg_den = phi_d.size() - 1;
      std::vector<Int> quot(deg_num - deg_den + 1, Int(0));
      for (std::size_t i = deg_num + 1; i-- > deg_den;) {
        if (poly[i] == 0) continue;
        Int c = poly[i];  // phi_d is monic
        quot[i - deg_den] = c;
        for (std::size_t j = 0; j <= deg_den; ++j) poly[i - deg_den + j] -= c * phi_d[j];
      }
      poly = std::move(quot);
    }
    cache.emplace(m, std::move(poly));
  }
  return cache.at(n);
}

long inverse_mod(long a, long m) {
  long t = 0, newt = 1, r = m, newr = ((a % m) + m) % m;
  while (newr != 0) {
    long q = r / newr;
    long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  return ((t % m) + m) % m;
}

}  // namespace

long euler_phi(long n) {
  long result = n;
  for (long p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

long cyclotomic_conductor_limit() { return g_conductor_limit.load(); }
void set_cyclotomic_conductor_limit(long limit) { g_conductor_limit.store(limit); }

namespace {

// Folds exponents into [0,n) and reduces modulo Phi_n; drops zeros.
void reduce_mod_phi(long n, Cyclotomic::TermMap& terms) {
  Cyclotomic::TermMap folded;
  for (auto& [k, c] : terms) {
    if (c == 0) continue;
    long e = ((k % n) + n) % n;
    auto [it, inserted] = folded.emplace(e, c);
    if (!inserted) it->second += c;
  }
  long deg = euler_phi(n);
  bool high = std::any_of(folded.begin(), folded.end(),
                          [deg](const auto& kv) { return kv.first >= deg; });
  if (!high) {
    terms.clear();
    for (auto& [k, c] : folded)
      if (c != 0) terms.emplace(k, c);
    return;
  }
  const auto& phi = cyclotomic_poly(n);
  std::vector<Rat> dense(static_cast<std::size_t>(n), Rat(0));
  for (auto& [k, c] : folded) dense[static_cast<std::size_t>(k)] = c;
  for (std::size_t i = dense.size(); i-- > static_cast<std::size_t>(deg);) {
    if (dense[i] == 0) continue;
    Rat c = dense[i];
    dense[i] = 0;
    std::size_t base = i - static_cast<std::size_t>(deg);
    for (std::size_t j = 0; j < static_cast<std::size_t>(deg); ++j)
      dense[base + j] -= c * Rat(phi[j]);
  }
  terms.clear();
  for (long k = 0; k < deg; ++k)
    if (dense[static_cast<std::size_t>(k)] != 0) terms.emplace(k, dense[static_cast<std::size_t>(k)]);
}

// If the value (reduced mod Phi_n) lies in Q(zeta_{n/p}), rewrites it with
// conductor n/p and returns true. Leaves terms untouched otherwise.
bool try_descend(long n, long p, Cyclotomic::TermMap& terms) {
  long np = n / p;
  if (np % p == 0) {
    // p^2 | n: fixed under Gal(Q(zeta_n)/Q(zeta_{n/p})) iff the reduced
    // support lives on exponents divisible by p.
    for (auto& [k, c] : terms)
      if (k % p != 0) return false;
    Cyclotomic::TermMap down;
    for (auto& [k, c] : terms) down.emplace(k / p, c);
    terms = std::move(down);
    return true;
  }
  // p || n: averaging projection onto Q(zeta_{n/p}). For a reduced term
  // c*zeta^k the projection is c*zeta^k when p | k and otherwise
  // -c/(p-1) * zeta^{k0} with k0 = 0 mod p, k0 = k mod n/p.
  long inv_p = (np > 1) ? inverse_mod(p, np) : 0;
  Cyclotomic::TermMap projected;
  for (auto& [k, c] : terms) {
    long e;
    Rat v;
    if (k % p == 0) {
      e = k;
      v = c;
    } else {
      e = (np > 1) ? (p * (((k % np) * inv_p) % np)) % n : 0;
      v = -c / Rat(p - 1);
    }
    auto [it, inserted] = projected.emplace(e, v);
    if (!inserted) it->second += v;
  }
  Cyclotomic::TermMap reduced = projected;
  reduce_mod_phi(n, reduced);
  if (reduced != terms) return false;
  Cyclotomic::TermMap down;
  for (auto& [k, c] : projected) {
    if (c == 0) continue;
    auto [it, inserted] = down.emplace(k / p, c);
    if (!inserted) it->second += c;
  }
  terms = std::move(down);
  return true;
}

}  // namespace

Cyclotomic::Cyclotomic(long v) {
  if (v != 0) terms_[0] = Rat(v);
}

Cyclotomic::Cyclotomic(const Int& v) {
  if (v != 0) terms_[0] = Rat(v);
}

Cyclotomic::Cyclotomic(const Rat& v) {
  if (v != 0) terms_[0] = v;
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
  if (n < 1) throw precondition_error("root_of_unity: conductor must be positive");
  TermMap t;
  t[((k % n) + n) % n] = Rat(1);
  return from_terms(n, std::move(t));
}

Cyclotomic Cyclotomic::from_terms(long conductor, TermMap terms) {
  if (conductor < 1) throw precondition_error("conductor must be positive");
  if (conductor > cyclotomic_conductor_limit())
    throw resource_error("conductor " + std::to_string(conductor) + " exceeds limit");
  Cyclotomic c;
  c.conductor_ = conductor;
  c.terms_ = std::move(terms);
  c.canonicalize();
  return c;
}

std::optional<Rat> Cyclotomic::as_rational() const {
  if (conductor_ != 1) return std::nullopt;
  if (terms_.empty()) return Rat(0);
  return terms_.begin()->second;
}

std::optional<Int> Cyclotomic::as_integer() const {
  auto q = as_rational();
  if (!q) return std::nullopt;
  if (q->get_den() != 1) return std::nullopt;
  return Int(q->get_num());
}

void Cyclotomic::canonicalize() {
  reduce_mod_phi(conductor_, terms_);
  while (conductor_ > 1) {
    if (terms_.empty()) {
      conductor_ = 1;
      return;
    }
    bool descended = false;
    for (long p : prime_factors(conductor_)) {
      if (try_descend(conductor_, p, terms_)) {
        conductor_ /= p;
        reduce_mod_phi(conductor_, terms_);
        descended = true;
        break;
      }
    }
    if (!descended) break;
  }
  if (terms_.empty()) conductor_ = 1;
}

Cyclotomic Cyclotomic::conj() const {
  if (conductor_ == 1) return *this;
  TermMap t;
  for (auto& [k, c] : terms_) t[(conductor_ - k) % conductor_] = c;
  return from_terms(conductor_, std::move(t));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (conductor_ == 1 && o.conductor_ == 1) {
    Rat sum = (terms_.empty() ? Rat(0) : terms_.begin()->second) +
              (o.terms_.empty() ? Rat(0) : o.terms_.begin()->second);
    terms_.clear();
    if (sum != 0) terms_[0] = sum;
    return *this;
  }
  long m = std::lcm(conductor_, o.conductor_);
  if (m > cyclotomic_conductor_limit())
    throw resource_error("conductor " + std::to_string(m) + " exceeds limit");
  long fa = m / conductor_;
  long fb = m / o.conductor_;
  TermMap merged;
  for (auto& [k, c] : terms_) merged.emplace(k * fa, c);
  for (auto& [k, c] : o.terms_) {
    auto [it, inserted] = merged.emplace(k * fb, c);
    if (!inserted) it->second += c;
  }
  *this = from_terms(m, std::move(merged));
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (is_zero() || o.is_zero()) {
    *this = Cyclotomic();
    return *this;
  }
  if (conductor_ == 1) {
    Rat s = terms_.begin()->second;
    Cyclotomic r = o;
    for (auto& [k, c] : r.terms_) c *= s;
    *this = std::move(r);
    return *this;
  }
  if (o.conductor_ == 1) {
    Rat s = o.terms_.begin()->second;
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  long m = std::lcm(conductor_, o.conductor_);
  if (m > cyclotomic_conductor_limit())
    throw resource_error("conductor " + std::to_string(m) + " exceeds limit");
  long fa = m / conductor_;
  long fb = m / o.conductor_;
  TermMap prod;
  for (auto& [ka, ca] : terms_) {
    for (auto& [kb, cb] : o.terms_) {
      long e = (ka * fa + kb * fb) % m;
      Rat v = ca * cb;
      auto [it, inserted] = prod.emplace(e, v);
      if (!inserted) it->second += v;
    }
  }
  *this = from_terms(m, std::move(prod));
  return *this;
}

std::string Cyclotomic::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    Rat a = (!first && c < 0) ? Rat(-c) : c;
    first = false;
    if (k == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "z" << conductor_;
      if (k != 1) os << "^" << k;
    }
  }
  return os.str();
}

JsonValue Cyclotomic::to_json() const {
  if (conductor_ == 1) {
    Rat q = terms_.empty() ? Rat(0) : terms_.begin()->second;
    if (q.get_den() == 1) return JsonValue(Int(q.get_num()));
    return JsonValue(q.get_num().get_str() + "/" + q.get_den().get_str());
  }
  JsonValue::Array ts;
  for (auto& [k, c] : terms_) {
    JsonValue::Array triple;
    triple.emplace_back(Int(k));
    triple.emplace_back(Int(c.get_num()));
    triple.emplace_back(Int(c.get_den()));
    ts.emplace_back(std::move(triple));
  }
  JsonValue::Object obj;
  obj.emplace("n", JsonValue(Int(conductor_)));
  obj.emplace("terms", JsonValue(std::move(ts)));
  return JsonValue(std::move(obj));
}

Cyclotomic Cyclotomic::from_json(const JsonValue& v) {
  if (v.is_integer()) return Cyclotomic(v.as_int());
  if (v.is_string()) {
    const std::string& s = v.as_string();
    auto slash = s.find('/');
    if (slash == std::string::npos) throw parse_error("bad rational literal: " + s);
    Int num, den;
    if (mpz_set_str(num.get_mpz_t(), s.substr(0, slash).c_str(), 10) != 0 ||
        mpz_set_str(den.get_mpz_t(), s.substr(slash + 1).c_str(), 10) != 0)
      throw parse_error("bad rational literal: " + s);
    return Cyclotomic(make_rat(num, den));
  }
  if (v.is_object()) {
    long n = v.at("n").as_long();
    const auto& ts = v.at("terms").as_array();
    if (ts.empty()) throw parse_error("cyclotomic terms must be nonempty");
    TermMap terms;
    long prev = -1;
    for (const auto& t : ts) {
      const auto& triple = t.as_array();
      if (triple.size() != 3) throw parse_error("cyclotomic term must be [exponent,num,den]");
      long e = triple[0].as_long();
      if (e <= prev) throw parse_error("cyclotomic exponents must be strictly ascending");
      prev = e;
      terms[e] = make_rat(triple[1].as_int(), triple[2].as_int());
    }
    return from_terms(n, std::move(terms));
  }
  throw parse_error("bad cyclotomic value");
}

}  // namespace bsv
