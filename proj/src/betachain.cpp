#include "bsv/betachain.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace bsv {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Int pow2(std::size_t t) {
  Int b = 1;
  return b << t;
}

}  // namespace

std::optional<BetaCertificate> beta_upper_bound(const CharacterTable& t, std::size_t x, long r,
                                                std::size_t max_depth) {
  if (!is_prime(r)) throw precondition_error("r must be prime");
  if (t.order() % r != 0)
    throw precondition_error("prime " + std::to_string(r) + " does not divide |" +
                             t.group_name() + "|");
  const std::size_t k = t.num_classes();
  if (x >= k) throw precondition_error("class index out of range");

  auto terminal = [&](std::size_t c) { return t.class_info(c).element_order % r == 0; };

  BetaCertificate cert;
  cert.prime = r;
  cert.start_class = x;
  if (terminal(x)) {
    cert.terminal_class = x;
    cert.bound = 1;
    return cert;
  }

  // Edge cache: sweep m(a,a,*) lazily per expanded class.
  std::vector<std::optional<std::vector<Int>>> sweeps(k);
  auto edges = [&](std::size_t a) -> const std::vector<Int>& {
    if (!sweeps[a]) sweeps[a] = coeff_sweep(t, a, a);
    return *sweeps[a];
  };

  // Iterative deepening in table order: the first chain found at the
  // minimal depth carries the lexicographically smallest via sequence.
  std::vector<std::size_t> path;
  std::function<bool(std::size_t, std::size_t)> dfs = [&](std::size_t cur, std::size_t depth) {
    const auto& sweep = edges(cur);
    if (depth == 1) {
      for (std::size_t via = 0; via < k; ++via) {
        if (sweep[via] > 0 && terminal(via)) {
          path.push_back(via);
          return true;
        }
      }
      return false;
    }
    for (std::size_t via = 0; via < k; ++via) {
      if (sweep[via] == 0 || terminal(via)) continue;
      path.push_back(via);
      if (dfs(via, depth - 1)) return true;
      path.pop_back();
    }
    return false;
  };

  for (std::size_t depth = 1; depth <= max_depth; ++depth) {
    path.clear();
    if (dfs(x, depth)) {
      std::size_t from = x;
      for (std::size_t via : path) {
        cert.steps.push_back({from, via, edges(from)[via]});
        from = via;
      }
      cert.terminal_class = path.back();
      cert.bound = pow2(cert.steps.size());
      return cert;
    }
  }
  return std::nullopt;
}

bool verify_certificate(const CharacterTable& t, const BetaCertificate& cert) {
  const std::size_t k = t.num_classes();
  if (cert.start_class >= k || cert.terminal_class >= k) return false;
  if (!is_prime(cert.prime)) return false;
  if (cert.bound != pow2(cert.steps.size())) return false;
  if (t.class_info(cert.terminal_class).element_order % cert.prime != 0) return false;
  if (cert.steps.empty())
    return cert.terminal_class == cert.start_class &&
           t.class_info(cert.start_class).element_order % cert.prime == 0;
  std::size_t from = cert.start_class;
  for (const auto& step : cert.steps) {
    if (step.from != from || step.via >= k) return false;
    if (step.coefficient <= 0) return false;
    if (class_mult_coeff(t, step.from, step.from, step.via) != step.coefficient) return false;
    from = step.via;
  }
  return cert.steps.back().via == cert.terminal_class;
}

AlphaBoundData AlphaBoundData::from_json(const JsonValue& v) {
  AlphaBoundData data;
  for (const auto& [key, val] : v.as_object()) {
    const auto& pair = val.as_array();
    if (pair.size() != 2) throw parse_error("alpha entry must be [lo,hi]: " + key);
    AlphaInterval iv;
    iv.lo = static_cast<int>(pair[0].as_long());
    iv.hi = static_cast<int>(pair[1].as_long());
    if (iv.lo > iv.hi || iv.lo < 1) throw parse_error("bad alpha interval for " + key);
    if (key.find('/') == std::string::npos) throw parse_error("alpha key must be Group/class");
    data.entries_.emplace(key, iv);
  }
  return data;
}

AlphaBoundData AlphaBoundData::load(const std::string& path) {
  return from_json(JsonValue::parse_file(path));
}

bool is_sporadic_group(const std::string& name) {
  static const char* names[] = {"M11", "M12", "M22", "M23", "M24", "J1",  "J2",  "J3",  "J4",
                                "Co1", "Co2", "Co3", "Fi22", "Fi23", "Fi24'", "HS", "McL", "He",
                                "Ru",  "Suz", "O'N", "HN",  "Ly",  "Th",  "B",   "M"};
  for (const char* n : names)
    if (name == n) return true;
  return false;
}

std::string socle_name(const std::string& group_name) {
  auto dot = group_name.find('.');
  return dot == std::string::npos ? group_name : group_name.substr(0, dot);
}

AlphaInterval AlphaBoundData::bound(const std::string& group,
                                    const std::string& class_name) const {
  if (!is_sporadic_group(group))
    throw precondition_error("no alpha data for group " + group);
  std::size_t pos = 0;
  while (pos < class_name.size() && std::isdigit(static_cast<unsigned char>(class_name[pos])))
    ++pos;
  if (pos == 0) throw precondition_error("bad class label: " + class_name);
  long order = std::stol(class_name.substr(0, pos));
  if (order < 2) throw precondition_error("alpha bound needs a nonidentity class");
  auto it = entries_.find(group + "/" + class_name);
  if (it != entries_.end()) return it->second;
  if (group == "M") return order == 2 ? AlphaInterval{3, 4} : AlphaInterval{2, 3};
  return order == 2 ? AlphaInterval{3, 3} : AlphaInterval{2, 2};
}

TheoremReport check_sporadic_theorem(const CharacterTable& t, const AlphaBoundData& alpha, long r,
                                     long s) {
  if (!is_prime(r) || r % 2 == 0) throw precondition_error("r must be an odd prime");
  if (!is_prime(s)) throw precondition_error("s must be prime");
  Int socle = t.socle_order();
  if (socle % r != 0)
    throw precondition_error("r = " + std::to_string(r) + " does not divide the socle order");
  const std::string socle_group = socle_name(t.group_name());
  if (!is_sporadic_group(socle_group))
    throw precondition_error("no alpha data for group " + socle_group);

  const long target = (r == 3) ? 3 : r - 1;
  TheoremReport report;
  report.r = r;
  report.s = s;
  report.all_pass = true;

  const std::size_t k = t.num_classes();
  for (std::size_t x = 0; x < k; ++x) {
    const auto& info = t.class_info(x);
    if (!is_prime(info.element_order)) continue;

    TheoremCaseRow row;
    row.class_name = info.name;
    row.inner = info.in_socle;

    if (row.inner) {
      AlphaInterval iv = alpha.bound(socle_group, info.name);
      if (iv.hi <= target) {
        row.beta_ok = true;
        row.beta_rule = "alpha";
        row.beta_detail = "beta <= alpha <= " + std::to_string(iv.hi) + " <= " +
                          std::to_string(target);
      } else {
        auto cert = beta_upper_bound(t, x, r);
        if (cert && cert->bound <= target) {
          row.beta_ok = true;
          row.beta_rule = "certificate";
          std::string chain = info.name;
          for (const auto& st : cert->steps) chain += "->" + t.class_info(st.via).name;
          row.beta_detail = chain + " bound " + cert->bound.get_str() + " <= " +
                            std::to_string(target);
        } else {
          row.beta_detail = cert ? "certificate bound " + cert->bound.get_str() + " > " +
                                       std::to_string(target)
                                 : "no certificate found";
        }
      }
      row.alpha_ok = iv.hi <= s - 1;
      row.alpha_detail = "alpha(" + info.name + ") <= " + std::to_string(iv.hi) +
                         (row.alpha_ok ? " <= " : " > ") + std::to_string(s - 1);
    } else {
      // outer case: x must be an involution (|Out| <= 2 for sporadics)
      if (info.element_order != 2) {
        row.beta_detail = "outer class of odd prime order cannot occur";
        row.alpha_detail = row.beta_detail;
        report.rows.push_back(row);
        report.all_pass = false;
        continue;
      }
      auto cert = beta_upper_bound(t, x, r);
      if (cert && cert->bound <= target) {
        row.beta_ok = true;
        row.beta_rule = "certificate";
        std::string chain = info.name;
        for (const auto& st : cert->steps) chain += "->" + t.class_info(st.via).name;
        row.beta_detail = chain + " bound " + cert->bound.get_str() + " <= " +
                          std::to_string(target);
      }

      // Odd-prime-order classes y with m(x,x,y) > 0: x inverts a
      // representative of y, so alpha(x) <= 2*alpha(y) and
      // beta_r(x) <= 2*beta_r(y) <= 2*alpha(y).
      auto sweep = coeff_sweep(t, x, x);
      int best_double = -1;
      std::string best_y;
      for (std::size_t y = 0; y < k; ++y) {
        if (sweep[y] == 0) continue;
        long oy = t.class_info(y).element_order;
        if (oy % 2 == 0 || !is_prime(oy)) continue;
        if (!t.class_info(y).in_socle) continue;
        AlphaInterval iv = alpha.bound(socle_group, t.class_info(y).name);
        if (best_double < 0 || 2 * iv.hi < best_double) {
          best_double = 2 * iv.hi;
          best_y = t.class_info(y).name;
        }
      }
      if (!row.beta_ok && best_double > 0 && best_double <= target) {
        row.beta_ok = true;
        row.beta_rule = "doubling";
        row.beta_detail = "beta <= 2*alpha(" + best_y + ") = " + std::to_string(best_double) +
                          " <= " + std::to_string(target);
      } else if (!row.beta_ok && row.beta_detail.empty()) {
        row.beta_detail = cert ? "certificate bound " + cert->bound.get_str() + " > " +
                                     std::to_string(target)
                               : "no certificate and no doubling rule";
      }
      row.alpha_ok = best_double > 0 && best_double <= s - 1;
      row.alpha_detail = best_double > 0
                             ? "alpha(" + info.name + ") <= 2*alpha(" + best_y + ") = " +
                                   std::to_string(best_double) +
                                   (row.alpha_ok ? " <= " : " > ") + std::to_string(s - 1)
                             : "no inverted odd-prime-order class found";
    }

    row.pass = row.beta_ok && row.alpha_ok;
    if (!row.pass) report.all_pass = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace bsv
