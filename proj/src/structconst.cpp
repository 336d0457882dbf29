#include "bsv/structconst.hpp"

namespace bsv {

namespace {

Int finish(const CharacterTable& t, std::size_t a, std::size_t b, std::size_t c,
           const Cyclotomic& chi_sum) {
  Cyclotomic total = chi_sum;
  total *= Cyclotomic(make_rat(t.class_size(a) * t.class_size(b), t.order()));
  auto m = total.as_integer();
  if (!m || *m < 0) {
    throw table_corruption_error("m(" + t.class_info(a).name + "," + t.class_info(b).name + "," +
                                 t.class_info(c).name + ") is not a nonnegative integer: " +
                                 total.str());
  }
  return *m;
}

}  // namespace

Int class_mult_coeff(const CharacterTable& t, std::size_t a, std::size_t b, std::size_t c) {
  const std::size_t k = t.num_classes();
  if (a >= k || b >= k || c >= k) throw precondition_error("class index out of range");
  Cyclotomic acc;
  for (std::size_t r = 0; r < t.irreducibles().size(); ++r) {
    Cyclotomic term = t.value(r, a) * t.value(r, b) * t.value(r, c).conj();
    auto deg = t.value(r, 0).as_integer();
    if (!deg || *deg <= 0) throw table_corruption_error("bad character degree");
    term *= Cyclotomic(make_rat(Int(1), *deg));
    acc += term;
  }
  return finish(t, a, b, c, acc);
}

std::vector<Int> coeff_sweep(const CharacterTable& t, std::size_t a, std::size_t b) {
  const std::size_t k = t.num_classes();
  if (a >= k || b >= k) throw precondition_error("class index out of range");
  // chi(a)chi(b)/chi(1) is shared by every c in the sweep.
  std::vector<Cyclotomic> front(t.irreducibles().size());
  for (std::size_t r = 0; r < t.irreducibles().size(); ++r) {
    auto deg = t.value(r, 0).as_integer();
    if (!deg || *deg <= 0) throw table_corruption_error("bad character degree");
    front[r] = t.value(r, a) * t.value(r, b);
    front[r] *= Cyclotomic(make_rat(Int(1), *deg));
  }
  std::vector<Int> out;
  out.reserve(k);
  for (std::size_t c = 0; c < k; ++c) {
    Cyclotomic acc;
    for (std::size_t r = 0; r < front.size(); ++r) acc += front[r] * t.value(r, c).conj();
    out.push_back(finish(t, a, b, c, acc));
  }
  return out;
}

}  // namespace bsv
