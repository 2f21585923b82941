#include "k3atlas/bivar_poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace k3atlas {

BivarPoly::BivarPoly(std::initializer_list<Term> terms) {
  for (const auto &t : terms) add_term(t.i, t.j, Integer(t.coeff));
}

BivarPoly BivarPoly::constant(Integer c) { return monomial(0, 0, std::move(c)); }

BivarPoly BivarPoly::monomial(unsigned i, unsigned j, Integer c) {
  BivarPoly p;
  p.add_term(i, j, c);
  return p;
}

void BivarPoly::add_term(unsigned i, unsigned j, const Integer &c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

namespace {

class MonomialParser {
 public:
  MonomialParser(std::string_view text, char xname, char yname)
      : text_(text), xname_(xname), yname_(yname) {}

  BivarPoly run() {
    BivarPoly out;
    skip_space();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      out += term(sign);
      first = false;
      skip_space();
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string &what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) +
                                ": " + what);
  }
  Integer number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  BivarPoly term(int sign) {
    Integer coeff = sign;
    unsigned i = 0, j = 0;
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff *= number();
      any = true;
    }
    for (;;) {
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
      }
      const char c = peek();
      if (c != xname_ && c != yname_) break;
      ++pos_;
      unsigned e = 1;
      skip_space();
      if (peek() == '^') {
        ++pos_;
        skip_space();
        e = static_cast<unsigned>(number().get_ui());
      }
      (c == xname_ ? i : j) += e;
      any = true;
    }
    if (!any) fail("expected a monomial");
    return BivarPoly::monomial(i, j, coeff);
  }

  std::string_view text_;
  char xname_, yname_;
  std::size_t pos_ = 0;
};

}  // namespace

BivarPoly BivarPoly::parse(std::string_view text, char xname, char yname) {
  return MonomialParser(text, xname, yname).run();
}

Integer BivarPoly::coeff(unsigned i, unsigned j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Integer(0) : it->second;
}

unsigned BivarPoly::degree_x() const {
  unsigned d = 0;
  for (const auto &[e, c] : terms_) d = std::max(d, e.first);
  return d;
}

unsigned BivarPoly::degree_y() const {
  unsigned d = 0;
  for (const auto &[e, c] : terms_) d = std::max(d, e.second);
  return d;
}

unsigned BivarPoly::total_degree() const {
  unsigned d = 0;
  for (const auto &[e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly out = *this;
  for (auto &[e, c] : out.terms_) c = -c;
  return out;
}

BivarPoly &BivarPoly::operator+=(const BivarPoly &rhs) {
  for (const auto &[e, c] : rhs.terms_) add_term(e.first, e.second, c);
  return *this;
}

BivarPoly &BivarPoly::operator-=(const BivarPoly &rhs) {
  for (const auto &[e, c] : rhs.terms_) add_term(e.first, e.second, Integer(-c));
  return *this;
}

BivarPoly &BivarPoly::operator*=(const BivarPoly &rhs) {
  BivarPoly out;
  for (const auto &[e1, c1] : terms_)
    for (const auto &[e2, c2] : rhs.terms_)
      out.add_term(e1.first + e2.first, e1.second + e2.second, Integer(c1 * c2));
  *this = std::move(out);
  return *this;
}

BivarPoly BivarPoly::pow(unsigned e) const {
  BivarPoly out = constant(1);
  for (unsigned k = 0; k < e; ++k) out *= *this;
  return out;
}

BivarPoly BivarPoly::diff_x() const {
  BivarPoly out;
  for (const auto &[e, c] : terms_)
    if (e.first > 0) out.add_term(e.first - 1, e.second, Integer(c * e.first));
  return out;
}

BivarPoly BivarPoly::diff_y() const {
  BivarPoly out;
  for (const auto &[e, c] : terms_)
    if (e.second > 0) out.add_term(e.first, e.second - 1, Integer(c * e.second));
  return out;
}

std::map<unsigned, Integer> BivarPoly::specialize_x(const Integer &x) const {
  std::map<unsigned, Integer> out;
  for (const auto &[e, c] : terms_) {
    Integer xp;
    mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), e.first);
    out[e.second] += c * xp;
  }
  std::erase_if(out, [](const auto &kv) { return sgn(kv.second) == 0; });
  return out;
}

std::string BivarPoly::to_string(char xname, char yname) const {
  if (terms_.empty()) return "0";
  std::string out;
  // Descending total degree, then descending x-degree.
  std::vector<std::pair<Exponents, Integer>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto &a, const auto &b) {
    const unsigned da = a.first.first + a.first.second;
    const unsigned db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  for (const auto &[e, c] : sorted) {
    const bool neg = sgn(c) < 0;
    const Integer mag = ::abs(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = e.first == 0 && e.second == 0;
    if (mag != 1 || unit) out += mag.get_str();
    auto var = [&](char name, unsigned k) {
      if (k == 0) return;
      out += name;
      if (k > 1) out += "^" + std::to_string(k);
    };
    var(xname, e.first);
    var(yname, e.second);
  }
  return out;
}

Integer eval_uni(const UniPoly &p, const Integer &t) {
  if (p.empty()) return 0;
  Integer r = 0;
  unsigned prev = p.rbegin()->first;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    for (unsigned k = it->first; k < prev; ++k) r *= t;
    r += it->second;
    prev = it->first;
  }
  for (unsigned k = 0; k < prev; ++k) r *= t;
  return r;
}

UniPoly derivative(const UniPoly &p) {
  UniPoly out;
  for (const auto &[k, c] : p)
    if (k > 0) out[k - 1] = c * k;
  return out;
}

namespace {

// Sorted integers c such that every real root of p inside [lo, hi] lies in
// some [c, c + 1].
std::vector<Integer> root_cells(const UniPoly &p, const Integer &lo, const Integer &hi) {
  std::vector<Integer> cells;
  const unsigned deg = p.rbegin()->first;
  if (deg == 0) return cells;
  if (deg == 1) {
    const Rational r(-(p.count(0) ? p.at(0) : Integer(0)), p.at(1));
    Integer c = r.floor();
    if (c + 1 >= lo && c <= hi) cells.push_back(c);
    return cells;
  }
  const std::vector<Integer> crit = root_cells(derivative(p), lo, hi);
  cells = crit;
  auto scan = [&](const Integer &a, const Integer &b) {
    if (a > b) return;
    const int sa = sgn(eval_uni(p, a));
    const int sb = sgn(eval_uni(p, b));
    if (sa == 0) cells.push_back(a);
    if (sb == 0) cells.push_back(b);
    if (sa * sb >= 0) return;
    // p is monotone on [a, b]: bisect to a unit cell.
    Integer l = a, h = b;
    while (h - l > 1) {
      Integer mid = l + (h - l) / 2;
      const int sm = sgn(eval_uni(p, mid));
      if (sm == 0) {
        cells.push_back(mid);
        return;
      }
      (sm == sa ? l : h) = mid;
    }
    cells.push_back(l);
  };
  Integer start = lo;
  for (const Integer &c : crit) {
    scan(start, c < hi ? c : hi);
    start = c + 1 > lo ? Integer(c + 1) : lo;
  }
  scan(start, hi);
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

}  // namespace

std::vector<Integer> integer_roots(const UniPoly &p) {
  if (p.empty()) throw std::invalid_argument("integer_roots of the zero polynomial");
  const Integer &lead = p.rbegin()->second;
  Integer max_coeff = 0;
  for (const auto &[k, c] : p)
    if (k != p.rbegin()->first) max_coeff = std::max(max_coeff, Integer(::abs(c)));
  // Cauchy: every complex root has |t| <= 1 + max|a_i| / |a_n|.
  Integer bound;
  Integer abs_lead = ::abs(lead);
  mpz_cdiv_q(bound.get_mpz_t(), max_coeff.get_mpz_t(), abs_lead.get_mpz_t());
  bound += 1;
  std::vector<Integer> roots;
  for (const Integer &c : root_cells(p, -bound, bound)) {
    if (sgn(eval_uni(p, c)) == 0) roots.push_back(c);
    Integer c1 = c + 1;
    if (sgn(eval_uni(p, c1)) == 0) roots.push_back(c1);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace k3atlas
