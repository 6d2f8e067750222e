#include "eterdom/bounds.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "eterdom/errors.hpp"

namespace eterdom {

namespace {

long long isqrt(long long n) {
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

int rational_sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

Rational ceil_rational(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);  // positive
  BigInt quotient = num / den;  // truncates toward zero
  if (quotient * den < num) ++quotient;
  return Rational(quotient);
}

long long ceil_half(long long v) { return (v + 1) / 2; }

}  // namespace

std::string to_string(const Rational& q) { return q.str(); }

Surd::Surd(Rational a, Rational b, long long radicand)
    : a_(std::move(a)), b_(std::move(b)), radicand_(radicand) {
  if (radicand_ < 0) throw DomainError("negative radicand");
  const long long r = isqrt(radicand_);
  if (r * r == radicand_ || b_ == 0) {
    a_ += b_ * r;
    b_ = 0;
    radicand_ = 0;
  }
}

long long Surd::pick_radicand(const Surd& o) const {
  if (b_ == 0) return o.radicand_;
  if (o.b_ == 0) return radicand_;
  if (radicand_ != o.radicand_) throw DomainError("mixing square roots of different numbers");
  return radicand_;
}

int Surd::sign() const {
  const int sa = rational_sign(a_);
  const int sb = rational_sign(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with b^2 N
  const int cmp = rational_sign(a_ * a_ - b_ * b_ * radicand_);
  return sa > 0 ? cmp : -cmp;
}

Surd Surd::operator+(const Surd& o) const { return Surd(a_ + o.a_, b_ + o.b_, pick_radicand(o)); }
Surd Surd::operator-(const Surd& o) const { return Surd(a_ - o.a_, b_ - o.b_, pick_radicand(o)); }
Surd Surd::operator-() const { return Surd(-a_, -b_, radicand_); }

Surd Surd::operator*(const Surd& o) const {
  const long long n = pick_radicand(o);
  return Surd(a_ * o.a_ + b_ * o.b_ * n, a_ * o.b_ + b_ * o.a_, n);
}

Surd Surd::operator/(const Surd& o) const {
  if (o.sign() == 0) throw DomainError("division by zero in Q(sqrt(n))");
  const Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * o.radicand_;
  const Surd conj(o.a_ / norm, -o.b_ / norm, o.radicand_);
  return *this * conj;
}

std::string Surd::str() const {
  if (b_ == 0) return to_string(a_);
  std::string out = a_ == 0 ? std::string{} : to_string(a_);
  const std::string b = to_string(b_);
  if (!out.empty() && b_ > 0) out += "+";
  return out + b + "*sqrt(" + std::to_string(radicand_) + ")";
}

double Surd::approx() const {
  return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(static_cast<double>(radicand_));
}

long long gamma_strong(long long n, long long m) {
  if (n < 1 || m < 1) throw DomainError("grid dimensions must be positive");
  return ((m + 2) / 3) * ((n + 2) / 3);
}

std::string to_string(CeilingMode mode) { return mode == CeilingMode::Exact ? "exact" : "real"; }

CeilingMode parse_ceiling_mode(const std::string& text) {
  if (text == "exact" || text == "Exact") return CeilingMode::Exact;
  if (text == "real" || text == "Real") return CeilingMode::Real;
  throw DomainError("ceiling mode must be 'exact' or 'real', got '" + text + "'");
}

BoundParams make_params(long long n, long long m, CeilingMode mode) {
  if (n < 9) throw DomainError("the comparison needs n >= 9, got " + std::to_string(n));
  if (m < 1) throw DomainError("m must be positive");
  BoundParams p;
  p.n = n;
  p.m = m;
  p.mode = mode;
  const long long s = isqrt(n);
  p.k = s - (((s - 2) % 3) + 3) % 3;
  p.alpha1 = Rational(p.k - 2, 3) + 1;
  return p;
}

namespace {

// The alpha of the eq1 family as an element of Q(sqrt(n)).
Surd eq1_alpha(const BoundParams& p) {
  if (p.mode == CeilingMode::Exact) return Surd(p.alpha1);
  return (Surd::root(p.n) - Surd(2)) / Surd(3);
}

// Second factor of eq1: ceil((n-2)(3a-3)/9) + 2n + 6a - 6 (no ceiling in Real mode).
Surd eq1_bracket(const BoundParams& p, const Surd& a) {
  const Surd n(p.n);
  Surd frac = (n - Surd(2)) * (Surd(3) * a - Surd(3)) / Surd(9);
  if (p.mode == CeilingMode::Exact) frac = Surd(ceil_rational(frac.rational_part()));
  return frac + Surd(2) * n + Surd(6) * a - Surd(6);
}

Surd eq1_denominator(const BoundParams& p, const Surd& a) {
  const Surd d = Surd(3) * a - Surd(1);
  if (d.sign() == 0)
    throw DomainError("eq1 is unbounded at n = " + std::to_string(p.n) + " in real mode");
  return d;
}

}  // namespace

Surd eq1_bound(const BoundParams& p) {
  const Surd a = eq1_alpha(p);
  const Surd m(p.m), n(p.n);
  const Surd first = (m - Surd(2) * a) / eq1_denominator(p, a) * eq1_bracket(p, a);
  return first + Surd(2) * a * (m + n - Surd(2) * a);
}

Rational eq2_bound(long long n, long long m) {
  if (n < 9 || m < 9) throw DomainError("eq2 needs n, m >= 9");
  return Rational((m - 5) * (n - 5), 7) + Rational(8 * (m + n - 11), 7) + 3 * ceil_half(m) +
         3 * ceil_half(n) - 9;
}

std::string to_string(Winner w) { return w == Winner::Ours ? "Ours" : "Eq1"; }

IntRange parse_range(const std::string& text) {
  IntRange r;
  std::istringstream in(text);
  char c1 = 0, c2 = 0;
  if (!(in >> r.lo >> c1 >> r.hi) || c1 != ':') throw DomainError("range must be lo:hi[:step], got '" + text + "'");
  if (in >> c2) {
    if (c2 != ':' || !(in >> r.step)) throw DomainError("range must be lo:hi[:step], got '" + text + "'");
  }
  std::string rest;
  if (in >> rest) throw DomainError("trailing characters in range '" + text + "'");
  if (r.step < 1 || r.hi < r.lo) throw DomainError("empty or malformed range '" + text + "'");
  return r;
}

ComparisonCell compare_cell(long long n, long long m, CeilingMode mode) {
  ComparisonCell cell;
  cell.n = n;
  cell.m = m;
  cell.eq2 = eq2_bound(n, m);
  const BoundParams p = make_params(n, m, mode);
  if (mode == CeilingMode::Real && eq1_alpha(p) * Surd(3) == Surd(1)) {
    cell.winner = Winner::Ours;
    return cell;
  }
  cell.eq1 = eq1_bound(p);
  cell.winner = Surd(cell.eq2) < *cell.eq1 ? Winner::Ours : Winner::Eq1;
  return cell;
}

std::vector<ComparisonCell> scan_region(IntRange n_range, IntRange m_range, CeilingMode mode) {
  std::vector<ComparisonCell> out;
  for (long long n = n_range.lo; n <= n_range.hi; n += n_range.step)
    for (long long m = m_range.lo; m <= m_range.hi; m += m_range.step)
      out.push_back(compare_cell(n, m, mode));
  return out;
}

void write_csv(std::ostream& out, const std::vector<ComparisonCell>& cells) {
  out << "n,m,eq1,eq2,winner\n";
  for (const ComparisonCell& c : cells)
    out << c.n << ',' << c.m << ',' << (c.eq1 ? c.eq1->str() : std::string("inf")) << ','
        << to_string(c.eq2) << ',' << to_string(c.winner) << '\n';
}

namespace {

Rational eq2_slope(long long n) { return Rational(n + 3, 7) + Rational(3, 2); }

// Coefficient of m in eq1, without range checks on n.
Surd eq1_slope_raw(const BoundParams& p) {
  const Surd a = eq1_alpha(p);
  return eq1_bracket(p, a) / eq1_denominator(p, a) + Surd(2) * a;
}

// (eq1 slope - eq2 slope)(sqrt(n) - 3) in Real mode; equals P(n) + Q(n) sqrt(n)
// with P, Q linear in n.
Surd scaled_slope_gap(long long n) {
  BoundParams p;
  p.n = n;
  p.mode = CeilingMode::Real;
  return (eq1_slope_raw(p) - Surd(eq2_slope(n))) * (Surd::root(n) - Surd(3));
}

}  // namespace

SlopeComparison compare_slopes(long long n, CeilingMode mode) {
  SlopeComparison out;
  out.n = n;
  out.eq2_slope = eq2_slope(n);
  const BoundParams p = make_params(n, 1, mode);
  if (mode == CeilingMode::Real && eq1_alpha(p) * Surd(3) == Surd(1)) {
    out.ours_smaller = true;
    return out;
  }
  out.eq1_slope = eq1_slope_raw(p);
  out.ours_smaller = Surd(out.eq2_slope) < *out.eq1_slope;
  return out;
}

long long asymptotic_threshold() {
  // Recover P and Q from two non-square sample points.
  const Surd g2 = scaled_slope_gap(2), g3 = scaled_slope_gap(3);
  const Rational p1 = g3.rational_part() - g2.rational_part();
  const Rational p0 = g2.rational_part() - 2 * p1;
  const Rational q1 = g3.surd_part() - g2.surd_part();
  const Rational q0 = g2.surd_part() - 2 * q1;
  for (long long n : {5LL, 10LL, 1000LL}) {
    const Surd g = scaled_slope_gap(n);
    if (g.rational_part() != p0 + p1 * n || g.surd_part() != q0 + q1 * n)
      throw StrategyError("slope gap is not of the expected form");
  }
  if (!(q1 < 0 && p1 > 0)) throw StrategyError("unexpected asymptotic signs in slope gap");

  // Beyond the roots of P, Q and of P^2 - Q^2 n (Cauchy bound), the gap is negative.
  const Rational a3 = -q1 * q1;
  const Rational a2 = p1 * p1 - 2 * q1 * q0;
  const Rational a1 = 2 * p1 * p0 - q0 * q0;
  const Rational a0 = p0 * p0;
  Rational bound = 1;
  for (const Rational& c : {a2, a1, a0}) bound = std::max(bound, Rational(1 + abs(c / a3)));
  bound = std::max({bound, Rational(-q0 / q1), Rational(-p0 / p1)});
  const long long limit = ceil_rational(bound).convert_to<long long>() + 1;

  long long last = 9;  // eq1 slope is unbounded at n = 9
  for (long long n = 10; n <= limit; ++n)
    if ((Surd(p0 + p1 * n, q0 + q1 * n, n)).sign() > 0) last = n;
  return last;
}

ExactThresholdScan exact_threshold_scan(long long limit) {
  ExactThresholdScan out;
  out.limit = limit;
  out.first_loss = limit + 1;
  for (long long n = 9; n <= limit; ++n) {
    if (compare_slopes(n, CeilingMode::Exact).ours_smaller) {
      out.last_win = n;
      out.first_loss = limit + 1;
    } else if (out.first_loss > limit) {
      out.first_loss = n;
    }
  }
  return out;
}

}  // namespace eterdom
