#pragma once

// Closed-form guard counts and the comparison between the strip-based
// bound and the boundary-layer bound of the form
//
//   ((m - 2a)/(3a - 1)) (ceil((n-2)(3a-3)/9) + 2n + 6a - 6) + 2a(m + n - 2a),
//   a = (k-2)/3 + 1, k the largest integer <= sqrt(n) with k == 2 (mod 3).
//
// Everything is exact. "Real" mode replaces k by sqrt(n) - 3 and drops the
// ceiling; its values live in Q(sqrt(n)) and are handled as a + b sqrt(n).

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace eterdom {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "p/q", or "p" for integers.
std::string to_string(const Rational& q);

/// a + b sqrt(radicand) over the rationals.
class Surd {
 public:
  Surd(Rational a = 0, Rational b = 0, long long radicand = 0);
  static Surd root(long long radicand) { return Surd(0, 1, radicand); }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  long long radicand() const { return radicand_; }

  /// -1, 0 or 1, decided exactly.
  int sign() const;

  Surd operator+(const Surd& o) const;
  Surd operator-(const Surd& o) const;
  Surd operator-() const;
  Surd operator*(const Surd& o) const;
  /// Throws DomainError on division by zero.
  Surd operator/(const Surd& o) const;

  friend bool operator==(const Surd& x, const Surd& y) { return (x - y).sign() == 0; }
  friend bool operator<(const Surd& x, const Surd& y) { return (x - y).sign() < 0; }

  /// "p/q", or "p/q+r/s*sqrt(N)" when the surd part is non-zero.
  std::string str() const;
  double approx() const;

 private:
  long long pick_radicand(const Surd& o) const;
  Rational a_;
  Rational b_;
  long long radicand_;
};

/// ceil(m/3) ceil(n/3).
long long gamma_strong(long long n, long long m);

enum class CeilingMode { Exact, Real };
std::string to_string(CeilingMode mode);
CeilingMode parse_ceiling_mode(const std::string& text);

struct BoundParams {
  long long n = 0;
  long long m = 0;
  long long k = 0;       // largest integer <= sqrt(n) with k == 2 (mod 3)
  Rational alpha1 = 0;   // (k-2)/3 + 1
  CeilingMode mode = CeilingMode::Exact;
};

/// Throws DomainError for n < 9 or m < 1.
BoundParams make_params(long long n, long long m, CeilingMode mode);

/// Exact mode yields a rational Surd; Real mode a value in Q(sqrt(n)).
/// Real mode is singular at n = 9 (3a - 1 = 0) and throws DomainError there.
Surd eq1_bound(const BoundParams& p);

/// (m-5)(n-5)/7 + 8(m+n-11)/7 + 3 ceil(m/2) + 3 ceil(n/2) - 9.
Rational eq2_bound(long long n, long long m);

enum class Winner { Ours, Eq1 };
std::string to_string(Winner w);

struct ComparisonCell {
  long long n = 0;
  long long m = 0;
  std::optional<Surd> eq1;  // empty where the Real-mode value is unbounded
  Rational eq2 = 0;
  Winner winner = Winner::Ours;  // Ours iff eq2 < eq1
};

struct IntRange {
  long long lo = 0;
  long long hi = 0;  // inclusive
  long long step = 1;
};
/// "lo:hi" or "lo:hi:step".
IntRange parse_range(const std::string& text);

ComparisonCell compare_cell(long long n, long long m, CeilingMode mode);
std::vector<ComparisonCell> scan_region(IntRange n_range, IntRange m_range, CeilingMode mode);
void write_csv(std::ostream& out, const std::vector<ComparisonCell>& cells);

/// Leading coefficients in m of both bounds.
struct SlopeComparison {
  long long n = 0;
  std::optional<Surd> eq1_slope;  // unbounded at n = 9 in Real mode
  Rational eq2_slope = 0;         // (n+3)/7 + 3/2
  bool ours_smaller = false;
};
SlopeComparison compare_slopes(long long n, CeilingMode mode);

/// Largest n with the eq2 slope strictly below the eq1 slope (Real mode),
/// proven for every larger n by a root bound on the squared difference.
long long asymptotic_threshold();

/// Exact-mode counterpart over n in [9, limit]: the last n at which ours
/// still has the smaller slope, and the first n from which it never does
/// again up to limit.
struct ExactThresholdScan {
  long long last_win = 0;
  long long first_loss = 0;
  long long limit = 0;
};
ExactThresholdScan exact_threshold_scan(long long limit);

}  // namespace eterdom
