#include "billiards/quad_scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace billiards {

bool is_valid_radicand(long d) {
  if (d == 0) return true;
  if (d < 2) return false;
  for (long f = 2; f * f <= d; ++f) {
    if (d % (f * f) == 0) return false;
  }
  return true;
}

QuadScalar::QuadScalar(mpq_class a, mpq_class b, int d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (!is_valid_radicand(d)) {
    throw std::invalid_argument("radicand must be 0 or square-free >= 2, got " +
                                std::to_string(d));
  }
  a_.canonicalize();
  b_.canonicalize();
  if (d_ == 0 && sgn(b_) != 0) {
    throw std::invalid_argument("irrational part requires a radicand");
  }
}

QuadScalar QuadScalar::sqrt_of(int d) {
  if (d == 0) return QuadScalar();
  return QuadScalar(mpq_class(0), mpq_class(1), d);
}

int QuadScalar::common_radicand(const QuadScalar& x, const QuadScalar& y) {
  if (x.d_ == y.d_) return x.d_;
  if (sgn(x.b_) == 0) return y.d_;
  if (sgn(y.b_) == 0) return x.d_;
  throw std::domain_error("mixing quadratic fields sqrt(" + std::to_string(x.d_) +
                          ") and sqrt(" + std::to_string(y.d_) + ")");
}

int QuadScalar::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 against b^2 d.
  const mpq_class lhs = a_ * a_;
  const mpq_class rhs = b_ * b_ * d_;
  const int c = cmp(lhs, rhs);
  if (c > 0) return sa;
  if (c < 0) return sb;
  return 0;
}

double QuadScalar::to_double() const {
  double v = a_.get_d();
  if (sgn(b_) != 0) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
  return v;
}

namespace {

std::string rational_text(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') ++i;
  bool slash = false;
  std::size_t digits = 0;
  for (std::size_t k = i; k < text.size(); ++k) {
    const char ch = text[k];
    if (ch == '/') {
      if (slash || digits == 0 || k + 1 == text.size()) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
      }
      slash = true;
      digits = 0;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      ++digits;
    } else {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
  }
  if (digits == 0) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  std::string body(text[0] == '+' ? text.substr(1) : text);
  mpq_class q;
  if (q.set_str(body, 10) != 0) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace

std::string QuadScalar::to_string() const {
  std::string out = rational_text(a_);
  if (sgn(b_) != 0) {
    out += sgn(b_) > 0 ? "+" : "-";
    out += rational_text(abs(b_));
    out += "*sqrt(" + std::to_string(d_) + ")";
  }
  return out;
}

QuadScalar QuadScalar::parse(std::string_view text) {
  const auto root = text.find("sqrt(");
  if (root == std::string_view::npos) return QuadScalar(parse_rational(text));

  if (text.empty() || text.back() != ')') {
    throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
  }
  const std::string_view radicand_text = text.substr(root + 5, text.size() - root - 6);
  long d = 0;
  for (char ch : radicand_text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument("malformed radicand in '" + std::string(text) + "'");
    }
    d = d * 10 + (ch - '0');
    if (d > 1'000'000) throw std::invalid_argument("radicand too large");
  }
  if (radicand_text.empty()) throw std::invalid_argument("empty radicand");

  // Coefficient of sqrt: everything between the split sign and "sqrt(".
  std::string_view head = text.substr(0, root);
  mpq_class coefficient_sign = 1;
  std::string_view coefficient;
  std::string_view rational;
  std::size_t split = std::string_view::npos;
  for (std::size_t k = head.size(); k-- > 1;) {
    if ((head[k] == '+' || head[k] == '-') && head[k - 1] != '/') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    coefficient = head;
  } else {
    rational = head.substr(0, split);
    if (head[split] == '-') coefficient_sign = -1;
    coefficient = head.substr(split + 1);
  }
  mpq_class b = 1;
  if (!coefficient.empty()) {
    if (coefficient.back() != '*') {
      if (coefficient == "-") {
        b = -1;
      } else if (coefficient != "+") {
        throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
      }
    } else {
      b = parse_rational(coefficient.substr(0, coefficient.size() - 1));
    }
  }
  b *= coefficient_sign;
  mpq_class a = rational.empty() ? mpq_class(0) : parse_rational(rational);
  return QuadScalar(std::move(a), std::move(b), static_cast<int>(d));
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& rhs) {
  const int d = common_radicand(*this, rhs);
  a_ += rhs.a_;
  if (sgn(rhs.b_) != 0) b_ += rhs.b_;
  d_ = d;
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& rhs) {
  const int d = common_radicand(*this, rhs);
  a_ -= rhs.a_;
  if (sgn(rhs.b_) != 0) b_ -= rhs.b_;
  d_ = d;
  return *this;
}

QuadScalar operator*(const QuadScalar& lhs, const QuadScalar& rhs) {
  QuadScalar out;
  out.d_ = QuadScalar::common_radicand(lhs, rhs);
  const bool lb = sgn(lhs.b_) != 0;
  const bool rb = sgn(rhs.b_) != 0;
  out.a_ = lhs.a_ * rhs.a_;
  if (lb && rb) out.a_ += lhs.b_ * rhs.b_ * out.d_;
  if (lb) out.b_ = lhs.b_ * rhs.a_;
  if (rb) out.b_ += lhs.a_ * rhs.b_;
  return out;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& rhs) {
  *this = *this * rhs;
  return *this;
}

QuadScalar QuadScalar::inverse() const {
  if (sgn(b_) == 0) {
    if (sgn(a_) == 0) throw std::domain_error("division by zero");
    QuadScalar out;
    out.a_ = 1 / a_;
    out.d_ = d_;
    return out;
  }
  const mpq_class norm = a_ * a_ - b_ * b_ * d_;
  if (sgn(norm) == 0) throw std::domain_error("division by zero");
  QuadScalar out;
  out.a_ = a_ / norm;
  out.b_ = -b_ / norm;
  out.d_ = d_;
  return out;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& rhs) {
  if (sgn(rhs.b_) == 0) {
    if (sgn(rhs.a_) == 0) throw std::domain_error("division by zero");
    a_ /= rhs.a_;
    if (sgn(b_) != 0) b_ /= rhs.a_;
    return *this;
  }
  *this = *this * rhs.inverse();
  return *this;
}

QuadScalar QuadScalar::operator-() const {
  QuadScalar out;
  out.a_ = -a_;
  out.b_ = -b_;
  out.d_ = d_;
  return out;
}

std::strong_ordering operator<=>(const QuadScalar& lhs, const QuadScalar& rhs) {
  const int s = (lhs - rhs).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const QuadScalar& s) { return os << s.to_string(); }

}  // namespace billiards
