#include <cmath>

#include "vcolor/analysis.hpp"
#include "vcolor/errors.hpp"

namespace vcolor {
namespace {

// Dot product of the normalized weighted vectors of two r-sets meeting in s
// elements: present entries carry weight a, absent entries -1.
Rational dot_at(unsigned s, const Rational& a, unsigned m, unsigned r) {
  const long long absent_both = static_cast<long long>(m) - 2LL * r + s;  // may be negative off the feasible range
  const Rational num = Rational(s) * a * a - Rational(2 * (r - s)) * a + Rational(absent_both);
  const Rational den = Rational(r) * a * a + Rational(m - r);
  return num / den;
}

double log2_big(const BigInt& x) {
  if (x <= 0) return -INFINITY;
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(x));
  if (bits < 60) return std::log2(x.convert_to<double>());
  const BigInt top = x >> (bits - 52);
  return static_cast<double>(bits - 52) + std::log2(top.convert_to<double>());
}

void fill_vectors(KneserCertificate& cert, double a) {
  const auto subsets = kneser_subsets(cert.spec);
  const unsigned m = cert.spec.m;
  const double scale = 1.0 / std::sqrt(cert.spec.r * a * a + (m - cert.spec.r));
  cert.vectors.resize(static_cast<Eigen::Index>(subsets.size()), m);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (unsigned e = 0; e < m; ++e) {
      cert.vectors(static_cast<Eigen::Index>(i), e) = ((subsets[i] >> e) & 1u) ? a * scale : -scale;
    }
  }
}

KneserCertificate certificate(const KneserSpec& spec, const Rational& a, bool keep_vectors) {
  KneserCertificate cert;
  cert.spec = spec;
  cert.weight_a = a;
  const unsigned m = spec.m, r = spec.r, t = spec.t;

  const Rational cf = dot_at(t, a, m, r);
  cert.closed_form_dot = cf.convert_to<double>();
  if (cf < 0) cert.closed_form_vcn = Rational(1) - Rational(1) / cf;

  const unsigned s_min = 2 * r > m ? 2 * r - m : 0;
  if (t >= 1 && t - 1 >= s_min && spec.vertex_count() >= 2) {
    const Rational worst = dot_at(t - 1, a, m, r);
    cert.exact_worst_dot = worst.convert_to<double>();
    if (worst < 0) cert.exact_vcn = (Rational(1) - Rational(1) / worst).convert_to<double>();
  }
  if (cert.closed_form_vcn) {
    cert.vcn_bound = cert.closed_form_vcn->convert_to<double>();
  } else {
    cert.vcn_bound = cert.exact_vcn;
  }

  const MilnerBound mb = kneser_chromatic_lower(spec);
  cert.milner_bound = mb.milner_bound;
  cert.vertex_count = mb.vertex_count;
  cert.chromatic_lower = mb.chromatic_lower;
  cert.log2_chromatic_lower = mb.log2_chromatic_lower;
  cert.weak = mb.weak;
  if (keep_vectors) fill_vectors(cert, a.convert_to<double>());
  return cert;
}

}  // namespace

BigInt binomial(unsigned m, unsigned r) {
  if (r > m) return 0;
  r = std::min(r, m - r);
  BigInt acc = 1;
  for (unsigned i = 1; i <= r; ++i) {
    acc *= m - r + i;
    acc /= i;
  }
  return acc;
}

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

KneserCertificate kneser_vectors(const KneserSpec& spec, bool keep_vectors) {
  spec.validate();
  return certificate(spec, Rational(1), keep_vectors);
}

KneserCertificate kneser_weighted(const KneserSpec& spec, bool keep_vectors) {
  spec.validate();
  const long long m = spec.m, r = spec.r, t = spec.t;
  if (r * r - m * t <= 0) {
    fail(ErrorCode::invalid_argument, "weighted Kneser bound needs r^2 - m t > 0");
  }
  // A = -1 + m r/(r^2 - r t) - m t/(r^2 - r t); r > t here since r^2 > m t >= r t.
  const Rational a = Rational(-1) + Rational(m * r, r * r - r * t) - Rational(m * t, r * r - r * t);
  KneserCertificate cert = certificate(spec, a, keep_vectors);
  cert.closed_form_vcn = Rational(m * (r - t), r * r - m * t);
  cert.vcn_bound = cert.closed_form_vcn->convert_to<double>();
  return cert;
}

MilnerBound kneser_chromatic_lower(const KneserSpec& spec) {
  spec.validate();
  MilnerBound out;
  const unsigned j = (spec.m + spec.t + 2) / 2;  // ceil((m + t + 1) / 2)
  out.milner_bound = binomial(spec.m, j);
  if (out.milner_bound < 1) out.milner_bound = 1;
  out.vertex_count = binomial(spec.m, spec.r);
  out.chromatic_lower = Rational(out.vertex_count, out.milner_bound);
  out.log2_chromatic_lower = log2_big(out.vertex_count) - log2_big(out.milner_bound);
  out.weak = spec.t == spec.r || out.chromatic_lower <= 1;
  return out;
}

}  // namespace vcolor
