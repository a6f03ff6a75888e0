#include "arithdyn/real_roots.hpp"

#include <algorithm>

namespace arithdyn {

SturmSequence::SturmSequence(const IntPolynomial& squarefree) {
  IntPolynomial p0 = squarefree.primitive_part();
  chain_.push_back(p0);
  if (p0.degree() < 1) return;
  chain_.push_back(p0.derivative().primitive_part());
  while (chain_.back().degree() > 0) {
    const IntPolynomial& a = chain_[chain_.size() - 2];
    const IntPolynomial& b = chain_.back();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem multiplies by lc(b)^(delta+1); undo a negative factor
    const int delta = a.degree() - b.degree();
    const bool flip = b.leading() < 0 && (delta + 1) % 2 == 1;
    IntPolynomial next = flip ? r : r.negated();
    Integer c = next.content();
    std::vector<Integer> v(next.coefficients().begin(), next.coefficients().end());
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    chain_.emplace_back(std::move(v));
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain_) {
    const int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational root_bound(const IntPolynomial& p) {
  if (p.degree() < 1) return Rational(1);
  // Cauchy: |z| < 1 + max |a_k / a_n|
  Rational m = 0;
  const Integer lc = abs(p.leading());
  for (int k = 0; k < p.degree(); ++k) {
    Rational r(abs(p[k]), lc);
    if (r > m) m = r;
  }
  m += 1;
  Integer bound = 1;
  while (Rational(bound) <= m) bound *= 2;
  return Rational(bound);
}

namespace {

struct Pending {
  Rational lo;
  Rational hi;
  bool hi_is_known_root;  // the root at hi was already emitted
};

}  // namespace

RootInterval refine_root(const IntPolynomial& squarefree, RootInterval iv, const Rational& precision) {
  if (iv.lo == iv.hi) return iv;
  int slo = squarefree.sign_at(iv.lo);
  while (iv.hi - iv.lo > precision) {
    Rational mid = (iv.lo + iv.hi) / 2;
    const int sm = squarefree.sign_at(mid);
    if (sm == 0) {
      iv.lo = iv.hi = mid;
      break;
    }
    if (slo != 0 && sm == slo) {
      iv.lo = mid;
    } else if (slo == 0) {
      // lo itself cannot be the root of an open isolating interval; fall back
      // to sign at hi
      const int shi = squarefree.sign_at(iv.hi);
      if (sm == shi) iv.hi = mid; else iv.lo = mid;
      slo = squarefree.sign_at(iv.lo);
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

std::vector<RootInterval> real_root_isolate(const IntPolynomial& p, const Rational& precision) {
  if (p.is_zero()) throw DomainError("ZeroPolynomial", "root isolation of the zero polynomial");
  if (precision <= 0) throw DomainError("BadPrecision", "precision must be positive");
  std::vector<RootInterval> out;
  if (p.degree() < 1) return out;

  const IntPolynomial sf = squarefree_part(p);
  const SturmSequence sturm(sf);
  const Rational bound = root_bound(sf);

  std::vector<Pending> stack{{-bound, bound, false}};
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    int n = sturm.count(cur.lo, cur.hi) - (cur.hi_is_known_root ? 1 : 0);
    if (n <= 0) continue;
    // lo may be an already emitted root; closed output intervals must avoid it
    const int slo = sf.sign_at(cur.lo);
    if (n == 1 && slo != 0 && cur.hi - cur.lo <= precision) {
      out.push_back({cur.lo, cur.hi, 1});
      continue;
    }
    if (n == 1 && !cur.hi_is_known_root && slo != 0 && sf.sign_at(cur.hi) != 0 && slo != sf.sign_at(cur.hi)) {
      // single root with a sign change: plain bisection is cheaper than Sturm counts
      out.push_back(refine_root(sf, {cur.lo, cur.hi, 1}, precision));
      continue;
    }
    Rational mid = (cur.lo + cur.hi) / 2;
    const bool mid_root = sf.sign_at(mid) == 0;
    if (mid_root) out.push_back({mid, mid, 1});
    stack.push_back({mid, cur.hi, cur.hi_is_known_root});
    stack.push_back({cur.lo, mid, mid_root});
  }

  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });

  // multiplicities from the squarefree decomposition
  const auto parts = squarefree_decomposition(p);
  for (auto& iv : out) {
    for (std::size_t m = 0; m < parts.size(); ++m) {
      const IntPolynomial& f = parts[m];
      if (f.degree() < 1) continue;
      bool has_root;
      if (iv.lo == iv.hi) {
        has_root = f.sign_at(iv.lo) == 0;
      } else {
        SturmSequence sf_m(f);
        has_root = sf_m.count(iv.lo, iv.hi) > 0;
      }
      if (has_root) {
        iv.multiplicity = static_cast<int>(m) + 1;
        break;
      }
    }
  }
  return out;
}

}  // namespace arithdyn
