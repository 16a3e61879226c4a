#include "polycore/roots.hpp"

#include <algorithm>

namespace sextic {

namespace {

// Content removal by a positive factor, so signs along the sequence survive.
UPoly positive_primitive(const UPoly& p) {
  if (p.is_zero()) return p;
  UPoly q = p.primitive();
  return sign(q.lead()) == sign(p.lead()) ? q : -q;
}

UPoly squarefree_part(const UPoly& p) {
  UPoly g = gcd(p, p.derivative());
  return divmod(p, g).quotient.primitive();
}

// Simplest rational (smallest denominator) strictly inside (lo, hi).
Rat simplest_between(const Rat& lo, const Rat& hi) {
  Int fl = floor_rat(lo);
  Rat next(fl + 1);
  if (next < hi) return next;
  Rat base(fl);
  if (lo == base) {
    return base + Rat(1) / Rat(floor_rat(Rat(1) / (hi - base)) + 1);
  }
  return base + Rat(1) / simplest_between(Rat(1) / (hi - base), Rat(1) / (lo - base));
}

// A point of (lo, hi) near the midpoint that is not a root of p.
Rat split_point(const UPoly& p, const Rat& lo, const Rat& hi) {
  Rat w = hi - lo;
  Rat mid = (lo + hi) / 2;
  for (long k = 1; p.eval(mid) == 0; ++k) {
    mid = lo + w * make_rat(Int(2 * k + 1), Int(4 * k + 4));
  }
  return mid;
}

void isolate_in(const UPoly& p, const SturmSequence& s, const Rat& lo, const Rat& hi, int roots,
                std::vector<IsolatingInterval>& out) {
  if (roots == 0) return;
  if (roots == 1) {
    out.push_back({lo, hi, p});
    return;
  }
  Rat mid = split_point(p, lo, hi);
  int left = s.count(lo, mid);
  isolate_in(p, s, lo, mid, left, out);
  isolate_in(p, s, mid, hi, roots - left, out);
}

// Narrows iv (simple root) to one side of `cut`, a non-root inside it.
void narrow_at(IsolatingInterval& iv, const Rat& cut) {
  if (iv.poly.sign_at(cut) == iv.poly.sign_at(iv.lo)) iv.lo = cut;
  else iv.hi = cut;
}

bool overlaps(const IsolatingInterval& a, const IsolatingInterval& b) {
  return a.lo < b.hi && b.lo < a.hi;
}

}  // namespace

SturmSequence::SturmSequence(const UPoly& p) {
  if (p.is_zero()) throw precondition_error("Sturm sequence of zero polynomial");
  seq_.push_back(positive_primitive(p));
  UPoly d = positive_primitive(p.derivative());
  while (!d.is_zero()) {
    seq_.push_back(d);
    UPoly r = divmod(seq_[seq_.size() - 2], seq_.back()).remainder;
    d = positive_primitive(-r);
  }
}

int SturmSequence::sign_changes(const Rat& t) const {
  int changes = 0, last = 0;
  for (const auto& q : seq_) {
    int s = q.sign_at(t);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rat cauchy_bound(const UPoly& p) {
  if (p.degree() < 1) return Rat(1);
  Rat m = 0;
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rat(abs(p.coeff(k) / p.lead())));
  return m + 1;
}

std::vector<IsolatingInterval> isolate_real_roots(const UPoly& p) {
  if (p.is_zero()) throw precondition_error("root isolation of zero polynomial");
  std::vector<IsolatingInterval> out;
  if (p.degree() == 0) return out;
  UPoly sf = squarefree_part(p);
  SturmSequence s(sf);
  Rat b = cauchy_bound(sf);
  isolate_in(sf, s, -b, b, s.count(-b, b), out);
  return out;
}

void refine(IsolatingInterval& iv, const Rat& width) {
  while (iv.width() > width) narrow_at(iv, split_point(iv.poly, iv.lo, iv.hi));
}

std::optional<Rat> exact_rational_root(const IsolatingInterval& iv) {
  // A rational root u/v of the primitive integer polynomial has v | lead, and
  // two distinct such fractions differ by at least 1/lead^2.
  UPoly p = squarefree_part(iv.poly);
  IsolatingInterval work{iv.lo, iv.hi, p};
  Rat lead = p.lead();
  refine(work, Rat(1) / (lead * lead * 2));
  Rat r = simplest_between(work.lo, work.hi);
  if (r.get_den() <= lead.get_num() && p.eval(r) == 0) return r;
  return std::nullopt;
}

FormRealRoots real_roots(const BinaryForm& a) {
  if (a.is_zero()) throw precondition_error("real roots of zero form");
  FormRealRoots out;
  out.infinity_multiplicity = a.y_power();
  struct Tagged {
    IsolatingInterval iv;
    int mult;
  };
  std::vector<Tagged> all;
  for (const auto& f : squarefree_factors(a)) {
    UPoly d = f.factor.dehomogenize();
    if (d.degree() < 1) continue;
    for (auto& iv : isolate_real_roots(d)) all.push_back({iv, f.multiplicity});
  }
  // Roots of different factors are distinct; shrink until pairwise disjoint.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < all.size(); ++i) {
      for (size_t j = i + 1; j < all.size(); ++j) {
        while (overlaps(all[i].iv, all[j].iv)) {
          refine(all[i].iv, all[i].iv.width() / 2);
          refine(all[j].iv, all[j].iv.width() / 2);
          changed = true;
        }
      }
    }
  }
  std::sort(all.begin(), all.end(), [](const Tagged& l, const Tagged& r) { return l.iv.lo < r.iv.lo; });
  for (auto& t : all) {
    out.slopes.push_back(t.iv);
    out.multiplicities.push_back(t.mult);
  }
  return out;
}

std::string to_string(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "positive-definite";
    case Definiteness::NegativeDefinite: return "negative-definite";
    case Definiteness::PositiveSemi: return "positive-semi";
    case Definiteness::NegativeSemi: return "negative-semi";
    case Definiteness::Indefinite: return "indefinite";
    case Definiteness::Zero: return "zero";
  }
  return "unknown";
}

Definiteness definiteness(const BinaryForm& a) {
  if (a.is_zero()) return Definiteness::Zero;
  FormRealRoots roots = real_roots(a);
  if (roots.infinity_multiplicity % 2 == 1) return Definiteness::Indefinite;
  for (int m : roots.multiplicities) {
    if (m % 2 == 1) return Definiteness::Indefinite;
  }
  // No sign change anywhere: read the sign at any slope that is not a root.
  UPoly d = a.dehomogenize();
  int s = 0;
  for (long t = 0; s == 0; ++t) s = d.sign_at(Rat(t));
  bool has_roots = !roots.slopes.empty() || roots.infinity_multiplicity > 0;
  if (s > 0) return has_roots ? Definiteness::PositiveSemi : Definiteness::PositiveDefinite;
  return has_roots ? Definiteness::NegativeSemi : Definiteness::NegativeDefinite;
}

std::vector<std::pair<Int, Int>> convergents(const IsolatingInterval& iv, int n) {
  if (n < 1) throw precondition_error("convergent count must be positive");
  if (auto r = exact_rational_root(iv)) {
    throw precondition_error("root is rational (" + to_string(*r) + "); use the exact-root path");
  }
  IsolatingInterval cur{iv.lo, iv.hi, squarefree_part(iv.poly)};
  Int h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
  std::vector<std::pair<Int, Int>> out;
  while (static_cast<int>(out.size()) < n) {
    // Certify the floor: split at integers until none lies inside.
    for (;;) {
      Int f = floor_rat(cur.lo);
      if (Rat(f + 1) >= cur.hi) break;
      Int k = floor_rat((cur.lo + cur.hi) / 2);
      if (Rat(k) <= cur.lo) k = f + 1;
      narrow_at(cur, Rat(k));
    }
    Int a = floor_rat(cur.lo);
    Int h = a * h_prev + h_prev2, k = a * k_prev + k_prev2;
    out.emplace_back(h, k);
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    if (static_cast<int>(out.size()) == n) break;
    // alpha = a + 1/alpha' with alpha' > 1 a root of t^deg p(a + 1/t).
    UPoly next = cur.poly.shifted(Rat(a)).reversed().primitive();
    Rat lo_off = cur.lo - Rat(a), hi_off = cur.hi - Rat(a);
    Rat new_lo = Rat(1) / hi_off;
    Rat new_hi = lo_off == 0 ? cauchy_bound(next) : Rat(1) / lo_off;
    cur = {new_lo, new_hi, next};
  }
  return out;
}

}  // namespace sextic
