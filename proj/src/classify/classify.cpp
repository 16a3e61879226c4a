#include "classify/classify.hpp"
#include "classify/internal.hpp"
#include "polycore/parse.hpp"

namespace sextic {

namespace {

BinaryForm x_power_form(int k) {
  std::vector<Rat> c(k + 1);
  c[0] = 1;
  return BinaryForm(k, std::move(c));
}

Condition x_power_condition(const std::string& name, const BinaryForm& form, int k, bool exact) {
  Condition c = divides_condition(name, x_power_form(k), form);
  if (exact) {
    bool higher = form.x_power() >= k + 1;
    c.value = c.value && !higher;
    c.detail = "x-adic valuation " + (form.is_zero() ? std::string("infinite")
                                                     : std::to_string(form.x_power()));
  }
  return c;
}

const SquarefreeFactor* factor_with(const std::vector<SquarefreeFactor>& fs, int mult) {
  for (const auto& f : fs) {
    if (f.multiplicity == mult) return &f;
  }
  return nullptr;
}

Unimodular normalizer_for(const BinaryForm& linear) {
  BinaryForm l = linear.primitive();
  return Unimodular::sending_to_x(l.coeff(0).get_num(), l.coeff(1).get_num());
}

void analyze_mp1(ClassificationReport& rep, const std::array<BinaryForm, 7>& parts,
                 const std::vector<SquarefreeFactor>& factors, int maxm) {
  const BinaryForm& b = factor_with(factors, maxm)->factor;
  rep.conditions.push_back(gcd_condition(parts[6], parts[5]));
  auto linears = rational_linear_factors(b);
  BinaryForm irr = irrational_part(b);

  if (b.degree() == 3 && linears.empty()) {
    rep.route = Route::MP1Cubic;
    rep.conditions.push_back(divides_condition("f|F5", b, parts[5]));
    rep.conditions.push_back(divides_condition("f|F4", b, parts[4]));
    if (rep.condition("f|F5")->value && rep.condition("f|F4")->value) {
      SquareCompletion sc = cubic_square_completion(rep.input);
      auto aq = divide_exact(parts[6], b * b);
      rep.mp1_cubic = Mp1CubicAnalysis{b, aq->coeff(0), sc};
      rep.notes.push_back("F = a (f + g/(2a))^2 + remainder of degree <= 4; a rational change of "
                          "variables brings the core to Weierstrass form");
    } else {
      rep.notes.push_back("f does not divide both F5 and F4: Dirichlet approximation along the "
                          "real root of f gives values of both signs");
    }
    return;
  }
  if (irr.degree() == 2) {
    rep.route = Route::MP1Quadratic;
    rep.conditions.push_back(divides_condition("f|F5", irr, parts[5]));
    if (rep.definiteness == Definiteness::PositiveDefinite) {
      rep.notes.push_back("F6 is positive definite: F >> max(|x|,|y|)^6, so F is dearth");
      return;
    }
    if (!rep.condition("f|F5")->value) return;
    Rat disc = irr.coeff(1) * irr.coeff(1) - 4 * irr.coeff(0) * irr.coeff(2);
    Int k = squarefree_kernel(disc.get_num());
    rep.quadratic = quadratic_case_analysis(rep.input, k.get_si());
    return;
  }
  rep.route = Route::MP1Linear;
  rep.normalization = normalizer_for(linears.front());
  rep.normalized = rep.normalization.to_new(rep.input);
  auto np = decompose(rep.normalized);
  rep.conditions.push_back(x_power_condition("f|F5", np[5], 1, false));
  rep.conditions.push_back(x_power_condition("f|F4", np[4], 1, false));
  rep.notes.push_back("squared rational linear factor moved to x; only |x| = O(1) contributes "
                      "beyond the bounded-growth lemma");
}

void analyze_mp2(ClassificationReport& rep, const std::vector<SquarefreeFactor>& factors) {
  const BinaryForm& l = factor_with(factors, 4)->factor;
  if (l.degree() != 1) {
    throw internal_error("fourth-power factor of a rational sextic form is not linear");
  }
  rep.route = Route::MP2;
  rep.normalization = normalizer_for(l);
  rep.normalized = rep.normalization.to_new(rep.input);
  auto np = decompose(rep.normalized);
  rep.conditions.push_back(gcd_condition(np[6], np[5]));
  rep.conditions.push_back(x_power_condition("x^2|F5", np[5], 2, false));
  if (!rep.condition("x^2|F5")->value) {
    rep.notes.push_back("x^2 does not divide F5: with |x| ~ T^theta, |y| ~ T, 1/2 < theta < 2/3, "
                        "F5 dominates and changes sign");
    return;
  }
  rep.mp2 = mp2_square_check(rep.normalized);
}

void analyze_mp3(ClassificationReport& rep, const std::vector<SquarefreeFactor>& factors) {
  const BinaryForm& l = factor_with(factors, 6)->factor;
  if (l.degree() != 1) {
    throw internal_error("sixth-power factor of a rational sextic form is not linear");
  }
  rep.route = Route::MP3;
  rep.normalization = normalizer_for(l);
  rep.normalized = rep.normalization.to_new(rep.input);
  auto np = decompose(rep.normalized);
  rep.conditions.push_back(gcd_condition(np[6], np[5]));
  rep.conditions.push_back(x_power_condition("x^2|F5", np[5], 2, false));
  rep.conditions.push_back(x_power_condition("x^3|F5", np[5], 3, false));
  rep.conditions.push_back(x_power_condition("x^3|F5 exactly", np[5], 3, true));
  rep.conditions.push_back(x_power_condition("x^4|F5", np[5], 4, false));
  rep.conditions.push_back(x_power_condition("x|F4 exactly", np[4], 1, true));
  rep.conditions.push_back(x_power_condition("x^2|F4", np[4], 2, false));

  Mp3Analysis m;
  int v5 = np[5].x_power(), v4 = np[4].x_power();
  if (v5 < 3) {
    m.branch = Mp3Branch::Anisotropic;
    m.theta = v5 == 2 ? make_rat(2, 3) : make_rat(1, 2);
    m.verdict = "x^3 does not divide F5: F5 dominates on |x| ~ T^theta, |y| ~ T";
  } else if (v5 >= 4 && v4 == 1) {
    m.branch = Mp3Branch::Degenerate;
    m.theta = make_rat(1, 6);
    m.verdict = "x^4 | F5 and x | F4 exactly: F4 dominates on |x| ~ T^(1/6), |y| ~ T";
  } else if (v5 >= 4 && v4 >= 2) {
    m.branch = Mp3Branch::WeightedCubic;
    const BivarPoly& g = rep.normalized;
    m.lead_cubic = {g.coeff(6, 0), g.coeff(4, 1), g.coeff(2, 2), g.coeff(0, 3)};
    m.verdict = "weighted lead cubic G(x^2, y) is indefinite: scaled points (N c1, N^2 c2)";
  } else {
    m.branch = Mp3Branch::Shape;
    if (v5 >= 4) {
      rep.notes.push_back("x^4 | F5 with x not dividing F4: y^4 survives, handled through the "
                          "calF0 shape with a1 = 0");
    }
    m.shape = mp3_shape_extract(rep.normalized);
    m.square = mp3_square_and_proportionality(rep.normalized, *m.shape);
    m.verdict = m.square->verdict;
    if (m.square->completion) {
      try {
        m.ecform = ecform_normalize(rep.normalized, *m.square);
        m.verdict = "ECform: a (y^2 - x^3 - b1 x - b0)^2 + G";
      } catch (const Error& e) {
        m.verdict = std::string("ECform normalization failed: ") + e.what();
      }
    }
  }
  rep.mp3 = std::move(m);
}

}  // namespace

Int squarefree_kernel(const Int& n0) {
  Int n = abs(n0);
  if (n == 0) throw precondition_error("square-free kernel of zero");
  Int kernel = 1;
  for (Int p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2 == 1) kernel *= p;
  }
  return kernel * n;
}

ClassificationReport classify(const BivarPoly& f) {
  ClassificationReport rep;
  rep.input = f;
  rep.normalized = f;
  rep.degree = f.total_degree();
  rep.composed = detect_composed(f);
  if (rep.degree != 6) {
    rep.route = Route::NotASextic;
    rep.notes.push_back("total degree " + std::to_string(rep.degree) +
                        " is not 6; witness and density tools still apply");
    return rep;
  }
  auto parts = decompose(f);
  auto factors = squarefree_factors(parts[6]);
  rep.profile = squarefree_profile(parts[6]);
  rep.definiteness = definiteness(parts[6]);
  int maxm = max_multiplicity(rep.profile);

  if (maxm == 1) {
    rep.route = Route::MP0;
    rep.notes.push_back("square-free F6: F is dearth or not arithmetically positive, so never "
                        "arithmetically complete");
    if (rep.definiteness == Definiteness::PositiveDefinite) {
      rep.notes.push_back("F6 positive definite: values grow like max(|x|,|y|)^6, dearth");
    } else {
      rep.notes.push_back("F6 indefinite or negative: F takes arbitrarily negative values");
    }
    return rep;
  }

  bool gap = maxm == 5;
  if (maxm == 3) {
    const BinaryForm& b3 = factor_with(factors, 3)->factor;
    gap = !(b3.degree() == 2 && rational_linear_factors(b3).empty());
  }
  if (gap) {
    rep.route = Route::PaperGap;
    rep.notes.push_back("profile not covered by the completeness criteria (maximal multiplicity " +
                        std::to_string(maxm) +
                        (maxm == 3 ? " on a rational linear factor" : "") +
                        "); witness search is offered without a completeness claim");
    return rep;
  }
  if (rep.definiteness != Definiteness::PositiveDefinite &&
      rep.definiteness != Definiteness::PositiveSemi) {
    rep.route = Route::NotPositiveLeading;
    rep.notes.push_back("F6 takes negative values at an integer point; scaling it makes F "
                        "arbitrarily negative");
    return rep;
  }
  if (maxm == 6) {
    analyze_mp3(rep, factors);
  } else if (maxm == 4) {
    analyze_mp2(rep, factors);
  } else {
    analyze_mp1(rep, parts, factors, maxm);
  }
  if (rep.definiteness == Definiteness::PositiveDefinite && rep.route != Route::MP1Quadratic) {
    rep.notes.push_back("F6 is positive definite despite repeated factors: dearth");
  }
  return rep;
}

}  // namespace sextic
