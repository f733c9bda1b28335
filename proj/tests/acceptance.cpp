// Acceptance suite: one PASS/FAIL line per criterion. Exit status is 0 only
// when every criterion passes.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qmforms/error.hpp"
#include "qmforms/gauss_manin.hpp"
#include "qmforms/hecke.hpp"
#include "qmforms/linalg.hpp"
#include "qmforms/periods.hpp"
#include "qmforms/qmform.hpp"
#include "qmforms/sampling.hpp"

using namespace qmf;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
  std::vector<std::string> notes;
};

const QMForm G[3] = {QMForm::g1(), QMForm::g2(), QMForm::g3()};

long long trial_sigma(int power, long long n) {
  long long s = 0;
  for (long long d = 1; d <= n; ++d) {
    if (n % d) continue;
    long long t = 1;
    for (int i = 0; i < power; ++i) t *= d;
    s += t;
  }
  return s;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

Outcome eisenstein_coefficients() {
  // B1 = 1/6, B2 = 1/30, B3 = 1/42.
  const Rational b[3] = {Rational(1, 6), Rational(1, 30), Rational(1, 42)};
  const std::size_t n = 200;
  std::size_t bad = 0;
  for (int k = 1; k <= 3; ++k) {
    const QSeries e = eisenstein(static_cast<unsigned>(k), n);
    const Rational c = Rational(k % 2 ? -4 * k : 4 * k) / b[k - 1];
    if (e[0] != 1) ++bad;
    for (std::size_t m = 1; m <= n; ++m) {
      // sigma_5(200) < 2^63, so the trial-division oracle stays exact.
      if (e[m] != c * Rational(trial_sigma(2 * k - 1, static_cast<long long>(m)))) ++bad;
    }
  }
  return {bad == 0, std::to_string(3 * 201 - bad) + "/603 coefficients match", {}};
}

Outcome ramanujan_exact() {
  const std::size_t n = 200;
  int ok = 0;
  for (int i = 0; i < 3; ++i) ok += expand(derive(G[i]), n) == Rational(12) * theta(expand(G[i], n));
  return {ok == 3, std::to_string(ok) + "/3 generators, order 200", {}};
}

Outcome freeness() {
  int keys = 0, full = 0;
  for (int m = 0; m <= 20; m += 2) {
    for (int d = 0; 2 * d <= m; ++d) {
      const auto basis = monomial_basis({m, d});
      const std::size_t order = basis.size() + 5;
      RationalMatrix mat(order + 1, basis.size());
      for (std::size_t c = 0; c < basis.size(); ++c) {
        const QSeries s = expand(QMForm::monomial(basis[c]), order);
        for (std::size_t r = 0; r <= order; ++r) mat(r, c) = s[r];
      }
      ++keys;
      full += rank(mat) == basis.size();
    }
  }
  Rng rng(101);
  int round_trips = 0;
  for (int k = 0; k < 50; ++k) {
    const int m = 2 * static_cast<int>(rng() % 11);
    const FormSpaceKey key(m, static_cast<int>(rng() % static_cast<unsigned>(m / 2 + 1)));
    const QMForm f = random_form(rng, key);
    round_trips += decompose(key, expand(f, monomial_basis(key).size() + 5)) == f;
  }
  return {full == keys && round_trips == 50,
          "full column rank on " + std::to_string(full) + "/" + std::to_string(keys) + " keys (m <= 20); " +
              std::to_string(round_trips) + "/50 random round trips",
          {}};
}

Outcome hecke_laws() {
  int eig = 0;
  for (long p : {2L, 3L, 5L, 7L}) {
    const auto up = static_cast<unsigned long>(p);
    eig += hecke({p, {2, 1}}, G[0]) == Rational(sigma(1, up)) / Rational(p) * G[0];
    eig += hecke({p, {4, 0}}, G[1]) == Rational(sigma(3, up)) * G[1];
    eig += hecke({p, {6, 0}}, G[2]) == Rational(sigma(5, up)) * G[2];
  }
  Rng rng(202);
  struct Sample {
    FormSpaceKey key;
    QMForm f;
  };
  std::vector<Sample> forms;
  for (int k = 0; k < 10; ++k) {
    const int m = 2 * (1 + static_cast<int>(rng() % 6));
    const FormSpaceKey key(m, static_cast<int>(rng() % static_cast<unsigned>(m / 2 + 1)));
    forms.push_back({key, random_form(rng, key)});
  }
  int comp = 0, comp_total = 0, comp_alt = 0, comp_depth0 = 0, depth0_total = 0, commute = 0;
  std::string first_failure;
  for (const auto& s : forms) {
    for (long p : {2L, 3L, 4L}) {
      for (long q : {2L, 3L, 4L}) {
        ++comp_total;
        const bool ok = hecke_composition_check(p, q, s.key, s.f);
        comp += ok;
        if (!ok && first_failure.empty()) {
          first_failure = "T" + std::to_string(p) + "T" + std::to_string(q) + " on weight " + std::to_string(s.key.weight()) +
                          ", depth bound " + std::to_string(s.key.depth());
        }
        comp_alt += hecke_composition_check(p, q, s.key, s.f, CompositionExponent::WeightMinusTwiceDepthMinusOne);
        if (s.key.depth() == 0) {
          ++depth0_total;
          comp_depth0 += ok;
        }
      }
    }
    for (long p : {2L, 3L, 5L}) commute += hecke_commutes_with_derive({p, s.key}, s.f);
  }
  const bool pass = eig == 12 && comp == comp_total && commute == 30;
  Outcome o{pass,
            "eigenvalues " + std::to_string(eig) + "/12; composition with d^(m-n-1) " + std::to_string(comp) + "/" +
                std::to_string(comp_total) + "; commutation with d/dz " + std::to_string(commute) + "/30",
            {}};
  if (comp != comp_total) {
    o.notes.push_back("first composition failure: " + first_failure);
    o.notes.push_back("with d^(m-2n-1) the law holds on " + std::to_string(comp_alt) + "/" + std::to_string(comp_total) +
                      "; with d^(m-n-1) on depth-0 keys " + std::to_string(comp_depth0) + "/" + std::to_string(depth0_total));
    o.notes.push_back("T_p as defined equals p^-n times the classical operator, so d^(m-n-1) is off by d^-n when n > 0");
  }
  return o;
}

Outcome gauss_manin_identities() {
  const auto start = std::chrono::steady_clock::now();
  const bool flat = flatness_check();
  const bool det = detB_check();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {flat && det && secs < 5.0,
          std::string("flatness ") + (flat ? "holds" : "fails") + ", det B = 3/4 t0 delta^3 " + (det ? "holds" : "fails") +
              ", " + fmt(secs) + " s",
          {}};
}

Outcome group_action() {
  const bool assoc = action_associativity_check();
  const bool jinv = j_invariance_check();
  const bool weight = discriminant_weight_check();
  return {assoc && jinv && weight,
          std::string("associativity ") + (assoc ? "ok" : "fails") + ", j invariance " + (jinv ? "ok" : "fails") +
              ", delta weight k1^-10 k2^2 " + (weight ? "ok" : "fails"),
          {}};
}

Outcome period_round_trip() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(303);
  double worst = 0, worst_eq = 0;
  int errors = 0;
  for (int k = 0; k < 25; ++k) {
    const ParamPoint t = random_param_point(rng);
    try {
      worst = std::max(worst, relative_distance(inverse_map(period_matrix(t)), t));
    } catch (const Error&) {
      ++errors;
    }
  }
  for (int k = 0; k < 10; ++k) {
    const ParamPoint t = random_param_point(rng);
    const ComplexGroupElement g = random_group_element(rng);
    try {
      const ParamPoint lhs = inverse_map(period_matrix(act(t, g)));
      const ParamPoint rhs = inverse_map(right_act(period_matrix(t), g));
      worst_eq = std::max(worst_eq, relative_distance(lhs, rhs));
    } catch (const Error&) {
      ++errors;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {errors == 0 && worst < 1e-7 && worst_eq < 1e-7 && secs < 60.0,
          "round trip max rel " + fmt(worst) + " on 25 points, equivariance max rel " + fmt(worst_eq) + " on 10 pairs, " +
              std::to_string(errors) + " errors, " + fmt(secs) + " s",
          {}};
}

Outcome b_functions_on_upper_half_plane() {
  Rng rng(404);
  double values = 0, laws = 0;
  for (int k = 0; k < 10; ++k) {
    const Complex z = random_upper_half(rng);
    const ComplexGroupElement g = random_group_element(rng);
    const BFunctionResiduals r = b_function_check(z, g.k1, g.k3);
    values = std::max({values, r.b1_value, r.b2_value, r.b3_value});
    laws = std::max({laws, r.b1_law, r.b2_law, r.b3_law});
  }
  // Laws at generic points with t0 = 1 as well, where B2 != 0.
  for (int k = 0; k < 10; ++k) {
    ParamPoint t = random_param_point(rng);
    t.t0 = 1.0;
    if (std::abs(27.0 * t.t3 * t.t3 - t.t2 * t.t2 * t.t2) < 1.0) continue;
    const ComplexGroupElement g = random_group_element(rng);
    const auto r = b_function_laws(t, g.k1, g.k3);
    laws = std::max({laws, r[0], r[1], r[2]});
  }
  double slice = 0;
  std::uniform_real_distribution<double> part(-2, 2);
  for (int k = 0; k < 50; ++k) {
    const Complex x1(part(rng), part(rng)), x3(part(rng), part(rng));
    const double r = part(rng);
    const Complex x4 = 1.0 / (x1 - r * x3);
    slice = std::max(slice, std::abs(std::abs(b_functions(PeriodPoint{x1, r * x4, x3, x4}).b3) - 1.0));
  }
  return {values < 1e-7 && laws < 1e-7 && slice < 1e-9,
          "B1 = Im z, B2 = 0, B3 = 1 max " + fmt(values) + "; transformation laws max " + fmt(laws) + "; ||B3| - 1| max " +
              fmt(slice),
          {}};
}

Outcome vector_field() {
  const auto c = vectorfield_pushforward_components();
  return {c[0] && c[1] && c[2],
          std::string("t1' = -t2 ") + (c[0] ? "ok" : "fails") + ", t2' = -6 t3 " + (c[1] ? "ok" : "fails") +
              ", t3' = t1 t3 - t2^2/4 " + (c[2] ? "ok" : "fails"),
          {}};
}

Outcome normalization() {
  const std::size_t n = 100;
  const QSeries g2 = expand(G[1], n), g3 = expand(G[2], n);
  const QSeries disc = Rational(27) * g3 * g3 - g2 * g2 * g2;
  const QSeries eta = eta24(n);
  const Rational c_delta = disc[1] / eta[1];
  const bool delta_ok = disc == c_delta * eta && c_delta == Rational(-2985984);

  QSeries reduced(n - 1);
  for (std::size_t k = 0; k < n; ++k) reduced[k] = -disc[k + 1];
  const QSeries ratio = (g2 * g2 * g2).truncate(n - 1) * invert(reduced);
  const LaurentQSeries j = j_classical(n - 2);
  const Rational c_j = ratio[0] / j.pole;
  bool j_ok = c_j == Rational(1, 1728);
  for (std::size_t k = 1; k < n; ++k) j_ok = j_ok && ratio[k] == c_j * j.regular[k - 1];
  const bool reference_j = j.pole == 1 && j.regular[0] == 744 && j.regular[1] == 196884;

  Outcome o{delta_ok && j_ok && reference_j,
            "27 G3^2 - G2^3 = " + c_delta.str() + " * q prod(1-q^n)^24 (order 100); g2^3/(-Delta) = " + c_j.str() +
                " * (q^-1 + 744 + 196884 q + ...)",
            {}};
  o.notes.push_back("measured Delta = -(2 pi i)^6 q prod(1-q^n)^24; the reference constant -(2 pi i/12)^6 is off by 12^6");
  o.notes.push_back("measured g2^3/(-Delta) = j_classical/1728; the reference expansion q^-1 + 744 + ... is 1728 times it");
  o.notes.push_back("j(t) = t2^3/(27 t0 t3^2 - t2^3) pulls back to g2^3/Delta = -j_classical/1728");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Eisenstein coefficients", eisenstein_coefficients},
      {"Ramanujan relations on q-expansions", ramanujan_exact},
      {"freeness and unique decomposition", freeness},
      {"Hecke eigenvalues, composition, commutation", hecke_laws},
      {"Gauss-Manin flatness and det B", gauss_manin_identities},
      {"group action identities", group_action},
      {"period map round trip and equivariance", period_round_trip},
      {"B-functions on the upper half plane and their laws", b_functions_on_upper_half_plane},
      {"vector field correspondence under alpha", vector_field},
      {"normalization audit", normalization},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what(), {}};
    }
    failed += !o.pass;
    std::printf("%s [%zu] %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    for (const auto& note : o.notes) std::printf("     note: %s\n", note.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
