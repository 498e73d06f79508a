// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "maxsym/cli/commands.hpp"
#include "maxsym/cli/reference.hpp"
#include "maxsym/diffalg/serialize.hpp"
#include "maxsym/itergen/itergen.hpp"
#include "maxsym/numeval/residual.hpp"
#include "maxsym/solbasis/solbasis.hpp"
#include "maxsym/xform/xform.hpp"

using namespace maxsym;
using diffalg::DiffPoly;
using numeval::ClosedFormFn;
using numeval::Interval;
namespace sym = diffalg::sym;

namespace {

constexpr double kResidualTol = 1e-8;
constexpr double kWronskianTol = 1e-8;

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string what;
  double time_limit;  // seconds, <= 0 for none
  std::function<Outcome()> body;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

Outcome exact(const DiffPoly& got, const DiffPoly& want, const std::string& label) {
  if (got == want) return {true, ""};
  return fail(label + ": " + std::to_string((got - want).size()) + " differing terms");
}

Outcome ac1() {
  // Low-order q-form displays, transcribed independently of the library.
  auto a = exact(itergen::theta_n_u(3).to_diffpoly(),
                 diffalg::parse_text("2*q'*y + 4*q*y' + y'''"), "n=3");
  if (!a.passed) return a;
  auto b = exact(itergen::theta_n_u(4).to_diffpoly(),
                 diffalg::parse_text("3*y*(3*q^2 + q'') + 10*y'*q' + 10*q*y'' + y^(4)"), "n=4");
  if (!b.passed) return b;
  return {true, "orders 3 and 4 exact"};
}

Outcome ac2() {
  auto a = exact(itergen::phi_n(3).to_diffpoly(), diffalg::parse_text(cli::reference::kPhi3), "n=3");
  if (!a.passed) return a;
  auto b = exact(itergen::phi_n(4).to_diffpoly(), diffalg::parse_text(cli::reference::kPhi4), "n=4");
  if (!b.passed) return b;
  return {true, "orders 3 and 4 exact"};
}

Outcome ac3() {
  auto report = cli::run_a15_check();
  std::string detail;
  for (const auto& r : report.results) {
    if (!detail.empty()) detail += "; ";
    detail += r.name + ": " + r.detail;
  }
  return {report.all_passed(), detail};
}

Outcome ac4() {
  for (int n = 1; n <= 12; ++n) {
    auto extracted = itergen::extract_K(n);
    if (extracted != itergen::k_recurrence(n)) return fail("step recurrence differs at n=" + std::to_string(n));
    if (extracted != itergen::k_recurrence_sum(n)) return fail("summed recurrence differs at n=" + std::to_string(n));
    if (n >= 2) {
      auto [k1, k2] = itergen::closed_form_K12(n);
      if (extracted[1] != k1 || extracted[2] != k2)
        return fail("closed forms differ at n=" + std::to_string(n));
    }
  }
  return {true, "n = 1..12"};
}

Outcome ac5() {
  for (int n = 2; n <= 15; ++n) {
    DiffPoly want = DiffPoly::var(sym::q).scaled(itergen::binomial(n + 1, 3));
    if (itergen::generate_maxsym(n).coeff(2) != want) return fail("n=" + std::to_string(n));
  }
  return {true, "n = 2..15"};
}

Outcome ac6() {
  for (int n = 2; n <= 10; ++n)
    if (itergen::phi_n_r(n).to_diffpoly() != itergen::theta_n_u(n).to_diffpoly())
      return fail("n=" + std::to_string(n));
  return {true, "n = 2..10"};
}

Outcome ac7() {
  if (!xform::verify_schwarzian_source_identity().is_zero()) return fail("Schwarzian identity nonzero");
  for (int n = 2; n <= 8; ++n)
    if (!xform::verify_canonical_identity(n).is_zero()) return fail("n=" + std::to_string(n));
  return {true, "Schwarzian identity and n = 2..8"};
}

double factorial_product(int n) {
  double out = 1.0;
  double f = 1.0;
  for (int j = 1; j <= n - 1; ++j) out *= (f *= j);
  return out;
}

Outcome basis_ok(const solbasis::SolutionBasis& basis, const ClosedFormFn& q, const std::string& tag,
                 double& worst_res, double& worst_w) {
  const int n = basis.order();
  const auto ode = itergen::generate_maxsym(n);
  auto pts = basis.interval().interior_points(20);
  for (const auto& y : basis.entries()) {
    double res = numeval::residual(ode, q, y, pts);
    worst_res = std::max(worst_res, res);
    if (!(res <= kResidualTol)) return fail(tag + " residual " + std::to_string(res));
  }
  const double expected = factorial_product(n);
  for (double x : basis.interval().interior_points(3)) {
    double rel = std::abs(solbasis::wronskian_numeric(basis, x) - expected) / expected;
    worst_w = std::max(worst_w, rel);
    if (!(rel <= kWronskianTol)) return fail(tag + " Wronskian rel err " + std::to_string(rel));
  }
  return {true, ""};
}

Outcome ac8() {
  const Interval iv{0.0, 1.0};
  struct Source {
    ClosedFormFn u, v;
  };
  // q = 0, 1, -1; each v solves the same source equation with uv' - u'v = 1.
  std::vector<Source> sources{
      {numeval::constant(1.0, iv), numeval::polynomial({0.0, 1.0}, iv)},
      {numeval::cosine(1.0, iv), numeval::sine(1.0, iv)},
      {numeval::exponential(1.0, iv), numeval::scaled(numeval::exponential(-1.0, iv), -0.5)}};
  double worst_res = 0.0;
  double worst_w = 0.0;
  for (const auto& s : sources) {
    for (int n = 2; n <= 6; ++n) {
      auto q = numeval::source_coefficient_from_u(s.u, n);
      std::string tag = s.u.label() + " n=" + std::to_string(n);
      auto a = basis_ok(solbasis::basis_from_u(s.u, n), q, "from_u " + tag, worst_res, worst_w);
      if (!a.passed) return a;
      auto b = basis_ok(solbasis::basis_from_uv(s.u, s.v, n), q, "from_uv " + tag, worst_res, worst_w);
      if (!b.passed) return b;
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "max residual %.2e, max Wronskian rel err %.2e", worst_res, worst_w);
  return {true, buf};
}

Outcome ac9() {
  for (int n = 2; n <= 8; ++n)
    for (int k = 0; k < n; ++k)
      if (!solbasis::verify_basis_symbolic(n, k).is_zero())
        return fail("n=" + std::to_string(n) + " k=" + std::to_string(k));
  return {true, "2 <= n <= 8, all k"};
}

Outcome ac10() {
  const auto ode = solbasis::ermakov_equation();
  const Interval unit{0.0, 1.0};
  const Interval right{1.0, 2.0};
  struct Case {
    std::string tag;
    ClosedFormFn r, b;
  };
  std::vector<Case> cases{
      {"r=1 B=0", numeval::constant(1.0, unit), numeval::constant(0.0, unit)},
      {"r=x^2 B=0", numeval::polynomial({0.0, 0.0, 1.0}, right), numeval::constant(0.0, right)},
      {"r=e^2x B=1", numeval::exponential(2.0, unit), numeval::constant(1.0, unit)},
      {"r=1+x^2 B=sin", numeval::polynomial({1.0, 0.0, 1.0}, unit), numeval::sine(1.0, unit)}};
  double worst = 0.0;
  for (const auto& c : cases) {
    auto basis = solbasis::ermakov_basis(c.r, c.b);
    auto pts = basis.interval().interior_points(20);
    for (const auto& y : basis.entries()) {
      double res = numeval::residual(ode, {{sym::r, c.r}, {sym::B, c.b}}, y, pts);
      worst = std::max(worst, res);
      if (!(res <= kResidualTol)) return fail(c.tag + " residual " + std::to_string(res));
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max residual %.2e", worst);
  return {true, buf};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "q-form equations, orders 3 and 4 (exact, < 1 s)", 1.0, ac1},
      {"AC2", "r-form equations, orders 3 and 4 (exact, < 1 s)", 1.0, ac2},
      {"AC3", "A15 coefficient of y at order 15 (exact, <= 120 s)", 120.0, ac3},
      {"AC4", "recurrence coherence n <= 12 (exact, < 60 s)", 60.0, ac4},
      {"AC5", "y^(n-2) coefficient = C(n+1,3) q, n <= 15 (exact)", 0.0, ac5},
      {"AC6", "r path = u path, n <= 10 (exact)", 0.0, ac6},
      {"AC7", "canonical and Schwarzian identities, n <= 8 (exact)", 0.0, ac7},
      {"AC8", "numeric bases: residual <= 1e-8, Wronskian prod j! within 1e-8", 0.0, ac8},
      {"AC9", "symbolic basis check, n <= 8 (exact)", 0.0, ac9},
      {"AC10", "second-order solvable class: residual <= 1e-8", 0.0, ac10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out = fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0.0 && secs >= c.time_limit) {
      out.passed = false;
      out.detail += " (time limit exceeded)";
    }
    if (!out.passed) ++failures;
    std::printf("%-4s %s  %s  [%.3f s]  %s\n", c.id.c_str(), out.passed ? "PASS" : "FAIL",
                c.what.c_str(), secs, out.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
