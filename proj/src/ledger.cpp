#include "tsl/ledger.hpp"

#include <stdexcept>

#include "tsl/example71.hpp"
#include "tsl/example72.hpp"

namespace tsl {

namespace {

LedgerStatus status_of(bool ok) { return ok ? LedgerStatus::pass : LedgerStatus::fail; }

IntervalSet iv(Rational lo, Rational hi, bool lc, bool hc) { return IntervalSet::interval(lo, hi, lc, hc); }

std::string mem(bool in) { return in ? " in " : " not in "; }

const char* kAnchor71 = "delta-complete but not complete: punctured neighbourhoods of 0";
const char* kAnchor72 = "theta-complete but not delta-complete: square with a distinguished edge";

void int_cl_claim(std::vector<LedgerEntry>& out, BasicKind kind, const Rational& x, const Rational& eps) {
  const IntervalSet u = s71_basic(kind, x, eps);
  const IntervalSet got = s71_int_cl_basic(kind, x, eps);
  const IntervalSet expected = kind == BasicKind::punctured_at_0 ? iv(0, eps, true, false) : u;
  const std::string tag = kind == BasicKind::punctured_at_0 ? "int_cl_punctured_basic" : "int_cl_euclidean_basic";
  out.push_back({tag + " x=" + to_string(x) + " eps=" + to_string(eps),
                 kind == BasicKind::punctured_at_0 ? "Int cl of the punctured neighbourhood of 0 is [0,eps)"
                                                   : "Int cl of (x-eps,x+eps) ∩ I is itself",
                 status_of(got == expected), "Int cl U = " + got.to_string() + ", expected " + expected.to_string()});
}

void delta_bounds_claim(std::vector<LedgerEntry>& out, const std::string& name, const IntervalSet& chain) {
  const IntervalSet dcl = s71_delta_closure(chain);
  const Rational inf = *chain.inf();
  const Rational sup = *chain.sup();
  const bool ok = dcl.contains(inf) && dcl.contains(sup);
  out.push_back({"delta_closure_holds_bounds " + name, std::string(kAnchor71) + ": the space is delta-complete",
                 status_of(ok),
                 "inf " + to_string(inf) + mem(dcl.contains(inf)) + "and sup " + to_string(sup) +
                     mem(dcl.contains(sup)) + "delta closure " + dcl.to_string()});
}

std::vector<LedgerEntry> ledger71() {
  std::vector<LedgerEntry> out;
  const IntervalSet h1 = IntervalSet::harmonic_tail(1);

  const IntervalSet cl_h1 = s71_closure(h1);
  out.push_back({"closure_of_H1_misses_0", std::string(kAnchor71) + ": 0 is not in the closure of {1/n}",
                 status_of(!cl_h1.contains(0)),
                 "cl(H_1) = " + cl_h1.to_string() + "; every [0,eps) minus H_1 misses H_1"});
  out.push_back({"chain_H1_not_complete", std::string(kAnchor71) + ": the space is not complete",
                 status_of(*h1.inf() == 0 && !cl_h1.contains(0)),
                 "inf H_1 = " + to_string(*h1.inf()) + " lies outside cl(H_1)"});
  const IntervalSet dcl_h1 = s71_delta_closure(h1);
  out.push_back({"delta_closure_of_H1_holds_0", std::string(kAnchor71) + ": 0 is a Euclidean limit of {1/n}",
                 status_of(dcl_h1.contains(0)), "delta cl(H_1) = " + dcl_h1.to_string()});

  for (const Rational& eps : {Rational(1, 3), Rational(1, 2)}) int_cl_claim(out, BasicKind::punctured_at_0, 0, eps);
  int_cl_claim(out, BasicKind::euclidean_at_x, Rational(1, 2), Rational(1, 4));
  int_cl_claim(out, BasicKind::euclidean_at_x, Rational(1, 2), Rational(1, 3));
  int_cl_claim(out, BasicKind::euclidean_at_x, Rational(3, 4), Rational(1, 2));

  delta_bounds_claim(out, "(0,1]", iv(0, 1, false, true));
  delta_bounds_claim(out, "H_1", h1);

  std::string bad;
  for (const auto& [name, a] : s71_corpus())
    if (!s71_closure(a).is_subset_of(s71_delta_closure(a))) bad = name;
  out.push_back({"closure_within_delta_closure", "closure is contained in delta closure", status_of(bad.empty()),
                 bad.empty() ? "all 20 corpus sets" : "fails on " + bad});
  return out;
}

void closed_ball_claim(std::vector<LedgerEntry>& out, const Rational& a, const Rational& eps,
                       const std::vector<Point72>& samples) {
  LedgerStatus status = LedgerStatus::pass;
  std::string witness;
  for (const auto& p : samples) {
    const Evidence e = s72_basic_closure_by_witness(a, eps, p);
    const bool in_ball = dist2(p, edge_point(a)) <= eps * eps;
    witness += (witness.empty() ? "" : "; ") + p.to_string() + (in_ball ? " in ball, " : " outside ball, ") + e.witness;
    if (e.decision == Decision::undecided) {
      if (status == LedgerStatus::pass) status = LedgerStatus::indeterminate;
    } else if ((e.decision == Decision::member) != in_ball) {
      status = LedgerStatus::fail;
    }
  }
  out.push_back({"closure_of_basic_is_closed_ball a=" + to_string(a) + " eps=" + to_string(eps),
                 std::string(kAnchor72) + ": cl U = B[a,eps] ∩ X", status, witness});
}

std::vector<LedgerEntry> ledger72() {
  std::vector<LedgerEntry> out;
  const Rational third(1, 3), two_thirds(2, 3), half(1, 2);
  const IntervalSet a_params = iv(third, two_thirds, false, false);
  const EdgeSet72 a = EdgeSet72::make(a_params);

  closed_ball_claim(out, half, Rational(1, 4),
                    {Point72{half, Rational(1, 8)}, edge_point(third), edge_point(Rational(1, 4)),
                     Point72{Rational(13, 20), Rational(1, 5)}, Point72{half, Rational(5, 16)},
                     edge_point(Rational(3, 16))});
  closed_ball_claim(out, third, Rational(1, 6),
                    {edge_point(Rational(5, 12)), edge_point(half), edge_point(Rational(1, 6)),
                     Point72{third, Rational(1, 6)}, Point72{third, Rational(1, 5)}, edge_point(Rational(3, 5))});

  // The neighbourhood of e(1/3) used against A.
  const Rational eps(1, 6);
  const Point72 inside = edge_point(third + eps / 2);
  const Evidence interior = s72_int_cl_basic(third, eps, inside);
  const bool in_u = s72_in_basic(edge_point(third), eps, inside);
  LedgerStatus u_status = LedgerStatus::indeterminate;
  if (interior.decision == Decision::member) u_status = in_u ? LedgerStatus::pass : LedgerStatus::fail;
  out.push_back({"basic_nbhd_is_regular_open a=1/3 eps=1/6", std::string(kAnchor72) + ": U = Int cl U", u_status,
                 inside.to_string() + " is in Int cl U (" + interior.witness + ")" + mem(in_u) + "U"});

  bool meets = a.contains(edge_point(third));
  for (const auto& q : a.off_edge) meets = meets || s72_in_basic(edge_point(third), eps, q);
  out.push_back({"basic_nbhd_misses_A a=1/3 eps=1/6", std::string(kAnchor72) + ": U ∩ A = ∅", status_of(!meets),
                 "U meets the edge only at e(1/3) and A has no off-edge points"});

  const Point72 lo = *s72_edge_inf(a_params);
  const Point72 hi = *s72_edge_sup(a_params);
  out.push_back({"theta_closure_holds_bounds A=(1/3,2/3)", std::string(kAnchor72) + ": sup A and inf A lie in θcl A",
                 status_of(s72_theta_mem(lo, a) && s72_theta_mem(hi, a)),
                 lo.to_string() + " and " + hi.to_string() + " are Euclidean limits of A and cl U ⊇ B[x,eps] ∩ edge"});

  // δ-closure by certificates: for each radius the δ-neighbourhood of an end
  // point contains an explicit point of A.
  bool both_in = true;
  std::string cert;
  for (const Point72& end : {lo, hi}) {
    for (int j = 3; j <= 20; ++j) {
      const Rational r(1, BigInt(1) << j);
      const Point72 w = edge_point(end.x == third ? Rational(third + r / 2) : Rational(two_thirds - r / 2));
      const Evidence e = s72_int_cl_basic(end.x, r, w);
      if (e.decision != Decision::member || !a.contains(w)) both_in = false;
      if (j == 20) cert += (cert.empty() ? "" : "; ") + w.to_string() + " in A ∩ Int cl U(" + to_string(end.x) + ", " + to_string(r) + ")";
    }
  }
  out.push_back({"A_not_delta_complete A=(1/3,2/3)",
                 std::string(kAnchor72) + ": A violates delta-completeness because U = Int cl U and U ∩ A = ∅",
                 both_in ? LedgerStatus::fail : LedgerStatus::indeterminate,
                 "inf and sup both lie in delta cl A; " + cert + ", likewise for every larger radius"});

  // The orientation printed with the example versus the one forced by the meet.
  const Point72 mid = edge_point(half);
  const bool stated = s72_leq(mid, edge_point(third)) && s72_leq(edge_point(two_thirds), mid);
  out.push_back({"stated_orientation sup A=e(1/3) inf A=e(2/3)", std::string(kAnchor72) + ": sup A = 1/3, inf A = 2/3",
                 status_of(stated),
                 "e(1/2) in A and e(1/3)·e(1/2) = " + s72_meet(edge_point(third), mid).to_string() +
                     ", so e(1/3) is below e(1/2)"});
  bool lower = true, upper = true;
  for (int k = 1; k < 64; ++k) {
    const Point72 p = edge_point(third + Rational(k, 192));
    lower = lower && s72_leq(lo, p);
    upper = upper && s72_leq(p, hi);
  }
  out.push_back({"meet_orientation inf A=e(1/3) sup A=e(2/3)", std::string(kAnchor72) + ": xy = x for a1 < a2",
                 status_of(lower && upper && lo == edge_point(third) && hi == edge_point(two_thirds)),
                 "inf A = " + lo.to_string() + ", sup A = " + hi.to_string() + "; checked against 63 points of A"});

  out.push_back({"chain_A_closed_without_bounds", std::string(kAnchor72) + ": the space is not complete",
                 status_of(!s72_closure_mem(lo, a) && !s72_closure_mem(hi, a)),
                 "cl A = A because edge neighbourhoods meet the edge in their centre only"});
  return out;
}

}  // namespace

std::string to_string(LedgerStatus status) {
  switch (status) {
    case LedgerStatus::pass: return "pass";
    case LedgerStatus::fail: return "fail";
    case LedgerStatus::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

std::vector<LedgerEntry> run_ledger(int example) {
  if (example == 71) return ledger71();
  if (example == 72) return ledger72();
  throw std::invalid_argument("no ledger for example " + std::to_string(example));
}

nlohmann::json to_json(const LedgerEntry& entry) {
  return {{"claim", entry.claim}, {"anchor", entry.anchor}, {"status", to_string(entry.status)},
          {"witness", entry.witness}};
}

}  // namespace tsl
